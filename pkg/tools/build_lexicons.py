"""Regenerate the bundled open-class, gazetteer and sentiment data files.

Usage:
    python tools/build_lexicons.py TEXTBLOB_EN_DIR VADER_LEXICON

TEXTBLOB_EN_DIR is the ``textblob/en`` directory of a textblob wheel (it holds
the Brill tagger lexicon ``en-lexicon.txt``, the word-frequency list
``en-spelling.txt`` and ``en-entities.txt``). VADER_LEXICON is
``vader_lexicon.txt`` from the vaderSentiment wheel. Output overwrites the files
in ``src/gtminer/nlp/data``. The generated files are committed; this script only
needs to run when the selection rules below change.
"""
import re
import sys
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "gtminer" / "nlp" / "data"

N_OPEN = 8000
N_SENTIMENT = 2000

PENN_TO_COARSE = {
    "NN": "NOUN", "NNS": "NOUN",
    "VB": "VERB", "VBD": "VERB", "VBG": "VERB", "VBN": "VERB", "VBP": "VERB", "VBZ": "VERB",
    "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV",
}

# hand corrections for frequent words whose Brill default is wrong for interview text
OVERRIDES = {
    "like": ("VERB", "VB"),
    "feel": ("VERB", "VB"),
    "think": ("VERB", "VB"),
    "want": ("VERB", "VB"),
    "need": ("VERB", "VB"),
    "help": ("VERB", "VB"),
    "love": ("VERB", "VB"),
    "hate": ("VERB", "VB"),
    "hope": ("VERB", "VB"),
    "work": ("VERB", "VB"),
    "worry": ("VERB", "VB"),
    "start": ("VERB", "VB"),
    "walk": ("VERB", "VB"),
    "eat": ("VERB", "VB"),
    "visit": ("VERB", "VB"),
    "check": ("VERB", "VB"),
    "test": ("VERB", "VB"),
    "exercise": ("NOUN", "NN"),
    "diet": ("NOUN", "NN"),
    "tired": ("ADJ", "JJ"),
    "worried": ("ADJ", "JJ"),
    "scared": ("ADJ", "JJ"),
    "excited": ("ADJ", "JJ"),
    "interested": ("ADJ", "JJ"),
}

WORD = re.compile(r"^[a-z][a-z-]*[a-z]$|^[a-z]$")


def read_pairs(path):
    out = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) >= 2:
            out.setdefault(parts[0], parts[1])
    return out


def closed_words():
    words = set()
    for line in (DATA / "closed_class.tsv").read_text().splitlines():
        if line and not line.startswith("#"):
            words.add(line.split("\t")[0])
    return words


def verb_capable(word, lexicon):
    """A noun/adjective counts as verb-capable when the lexicon holds its verbal inflections."""
    stems = {word, word[:-1]} if word.endswith("e") else {word}
    if word.endswith("s"):
        # plural nouns that double as third-person verbs: works, lives, measures
        stems |= {word[:-1], word[:-2]}
        if lexicon.get(word[:-1], "") in ("VB", "VBP") or lexicon.get(word[:-2], "") in ("VB", "VBP"):
            return True
    for stem in sorted(stems):
        for suffix in ("ed", "d", "ing", "s", "es"):
            if lexicon.get(stem + suffix, "").startswith("VB"):
                return True
    return False


def noun_capable(word, lexicon):
    for plural in (word + "s", word + "es"):
        if lexicon.get(plural) == "NNS":
            return True
    return False


def build_open_class(en_dir):
    lexicon = read_pairs(en_dir / "en-lexicon.txt")
    freq = {w: int(c) for w, c in read_pairs(en_dir / "en-spelling.txt").items() if c.isdigit()}
    closed = closed_words()
    rows = []
    for word, penn in lexicon.items():
        if word in closed or not WORD.match(word) or penn not in PENN_TO_COARSE:
            continue
        rows.append((freq.get(word, 0), word, penn))
    rows.sort(key=lambda r: (-r[0], r[1]))
    selected = {w: p for _, w, p in rows[:N_OPEN]}
    for word, (_, penn) in OVERRIDES.items():
        selected[word] = penn
    lines = [
        "# open-class lexicon: word<TAB>coarse tag<TAB>Penn tag<TAB>alternative coarse tags",
        "# derived from the Brill tagger lexicon, ranked by corpus frequency (tools/build_lexicons.py)",
    ]
    for word in sorted(selected):
        penn = selected[word]
        coarse = OVERRIDES.get(word, (PENN_TO_COARSE[penn],))[0]
        alts = []
        if coarse != "VERB" and verb_capable(word, lexicon):
            alts.append("VERB")
        if coarse != "NOUN" and penn in ("VB", "VBP") and noun_capable(word, lexicon):
            alts.append("NOUN")
        lines.append(f"{word}\t{coarse}\t{penn}\t{','.join(alts)}")
    (DATA / "open_class.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(selected)


GIVEN_NAMES = """
aaron adam alan albert alex alice amanda amy andrew angela anna anne anthony ben benjamin betty brian carl carol
catherine charles chris christopher daniel david deborah dennis donald dorothy edward elizabeth emily emma eric frank
gary george grace gregory hannah harry helen henry jack james jane janet jason jennifer jessica joe john jonathan
joseph joshua julia karen kate kevin laura linda lisa margaret maria mark mary matthew michael michelle nancy nicole
olivia patricia patrick paul peter rachel raymond rebecca richard robert ruth ryan sam samuel sandra sarah scott
sharon stephen steven susan thomas timothy tom william
"""
PLACES = """
africa america asia australia boston brazil britain california canada chicago china dublin england europe florida
france germany india ireland italy japan london mexico montreal ohio ontario paris russia scotland spain sydney texas
toronto wales washington york
"""


def build_gazetteer(en_dir):
    names = set(GIVEN_NAMES.split()) | set(PLACES.split())
    for line in (en_dir / "en-entities.txt").read_text(encoding="utf-8").splitlines():
        parts = line.split()
        if len(parts) >= 2 and parts[-1] in ("PERS", "LOC"):
            first = parts[0].lower()
            if first.isalpha() and len(first) > 2:
                names.add(first)
    lines = ["# given names and place names (lowercase), one per line"] + sorted(names)
    (DATA / "gazetteer.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(names)


def build_sentiment(en_dir, vader_path):
    freq = {w: int(c) for w, c in read_pairs(en_dir / "en-spelling.txt").items() if c.isdigit()}
    entries = []
    for line in Path(vader_path).read_text(encoding="utf-8").splitlines():
        parts = line.split("\t")
        if len(parts) < 2 or not WORD.match(parts[0]):
            continue
        entries.append((freq.get(parts[0], 0), parts[0], float(parts[1])))
    entries.sort(key=lambda e: (-e[0], e[1]))
    chosen = sorted(entries[:N_SENTIMENT], key=lambda e: e[1])
    lines = ["# valence lexicon: token<TAB>valence in [-4, 4]",
             "# most frequent single-word entries of the VADER lexicon (tools/build_lexicons.py)"]
    lines += [f"{w}\t{v:g}" for _, w, v in chosen]
    (DATA / "sentiment_lexicon.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(chosen)


if __name__ == "__main__":
    en_dir, vader = Path(sys.argv[1]), Path(sys.argv[2])
    print("open_class", build_open_class(en_dir))
    print("gazetteer", build_gazetteer(en_dir))
    print("sentiment", build_sentiment(en_dir, vader))
