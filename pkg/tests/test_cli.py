import io
import os
import subprocess
import sys

import pytest

from gtminer.cli import main, parse_args
from gtminer.corpus import Corpus, load_corpus
from gtminer.errors import UsageError

from conftest import DATA, ROOT

SAMPLE = str(ROOT / "data" / "sample_transcript.txt")
CSV = str(ROOT / "data" / "diabetes.csv")
GOLDEN = DATA / "golden"

GOLDEN_CASES = {
    "cat.txt": ["--cat", "-n", "5"],
    "codedict.txt": ["--codedict"],
    "topics_assign.txt": ["--topics", "--assign", "-n", "3"],
    "sentiment.txt": ["--sentiment"],
    "sentence.txt": ["--sentence"],
}


@pytest.fixture(autouse=True)
def no_seed_env(monkeypatch):
    monkeypatch.delenv("GTMINER_SEED", raising=False)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_documented_examples():
    cfg = parse_args(["-i", "transcript.txt", "--cat", "--codedict", "-n", "10"])
    assert cfg.actions == ["cat", "codedict"] and cfg.n == 10
    cfg = parse_args(["-i", "--csv", "data.csv", "--knn", "-n", "5", "-r", "733"])
    assert cfg.actions == ["knn"] and cfg.n == 5 and cfg.rec == "733" and cfg.inputs == []
    cfg = parse_args(["-i", "a.txt", "-i", "b.txt", "-t", "P5", "-t", "P7", "--sentiment"])
    assert cfg.inputs == ["a.txt", "b.txt"] and cfg.titles == ["P5", "P7"]


def test_seed_sources():
    assert parse_args(["-i", "x", "--cat"], environ={}).seed == 42
    assert parse_args(["-i", "x", "--cat"], environ={"GTMINER_SEED": "7"}).seed == 7
    assert parse_args(["-i", "x", "--cat", "--seed", "3"], environ={"GTMINER_SEED": "7"}).seed == 3
    with pytest.raises(UsageError):
        parse_args(["-i", "x", "--cat"], environ={"GTMINER_SEED": "abc"})


@pytest.mark.parametrize("argv", [
    [],
    ["--bogus"],
    ["-i", SAMPLE],
    ["--csv", CSV, "--kmeans"],
    ["--csv", CSV, "--knn", "-n", "3"],
    ["--cat"],
    ["--csv", CSV, "--cat"],
    ["-i", SAMPLE, "--csv", CSV, "--cat", "--pca", "-n", "2"],
    ["-i", SAMPLE, "--cat", "--topics"],
    ["-i", SAMPLE, "--cat", "-f", "happy"],
])
def test_usage_errors_exit_2(argv):
    code, out, err = run_cli(*argv)
    assert code == 2
    assert out == ""
    assert "usage:" in err


def test_empty_argv_prints_help():
    code, _, err = run_cli()
    assert code == 2 and "--codedict" in err and "--pca" in err


def test_missing_n_is_named():
    _, _, err = run_cli("--csv", CSV, "--kmeans")
    assert "-n" in err


def test_input_errors_exit_3(tmp_path):
    assert run_cli("-i", str(tmp_path / "missing.txt"), "--cat")[0] == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("text\n<break>unclosed\n")
    code, _, err = run_cli("-i", str(bad), "--cat")
    assert code == 3 and "line 2" in err
    csv = tmp_path / "bad.csv"
    csv.write_text("id, a, y\n1, NA, 0\n")
    assert run_cli("--csv", str(csv), "--pca", "-n", "1")[0] == 3
    assert run_cli("-i", SAMPLE, "-t", "P99", "--cat")[0] == 2


def test_parameter_errors_exit_4():
    assert run_cli("--csv", CSV, "--pca", "-n", "9")[0] == 4
    assert run_cli("--csv", CSV, "--knn", "-n", "5", "-r", "nope")[0] == 4
    assert run_cli("-i", SAMPLE, "--topics", "-n", "5000")[0] == 4


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_files(name):
    code, out, _ = run_cli("-i", SAMPLE, *GOLDEN_CASES[name])
    assert code == 0
    assert out.encode("utf-8") == (GOLDEN / name).read_bytes()


def test_output_file_equals_stdout(tmp_path):
    target = tmp_path / "report.txt"
    _, out, _ = run_cli("-i", SAMPLE, "--cat", "--codedict")
    code, quiet, _ = run_cli("-i", SAMPLE, "--cat", "--codedict", "-o", str(target))
    assert code == 0 and quiet == ""
    assert target.read_bytes() == out.encode("utf-8")


def test_title_selection_gives_one_block_per_title():
    code, out, _ = run_cli("-i", SAMPLE, "-t", "P5", "-t", "P7", "--sentiment")
    assert code == 0
    lines = out.splitlines()
    assert [l.split(":")[0] for l in lines[1:]] == ["P5", "P7"]


def test_topics_then_assignments():
    _, out, _ = run_cli("-i", SAMPLE, "--topics", "--assign", "-n", "3")
    lines = out.splitlines()
    assert sum(l.startswith("Topic ") and ":" in l for l in lines) == 3
    assert sum("→ topic" in l for l in lines) == len(load_corpus([SAMPLE]))


def test_filters_compose_with_analysis(tmp_path):
    from gtminer.corpus import render_transcript
    from gtminer.sentiment import label, score_document

    corpus = load_corpus([SAMPLE])
    keep = Corpus(tuple(d for d in corpus if label(score_document(d)) == "pos"))
    pre = tmp_path / "pos.txt"
    pre.write_text(render_transcript([(d.title, d.text) for d in keep]))
    for action in (["--cat"], ["--codedict"], ["--concepts"]):
        filtered = run_cli("-i", SAMPLE, "-f", "pos", *action)
        direct = run_cli("-i", str(pre), *action)
        assert filtered == direct


def test_category_filter():
    _, out, _ = run_cli("-i", SAMPLE, "-f", "category:swim", "--sentiment")
    assert [l.split(":")[0] for l in out.splitlines()[1:]] == ["P9"]


def test_summary_and_concepts_run():
    assert run_cli("-i", SAMPLE, "--summary", "--concepts")[0] == 2  # different default -n
    code, out, _ = run_cli("-i", SAMPLE, "--summary", "--concepts", "-n", "3")
    assert code == 0
    assert "1. mary (1)" in out and "thank" not in out.lower()


@pytest.mark.parametrize("argv", [
    ["--csv", CSV, "--nnet", "-n", "7"],
    ["--csv", CSV, "--svm", "--oversample"],
    ["--csv", CSV, "--kmeans", "-n", "3"],
    ["--csv", CSV, "--knn", "-n", "4", "-r", "5"],
    ["--csv", CSV, "--pca", "-n", "2"],
    ["-i", SAMPLE, "--topics", "--assign", "-n", "2", "--summary"],
])
def test_determinism(argv):
    first = run_cli(*argv, "--seed", "11")
    second = run_cli(*argv, "--seed", "11")
    assert first[0] == 0
    assert first == second


def test_nnet_prints_one_line_per_epoch():
    _, out, _ = run_cli("--csv", CSV, "--nnet", "-n", "7")
    epochs = [l for l in out.splitlines() if l.startswith("Epoch ")]
    assert [l.split()[1].rstrip(":") for l in epochs] == [f"{e}/7" for e in range(1, 8)]
    assert "Test accuracy" in out


def test_column_selection_via_titles():
    code, out, _ = run_cli("--csv", CSV, "-t", "index", "-t", "bmi", "-t", "fbs", "-t", "has_diabetes",
                           "--pca", "-n", "2")
    assert code == 0
    assert "bmi" in out and "stress" not in out


def test_dangling_input_flag_before_csv():
    assert run_cli("-i", "--csv", CSV, "--knn", "-n", "3", "-r", "0")[0] == 0


def test_module_entry_point():
    env = dict(os.environ)
    env.pop("GTMINER_SEED", None)
    proc = subprocess.run([sys.executable, "-m", "gtminer", "-i", SAMPLE, "--cat", "-n", "5"],
                          capture_output=True, env=env)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "cat.txt").read_bytes()
