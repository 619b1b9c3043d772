"""Regenerate the CLI golden files for the bundled sample transcript.

Run only after reviewing a deliberate output change:
    python3 tools/freeze_golden.py
"""

import io
from pathlib import Path

from gtminer.cli import main

ROOT = Path(__file__).resolve().parents[1]
SAMPLE = ROOT / "data" / "sample_transcript.txt"
GOLDEN = ROOT / "tests" / "data" / "golden"

CASES = {
    "cat.txt": ["--cat", "-n", "5"],
    "codedict.txt": ["--codedict"],
    "topics_assign.txt": ["--topics", "--assign", "-n", "3"],
    "sentiment.txt": ["--sentiment"],
    "sentence.txt": ["--sentence"],
}


def main_freeze():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, args in CASES.items():
        buf = io.StringIO()
        code = main(["-i", str(SAMPLE), *args], stdout=buf)
        if code != 0:
            raise SystemExit(f"{name}: exit {code}")
        (GOLDEN / name).write_bytes(buf.getvalue().encode("utf-8"))
        print(f"wrote {name}")


if __name__ == "__main__":
    main_freeze()
