from pathlib import Path

import pytest

from gtminer.corpus import NumericTable, parse_numeric_csv

ROOT = Path(__file__).resolve().parents[1]
DATA = Path(__file__).resolve().parent / "data"


@pytest.fixture
def sample_transcript():
    return ROOT / "data" / "sample_transcript.txt"


@pytest.fixture
def diabetes_csv():
    return ROOT / "data" / "diabetes.csv"


def make_table(features, dv, ids=None, names=None):
    """NumericTable built straight from Python lists (test helper)."""
    n = len(dv)
    ids = ids or [str(i) for i in range(n)]
    f = len(features[0]) if n else 1
    names = names or [f"x{j}" for j in range(f)]
    header = ["id", *names, "y"]
    lines = [", ".join(header)]
    for i in range(n):
        lines.append(", ".join([ids[i], *(repr(float(v)) for v in features[i]), repr(float(dv[i]))]))
    return parse_numeric_csv("\n".join(lines) + "\n")


ACCEPTANCE_LINES = []


def record_criterion(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append((number, line))
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
