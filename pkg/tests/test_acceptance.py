"""Acceptance suite: one line and one test per criterion of the regression report.

Run directly (``python tests/test_acceptance.py``) to print only the
criterion lines, or through pytest where each criterion is its own test.
"""
import sys

import pytest

from nilex.verify import CRITERIA, Options, run_verification, validate_report


def criterion_line(c: dict) -> str:
    mark = "PASS" if c["verdict"] == "pass" else "FAIL"
    return f"criterion {c['id']:2d}: {mark} - {c['title']} ({c['checks']} checks, {c['failed']} failed)"


@pytest.fixture(scope="module")
def report():
    rep = run_verification(Options(), jobs=2)
    validate_report(rep)
    return rep


def failing_rows(rep: dict, cid: int) -> list[str]:
    out = []
    for section in ("cohomology", "properties", "extensions", "isomorphisms"):
        for row in rep[section]:
            if row["criterion"] == cid and row["verdict"] == "fail":
                out.append(f"{row['subject']}: expected {row['expected']}, got {row['computed']}")
    return out


def test_every_criterion_reported(report):
    assert [c["id"] for c in report["criteria"]] == list(CRITERIA)
    assert all(c["checks"] > 0 for c in report["criteria"])


@pytest.mark.parametrize("cid", list(CRITERIA))
def test_criterion(report, cid, capsys):
    c = report["criteria"][cid - 1]
    with capsys.disabled():
        print("\n" + criterion_line(c))
    assert c["verdict"] == "pass", failing_rows(report, cid)


if __name__ == "__main__":
    rep = run_verification(Options(), jobs=2)
    for c in rep["criteria"]:
        print(criterion_line(c))
    sys.exit(0 if all(c["verdict"] == "pass" for c in rep["criteria"]) else 1)
