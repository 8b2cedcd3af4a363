import pytest

from arbors.golden import cases, golden_suite


@pytest.mark.parametrize("case", cases(), ids=lambda c: c.name)
def test_golden_case(case):
    row = case.run()
    assert row["passed"], row


def test_suite_report():
    rep = golden_suite()
    assert rep["passed"] and len(rep["rows"]) == len(cases())
