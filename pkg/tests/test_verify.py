import pytest

from cherednik import verify as vf


def test_check_names_are_unique():
    names = [c.name for c in vf.checks()]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("suite", vf.SUITES)
def test_suites_have_no_failures(suite):
    results = vf.run(suite)
    counts = vf.summary(results)
    assert counts["FAIL"] == 0, [r.line() for r in results if r.status == "FAIL"]


def test_known_false_readings_are_notes():
    notes = {r.name for r in vf.run("coinvariant") + vf.run("filtration") if r.status == "NOTE"}
    assert "V_i distributivity (n=3,m=5)" in notes
    assert "c < 1 level lowering on all of L_c (3,4)" in notes
    assert "delta stability, same parameter (7,3)" in notes


def test_crash_becomes_failure():
    def boom():
        raise RuntimeError("boom")

    result = vf.run_check(vf.Check("x", "explodes", boom))
    assert result.status == "FAIL" and "RuntimeError" in result.detail


def test_unknown_suite():
    with pytest.raises(KeyError):
        vf.checks("nope")
