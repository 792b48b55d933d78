import pytest

from wimanedge.exactfield import get_field
from wimanedge.report import PreconditionError, ReportEntry, Verdict, run_checks
from wimanedge.suites import SUITE_NAMES, SUITES, exit_status, get_suite, run_suites

FAST = [s for s in SUITES if s.name not in ("icosa",)]


@pytest.mark.parametrize("desc", FAST, ids=lambda d: d.name)
def test_descriptor_ids_match_the_suite(desc):
    ids = [e.check for e in desc.run()]
    assert ids == [f"{desc.module}.{c}" for c in desc.checks]


@pytest.mark.slow
def test_icosa_descriptor():
    desc = get_suite("icosa")
    assert [e.check for e in desc.run()] == [f"icosa.{c}" for c in desc.checks]


def test_no_suite_fails():
    entries = run_suites([s.name for s in FAST])
    bad = [e.text() for e in entries if not e.ok]
    assert not bad


def test_registry_order_is_kept():
    entries = run_suites(["groups", "delpezzo"])
    mods = [e.check.split(".")[0] for e in entries]
    assert mods.index("delpezzo") < mods.index("groups")


def test_unknown_suite():
    with pytest.raises(KeyError):
        get_suite("nope")
    assert "pencil" in SUITE_NAMES


def test_field_precondition():
    with pytest.raises(PreconditionError, match="sqrtm3"):
        run_suites(["pencil"], get_field("Q(i)"))


def test_run_checks_turns_exceptions_into_failures():
    out = run_checks("demo", [("ok", lambda: (True, "")), ("boom", lambda: 1 / 0), ("rep", lambda: (Verdict.REPORTED, "x"))])
    assert [e.verdict for e in out] == [Verdict.PASS, Verdict.FAIL, Verdict.REPORTED]
    assert exit_status(out) == 1
    assert exit_status([ReportEntry("a", Verdict.REPORTED, "")]) == 0
    assert exit_status([ReportEntry("a", Verdict.INCONCLUSIVE, "")]) == 1
