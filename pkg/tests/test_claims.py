import json

import pytest

from wordlab.claims import (
    PREDICATES,
    REGISTRY,
    STATUSES,
    all_tags,
    bounded_search_max_length,
    claim_ids,
    run_all,
    run_claim,
)
from wordlab.claims.core import normalize
from wordlab.errors import UnknownClaim

REFUTED = {
    "FAC-SCATTERED",
    "LYN-GHS-6",
    "PAL-DERIVATIVE-RICH",
    "PAL-FIB-DERIVATIVE",
    "REP-ANTISQUARE-8",
    "REP-DVORAKOVA",
    "REP-MRS-DYCK",
}


@pytest.fixture(scope="module")
def reports():
    return {r.id: r for r in run_all()}


def test_every_claim_has_metadata():
    for record in REGISTRY.values():
        assert record.provenance in ("PAPER", "TRIVIAL", "DERIVED")
        assert record.statement and record.anchor and record.bound and record.tags


def test_statuses(reports):
    assert set(reports) == set(claim_ids())
    assert all(r.status in STATUSES for r in reports.values())
    assert not [i for i, r in reports.items() if r.status == "error"]
    assert {i for i, r in reports.items() if r.status == "refuted"} == REFUTED


def test_refutations_carry_counterexamples(reports):
    for i in REFUTED:
        assert reports[i].counterexample, i
    assert reports["LYN-GHS-6"].counterexample == "001101"
    assert reports["REP-MRS-DYCK"].counterexample == "0101"
    assert reports["PAL-DERIVATIVE-RICH"].counterexample == "102012"
    assert reports["PAL-FIB-DERIVATIVE"].counterexample == "01"


def test_reports_are_json_and_untimed(reports):
    for r in reports.values():
        out = r.to_json()
        assert out["elapsed_ms"] is None
        assert json.loads(json.dumps(out)) == out
    assert reports["BWT-EXAMPLES"].to_json(timings=True)["elapsed_ms"] is not None


def test_rerun_is_deterministic(reports):
    for i in ("PAL-LADDER", "FAC-ATTRACTOR", "SEARCH-PAL-8", "LYN-GHS-6"):
        again = run_claim(i)
        assert again.observed == reports[i].observed and again.status == reports[i].status


def test_parallel_matches_serial():
    serial = [r.to_json() for r in run_all("example")]
    parallel = [r.to_json() for r in run_all("example", jobs=2)]
    assert serial == parallel and serial


def test_tags():
    assert "acceptance" in all_tags()
    assert claim_ids("no-such-tag") == []
    assert run_all("no-such-tag") == []


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        run_claim("NOPE")


def test_normalize():
    from fractions import Fraction

    assert normalize({"b": {"10", "0", "1"}, "a": (Fraction(5, 2), 3)}) == {"a": ["5/2", 3], "b": ["0", "1", "10"]}


def test_bounded_search_examples():
    assert set(PREDICATES) == {"palindromes", "periodicities", "cubefree-palindromes"}
    assert bounded_search_max_length("palindromes", 1)[:2] == (0, "")
    assert bounded_search_max_length("palindromes", 8)[:2] == (8, "00101100")
    assert bounded_search_max_length("palindromes", 9, budget=5).maxlen == "open"
    with pytest.raises(KeyError):
        bounded_search_max_length("squares", 3)
    with pytest.raises(ValueError):
        bounded_search_max_length("palindromes", 0)


def test_tiny_budget_gives_open_status():
    assert run_claim("SEARCH-PERIODICITY-29", budget=1e-4).status == "unverified-at-budget"
