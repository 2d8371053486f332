from fractions import Fraction

import pytest

from puiseux.errors import UnknownClaim
from puiseux.verifier import ClaimParameters, claim_ids, run_claims

from oracles import brute_cyclic_factorizations


def test_claim_ids_cover_c1_through_c15():
    ids = claim_ids()
    assert ids == tuple(f"C{n}" for n in range(1, 16))


def test_run_all_default_statuses():
    outcomes = run_claims("all")
    assert [o.claim_id for o in outcomes] == list(claim_ids())
    for o in outcomes:
        expected = "data-only" if o.claim_id == "C11" else "confirmed"
        assert o.status == expected, (o.claim_id, o.status, o.witnesses)
        assert len(o.witnesses) >= 1
        assert o.citation


def test_selection_is_sorted_and_validated():
    outcomes = run_claims(["C14", "C2"])
    assert [o.claim_id for o in outcomes] == ["C2", "C14"]
    with pytest.raises(UnknownClaim):
        run_claims(["C99"])
    with pytest.raises(UnknownClaim):
        run_claims(["C0"])


def test_c11_counts_match_independent_enumeration():
    outcome = run_claims(["C11"])[0]
    assert outcome.status == "data-only"
    r, x = Fraction(2, 3), Fraction(4, 3)
    for row in outcome.witnesses:
        want = brute_cyclic_factorizations(r, x, row["cap"])
        assert row["count"] == len(want), row
    by_cap = {row["cap"]: row["count"] for row in outcome.witnesses}
    assert by_cap[1] == 1 and by_cap[2] == 2 and by_cap[3] == 3


def test_reports_are_deterministic():
    first = [o.as_mapping() for o in run_claims("all")]
    second = [o.as_mapping() for o in run_claims("all")]
    assert first == second


def test_parameters_travel_into_outcomes():
    params = ClaimParameters(truncation=20, exponent_cap=4)
    outcome = run_claims(["C11"], params)[0]
    assert outcome.parameters.exponent_cap == 4
    assert len(outcome.witnesses) == 4
    mapping = outcome.as_mapping()
    assert mapping["parameters"]["truncation"] == 20
    assert set(mapping) == {
        "claim_id",
        "status",
        "witnesses",
        "parameters",
        "citation",
    }


def test_c12_scales_with_truncation_parameter():
    outcome = run_claims(["C12"], ClaimParameters(truncation=20))[0]
    assert outcome.status == "confirmed"
    sizes = [row["size"] for row in outcome.witnesses]
    assert sizes == sorted(sizes)
    assert sizes[-1] == 20
    final = outcome.witnesses[-1]
    assert final["factorizations_of_one"] == final["pairs"] + 1
