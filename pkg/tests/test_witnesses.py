import random
from fractions import Fraction

import pytest

from puiseux.arith import is_prime, nth_prime, prime_index
from puiseux.errors import (
    BadIndex,
    HypothesisViolated,
    NonPositive,
    NotDense,
    NotFoundWithinLimit,
)
from puiseux.families import (
    AffineSeq,
    ConstantSeq,
    CongruencePrimes,
    Cyclic,
    ElementaryPrimary,
    ExplicitSeq,
    ExplicitTargets,
    HalfPrime,
    PAdic,
    PartitionClassPrimes,
    PartitionedKPrimary,
    PowerDenominator,
    PowerSeq,
    TwoAdicOddPrime,
    generator_at,
    partition_class_of_index,
    truncate,
)
from puiseux.monoid import FgMonoid
from puiseux.witnesses import (
    approximate,
    dense_atom_monoid,
    disjoint_prime_noniso,
    kprimary_antimatter_witness,
    padic_candidate_atoms,
    sum_kprimary_atom_check,
)

from oracles import brute_rational_member

F = Fraction


# ---------------------------------------------------------------------------
# approximation


def test_approximate_properties_randomized():
    rng = random.Random(73)
    specs = [
        PowerDenominator(2),
        ElementaryPrimary(),
        TwoAdicOddPrime(),
        Cyclic(F(2, 3)),
    ]
    for _ in range(40):
        spec = rng.choice(specs)
        target = F(rng.randint(1, 30), rng.randint(1, 30))
        eps = F(1, rng.randint(2, 200))
        got = approximate(spec, target, eps)
        assert 0 < target - got.value < eps
        assert got.value == got.multiplier * got.generator
        assert generator_at(spec, got.generator_index) == got.generator


def test_approximate_value_is_a_member():
    got = approximate(PowerDenominator(2), F(5, 7), F(1, 50))
    gens = tuple(F(1, 2**n) for n in range(1, got.generator_index + 1))
    assert brute_rational_member(gens, got.value)


def test_approximate_deterministic_and_tight():
    a = approximate(PowerDenominator(2), F(1, 4), F(1, 100))
    b = approximate(PowerDenominator(2), F(1, 4), F(1, 100))
    assert a == b
    # The witness multiplies the first generator below min(target, eps).
    assert a.generator < F(1, 100)
    assert (a.multiplier + 1) * a.generator >= F(1, 4)


def test_approximate_rejects_bad_inputs():
    with pytest.raises(NonPositive):
        approximate(PowerDenominator(2), F(0), F(1, 10))
    with pytest.raises(NonPositive):
        approximate(PowerDenominator(2), F(1, 2), F(0))
    with pytest.raises(NotDense):
        approximate(HalfPrime(), F(1, 2), F(1, 10))
    with pytest.raises(NotDense):
        approximate(Cyclic(F(3, 2)), F(1, 2), F(1, 10))


def test_approximate_respects_scan_limit():
    with pytest.raises(NotFoundWithinLimit):
        approximate(PowerDenominator(2), F(1, 2), F(1, 1000), scan_limit=3)


# ---------------------------------------------------------------------------
# dense atom construction


def test_dense_atom_monoid_tracks_calkin_wilf():
    made = dense_atom_monoid(1, 12)
    assert len(made.entries) == 12
    primes_seen = set()
    for entry in made.entries:
        assert abs(entry.target - entry.atom) < F(1, entry.k)
        assert is_prime(entry.prime)
        assert partition_class_of_index(prime_index(entry.prime))[0] == 1
        assert entry.prime**entry.exponent > 2 * entry.k
        assert entry.numerator % entry.prime != 0
        assert entry.atom == F(entry.numerator, entry.prime**entry.exponent)
        primes_seen.add(entry.prime)
    assert len(primes_seen) == 12
    assert made.monoid.generators == tuple(sorted(e.atom for e in made.entries))


def test_dense_atom_monoid_atoms_equal_generators():
    made = dense_atom_monoid(2, 10)
    assert set(made.monoid.atoms()) == set(made.monoid.generators)


def test_dense_atom_monoid_classes_use_disjoint_primes():
    a = {e.prime for e in dense_atom_monoid(1, 8).entries}
    b = {e.prime for e in dense_atom_monoid(2, 8).entries}
    c = {e.prime for e in dense_atom_monoid(3, 8).entries}
    assert not (a & b) and not (a & c) and not (b & c)


def test_dense_atom_monoid_explicit_targets():
    targets = ExplicitTargets((F(1, 2), F(7, 3)))
    made = dense_atom_monoid(1, 2, targets)
    assert [e.target for e in made.entries] == [F(1, 2), F(7, 3)]
    for e in made.entries:
        assert abs(e.target - e.atom) < F(1, e.k)


def test_dense_atom_monoid_rejects_bad_inputs():
    with pytest.raises(BadIndex):
        dense_atom_monoid(0, 5)
    with pytest.raises(NonPositive):
        dense_atom_monoid(1, -1)


# ---------------------------------------------------------------------------
# k-primary antimatter witnesses


def test_kprimary_witness_two_primes():
    w = kprimary_antimatter_witness((2, 3))
    p, q = w.primes
    assert (p, q) == (2, 3)
    # The defining identity with both auxiliary primes.
    assert w.p_prime * w.q_prime == w.m * q * w.q_prime + w.n * p * w.p_prime + p * q
    assert is_prime(w.p_prime) and is_prime(w.q_prime)
    assert w.p_prime > max(w.primes)
    assert w.decomposition.evaluate() == w.target
    assert w.target == F(1, p * q)


def test_kprimary_witness_minimality():
    w = kprimary_antimatter_witness((2, 3))
    # m is the least multiplier making m*q + p prime and large enough.
    for smaller in range(1, w.m):
        candidate = smaller * w.primes[1] + w.primes[0]
        assert not (is_prime(candidate) and candidate > max(w.primes))
    for smaller in range(1, w.n):
        candidate = smaller * w.p_prime + w.primes[1]
        assert not is_prime(candidate)


def test_kprimary_witness_three_primes():
    w = kprimary_antimatter_witness((2, 3, 5))
    assert w.primes == (2, 3, 5)
    assert w.decomposition.evaluate() == w.target
    # Every atom in the decomposition has a squarefree 3-prime denominator.
    for atom, _ in w.decomposition.terms:
        assert atom.numerator == 1


def test_kprimary_witness_rejects_bad_inputs():
    with pytest.raises(NonPositive):
        kprimary_antimatter_witness((5,))
    with pytest.raises(NonPositive):
        kprimary_antimatter_witness((3, 3))


def test_kprimary_witness_search_limit():
    with pytest.raises(NotFoundWithinLimit):
        kprimary_antimatter_witness((2, 3), search_limit=1)


# ---------------------------------------------------------------------------
# sum-of-reciprocals atom checks


def test_sum_atom_check_examples():
    assert sum_kprimary_atom_check(2, (1, 2), 4) is True
    assert sum_kprimary_atom_check(1, (1,), 3) is True
    assert sum_kprimary_atom_check(2, (1, 2), 2) is True


def test_sum_atom_check_agrees_with_brute_count():
    from math import comb

    from puiseux.families import SumKPrimary
    from oracles import brute_rational_factorizations

    cases = [(2, (1, 2), 4), (2, (1, 3), 4), (2, (3, 4), 4), (1, (2,), 4)]
    for k, indices, max_index in cases:
        value = sum(F(1, nth_prime(i)) for i in indices)
        monoid = truncate(SumKPrimary(k), comb(max_index, k))
        count = len(brute_rational_factorizations(monoid.atoms(), value))
        assert sum_kprimary_atom_check(k, indices, max_index) == (count == 1), (
            k,
            indices,
            max_index,
        )


def test_sum_atom_check_validation():
    with pytest.raises(NonPositive):
        sum_kprimary_atom_check(0, (), 3)
    with pytest.raises(NonPositive):
        sum_kprimary_atom_check(2, (1,), 4)
    with pytest.raises(BadIndex):
        sum_kprimary_atom_check(2, (1, 5), 4)
    with pytest.raises(BadIndex):
        sum_kprimary_atom_check(2, (0, 1), 4)


def test_partitioned_blocks_stay_atoms():
    m = truncate(PartitionedKPrimary(2), 5)
    assert set(m.atoms()) == set(m.generators)


# ---------------------------------------------------------------------------
# one-prime denominator candidate atoms


def test_padic_atoms_strictly_decreasing_example():
    spec = PAdic(2, PowerSeq(3), AffineSeq(2, 0))
    report = padic_candidate_atoms(spec, 5)
    assert report.kept == (1, 2, 3, 4, 5)
    assert report.exclusions == ()


def test_padic_atoms_with_an_excluded_index():
    spec = PAdic(2, ExplicitSeq((9, 3), PowerSeq(3)), AffineSeq(1, 0))
    report = padic_candidate_atoms(spec, 4)
    assert report.kept == (2, 3, 4)
    assert len(report.exclusions) == 1
    exc = report.exclusions[0]
    assert exc.index == 1
    assert exc.kept_index == 2
    assert exc.coefficient == 6
    assert generator_at(spec, 1) == 6 * generator_at(spec, 2)


def test_padic_atoms_rejects_bounded_numerators():
    spec = PAdic(2, ConstantSeq(3), AffineSeq(1, 0))
    with pytest.raises(HypothesisViolated):
        padic_candidate_atoms(spec, 3)


def test_padic_atoms_rejects_base_clash_with_denominator():
    spec = PAdic(3, PowerSeq(3), AffineSeq(2, 0))
    with pytest.raises(HypothesisViolated):
        padic_candidate_atoms(spec, 3)


def test_padic_kept_indices_resist_truncation_membership():
    spec = PAdic(2, ExplicitSeq((9, 3), PowerSeq(3)), AffineSeq(1, 0))
    report = padic_candidate_atoms(spec, 4)
    gens = [generator_at(spec, n) for n in range(1, 5)]
    for i in report.kept:
        others = tuple(g for n, g in enumerate(gens, start=1) if n != i)
        assert not FgMonoid(others).contains(gens[i - 1])
    for exc in report.exclusions:
        assert FgMonoid(
            tuple(g for n, g in enumerate(gens, start=1) if n != exc.index)
        ).contains(gens[exc.index - 1])


# ---------------------------------------------------------------------------
# non-isomorphism certificates


def test_noniso_finite_supports():
    cert = disjoint_prime_noniso(PowerDenominator(2), PowerDenominator(3))
    assert cert is not None
    assert disjoint_prime_noniso(PowerDenominator(2), PowerDenominator(2)) is None


def test_noniso_congruence_classes():
    a = ElementaryPrimary(CongruencePrimes(1, 4))
    b = ElementaryPrimary(CongruencePrimes(3, 4))
    cert = disjoint_prime_noniso(a, b)
    assert cert is not None
    # Same class on both sides: no separation.
    assert disjoint_prime_noniso(a, a) is None
    # 1 mod 4 and 1 mod 8 can share primes.
    c = ElementaryPrimary(CongruencePrimes(1, 8))
    assert disjoint_prime_noniso(a, c) is None


def test_noniso_partition_classes():
    a = ElementaryPrimary(PartitionClassPrimes(1))
    b = ElementaryPrimary(PartitionClassPrimes(2))
    assert disjoint_prime_noniso(a, b) is not None
    assert disjoint_prime_noniso(a, a) is None


def test_noniso_mixed_kinds():
    assert (
        disjoint_prime_noniso(
            PowerDenominator(7), ElementaryPrimary(CongruencePrimes(1, 4))
        )
        is not None
    )
    # 5 is 1 mod 4, so the supports meet.
    assert (
        disjoint_prime_noniso(
            PowerDenominator(5), ElementaryPrimary(CongruencePrimes(1, 4))
        )
        is None
    )
    assert disjoint_prime_noniso(PowerDenominator(2), ElementaryPrimary()) is None


def test_noniso_needs_descriptors_on_both_sides():
    assert disjoint_prime_noniso(Cyclic(F(2, 3)), HalfPrime()) is None
    assert disjoint_prime_noniso(PowerDenominator(2), HalfPrime()) is None


def test_noniso_certificate_mapping():
    cert = disjoint_prime_noniso(PowerDenominator(2), PowerDenominator(3))
    m = cert.as_mapping()
    assert set(m) == {"support_a", "support_b", "reason"}
