import itertools
import random
from fractions import Fraction

import pytest

from puiseux.arith import is_prime, nth_prime
from puiseux.errors import BadIndex, BadProgression, NonPositive, NotPrime
from puiseux.families import (
    AffineSeq,
    AllPrimes,
    BfNotFf,
    CalkinWilfTargets,
    ConstantSeq,
    CongruencePrimes,
    Cyclic,
    ElementaryKPrimary,
    ElementaryPrimary,
    ExplicitList,
    ExplicitSeq,
    ExplicitTargets,
    GeneralizedCyclic,
    GeometricSeq,
    HalfPrime,
    PAdic,
    PartitionClassPrimes,
    PartitionedKPrimary,
    PlusMinusPowers,
    PowerDenominator,
    PowerSeq,
    SumKPrimary,
    TwoAdicOddPrime,
    classify,
    colex_subset,
    class_prime,
    denominator_support,
    family_from_mapping,
    generator_at,
    partition_class_of_index,
    rule_statement,
    sequence_from_mapping,
    targets_from_mapping,
    truncate,
)

from oracles import sieve_primes, subset_in_colex

F = Fraction


# ---------------------------------------------------------------------------
# sequences


def test_constant_sequence():
    s = ConstantSeq(3)
    assert [s.value_at(n) for n in (1, 5, 100)] == [3, 3, 3]
    assert not s.tends_to_infinity()
    assert s.prime_power_base() == 3
    assert s.coprime_to(2) and not s.coprime_to(3)


def test_power_and_geometric_sequences():
    s = PowerSeq(3)
    assert [s.value_at(n) for n in (1, 2, 3)] == [3, 9, 27]
    assert s.tends_to_infinity() and s.is_strictly_increasing()
    assert s.prime_power_base() == 3
    g = GeometricSeq(9, 3)
    assert [g.value_at(n) for n in (1, 2)] == [27, 81]
    assert g.prime_power_base() == 3
    assert GeometricSeq(2, 3).prime_power_base() is None


def test_affine_sequence():
    s = AffineSeq(2, 0)
    assert [s.value_at(n) for n in (1, 2, 3)] == [2, 4, 6]
    assert s.tends_to_infinity()
    assert AffineSeq(0, 7).prime_power_base() == 7
    assert AffineSeq(1, 1).prime_power_base() is None
    with pytest.raises(NonPositive):
        AffineSeq(0, 0)


def test_explicit_sequence_with_tail():
    s = ExplicitSeq((9, 3), PowerSeq(3))
    assert [s.value_at(n) for n in (1, 2, 3, 4)] == [9, 3, 27, 81]
    assert s.tends_to_infinity()
    assert not s.is_strictly_increasing()
    assert s.min_from(2) == 3
    assert s.min_from(3) == 27
    assert s.prime_power_base() == 3


def test_explicit_sequence_without_tail_is_finite():
    s = ExplicitSeq((5, 8))
    assert s.value_at(2) == 8
    with pytest.raises(BadIndex):
        s.value_at(3)


def test_sequence_mappings_round_trip():
    for s in (
        ConstantSeq(4),
        PowerSeq(3),
        GeometricSeq(2, 5),
        AffineSeq(2, 1),
        ExplicitSeq((9, 3), PowerSeq(3)),
        ExplicitSeq((5, 8)),
    ):
        assert sequence_from_mapping(s.as_mapping()) == s


# ---------------------------------------------------------------------------
# prime streams and partition classes


def test_partition_classes_tile_the_indices():
    # Every index lands in exactly one class, 2^(j-1) * (2t - 1).
    seen = {}
    for n in range(1, 65):
        j, t = partition_class_of_index(n)
        assert n == 2 ** (j - 1) * (2 * t - 1)
        seen.setdefault(j, []).append(t)
    for j, ts in seen.items():
        assert ts == list(range(1, len(ts) + 1)), j


def test_class_prime_values():
    assert class_prime(1, 1) == nth_prime(1) == 2
    assert class_prime(1, 2) == nth_prime(3) == 5
    assert class_prime(2, 1) == nth_prime(2) == 3
    assert class_prime(3, 1) == nth_prime(4) == 7


def test_congruence_primes():
    stream = CongruencePrimes(1, 4)
    got = [stream.prime_at(n) for n in range(1, 6)]
    want = [p for p in sieve_primes(200) if p % 4 == 1][:5]
    assert got == want
    with pytest.raises(BadProgression):
        CongruencePrimes(2, 4)


def test_partition_class_primes():
    stream = PartitionClassPrimes(1)
    # Class 1 holds the primes at odd positions.
    assert [stream.prime_at(n) for n in (1, 2, 3)] == [
        nth_prime(1),
        nth_prime(3),
        nth_prime(5),
    ]
    streams = [PartitionClassPrimes(j) for j in (1, 2, 3)]
    drawn = [{s.prime_at(n) for n in range(1, 6)} for s in streams]
    assert not (drawn[0] & drawn[1]) and not (drawn[0] & drawn[2])
    assert not (drawn[1] & drawn[2])


def test_all_primes_stream():
    s = AllPrimes()
    assert [s.prime_at(n) for n in range(1, 6)] == [2, 3, 5, 7, 11]


# ---------------------------------------------------------------------------
# colexicographic subsets, target sequences


def test_colex_subsets_enumerate_in_order():
    for k in (2, 3):
        want = subset_in_colex(8, k)
        got = [colex_subset(rank, k) for rank in range(1, len(want) + 1)]
        assert got == want, k


def test_calkin_wilf_targets():
    t = CalkinWilfTargets()
    first = [t.value_at(n) for n in range(1, 8)]
    assert first == [F(1), F(1, 2), F(2), F(1, 3), F(3, 2), F(2, 3), F(3)]
    # Distinct positive rationals; the walk never repeats.
    seen = {t.value_at(n) for n in range(1, 201)}
    assert len(seen) == 200
    assert all(q > 0 for q in seen)


def test_explicit_targets():
    t = ExplicitTargets((F(1, 2), F(5)))
    assert t.value_at(2) == F(5)
    with pytest.raises(BadIndex):
        t.value_at(3)
    assert targets_from_mapping(t.as_mapping()) == t


# ---------------------------------------------------------------------------
# family generators


def test_power_denominator_generators():
    spec = PowerDenominator(3)
    assert [generator_at(spec, n) for n in (1, 2, 3)] == [F(1, 3), F(1, 9), F(1, 27)]
    with pytest.raises(NotPrime):
        PowerDenominator(4)


def test_half_prime_generators():
    spec = HalfPrime()
    assert [generator_at(spec, n) for n in range(1, 6)] == [
        F(1, 2),
        F(1, 3),
        F(2, 5),
        F(3, 7),
        F(5, 11),
    ]


def test_two_adic_odd_prime_generators():
    spec = TwoAdicOddPrime()
    assert [generator_at(spec, n) for n in (1, 2, 3)] == [
        F(1, 6),
        F(1, 20),
        F(1, 56),
    ]
    # The submonoid relation that breaks heredity: 1/2^n = p_n * gen_n.
    for n in range(1, 8):
        assert F(1, 2**n) == (generator_at(spec, n) * nth_prime(n + 1))


def test_elementary_primary_generators():
    spec = ElementaryPrimary()
    assert [generator_at(spec, n) for n in (1, 2, 3)] == [F(1, 2), F(1, 3), F(1, 5)]
    spec14 = ElementaryPrimary(CongruencePrimes(1, 4))
    assert generator_at(spec14, 1) == F(1, 5)


def test_elementary_k_primary_generators():
    spec = ElementaryKPrimary(2)
    assert [generator_at(spec, n) for n in (1, 2, 3, 4)] == [
        F(1, 6),
        F(1, 10),
        F(1, 15),
        F(1, 14),
    ]
    denominators = {generator_at(spec, n).denominator for n in range(1, 11)}
    assert len(denominators) == 10


def test_partitioned_k_primary_generators():
    spec = PartitionedKPrimary(2)
    assert [generator_at(spec, n) for n in (1, 2, 3)] == [
        F(1, 6),
        F(1, 35),
        F(1, 143),
    ]


def test_sum_k_primary_generators():
    spec = SumKPrimary(2)
    assert [generator_at(spec, n) for n in (1, 2, 3)] == [
        F(5, 6),
        F(7, 10),
        F(8, 15),
    ]


def test_padic_generators():
    spec = PAdic(2, PowerSeq(3), AffineSeq(2, 0))
    assert [generator_at(spec, n) for n in (1, 2, 3)] == [
        F(3, 4),
        F(9, 16),
        F(27, 64),
    ]
    with pytest.raises(NotPrime):
        PAdic(6, PowerSeq(3), AffineSeq(2, 0))


def test_plus_minus_generators_and_identities():
    spec = PlusMinusPowers(3)
    assert generator_at(spec, 1) == F(8, 81)
    assert generator_at(spec, 2) == F(10, 81)
    assert generator_at(spec, 3) == F(80, 6561)
    for level in (1, 2, 3):
        s = 3 ** (2**level)
        minus = generator_at(spec, 2 * level - 1)
        plus = generator_at(spec, 2 * level)
        assert minus + plus == F(2, s)
        assert minus == (s - 1) // 2 * F(2, s * s)
        assert plus == (s + 1) // 2 * F(2, s * s)
    with pytest.raises(NotPrime):
        PlusMinusPowers(4)
    with pytest.raises(NotPrime):
        PlusMinusPowers(2)


def test_cyclic_generators():
    spec = Cyclic(F(2, 3))
    assert [generator_at(spec, n) for n in (1, 2, 3)] == [
        F(2, 3),
        F(4, 9),
        F(8, 27),
    ]


def test_generalized_cyclic_generators():
    spec = GeneralizedCyclic((F(2, 5), F(4, 7)))
    assert [generator_at(spec, n) for n in (1, 2, 3, 4)] == [
        F(2, 5),
        F(4, 7),
        F(4, 25),
        F(16, 49),
    ]


def test_bf_not_ff_generators():
    spec = BfNotFf()
    assert [generator_at(spec, n) for n in range(1, 7)] == [
        F(1, 3),
        F(2, 3),
        F(2, 5),
        F(3, 5),
        F(3, 7),
        F(4, 7),
    ]
    # Every generator is at least 1/3, and paired halves sum to one.
    for n in range(1, 40, 2):
        assert generator_at(spec, n) + generator_at(spec, n + 1) == 1
        assert generator_at(spec, n) >= F(1, 3)


def test_explicit_list_generators():
    spec = ExplicitList((F(1, 2), F(3, 4)))
    assert generator_at(spec, 1) == F(1, 2)
    assert generator_at(spec, 2) == F(3, 4)
    with pytest.raises(BadIndex):
        generator_at(spec, 3)
    with pytest.raises(NonPositive):
        ExplicitList(())


def test_family_mappings_round_trip():
    specs = [
        PowerDenominator(3),
        HalfPrime(),
        TwoAdicOddPrime(),
        ElementaryPrimary(),
        ElementaryPrimary(CongruencePrimes(3, 4)),
        ElementaryPrimary(PartitionClassPrimes(2)),
        ElementaryKPrimary(2),
        PartitionedKPrimary(3),
        SumKPrimary(2),
        PAdic(2, PowerSeq(3), AffineSeq(2, 0)),
        PAdic(5, ExplicitSeq((9, 3), PowerSeq(3)), AffineSeq(1, 0)),
        PlusMinusPowers(3),
        Cyclic(F(2, 3)),
        GeneralizedCyclic((F(2, 5), F(4, 7))),
        BfNotFf(),
        ExplicitList((F(1, 2), F(3, 4))),
    ]
    for spec in specs:
        assert family_from_mapping(spec.as_mapping()) == spec


def test_truncate_sorts_ascending():
    m = truncate(PowerDenominator(2), 3)
    assert m.generators == (F(1, 8), F(1, 4), F(1, 2))
    assert truncate(PowerDenominator(2), 0).generators == ()


# ---------------------------------------------------------------------------
# classification


TABLE = {
    # family -> (dense, atomic, antimatter, strongly_bounded, finite, hereditary)
    "power": (PowerDenominator(3), "yes", "no", "yes", "yes", "yes", "no"),
    "half-prime": (HalfPrime(), "no", "yes", "no", "no", "no", "yes"),
    "two-adic": (TwoAdicOddPrime(), "yes", "yes", "no", "yes", "no", "no"),
    "elementary": (ElementaryPrimary(), "yes", "yes", "no", "yes", "no", "yes"),
    "elementary-1mod4": (
        ElementaryPrimary(CongruencePrimes(1, 4)),
        "yes", "yes", "no", "yes", "no", "yes",
    ),
    "elem-k1": (ElementaryKPrimary(1), "yes", "yes", "no", "yes", "no", "yes"),
    "elem-k2": (ElementaryKPrimary(2), "yes", "no", "yes", "yes", "no", "no"),
    "part-k2": (PartitionedKPrimary(2), "yes", "yes", "no", "yes", "no", "unknown"),
    "sum-k2": (SumKPrimary(2), "yes", "yes", "no", "no", "no", "unknown"),
    "padic-decreasing": (
        PAdic(2, PowerSeq(3), AffineSeq(2, 0)),
        "yes", "yes", "no", "no", "yes", "unknown",
    ),
    "padic-constant": (
        PAdic(2, ConstantSeq(3), AffineSeq(1, 0)),
        "yes", "no", "unknown", "yes", "yes", "no",
    ),
    "plus-minus": (PlusMinusPowers(3), "yes", "no", "yes", "unknown", "yes", "no"),
    "cyclic-small": (Cyclic(F(2, 3)), "yes", "yes", "no", "no", "yes", "yes"),
    "cyclic-big": (Cyclic(F(3, 2)), "no", "yes", "no", "no", "yes", "yes"),
    "cyclic-integer": (Cyclic(F(2)), "no", "yes", "no", "yes", "yes", "yes"),
    "cyclic-one": (Cyclic(F(1)), "no", "yes", "no", "yes", "yes", "yes"),
    "cyclic-unit-numerator": (
        Cyclic(F(1, 2)),
        "yes", "no", "yes", "yes", "yes", "no",
    ),
    "gen-cyclic-shared": (
        GeneralizedCyclic((F(2, 5), F(4, 7))),
        "yes", "yes", "no", "unknown", "yes", "yes",
    ),
    "gen-cyclic-coprime": (
        GeneralizedCyclic((F(2, 5), F(3, 7))),
        "yes", "unknown", "unknown", "unknown", "yes", "unknown",
    ),
    "bf-not-ff": (BfNotFf(), "no", "yes", "no", "no", "no", "yes"),
    "explicit": (
        ExplicitList((F(1, 2), F(1, 3))),
        "no", "yes", "no", "yes", "yes", "yes",
    ),
}


@pytest.mark.parametrize("name", sorted(TABLE))
def test_classification_table(name):
    spec, dense, atomic, antimatter, sb, finite, hereditary = TABLE[name]
    report = classify(spec)
    assert report.dense == dense
    assert report.atomic == atomic
    assert report.antimatter == antimatter
    assert report.strongly_bounded == sb
    assert report.finite_puiseux == finite
    assert report.hereditarily_atomic == hereditary


@pytest.mark.parametrize("name", sorted(TABLE))
def test_classification_internally_consistent(name):
    spec = TABLE[name][0]
    report = classify(spec)
    # The verdicts must never contradict the defining implications.
    if report.hereditarily_atomic == "yes":
        assert report.atomic == "yes"
    if report.atomic == "yes":
        assert report.antimatter == "no"
        assert report.hereditarily_atomic != "yes" or report.atomic == "yes"
    if report.antimatter == "yes":
        assert report.atomic == "no"
    if report.dense == "no":
        assert report.hereditarily_atomic == "yes"
    if report.atomic == "no":
        assert report.hereditarily_atomic == "no"


def test_classification_justification_lines():
    report = classify(TwoAdicOddPrime())
    assert any("power-of-two-submonoid-not-atomic" in line for line in report.justification)
    joined = " ".join(report.justification)
    assert "dense=yes" in joined
    mapping = report.as_mapping()
    assert mapping["atomic"] == "yes"
    assert isinstance(mapping["justification"], list)


def test_rule_statements_exist_for_cited_rules():
    for rule in (
        "not-dense-hereditarily-atomic",
        "primary-denominators-hereditary",
        "all-generators-are-atoms",
        "power-of-two-submonoid-not-atomic",
        "cyclic-ratio-atomic",
        "shared-numerator-prime-embedding",
    ):
        text = rule_statement(rule)
        assert isinstance(text, str) and text


# ---------------------------------------------------------------------------
# denominator support


def test_denominator_support_descriptors():
    assert denominator_support(PowerDenominator(2)) == ("finite", (2,))
    assert denominator_support(PAdic(3, PowerSeq(2), AffineSeq(1, 0))) == (
        "finite",
        (3,),
    )
    assert denominator_support(PlusMinusPowers(5)) == ("finite", (5,))
    assert denominator_support(ElementaryPrimary()) == ("all",)
    assert denominator_support(ElementaryPrimary(CongruencePrimes(1, 4))) == (
        "congruence",
        1,
        4,
    )
    assert denominator_support(ElementaryPrimary(PartitionClassPrimes(2))) == (
        "partition",
        2,
    )
    assert denominator_support(HalfPrime()) is None


def test_truncation_atoms_power_denominator():
    # Only the finest reciprocal survives in any truncation.
    for size in (1, 3, 5):
        atoms = truncate(PowerDenominator(2), size).atoms()
        assert atoms == (F(1, 2**size),)


def test_truncation_atoms_bf_not_ff():
    m = truncate(BfNotFf(), 10)
    atoms = set(m.atoms())
    assert atoms == set(m.generators) - {F(2, 3)}
