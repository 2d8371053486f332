import random
from fractions import Fraction

import pytest

from puiseux.errors import NonPositive
from puiseux.monoid import Factorization, FgMonoid, isomorphism_witness

from oracles import (
    brute_atoms,
    brute_rational_factorizations,
    brute_rational_member,
)

F = Fraction


def random_monoid(rng, max_gens=4, bound=12):
    gens = tuple(
        F(rng.randint(1, bound), rng.randint(1, bound))
        for _ in range(rng.randint(1, max_gens))
    )
    return FgMonoid(gens)


def test_factorization_merges_and_sorts():
    f = Factorization(((F(1, 2), 1), (F(1, 3), 2), (F(1, 2), 3)))
    assert f.terms == ((F(1, 3), 2), (F(1, 2), 4))
    assert f.length == 6
    assert f.evaluate() == 2 * F(1, 3) + 4 * F(1, 2)
    assert f.multiplicity(F(1, 2)) == 4
    assert f.multiplicity(F(1, 7)) == 0


def test_factorization_mapping_shape():
    f = Factorization(((F(2, 3), 2),))
    assert f.as_mapping() == {
        "length": 2,
        "terms": [{"atom": "2/3", "mult": 2}],
    }


def test_generators_normalized():
    m = FgMonoid((F(2, 4), F(1, 2), F(3)))
    assert m.generators == (F(1, 2), F(3))
    with pytest.raises(NonPositive):
        FgMonoid((F(1, 2), F(0)))


def test_empty_monoid_is_trivial():
    m = FgMonoid(())
    assert m.contains(F(0))
    assert not m.contains(F(1, 2))
    assert m.atoms() == ()


def test_scaled_integer_round_trip():
    m = FgMonoid((F(2, 77), F(3, 77)))
    q, sg = m.to_scaled_integer()
    assert sg.generators == (2, 3)
    assert q == F(1, 77)
    assert tuple(q * g for g in sg.generators) == m.generators


def test_membership_examples():
    m = FgMonoid((F(2, 77), F(3, 77)))
    assert m.contains(F(1, 7))
    assert not m.contains(F(1, 77))
    assert m.contains(F(0))
    assert not m.contains(F(-1, 7))


def test_membership_matches_brute_force():
    rng = random.Random(41)
    for _ in range(60):
        m = random_monoid(rng)
        for _ in range(6):
            x = F(rng.randint(0, 12), rng.randint(1, 6))
            assert m.contains(x) == brute_rational_member(m.generators, x), (
                m.generators,
                x,
            )


def test_atoms_examples():
    assert FgMonoid((F(1, 2), F(1, 4))).atoms() == (F(1, 4),)
    assert FgMonoid((F(2, 3), F(1, 3))).atoms() == (F(1, 3),)
    assert FgMonoid((F(1, 2), F(1, 3))).atoms() == (F(1, 3), F(1, 2))
    assert FgMonoid((F(4, 9), F(2, 3))).atoms() == (F(4, 9), F(2, 3))


def test_atoms_match_brute_force():
    rng = random.Random(43)
    for _ in range(60):
        m = random_monoid(rng)
        assert set(m.atoms()) == brute_atoms(m.generators), m.generators


def test_atoms_generate_back():
    rng = random.Random(47)
    for _ in range(40):
        m = random_monoid(rng)
        again = FgMonoid(m.atoms())
        for _ in range(4):
            x = F(rng.randint(0, 10), rng.randint(1, 6))
            assert m.contains(x) == again.contains(x), (m.generators, x)


def test_factorizations_example():
    m = FgMonoid((F(1, 2), F(1, 3)))
    fs = m.factorizations(F(1))
    as_sets = {f.terms for f in fs}
    assert as_sets == {
        ((F(1, 3), 3),),
        ((F(1, 2), 2),),
    }
    assert m.lengths(F(1)) == (2, 3)


def test_factorizations_match_brute_force():
    rng = random.Random(53)
    for _ in range(40):
        m = random_monoid(rng, max_gens=3, bound=9)
        atoms = m.atoms()
        x = sum(
            (rng.randint(0, 2) * a for a in atoms),
            F(rng.randint(0, 1)),
        )
        got = {f.terms for f in m.factorizations(x)}
        want = brute_rational_factorizations(atoms, x)
        assert got == want, (m.generators, x)


def test_factorizations_order_and_degenerates():
    m = FgMonoid((F(1, 2), F(1, 3)))
    assert m.factorizations(F(-1)) == []
    zero = m.factorizations(F(0))
    assert len(zero) == 1 and zero[0].terms == ()
    # Ascending lexicographic order on multiplicity vectors over sorted atoms.
    fs = m.factorizations(F(2))
    vectors = [tuple(f.multiplicity(a) for a in m.atoms()) for f in fs]
    assert vectors == sorted(vectors)


def test_lengths_and_support():
    m = FgMonoid((F(1, 2), F(1, 3)))
    assert m.lengths(F(2)) == (4, 5, 6)
    assert m.lengths(F(1, 5)) == ()
    assert m.atom_support(F(1)) == (F(1, 3), F(1, 2))
    assert m.atom_support(F(1, 3)) == (F(1, 3),)
    assert m.atom_support(F(1, 5)) == ()


def test_scaling_transports_factorizations():
    rng = random.Random(59)
    for _ in range(30):
        m = random_monoid(rng, max_gens=3, bound=9)
        c = F(rng.randint(1, 8), rng.randint(1, 8))
        scaled = m.scale(c)
        assert scaled.generators == tuple(sorted(c * g for g in set(m.generators)))
        x = sum((rng.randint(0, 2) * a for a in m.atoms()), F(0))
        before = {tuple((c * a, k) for a, k in f.terms) for f in m.factorizations(x)}
        after = {f.terms for f in scaled.factorizations(c * x)}
        assert before == after


def test_isomorphism_witness_examples():
    a = FgMonoid((F(1, 2), F(1, 3)))
    b = a.scale(F(5, 7))
    w = isomorphism_witness(a, b)
    assert w == F(5, 7)
    back = isomorphism_witness(b, a)
    assert back == F(7, 5)
    assert isomorphism_witness(a, a) == F(1)


def test_isomorphism_witness_none_for_different_shapes():
    a = FgMonoid((F(1, 2), F(1, 3)))
    b = FgMonoid((F(1, 2), F(1, 5)))
    assert isomorphism_witness(a, b) is None
    c = FgMonoid((F(1, 2),))
    assert isomorphism_witness(a, c) is None


def test_isomorphism_witness_symmetric_randomized():
    rng = random.Random(61)
    for _ in range(40):
        a = random_monoid(rng, max_gens=3, bound=9)
        b = random_monoid(rng, max_gens=3, bound=9)
        w_ab = isomorphism_witness(a, b)
        w_ba = isomorphism_witness(b, a)
        assert (w_ab is None) == (w_ba is None)
        if w_ab is not None:
            assert w_ab * w_ba == 1
