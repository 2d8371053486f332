"""Finitely generated monoids of nonnegative rationals.

Such a monoid is determined by finitely many positive generators. It
is always isomorphic, via multiplication by a single positive rational,
to a numerical semigroup whose generators have gcd 1: clear
denominators with the lcm, then divide out the gcd of the resulting
numerators. All membership and factorization questions are answered
exactly through that reduction.

The empty generator tuple is allowed and denotes the trivial monoid,
whose only element is 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import format_rational, p_adic_valuation, prime_factors
from .errors import NonPositive
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class Factorization:
    """A finite multiset of atoms with positive multiplicities.

    Terms are kept sorted by atom; duplicate atoms passed to the
    constructor are merged.
    """

    terms: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        merged: dict[Fraction, int] = {}
        for atom, mult in self.terms:
            atom = Fraction(atom)
            mult = int(mult)
            if atom <= 0:
                raise NonPositive(f"atoms must be positive, got {atom}")
            if mult < 1:
                raise NonPositive(f"multiplicities must be >= 1, got {mult}")
            merged[atom] = merged.get(atom, 0) + mult
        object.__setattr__(self, "terms", tuple(sorted(merged.items())))

    @property
    def length(self) -> int:
        return sum(m for _, m in self.terms)

    def evaluate(self) -> Fraction:
        return sum((a * m for a, m in self.terms), Fraction(0))

    def multiplicity(self, atom: Fraction) -> int:
        for a, m in self.terms:
            if a == atom:
                return m
        return 0

    def as_mapping(self) -> dict:
        """JSON-ready form: total length plus one entry per atom."""
        return {
            "length": self.length,
            "terms": [
                {"atom": format_rational(a), "mult": m} for a, m in self.terms
            ],
        }


@dataclass(frozen=True)
class FgMonoid:
    """The additive closure of finitely many positive rationals.

    Generators are normalized to a strictly increasing tuple of reduced
    fractions. An empty tuple gives the trivial monoid.
    """

    generators: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        gens = tuple(sorted(set(Fraction(g) for g in self.generators)))
        if gens and gens[0] <= 0:
            raise NonPositive(f"generators must be positive, got {gens[0]}")
        object.__setattr__(self, "generators", gens)

    def to_scaled_integer(self) -> tuple[Fraction, NumericalSemigroup]:
        """The scale q and semigroup N with self = q * N and gcd(N) = 1.

        q is the gcd of the generators in the rational sense: the
        largest rational whose integer multiples include every
        generator.
        """
        if not self.generators:
            raise NonPositive("the trivial monoid has no scaled integer form")
        common = math.lcm(*(g.denominator for g in self.generators))
        nums = [g.numerator * (common // g.denominator) for g in self.generators]
        d = math.gcd(*nums)
        return Fraction(d, common), NumericalSemigroup(tuple(n // d for n in nums))

    def contains(self, x: Fraction | int) -> bool:
        """Whether x is a finite sum of generators (0 always is)."""
        x = Fraction(x)
        if x < 0:
            return False
        if x == 0:
            return True
        if not self.generators:
            return False
        q, ns = self.to_scaled_integer()
        t = x / q
        return t.denominator == 1 and ns.contains(t.numerator)

    def atoms(self) -> tuple[Fraction, ...]:
        """The atoms, i.e. the minimal generating set, increasing.

        A generator fails to be an atom exactly when the others already
        generate it. Two shortcuts avoid the membership test: the
        smallest generator is always an atom, and so is any generator g
        with a prime p where the valuation of g is strictly below the
        valuation of every other generator, since valuations of sums
        cannot drop below the minimum over the summands.
        """
        gens = self.generators
        out = []
        for i, g in enumerate(gens):
            others = gens[:i] + gens[i + 1 :]
            if i == 0 or not others:
                out.append(g)
                continue
            if _valuation_gap(g, others):
                out.append(g)
                continue
            if not FgMonoid(others).contains(g):
                out.append(g)
        return tuple(out)

    def factorizations(self, x: Fraction | int) -> list[Factorization]:
        """All factorizations of x into atoms.

        Results are ordered lexicographically, increasing, by the
        multiplicity vector indexed by increasing atoms. Note the
        difference from NumericalSemigroup.representations, whose
        canonical order varies the largest generator slowest; both
        orders are deterministic, they just serve different readers.
        """
        x = Fraction(x)
        if x < 0:
            return []
        if x == 0:
            return [Factorization(())]
        ats = self.atoms()
        if not ats:
            return []
        q, ns = FgMonoid(ats).to_scaled_integer()
        t = x / q
        if t.denominator != 1:
            return []
        reps = sorted(ns.representations(t.numerator))
        return [
            Factorization(tuple((a, c) for a, c in zip(ats, rep) if c))
            for rep in reps
        ]

    def lengths(self, x: Fraction | int) -> tuple[int, ...]:
        """The set of factorization lengths of x, sorted increasing."""
        return tuple(sorted({f.length for f in self.factorizations(x)}))

    def atom_support(self, x: Fraction | int) -> tuple[Fraction, ...]:
        """Atoms that appear in at least one factorization of x.

        An atom a qualifies exactly when x - a is still a member.
        """
        x = Fraction(x)
        return tuple(a for a in self.atoms() if a <= x and self.contains(x - a))

    def scale(self, c: Fraction | int) -> "FgMonoid":
        """The monoid c * self for a positive rational c."""
        c = Fraction(c)
        if c <= 0:
            raise NonPositive(f"scale factor must be positive, got {c}")
        return FgMonoid(tuple(g * c for g in self.generators))


def _valuation_gap(g: Fraction, others: tuple[Fraction, ...]) -> bool:
    primes_of_d = prime_factors(g.denominator)
    if primes_of_d is None:
        return False
    for p in primes_of_d:
        vg = p_adic_valuation(p, g)
        if all(p_adic_valuation(p, h) > vg for h in others):
            return True
    return False


def isomorphism_witness(a: FgMonoid, b: FgMonoid) -> Fraction | None:
    """The scale factor carrying a onto b, or None when they differ.

    Every isomorphism between monoids of nonnegative rationals is
    multiplication by a positive rational, so it suffices to compare
    atom lists: the ratio of the smallest atoms must carry each atom of
    a to the matching atom of b.
    """
    atoms_a, atoms_b = a.atoms(), b.atoms()
    if not atoms_a and not atoms_b:
        return Fraction(1)
    if len(atoms_a) != len(atoms_b) or not atoms_a:
        return None
    r = atoms_b[0] / atoms_a[0]
    if all(x * r == y for x, y in zip(atoms_a, atoms_b)):
        return r
    return None
