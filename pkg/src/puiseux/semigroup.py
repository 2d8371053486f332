"""Numerical semigroups given by finitely many positive integer generators.

A generating set G determines the set of all nonnegative integer
combinations of G. When gcd(G) = 1 the complement in the nonnegative
integers is finite and the largest missing value is the Frobenius
number; when gcd(G) = d > 1 the semigroup lives inside the multiples
of d and has no Frobenius number.

Membership and representation counting both reduce, one generator at a
time, to the two generator case, which is solved exactly with modular
arithmetic instead of search: c0*g0 + c1*g1 = x constrains c0 to a
single residue class mod g1/gcd, so the solutions can be walked
directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPositive, NotCofinite


def _two_gen_solutions(g0: int, g1: int, x: int) -> list[tuple[int, int]]:
    """All (c0, c1) with c0*g0 + c1*g1 == x, listed with c1 increasing."""
    if x < 0:
        return []
    d = math.gcd(g0, g1)
    if x % d:
        return []
    g0, g1, x = g0 // d, g1 // d, x // d
    # c0 must lie in one residue class mod g1; pow(v, -1, 1) == 0 keeps
    # the degenerate g1 == 1 case uniform.
    c0_low = (x * pow(g0, -1, g1)) % g1
    cap = x // g0
    if c0_low > cap:
        return []
    c0 = c0_low + (cap - c0_low) // g1 * g1
    out = []
    while c0 >= c0_low:
        out.append((c0, (x - c0 * g0) // g1))
        c0 -= g1
    return out


def _two_gen_member(g0: int, g1: int, x: int) -> bool:
    if x < 0:
        return False
    d = math.gcd(g0, g1)
    if x % d:
        return False
    g0, g1, x = g0 // d, g1 // d, x // d
    return (x * pow(g0, -1, g1)) % g1 * g0 <= x


@dataclass(frozen=True)
class NumericalSemigroup:
    """The additive closure of a nonempty finite set of positive integers.

    Generators are normalized to a strictly increasing tuple on
    construction; duplicates are dropped. The zero element is always a
    member.
    """

    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens:
            raise NonPositive("a numerical semigroup needs at least one generator")
        if gens[0] < 1:
            raise NonPositive(f"generators must be positive integers, got {gens[0]}")
        object.__setattr__(self, "generators", gens)

    @property
    def is_cofinite(self) -> bool:
        """True when gcd of the generators is 1, i.e. the gap set is finite."""
        return math.gcd(*self.generators) == 1

    def contains(self, x: int) -> bool:
        """Whether x is a nonnegative integer combination of the generators."""
        if x < 0:
            return False
        return _member(self.generators, _prefix_gcds(self.generators), x, {})

    def representations(self, x: int) -> list[tuple[int, ...]]:
        """Every coefficient tuple representing x, in canonical order.

        Each tuple lists one coefficient per generator, generators in
        increasing order. Tuples are ordered so that the coefficient of
        the largest generator varies slowest, increasing, then the next
        largest, and so on.
        """
        if x < 0:
            return []
        gens = self.generators
        if len(gens) == 1:
            if x % gens[0] == 0:
                return [(x // gens[0],)]
            return []
        pg = _prefix_gcds(gens)

        def rec(k: int, rem: int) -> list[tuple[int, ...]]:
            if k == 2:
                return [t for t in _two_gen_solutions(gens[0], gens[1], rem)]
            g = gens[k - 1]
            out = []
            for c in range(rem // g + 1):
                inner = rem - c * g
                if inner % pg[k - 1]:
                    continue
                out.extend(t + (c,) for t in rec(k - 1, inner))
            return out

        return rec(len(gens), x)

    def any_representation(self, x: int) -> tuple[int, ...] | None:
        """One representation of x, or None; cheaper than enumerating all."""
        if x < 0:
            return None
        gens = self.generators
        pg = _prefix_gcds(gens)

        def rec(k: int, rem: int) -> tuple[int, ...] | None:
            if k == 1:
                return (rem // gens[0],) if rem % gens[0] == 0 else None
            if k == 2:
                sols = _two_gen_solutions(gens[0], gens[1], rem)
                return sols[0] if sols else None
            g = gens[k - 1]
            for c in range(rem // g, -1, -1):
                inner = rem - c * g
                if inner % pg[k - 1]:
                    continue
                sub = rec(k - 1, inner)
                if sub is not None:
                    return sub + (c,)
            return None

        return rec(len(gens), x)

    def minimal_generators(self) -> tuple[int, ...]:
        """The unique inclusion-minimal generating set, increasing."""
        gens = self.generators
        if len(gens) == 1:
            return gens
        kept = []
        for g in gens:
            others = tuple(h for h in gens if h != g)
            if not _member(others, _prefix_gcds(others), g, {}):
                kept.append(g)
        return tuple(kept)

    def frobenius(self) -> int:
        """Largest integer not in the semigroup, -1 when there are no gaps.

        Raises NotCofinite when gcd of the generators exceeds 1. Two
        coprime generators a < b give a*b - a - b in closed form; more
        generators fall back to a reachability table that grows until
        the top min-generator-width window is fully reachable, which
        certifies that no gap lies beyond the table.
        """
        if not self.is_cofinite:
            raise NotCofinite(
                f"gcd{self.generators} > 1, the complement is infinite"
            )
        mg = self.minimal_generators()
        if mg[0] == 1:
            return -1
        if len(mg) == 2:
            a, b = mg
            return a * b - a - b
        gmin = mg[0]
        bound = max(mg[0] * mg[1], mg[-1] + gmin + 1)
        while True:
            table = bytearray(bound)
            table[0] = 1
            for i in range(gmin, bound):
                for g in mg:
                    if g > i:
                        break
                    if table[i - g]:
                        table[i] = 1
                        break
            largest_gap = max(i for i in range(bound) if not table[i])
            if largest_gap + gmin < bound:
                return largest_gap
            bound *= 2


def _prefix_gcds(gens: tuple[int, ...]) -> tuple[int, ...]:
    """pg[k] = gcd of the first k generators (pg[0] unused)."""
    pg = [0] * (len(gens) + 1)
    for k, g in enumerate(gens, start=1):
        pg[k] = math.gcd(pg[k - 1], g)
    return tuple(pg)


def _member(gens, pg, x: int, memo) -> bool:
    if x == 0:
        return True
    k = len(gens)
    if k == 1:
        return x % gens[0] == 0
    if k == 2:
        return _two_gen_member(gens[0], gens[1], x)
    key = (k, x)
    hit = memo.get(key)
    if hit is not None:
        return hit
    g = gens[-1]
    res = False
    for c in range(x // g, -1, -1):
        rem = x - c * g
        if rem % pg[k - 1] == 0 and _member(gens[:-1], pg, rem, memo):
            res = True
            break
    memo[key] = res
    return res
