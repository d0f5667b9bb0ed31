"""Irreducible and primary decomposition of monomial ideals, associated
primes, dimension, and the dimension-filtration ideals."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    DomainError,
    MonomialIdeal,
    RingContext,
    contains,
    intersect_all,
    minimal_generators,
    mono_support,
    unit_ideal,
)


@dataclass(frozen=True)
class MonomialPrime:
    """Monomial prime ideal, generated by a subset of the variables."""

    ring: RingContext
    vars: tuple[int, ...]  # sorted variable indices

    def dim(self) -> int:
        return self.ring.n - len(self.vars)

    def to_ideal(self) -> MonomialIdeal:
        n = self.ring.n
        return minimal_generators(
            [tuple(1 if k == v else 0 for k in range(n)) for v in self.vars],
            self.ring)

    def contains_prime(self, other: "MonomialPrime") -> bool:
        return set(other.vars) <= set(self.vars)

    def complement(self) -> tuple[int, ...]:
        inside = set(self.vars)
        return tuple(k for k in range(self.ring.n) if k not in inside)

    def __str__(self) -> str:
        return "(" + ", ".join(self.ring.var_names[v] for v in self.vars) + ")"


def prime(rc: RingContext, variables) -> MonomialPrime:
    return MonomialPrime(rc, tuple(sorted(set(variables))))


def maximal_prime(rc: RingContext) -> MonomialPrime:
    return prime(rc, range(rc.n))


@dataclass(frozen=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    prime: MonomialPrime


@dataclass(frozen=True)
class PrimaryDecomposition:
    components: tuple[PrimaryComponent, ...]

    def primes(self) -> tuple[MonomialPrime, ...]:
        return tuple(c.prime for c in self.components)


def _first_mixed_generator(gens):
    for g in gens:
        if len(mono_support(g)) > 1:
            return g
    return None


def irreducible_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Split mixed generators until every component is generated by pure
    variable powers; prune to an irredundant list."""
    if not I.is_proper_nonzero():
        raise DomainError("irreducible decomposition needs a proper nonzero ideal")
    rc = I.ring
    done: set[tuple] = set()
    stack = [I]
    while stack:
        J = stack.pop()
        g = _first_mixed_generator(J.gens)
        if g is None:
            done.add(J.gens)
            continue
        k = min(mono_support(g))
        rest = [h for h in J.gens if h != g]
        pure = tuple(g[k] if i == k else 0 for i in range(rc.n))
        other = tuple(0 if i == k else e for i, e in enumerate(g))
        stack.append(minimal_generators(rest + [pure], rc))
        stack.append(minimal_generators(rest + [other], rc))
    comps = [MonomialIdeal(rc, g) for g in sorted(done)]
    # drop components containing another component, then greedy irredundancy
    comps = [c for c in comps
             if not any(d != c and _is_sub(d, c) for d in comps)]
    return _prune_irredundant(comps, I)


def _is_sub(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    return all(contains(B, g) for g in A.gens)


def _prune_irredundant(comps: list[MonomialIdeal], I: MonomialIdeal):
    comps = list(comps)
    i = 0
    while i < len(comps):
        rest = comps[:i] + comps[i + 1:]
        if rest and intersect_all(rest, I.ring) == I:
            comps = rest
        else:
            i += 1
    return comps


_primary_cache: dict[tuple, PrimaryDecomposition] = {}


def primary_decomposition(I: MonomialIdeal) -> PrimaryDecomposition:
    """Group irreducible components by radical, prune to irredundancy."""
    if not I.is_proper_nonzero():
        raise DomainError("primary decomposition needs a proper nonzero ideal")
    cache_key = (I.ring, I.gens)
    if cache_key in _primary_cache:
        return _primary_cache[cache_key]
    rc = I.ring
    groups: dict[tuple[int, ...], list[MonomialIdeal]] = {}
    for comp in irreducible_decomposition(I):
        key = tuple(sorted(set().union(*(mono_support(g) for g in comp.gens))))
        groups.setdefault(key, []).append(comp)
    comps = sorted(
        (PrimaryComponent(intersect_all(parts, rc), prime(rc, key))
         for key, parts in groups.items()),
        key=lambda c: c.prime.vars)
    # greedy removal in canonical prime order, re-testing after each removal
    i = 0
    while i < len(comps):
        rest = comps[:i] + comps[i + 1:]
        if rest and intersect_all((c.ideal for c in rest), rc) == I:
            comps = rest
        else:
            i += 1
    result = PrimaryDecomposition(tuple(comps))
    _primary_cache[cache_key] = result
    return result


def is_primary(I: MonomialIdeal) -> bool:
    """A monomial ideal is primary iff it contains a pure power of every
    variable occurring in a generator."""
    if not I.is_proper_nonzero():
        return False
    used = set().union(*(mono_support(g) for g in I.gens))
    pure = {next(iter(mono_support(g)))
            for g in I.gens if len(mono_support(g)) == 1}
    return used <= pure


def radical_prime(I: MonomialIdeal) -> MonomialPrime:
    """The associated prime of a primary monomial ideal."""
    if not is_primary(I):
        raise DomainError("ideal is not primary")
    return prime(I.ring, set().union(*(mono_support(g) for g in I.gens)))


def minimal_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    """Inclusion-minimal variable subsets meeting every generator support.

    Fast path used by the depth engine; agrees with the minimal primes of
    the primary decomposition."""
    if I.is_zero() or I.is_unit():
        return []
    supports = [mono_support(g) for g in I.gens]
    n = I.ring.n
    found: list[frozenset[int]] = []
    for size in range(n + 1):
        for cand in itertools.combinations(range(n), size):
            cs = frozenset(cand)
            if any(f <= cs for f in found):
                continue
            if all(cs & s for s in supports):
                found.append(cs)
    return sorted((prime(I.ring, f) for f in found), key=lambda p: p.vars)


def ideal_dimension(I: MonomialIdeal) -> int:
    """dim S/I; the zero module (unit ideal) reports the -1 sentinel."""
    if I.is_zero():
        return I.ring.n
    if I.is_unit():
        return -1
    return max(p.dim() for p in minimal_primes(I))


def associated_primes(I: MonomialIdeal):
    """(ass, min, dim) of S/I from the irredundant primary decomposition."""
    dec = primary_decomposition(I)
    ass = list(dec.primes())
    mins = [p for p in ass
            if not any(q != p and p.contains_prime(q) for q in ass)]
    dim = max(p.dim() for p in mins)
    return ass, mins, dim


def dimension_filtration_ideals(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Entry k (0 <= k <= n) is the intersection of all primary components
    of dimension > k, so D_k(S/I) = entry_k / I."""
    if not I.is_proper_nonzero():
        raise DomainError("dimension filtration needs a proper nonzero ideal")
    rc = I.ring
    dec = primary_decomposition(I)
    entries = []
    for k in range(rc.n + 1):
        parts = [c.ideal for c in dec.components if c.prime.dim() > k]
        entries.append(intersect_all(parts, rc) if parts else unit_ideal(rc))
    return entries
