"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent tuples over a fixed ring context.  Ideals are kept
in canonical form: the unique minimal generating set, sorted
lexicographically by exponent vector.  The zero ideal is the empty
generator set, the whole ring is generated by the unit monomial.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import reduce

Exponents = tuple[int, ...]

#: exponents beyond this bound abort instead of silently growing
EXPONENT_LIMIT = 2**63 - 1


class EngineError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(EngineError):
    """Operation applied to the zero or unit ideal where a proper nonzero
    ideal is required, or to a zero module."""


class PreconditionError(EngineError):
    """A stated precondition of an operation does not hold."""


class ParseError(EngineError):
    """Malformed text input."""


class CertificationError(EngineError):
    """A construction the theory guarantees could not be certified; the
    run aborts loudly rather than degrade."""


class InfeasibleError(EngineError):
    """An exhaustive search exceeded its configured cap."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, int(p**0.5) + 1):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring: variable count, names, field characteristic."""

    n: int
    var_names: tuple[str, ...]
    char: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise EngineError("ring needs at least one variable")
        if len(self.var_names) != self.n:
            raise EngineError("var_names length must equal n")
        if len(set(self.var_names)) != self.n:
            raise EngineError("variable names must be distinct")
        if self.char != 0 and not _is_prime(self.char):
            raise EngineError(f"characteristic must be 0 or prime, got {self.char}")

    def one(self) -> Exponents:
        return (0,) * self.n


def ring(n: int, names: tuple[str, ...] | list[str] | None = None, char: int = 0) -> RingContext:
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(n))
    return RingContext(n, tuple(names), char)


# ---------------------------------------------------------------------------
# monomial helpers (plain exponent tuples)

def mono_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    c = tuple(x + y for x, y in zip(a, b))
    if any(x > EXPONENT_LIMIT for x in c):
        raise EngineError("exponent overflow")
    return c


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Exponents, b: Exponents) -> Exponents:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_quotient(g: Exponents, m: Exponents) -> Exponents:
    """Exponent vector of g / gcd(g, m)."""
    return tuple(max(x - y, 0) for x, y in zip(g, m))


def mono_degree(a: Exponents) -> int:
    return sum(a)


def mono_support(a: Exponents) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(a) if e > 0)


def unit_exponents(n: int, i: int) -> Exponents:
    return tuple(1 if k == i else 0 for k in range(n))


# ---------------------------------------------------------------------------
# ideals

@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generating set over a ring context."""

    ring: RingContext
    gens: tuple[Exponents, ...]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __str__(self) -> str:
        return format_ideal(self)


def minimal_generators(gens, rc: RingContext) -> MonomialIdeal:
    """Normalize any generating set to the minimal one (also the ideal sum
    when fed the union of two generator sets)."""
    seen = set()
    for g in gens:
        g = tuple(g)
        if len(g) != rc.n:
            raise EngineError(f"exponent vector of length {len(g)}, expected {rc.n}")
        if any(e < 0 for e in g):
            raise EngineError("negative exponent")
        if any(e > EXPONENT_LIMIT for e in g):
            raise EngineError("exponent overflow")
        seen.add(g)
    minimal = [g for g in seen
               if not any(h != g and mono_divides(h, g) for h in seen)]
    return MonomialIdeal(rc, tuple(sorted(minimal)))


def zero_ideal(rc: RingContext) -> MonomialIdeal:
    return MonomialIdeal(rc, ())


def unit_ideal(rc: RingContext) -> MonomialIdeal:
    return MonomialIdeal(rc, (rc.one(),))


def principal(rc: RingContext, m: Exponents) -> MonomialIdeal:
    return minimal_generators([m], rc)


def contains(I: MonomialIdeal, m: Exponents) -> bool:
    """True iff some generator divides m."""
    if len(m) != I.ring.n:
        raise EngineError("monomial/ring length mismatch")
    return any(mono_divides(g, m) for g in I.gens)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I is contained in J."""
    return all(contains(J, g) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators(I.gens + J.gens, I.ring)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """G(I ∩ J) via pairwise lcms."""
    if I.is_zero() or J.is_zero():
        return zero_ideal(I.ring)
    return minimal_generators(
        [mono_lcm(a, b) for a in I.gens for b in J.gens], I.ring)


def intersect_all(ideals, rc: RingContext) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        return unit_ideal(rc)
    return reduce(intersect, ideals)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero() or J.is_zero():
        return zero_ideal(I.ring)
    return minimal_generators(
        [mono_mul(a, b) for a in I.gens for b in J.gens], I.ring)


def colon(I: MonomialIdeal, m: Exponents) -> MonomialIdeal:
    """G(I : m) = minimalized {g / gcd(g, m)}."""
    return minimal_generators([mono_quotient(g, m) for g in I.gens], I.ring)


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J), generator-wise intersection of (I : u)."""
    if J.is_zero():
        return unit_ideal(I.ring)
    return intersect_all((colon(I, u) for u in J.gens), I.ring)


def saturate(I: MonomialIdeal, variables) -> MonomialIdeal:
    """(I : (prod of the given variables)^infinity): zero out those exponents."""
    vs = set(variables)
    return minimal_generators(
        [tuple(0 if k in vs else e for k, e in enumerate(g)) for g in I.gens],
        I.ring)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return minimal_generators(
        [tuple(min(e, 1) for e in g) for g in I.gens], I.ring)


def is_reduced(I: MonomialIdeal) -> bool:
    return radical(I) == I


@dataclass(frozen=True)
class DegreeProfile:
    """d_k(I) per variable and their maximum d(I)."""

    per_variable: tuple[int, ...]
    max_value: int


def degree_profile(I: MonomialIdeal) -> DegreeProfile:
    """d_k(I) = highest degree of x_k in a minimal generator (0 if x_k is
    regular); d(I) their maximum.  Undefined on the zero and unit ideal."""
    if not I.is_proper_nonzero():
        raise DomainError("degree profile undefined for zero/unit ideal")
    per = tuple(max(g[k] for g in I.gens) for k in range(I.ring.n))
    return DegreeProfile(per, max(per))


# ---------------------------------------------------------------------------
# finite boxes of monomials

def generator_bound(*ideals: MonomialIdeal, margin: int = 0) -> Exponents:
    """Componentwise join of all generator exponents, plus margin."""
    rc = ideals[0].ring
    g = [0] * rc.n
    for I in ideals:
        for m in I.gens:
            for k in range(rc.n):
                g[k] = max(g[k], m[k])
    return tuple(e + margin for e in g)


def box_monomials(bound: Exponents):
    """All exponent vectors a with 0 <= a <= bound, lexicographic order."""
    return (tuple(a) for a in itertools.product(*(range(b + 1) for b in bound)))


def membership_table(I: MonomialIdeal, bound: Exponents) -> dict[Exponents, bool]:
    table = {a: False for a in box_monomials(bound)}
    for g in I.gens:
        if all(ge <= be for ge, be in zip(g, bound)):
            for a in itertools.product(*(range(ge, be + 1)
                                         for ge, be in zip(g, bound))):
                table[a] = True
    return table


# ---------------------------------------------------------------------------
# text syntax: "x1^2*x3" for monomials, "[x1^2*x3, t^2]" for ideals

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_']*)(?:\^(\d+))?$")


def parse_monomial(text: str, rc: RingContext) -> Exponents:
    text = text.strip()
    if text == "1":
        return rc.one()
    exps = [0] * rc.n
    index = {name: k for k, name in enumerate(rc.var_names)}
    for factor in text.split("*"):
        m = _TOKEN.match(factor.strip())
        if not m:
            raise ParseError(f"bad monomial factor {factor!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}")
        exps[index[name]] += power
    return tuple(exps)


def parse_ideal(text: str, rc: RingContext) -> MonomialIdeal:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError("ideal syntax is [m1, m2, ...]")
    body = text[1:-1].strip()
    if not body:
        return zero_ideal(rc)
    if body == "0":
        return zero_ideal(rc)
    return minimal_generators(
        [parse_monomial(part, rc) for part in body.split(",")], rc)


def format_monomial(m: Exponents, rc: RingContext) -> str:
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(rc.var_names[k])
        elif e > 1:
            parts.append(f"{rc.var_names[k]}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    if I.is_zero():
        return "[]"
    return "[" + ", ".join(format_monomial(g, I.ring) for g in I.gens) + "]"
