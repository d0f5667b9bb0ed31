"""Depth-monotone transforms of monomial ideal pairs: the single-variable
tilde step, the all-variables degree reduction, and full polarization."""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DomainError,
    MonomialIdeal,
    PreconditionError,
    RingContext,
    degree_profile,
    is_subideal,
    minimal_generators,
)


@dataclass(frozen=True)
class IdealPair:
    """A nested pair I <= U of monomial ideals."""

    U: MonomialIdeal
    I: MonomialIdeal

    def __post_init__(self) -> None:
        if not is_subideal(self.I, self.U):
            raise DomainError("I is not contained in U")


def _lower(gens, i: int, threshold: int, rc: RingContext):
    """Generators together with g/x_i for every g of x_i-degree == threshold."""
    extra = [tuple(e - 1 if k == i else e for k, e in enumerate(g))
             for g in gens if g[i] == threshold]
    return minimal_generators(list(gens) + extra, rc)


def tilde_step(pair: IdealPair, i: int, relaxed: bool = False) -> IdealPair:
    """Adjoin g/x_i for generators of x_i-degree d(I), to both ideals.

    The threshold is d(I) for BOTH ideals.  In relaxed mode the threshold
    is d_i(I) instead, so the step applies to variables not attaining the
    maximal degree."""
    rc = pair.I.ring
    profile = degree_profile(pair.I)
    d = profile.per_variable[i] if relaxed else profile.max_value
    if relaxed and d == 0:
        raise PreconditionError(f"variable {rc.var_names[i]} is regular on S/I")
    if not any(g[i] == d for g in pair.I.gens):
        raise PreconditionError(
            f"no generator of I attains x_{i}-degree d(I)={d}")
    return IdealPair(_lower(pair.U.gens, i, d, rc), _lower(pair.I.gens, i, d, rc))


def reduce_step(pair: IdealPair) -> IdealPair:
    """The pair (U_1, I_1): adjoin g/x_i over all variables attaining d(I).

    Squarefree I (d(I) = 1) is a fixed point, so iterating terminates."""
    profile = degree_profile(pair.I)
    d = profile.max_value
    if d <= 1:
        return pair
    rc = pair.I.ring
    I1 = list(pair.I.gens)
    U1 = list(pair.U.gens)
    for i in range(rc.n):
        I1 += [tuple(e - 1 if k == i else e for k, e in enumerate(g))
               for g in pair.I.gens if g[i] == d]
        U1 += [tuple(e - 1 if k == i else e for k, e in enumerate(g))
               for g in pair.U.gens if g[i] == d]
    return IdealPair(minimal_generators(U1, rc), minimal_generators(I1, rc))


def full_polarization(I: MonomialIdeal):
    """Standard polarization to a squarefree ideal over an enlarged ring.

    Returns (squarefree ideal, map from new variable index to original
    index).  x_k spawns x_k, x_k', x_k'' ... in fixed order; specializing
    the primed variables back to x_k reproduces I, and
    depth(S/I) = depth(S'/I^pol) - (number of added variables).
    """
    if not I.is_proper_nonzero():
        raise DomainError("polarization needs a proper nonzero ideal")
    rc = I.ring
    profile = degree_profile(I)
    slots: list[list[int]] = []  # per original variable: new indices
    names: list[str] = []
    var_map: dict[int, int] = {}
    for k in range(rc.n):
        width = max(profile.per_variable[k], 1)
        mine = []
        for copy in range(width):
            var_map[len(names)] = k
            mine.append(len(names))
            names.append(rc.var_names[k] + "'" * copy)
        slots.append(mine)
    new_rc = RingContext(len(names), tuple(names), rc.char)
    new_gens = []
    for g in I.gens:
        exps = [0] * new_rc.n
        for k, e in enumerate(g):
            for copy in range(e):
                exps[slots[k][copy]] = 1
        new_gens.append(tuple(exps))
    return minimal_generators(new_gens, new_rc), var_map


def depolarize(J: MonomialIdeal, var_map: dict[int, int], rc: RingContext) -> MonomialIdeal:
    """Specialize polarization variables back; inverse check for tests."""
    gens = []
    for g in J.gens:
        exps = [0] * rc.n
        for idx, e in enumerate(g):
            exps[var_map[idx]] += e
        gens.append(tuple(exps))
    return minimal_generators(gens, rc)
