"""Exact depth, dimension and (sequentially) Cohen-Macaulay verdicts for
quotient modules J/I, via Koszul homology over an exact field, with a
Hochster-formula cross-check for squarefree ideals.

For M = J/I every multigraded component has K-dimension 0 or 1, so each
multidegree contributes a small incidence complex with entries in {0, +-1};
depth(M) = n - max{ i : H_i(x_1..x_n; M) != 0 } by Auslander-Buchsbaum.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    DomainError,
    MonomialIdeal,
    RingContext,
    box_monomials,
    colon_ideal,
    generator_bound,
    is_subideal,
    membership_table,
    mono_support,
    unit_ideal,
)
from .decomposition import dimension_filtration_ideals, ideal_dimension
from .linalg import matrix_rank


@dataclass(frozen=True)
class QuotientModule:
    """The multigraded module J/I for monomial ideals I <= J."""

    ring: RingContext
    J: MonomialIdeal
    I: MonomialIdeal

    def is_zero(self) -> bool:
        return self.J == self.I


def quotient_module(J: MonomialIdeal, I: MonomialIdeal) -> QuotientModule:
    if J.ring != I.ring:
        raise DomainError("ideals live in different rings")
    if not is_subideal(I, J):
        raise DomainError("I is not contained in J")
    return QuotientModule(J.ring, J, I)


def cyclic_module(I: MonomialIdeal) -> QuotientModule:
    """S/I as the pair (S, I)."""
    return QuotientModule(I.ring, unit_ideal(I.ring), I)


@dataclass(frozen=True)
class DepthReport:
    depth: int
    dim: int
    is_cm: bool
    koszul_top_degree: int
    field_char: int


def module_dimension(M: QuotientModule) -> int:
    """dim(J/I) = dim S/(I : J)."""
    if M.is_zero():
        raise DomainError("dimension of the zero module")
    return ideal_dimension(colon_ideal(M.I, M.J))


# ---------------------------------------------------------------------------
# Koszul strands

# (n, occupancy pattern, char) -> top nonvanishing homology index (-1 if exact)
_strand_cache: dict[tuple[int, int, int], int] = {}
_depth_cache: dict[tuple, DepthReport] = {}

_SUBSETS_BY_CARD: dict[int, list[list[int]]] = {}


def _subsets_by_card(n: int) -> list[list[int]]:
    if n not in _SUBSETS_BY_CARD:
        by_card: list[list[int]] = [[] for _ in range(n + 1)]
        for mask in range(1 << n):
            by_card[bin(mask).count("1")].append(mask)
        _SUBSETS_BY_CARD[n] = by_card
    return _SUBSETS_BY_CARD[n]


def _strand_top_homology(n: int, pattern: int, char: int) -> int:
    """Top nonvanishing homology index of one multidegree strand.

    pattern bit T is set when the component at exponent shift T is nonzero;
    the differential drops one element of T with alternating sign."""
    key = (n, pattern, char)
    cached = _strand_cache.get(key)
    if cached is not None:
        return cached
    by_card = _subsets_by_card(n)
    present = [[T for T in masks if pattern >> T & 1] for masks in by_card]
    counts = [len(level) for level in present]
    ranks = [0] * (n + 2)  # ranks[i] = rank of d_i : C_i -> C_{i-1}
    for i in range(1, n + 1):
        if not present[i] or not present[i - 1]:
            continue
        col_index = {T: c for c, T in enumerate(present[i - 1])}
        rows = []
        for T in present[i]:
            row = [0] * counts[i - 1]
            sign = 1
            for j in range(n):
                if T >> j & 1:
                    Tj = T & ~(1 << j)
                    c = col_index.get(Tj)
                    if c is not None:
                        row[c] = sign
                    sign = -sign
            rows.append(row)
        ranks[i] = matrix_rank(rows, char)
    top = -1
    for i in range(n, -1, -1):
        if counts[i] - ranks[i] - ranks[i + 1] > 0:
            top = i
            break
    _strand_cache[key] = top
    return top


def _is_cone(pattern: int, n: int, a) -> bool:
    """Exactness shortcut: if presence is unchanged by toggling coordinate k
    (for some k with a_k >= 1), the strand is the cone of an isomorphism."""
    for k in range(n):
        if a[k] == 0:
            continue
        bit = 1 << k
        for T in range(1 << n):
            if T & bit:
                continue
            if (pattern >> T & 1) != (pattern >> (T | bit) & 1):
                break
        else:
            return True
    return False


def koszul_depth(M: QuotientModule, box_margin: int = 1) -> DepthReport:
    """Depth/dimension report via exact Koszul homology ranks.

    All strands in the finite box [0, g + box_margin] are assembled, where
    g is the componentwise join of the generator exponents of I and J;
    strands beyond the join are cones and vanish.
    """
    if M.is_zero():
        raise DomainError("depth of the zero module")
    key = (M.ring, M.J.gens, M.I.gens, box_margin)
    cached = _depth_cache.get(key)
    if cached is not None:
        return cached
    rc = M.ring
    n, char = rc.n, rc.char
    bound = generator_bound(M.I, M.J, margin=box_margin)
    in_J = membership_table(M.J, bound)
    in_I = membership_table(M.I, bound)
    top = -1
    for a in box_monomials(bound):
        pattern = 0
        for T in range(1 << n):
            shifted = list(a)
            ok = True
            for k in range(n):
                if T >> k & 1:
                    shifted[k] -= 1
                    if shifted[k] < 0:
                        ok = False
                        break
            if not ok:
                continue
            b = tuple(shifted)
            if in_J[b] and not in_I[b]:
                pattern |= 1 << T
        if pattern == 0 or _is_cone(pattern, n, a):
            continue
        t = _strand_top_homology(n, pattern, char)
        if t > top:
            top = t
            if top == n:
                break
    depth = n - top
    dim = module_dimension(M)
    report = DepthReport(depth, dim, depth == dim, top, char)
    _depth_cache[key] = report
    return report


def depth_of_quotient(I: MonomialIdeal) -> int:
    """depth S/I; the whole ring has depth n."""
    return koszul_depth(cyclic_module(I)).depth


# ---------------------------------------------------------------------------
# Hochster-formula oracle for squarefree ideals

def hochster_depth_squarefree(I: MonomialIdeal, char: int | None = None) -> int:
    """Independent depth oracle: multigraded Betti numbers of S/I from
    reduced simplicial homology of induced subcomplexes, then n - pd."""
    if not I.is_proper_nonzero():
        raise DomainError("needs a proper nonzero ideal")
    if not I.is_squarefree():
        raise DomainError("needs a squarefree ideal")
    rc = I.ring
    n = rc.n
    if char is None:
        char = rc.char
    gen_supports = [frozenset(mono_support(g)) for g in I.gens]
    pd = 0
    for sigma in range(1 << n):
        sset = frozenset(k for k in range(n) if sigma >> k & 1)
        faces_by_dim: dict[int, list[frozenset[int]]] = {-1: [frozenset()]}
        for size in range(1, len(sset) + 1):
            level = [frozenset(f) for f in itertools.combinations(sorted(sset), size)
                     if not any(s <= frozenset(f) for s in gen_supports)]
            if not level:
                break
            faces_by_dim[size - 1] = level
        hdims = _reduced_homology_dims(faces_by_dim, char)
        for j, h in hdims.items():
            if h > 0:
                pd = max(pd, len(sset) - j - 1)
    return n - pd


def _reduced_homology_dims(faces_by_dim, char: int) -> dict[int, int]:
    dims = sorted(faces_by_dim)
    ranks: dict[int, int] = {}
    for d in dims:
        if d - 1 not in faces_by_dim:
            ranks[d] = 0
            continue
        below = {f: c for c, f in enumerate(faces_by_dim[d - 1])}
        rows = []
        for face in faces_by_dim[d]:
            row = [0] * len(below)
            for sign_index, v in enumerate(sorted(face)):
                sub = face - {v}
                c = below.get(sub)
                if c is not None:
                    row[c] = -1 if sign_index % 2 else 1
            rows.append(row)
        ranks[d] = matrix_rank(rows, char)
    out = {}
    for d in dims:
        out[d] = len(faces_by_dim[d]) - ranks[d] - ranks.get(d + 1, 0)
    return out


# ---------------------------------------------------------------------------
# sequentially Cohen-Macaulay

def dimension_filtration_factors(I: MonomialIdeal) -> list[tuple[int, QuotientModule]]:
    """Nonzero factors (k, entry_k/entry_{k-1}) of the dimension filtration
    of S/I, in increasing dimension order."""
    entries = dimension_filtration_ideals(I)
    factors = []
    lower = I
    for k, upper in enumerate(entries):
        if upper != lower:
            factors.append((k, quotient_module(upper, lower)))
        lower = upper
    return factors


def is_sequentially_cm(I: MonomialIdeal):
    """(verdict, factor reports): true iff every nonzero dimension-filtration
    factor is Cohen-Macaulay."""
    if not I.is_proper_nonzero():
        raise DomainError("needs a proper nonzero ideal")
    reports = []
    verdict = True
    for _, factor in dimension_filtration_factors(I):
        report = koszul_depth(factor)
        reports.append(report)
        if not report.is_cm:
            verdict = False
    return verdict, reports
