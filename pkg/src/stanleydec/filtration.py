"""Prime filtrations of quotient modules J/I: verification, constructive
builders (finite-length, dimension-one, Cohen-Macaulay dimension-two, and
fdepth-one filtrations), and a certified backtracking search used for the
factors no direct builder covers.

A prime filtration is recorded as a list of steps (m_k, P_k): the chain
ideals are C_0 = I and C_k = C_{k-1} + (m_k), and the step is valid when
(C_{k-1} : m_k) = P_k, so C_k / C_{k-1} is S/P_k shifted by m_k.  The
filtration is clean when its support equals the minimal primes of the
module, and pretty clean when no earlier prime is strictly contained in
a later one (big primes come first).

Every builder re-verifies its own output; a construction the theory
promises but that fails verification aborts with CertificationError
instead of degrading.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    CertificationError,
    DomainError,
    Exponents,
    InfeasibleError,
    MonomialIdeal,
    PreconditionError,
    box_monomials,
    colon,
    colon_ideal,
    contains,
    generator_bound,
    ideal_sum,
    intersect,
    intersect_all,
    is_subideal,
    membership_table,
    minimal_generators,
    mono_mul,
    product,
    unit_ideal,
)
from .decomposition import (
    MonomialPrime,
    is_primary,
    maximal_prime,
    minimal_primes,
    primary_decomposition,
    prime,
    radical_prime,
)
from .depth import (
    QuotientModule,
    cyclic_module,
    dimension_filtration_factors,
    koszul_depth,
    quotient_module,
)
from .polarize import IdealPair, reduce_step

Step = tuple[Exponents, MonomialPrime]


class NotSequentiallyCM(PreconditionError):
    """Raised when a builder requires a sequentially Cohen-Macaulay input;
    carries the offending dimension-filtration factor."""

    def __init__(self, factor: QuotientModule, report):
        self.factor = factor
        self.report = report
        super().__init__(
            f"dimension-filtration factor {factor.J}/{factor.I} has "
            f"depth {report.depth} < dim {report.dim}")


@dataclass(frozen=True)
class PrimeFiltration:
    """A chain I = C_0 < C_1 < ... < C_r = J with cyclic prime factors."""

    module: QuotientModule
    steps: tuple[Step, ...]

    def support(self) -> frozenset[MonomialPrime]:
        return frozenset(P for _, P in self.steps)

    def chain_ideals(self) -> list[MonomialIdeal]:
        rc = self.module.ring
        out = [self.module.I]
        for m, _ in self.steps:
            out.append(minimal_generators(out[-1].gens + (m,), rc))
        return out


@dataclass(frozen=True)
class FiltrationVerdict:
    valid: bool
    support: frozenset[MonomialPrime]
    fdepth: int
    clean: bool
    pretty_clean: bool
    failure: str | None = None


def verify_filtration(F: PrimeFiltration) -> FiltrationVerdict:
    """Replay the chain and check every colon; classify clean/pretty clean.

    fdepth is the minimal dimension of a step prime (n for the zero
    module, whose empty filtration is vacuously clean)."""
    M = F.module
    rc = M.ring
    C = M.I

    def fail(msg: str) -> FiltrationVerdict:
        return FiltrationVerdict(False, frozenset(), 0, False, False, msg)

    for idx, (m, P) in enumerate(F.steps):
        if not contains(M.J, m):
            return fail(f"step {idx}: monomial lies outside J")
        if contains(C, m):
            return fail(f"step {idx}: monomial already in the chain ideal")
        if colon(C, m) != P.to_ideal():
            return fail(f"step {idx}: colon ideal is not the claimed prime")
        C = minimal_generators(C.gens + (m,), rc)
    if C != M.J:
        return fail("chain does not reach J")
    support = frozenset(P for _, P in F.steps)
    fdepth = min((p.dim() for p in support), default=rc.n)
    mins = set(minimal_primes(colon_ideal(M.I, M.J)))
    clean = support == mins
    # pretty clean: for i < j, P_i <= P_j forces P_i = P_j ("big primes
    # come first"), matching the dimension-filtration assembly order
    pretty = True
    primes = [P for _, P in F.steps]
    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            if primes[i] != primes[j] and primes[j].contains_prime(primes[i]):
                pretty = False
    return FiltrationVerdict(True, support, fdepth, clean, pretty, None)


def _certified(M: QuotientModule, steps: list[Step]) -> PrimeFiltration:
    F = PrimeFiltration(M, tuple(steps))
    verdict = verify_filtration(F)
    if not verdict.valid:
        raise CertificationError(f"constructed filtration invalid: {verdict.failure}")
    return F


def _verified_steps(J: MonomialIdeal, I: MonomialIdeal,
                    steps: list[Step]) -> list[Step]:
    """Replay-check steps for the pair (J, I); raise instead of returning
    an invalid construction."""
    _certified(quotient_module(J, I), steps)
    return steps


# ---------------------------------------------------------------------------
# free blocks and finite length

def _free_block_steps(J: MonomialIdeal, I: MonomialIdeal,
                      P: MonomialPrime) -> list[Step]:
    """Steps for a module J/I killed by P and free over the complement
    variables: one step per basis monomial ("strand bottom"), all of which
    live inside the generator box."""
    if J == I:
        return []
    rc = J.ring
    if not is_subideal(product(P.to_ideal(), J), I):
        raise CertificationError("free block: P does not annihilate J/I")
    bound = generator_bound(I, J)
    in_J = membership_table(J, bound)
    in_I = membership_table(I, bound)
    Z = P.complement()
    bottoms = []
    for m in box_monomials(bound):
        if not in_J[m] or in_I[m]:
            continue
        bottom = True
        for z in Z:
            if m[z] == 0:
                continue
            low = tuple(e - 1 if k == z else e for k, e in enumerate(m))
            if in_J[low] and not in_I[low]:
                bottom = False
                break
        if bottom:
            bottoms.append(m)
    bottoms.sort(key=lambda m: (sum(m), m))
    return [(m, P) for m in bottoms]


def build_free_block(M: QuotientModule, P: MonomialPrime) -> PrimeFiltration:
    return _certified(M, _free_block_steps(M.J, M.I, P))


def _coprimary_block_steps(J: MonomialIdeal, I: MonomialIdeal,
                           P: MonomialPrime) -> list[Step]:
    """Steps for a P-coprimary clean block: one step per strand bottom
    (monomial of J \\ I minimal along the complement variables), deepest
    P-degree first so that every colon closes over P.

    Unlike a free block, the module need not be annihilated by P; validity
    is certified by the caller's verification."""
    if J == I:
        return []
    rc = J.ring
    bound = generator_bound(I, J)
    in_J = membership_table(J, bound)
    in_I = membership_table(I, bound)
    Z = P.complement()
    bottoms = []
    for m in box_monomials(bound):
        if not in_J[m] or in_I[m]:
            continue
        bottom = True
        for z in Z:
            if m[z] == 0:
                continue
            low = tuple(e - 1 if k == z else e for k, e in enumerate(m))
            if in_J[low] and not in_I[low]:
                bottom = False
                break
        if bottom:
            bottoms.append(m)
    bottoms.sort(key=lambda m: (-sum(m[j] for j in P.vars), sum(m), m))
    return [(m, P) for m in bottoms]


def _finite_length_steps(J: MonomialIdeal, I: MonomialIdeal) -> list[Step]:
    """Composition series of a finite-length J/I: monomials of J \\ I by
    decreasing degree, every colon the maximal ideal."""
    if J == I:
        return []
    rc = J.ring
    bound = generator_bound(I, J)
    in_J = membership_table(J, bound)
    in_I = membership_table(I, bound)
    ms = [m for m in box_monomials(bound) if in_J[m] and not in_I[m]]
    for m in ms:
        if any(m[k] == bound[k] for k in range(rc.n)):
            raise CertificationError("module is not of finite length")
    ms.sort(key=lambda m: (-sum(m), m))
    return [(m, maximal_prime(rc)) for m in ms]


def build_composition_series(M: QuotientModule) -> PrimeFiltration:
    return _certified(M, _finite_length_steps(M.J, M.I))


# ---------------------------------------------------------------------------
# coprimary of dimension one, and mixed Ass of dimension <= 1

def _saturated_torsion_layers(J: MonomialIdeal, I: MonomialIdeal,
                              P: MonomialPrime) -> list[MonomialIdeal]:
    """The chain J = L_0 > L_1 > ... > L_s = I with
    L_i = J /\\ sat(I + P^i J, complement of P); each L_i/L_{i+1} is killed
    by P and torsion-free over the complement variables."""
    rc = J.ring
    Z = list(P.complement())
    Pid = P.to_ideal()

    def saturate_out(A: MonomialIdeal) -> MonomialIdeal:
        zs = set(Z)
        return minimal_generators(
            [tuple(0 if k in zs else e for k, e in enumerate(g)) for g in A.gens], rc)

    layers = [J]
    power = Pid
    guard = 0
    while layers[-1] != I:
        Li = intersect(J, saturate_out(ideal_sum(I, product(power, J))))
        if Li == layers[-1]:
            raise CertificationError("torsion layers stopped descending")
        layers.append(Li)
        power = product(power, Pid)
        guard += 1
        if guard > 10_000:
            raise CertificationError("torsion layer chain did not terminate")
    return layers


def _coprimary_dim1_steps(J: MonomialIdeal, I: MonomialIdeal,
                          P: MonomialPrime) -> list[Step]:
    """P-coprimary module of dimension 1: the saturated torsion layers are
    each free over the single complement variable, bottom layer first."""
    layers = _saturated_torsion_layers(J, I, P)
    steps: list[Step] = []
    for i in range(len(layers) - 2, -1, -1):
        steps += _free_block_steps(layers[i], layers[i + 1], P)
    return steps


def _relevant_module_components(J: MonomialIdeal, I: MonomialIdeal):
    """Primary components of I that matter for the module J/I: drop those
    containing J, then prune greedily to module-level irredundancy."""
    comps = [c for c in primary_decomposition(I).components
             if not is_subideal(J, c.ideal)]
    i = 0
    while i < len(comps):
        rest = comps[:i] + comps[i + 1:]
        if rest and intersect(J, intersect_all((c.ideal for c in rest), J.ring)) == I:
            comps = rest
        else:
            i += 1
    return comps


def _clean_dim_le1_steps(J: MonomialIdeal, I: MonomialIdeal) -> list[Step]:
    """Module with all associated primes of dimension <= 1: split along the
    relevant primary components, then handle each coprimary piece."""
    if J == I:
        return []
    comps = _relevant_module_components(J, I)
    if not comps:
        raise CertificationError("no relevant primary components for a nonzero module")
    if len(comps) == 1:
        P = comps[0].prime
        if P.dim() == 0:
            return _finite_length_steps(J, I)
        if P.dim() == 1:
            return _coprimary_dim1_steps(J, I, P)
        raise PreconditionError(f"associated prime {P} has dimension {P.dim()} > 1")
    Q = comps[-1].ideal
    mid = intersect(J, Q)
    return _clean_dim_le1_steps(mid, I) + _clean_dim_le1_steps(J, mid)


def build_clean_dim1(M: QuotientModule) -> PrimeFiltration:
    """Clean filtration when every associated prime of M has dimension <= 1."""
    return _certified(M, _clean_dim_le1_steps(M.J, M.I))


# ---------------------------------------------------------------------------
# Cohen-Macaulay of dimension 2

def _reduce_ideal(I: MonomialIdeal) -> MonomialIdeal:
    return reduce_step(IdealPair(I, I)).I


def _certify_cm(U: MonomialIdeal, I: MonomialIdeal, dim: int | None = None):
    """Abort unless the module U/I is Cohen-Macaulay (of the given dim)."""
    report = koszul_depth(quotient_module(U, I))
    if not report.is_cm or (dim is not None and report.dim != dim):
        raise CertificationError(
            f"module {U}/{I} is not CM of the expected dimension "
            f"(depth {report.depth}, dim {report.dim})")
    return report


def _coprimary_clean_steps(U: MonomialIdeal, I: MonomialIdeal) -> list[Step]:
    """Clean filtration of a Cohen-Macaulay U/I with I primary: the module
    is coprimary with respect to the radical p of I, and a single clean
    block over p covers it (support {p} is forced, since every colon
    (I : u) is p-primary)."""
    if U == I:
        return []
    if not is_primary(I):
        raise PreconditionError("denominator ideal is not primary")
    p = radical_prime(I)
    _certify_cm(U, I)
    try:
        return _verified_steps(U, I, _coprimary_block_steps(U, I, p))
    except CertificationError:
        return _clean_search_steps(U, I)


def build_clean_primary(U: MonomialIdeal, I: MonomialIdeal) -> PrimeFiltration:
    """Clean filtration for a Cohen-Macaulay U/I with I primary."""
    return _certified(quotient_module(U, I), _coprimary_clean_steps(U, I))


def _certify_cm2_choice(U: MonomialIdeal, p: MonomialPrime) -> bool:
    """A prime is usable for the dimension-two peeling step iff
    U/(U /\\ p) = (U + p)/p is (nonzero and) Cohen-Macaulay of dimension 2."""
    Up = ideal_sum(U, p.to_ideal())
    if Up == p.to_ideal():
        return False
    if Up.is_unit() and p.to_ideal().is_unit():
        return False
    report = koszul_depth(quotient_module(Up, p.to_ideal()))
    return report.depth == 2 and report.dim == 2


def _peel_prime_candidates(U: MonomialIdeal, I: MonomialIdeal,
                       depth_guard: int = 0) -> list[MonomialPrime]:
    """Heuristic candidate order for select_cm2_prime, following the
    structure of U relative to I; every candidate is re-certified by the
    caller, so this only affects which certificate is found first."""
    if depth_guard > 20 or not I.is_proper_nonzero() or not U.is_proper_nonzero():
        return []
    from .core import degree_profile
    rc = I.ring
    try:
        profile = degree_profile(I)
    except DomainError:
        return []
    decU = primary_decomposition(U).components
    ass_I = primary_decomposition(I).primes()
    out: list[tuple[int, MonomialPrime]] = []
    if profile.max_value == 1:
        for comp in decU:
            Pi = comp.prime
            for p in ass_I:
                extra = set(Pi.vars) - set(p.vars)
                if Pi.contains_prime(p) and len(extra) == 1:
                    k = extra.pop()
                    from .core import degree_profile as dp
                    s = dp(comp.ideal).per_variable[k]
                    out.append((-s, p))
        out.sort(key=lambda t: (t[0], t[1].vars))
        return [p for _, p in out]
    d = profile.max_value
    found = []
    for k in range(rc.n):
        if profile.per_variable[k] != d:
            continue
        for comp in decU:
            if degree_profile(comp.ideal).per_variable[k] < d:
                continue
            for p in ass_I:
                if set(comp.prime.vars) == set(p.vars) | {k}:
                    found.append(p)
    if found:
        return sorted(set(found), key=lambda p: p.vars)
    I1 = _reduce_ideal(I)
    if I1 == I:
        return []
    return _peel_prime_candidates(ideal_sum(U, I1), I1, depth_guard + 1)


def select_cm2_prime(U: MonomialIdeal, I: MonomialIdeal,
                     checked: bool = True) -> MonomialPrime:
    """A prime p associated to S/I such that U/(U /\\ p) is Cohen-Macaulay
    of dimension 2 (certified by the depth engine); candidates are ordered
    by the structural heuristics, with an exhaustive certified fallback."""
    ass_I = primary_decomposition(I).primes()
    if checked:
        if any(p.dim() != 2 for p in ass_I):
            raise PreconditionError("associated primes of S/I must have dimension 2")
        if any(p.dim() != 1 for p in primary_decomposition(U).primes()):
            raise PreconditionError("associated primes of S/U must have dimension 1")
    seen = []
    for p in _peel_prime_candidates(U, I) + sorted(ass_I, key=lambda q: q.vars):
        if p in seen:
            continue
        seen.append(p)
        if _certify_cm2_choice(U, p):
            return p
    raise CertificationError("no associated prime certifies the CM-2 peeling step")


def _cm2_steps(U: MonomialIdeal, I: MonomialIdeal, depth_guard: int = 0) -> list[Step]:
    """Clean filtration of a Cohen-Macaulay module U/I of dimension 2."""
    if U == I:
        return []
    if depth_guard > 200:
        raise CertificationError("CM-2 recursion did not terminate")
    _certify_cm(U, I, dim=2)
    comps = list(primary_decomposition(I).components)
    keep = [c for c in comps if not is_subideal(U, c.ideal)]
    if len(keep) < len(comps):
        # components containing U are invisible to the module: replace the
        # pair by the isomorphic (U + J, J) with J the visible intersection
        J = intersect_all((c.ideal for c in keep), U.ring)
        return _cm2_steps(ideal_sum(U, J), J, depth_guard + 1)
    if any(c.prime.dim() != 2 for c in comps):
        raise CertificationError("components of unexpected dimension for a CM-2 module")
    if len(comps) == 1:
        return _coprimary_clean_steps(U, I)
    ass_U = primary_decomposition(U).primes() if U.is_proper_nonzero() else []
    min_U = minimal_primes(U) if U.is_proper_nonzero() else []
    comp_by_vars = {c.prime.vars: c for c in comps}
    candidates = [p for p in ass_U if p.dim() == 2 and p.vars in comp_by_vars]
    candidates.sort(key=lambda p: (p not in min_U, p.vars))
    for P1 in candidates:
        q1 = comp_by_vars[P1.vars].ideal
        Iprime = intersect_all((c.ideal for c in comps if c.prime != P1), U.ring)
        mid = intersect(U, Iprime)
        try:
            low = _coprimary_clean_steps(ideal_sum(mid, q1), q1)
            high = _cm2_steps(ideal_sum(U, Iprime), Iprime, depth_guard + 1)
            return _verified_steps(U, I, low + high)
        except CertificationError:
            continue
    # no dimension-2 prime of U matches a component: peel a certified prime,
    # falling back to the exhaustive clean search when no peel certifies
    try:
        p = select_cm2_prime(U, I, checked=False)
        mid = intersect(U, p.to_ideal())
        if mid == U:
            raise CertificationError("peeling prime contains U")
        low = _cm2_steps(mid, I, depth_guard + 1)
        high = _free_block_steps(U, mid, p)
        return _verified_steps(U, I, low + high)
    except CertificationError:
        return _clean_search_steps(U, I)


def build_clean_cm2(U: MonomialIdeal, I: MonomialIdeal) -> PrimeFiltration:
    """Clean filtration for a Cohen-Macaulay module U/I of dimension 2."""
    return _certified(quotient_module(U, I), _cm2_steps(U, I))


# ---------------------------------------------------------------------------
# fdepth >= 1 for modules with dimension-2 associated primes

def _two_var_layer_steps(A: MonomialIdeal, B: MonomialIdeal,
                         P: MonomialPrime) -> list[Step]:
    """Steps for a layer A/B killed by P and torsion-free over the two
    complement variables: the layer splits by the P-multidegree into planar
    staircases, each filtered by one free step and finitely many strips."""
    if A == B:
        return []
    rc = A.ring
    if not is_subideal(product(P.to_ideal(), A), B):
        raise CertificationError("layer is not annihilated by its prime")
    Z = P.complement()
    if len(Z) != 2:
        raise PreconditionError("planar layer needs a codimension n-2 prime")
    zx, zy = Z
    Pvars = P.vars
    bound = generator_bound(A, B)
    gammas = itertools.product(*(range(bound[k] + 1) if k in Pvars else range(1)
                                 for k in range(rc.n)))
    steps: list[Step] = []
    strip_prime = prime(rc, set(Pvars) | {zy})
    for gamma in gammas:
        def plane(I: MonomialIdeal) -> list[tuple[int, int]]:
            cands = [(g[zx], g[zy]) for g in I.gens
                     if all(g[k] <= gamma[k] for k in Pvars)]
            return sorted({(a, b) for (a, b) in cands
                           if not any((c, d) != (a, b) and c <= a and d <= b
                                      for (c, d) in cands)})
        Ag, Bg = plane(A), plane(B)
        if Ag == Bg:
            continue
        if Bg:
            raise CertificationError("layer has torsion over the complement variables")

        def embed(a: int, b: int) -> Exponents:
            return tuple(gamma[k] if k in Pvars else (a if k == zx else b)
                         for k in range(rc.n))

        # staircase: sorted ascending in the first coordinate means
        # descending in the second; peel from the lowest corner upward
        Ag.sort(key=lambda ab: ab[0], reverse=True)  # a_1 > ... > a_s
        s = len(Ag)
        steps.append((embed(*Ag[s - 1]), P))
        for i in range(s - 2, -1, -1):
            a_i, b_i = Ag[i]
            for j in range(Ag[i + 1][1] - 1, b_i - 1, -1):
                steps.append((embed(a_i, j), strip_prime))
    return steps


def _fdepth_ge1_steps(J: MonomialIdeal, I: MonomialIdeal,
                      depth_guard: int = 0) -> list[Step]:
    """Filtration with every step prime of dimension >= 1 for a module
    whose associated primes all have dimension 2."""
    if J == I:
        return []
    if depth_guard > 200:
        raise CertificationError("fdepth-1 recursion did not terminate")
    report = koszul_depth(quotient_module(J, I))
    if report.depth == 2 and report.dim == 2:
        return _cm2_steps(J, I)
    if report.depth != 1:
        raise CertificationError(
            f"unexpected depth {report.depth} for a module with "
            "dimension-2 associated primes")
    comps = _relevant_module_components(J, I)
    if not comps:
        raise CertificationError("no relevant primary components for a nonzero module")
    if any(c.prime.dim() != 2 for c in comps):
        raise CertificationError("associated primes are not all of dimension 2")
    if len(comps) > 1:
        mid = intersect(J, comps[-1].ideal)
        return (_fdepth_ge1_steps(mid, I, depth_guard + 1)
                + _fdepth_ge1_steps(J, mid, depth_guard + 1))
    P = comps[0].prime
    layers = _saturated_torsion_layers(J, I, P)
    steps: list[Step] = []
    for i in range(len(layers) - 2, -1, -1):
        steps += _two_var_layer_steps(layers[i], layers[i + 1], P)
    return steps


def build_fdepth1_filtration(M: QuotientModule) -> PrimeFiltration:
    """Filtration with fdepth >= 1 for a depth-one module all of whose
    associated primes have dimension 2; Cohen-Macaulay input is rejected
    (use build_clean_cm2)."""
    report = koszul_depth(M)
    if report.depth != 1 or report.dim != 2:
        raise PreconditionError(
            f"expected depth 1 and dimension 2, got depth {report.depth}, "
            f"dim {report.dim}")
    try:
        return _certified(M, _fdepth_ge1_steps(M.J, M.I))
    except CertificationError:
        return search_prime_filtration(M, min_dim=1)


# ---------------------------------------------------------------------------
# principal peel and generic certified search

def _principal_peel_steps(u: Exponents, rc) -> list[Step]:
    """Chain (u) = C_0 < ... < S dividing out one variable at a time; each
    colon is the principal prime of the divided variable."""
    steps: list[Step] = []
    cur = list(u)
    while any(cur):
        k = next(i for i, e in enumerate(cur) if e > 0)
        cur[k] -= 1
        steps.append((tuple(cur), prime(rc, [k])))
    return steps


def build_principal_peel(M: QuotientModule) -> PrimeFiltration:
    """Clean filtration of S/(u) for a principal u."""
    if not M.J.is_unit() or len(M.I.gens) != 1:
        raise PreconditionError("expected the pair (S, principal ideal)")
    return _certified(M, _principal_peel_steps(M.I.gens[0], M.ring))


def search_filtration_steps(J: MonomialIdeal, I: MonomialIdeal,
                            allowed_vars: set[tuple[int, ...]],
                            box_margin: int = 1,
                            node_cap: int = 200_000) -> list[Step] | None:
    """Depth-first search for a prime filtration whose step primes come
    from the allowed set.  Returns None when the search space is exhausted;
    raises InfeasibleError at the node cap."""
    if J == I:
        return []
    rc = J.ring
    bound = generator_bound(I, J, margin=box_margin)
    in_J = membership_table(J, bound)
    covered = membership_table(I, bound)
    remaining = sum(1 for m, inj in in_J.items() if inj and not covered[m])
    order = sorted((m for m in in_J), key=lambda m: (sum(m), m))
    failures: set[tuple] = set()
    nodes = 0

    def neighbors_in_C(m: Exponents, C: MonomialIdeal) -> tuple[int, ...]:
        out = []
        for k in range(rc.n):
            if m[k] < bound[k]:
                up = tuple(e + 1 if i == k else e for i, e in enumerate(m))
                if covered[up]:
                    out.append(k)
            else:
                up = tuple(e + 1 if i == k else e for i, e in enumerate(m))
                if contains(C, up):
                    out.append(k)
        return tuple(out)

    def dfs(C: MonomialIdeal, remaining: int) -> list[Step] | None:
        nonlocal nodes
        if remaining == 0:
            return []
        if C.gens in failures:
            return None
        nodes += 1
        if nodes > node_cap:
            raise InfeasibleError(f"filtration search exceeded {node_cap} nodes")
        for m in order:
            if not in_J[m] or covered[m]:
                continue
            pvars = neighbors_in_C(m, C)
            if pvars not in allowed_vars:
                continue
            P = prime(rc, pvars)
            if colon(C, m) != P.to_ideal():
                continue
            newly = []
            for a in itertools.product(*(range(e, b + 1) for e, b in zip(m, bound))):
                if not covered[a]:
                    covered[a] = True
                    newly.append(a)
                    if in_J[a]:
                        remaining -= 1
            C2 = minimal_generators(C.gens + (m,), rc)
            rest = dfs(C2, remaining)
            for a in newly:
                covered[a] = False
                if in_J[a]:
                    remaining += 1
            if rest is not None:
                return [(m, P)] + rest
        failures.add(C.gens)
        return None

    return dfs(I, remaining)


def search_prime_filtration(M: QuotientModule,
                            allowed: list[MonomialPrime] | None = None,
                            min_dim: int | None = None,
                            box_margin: int = 1,
                            node_cap: int = 200_000) -> PrimeFiltration:
    """Certified search wrapper: allowed primes are given explicitly or as
    a dimension floor; exhaustion raises CertificationError."""
    rc = M.ring
    if allowed is not None:
        allowed_vars = {p.vars for p in allowed}
    elif min_dim is not None:
        allowed_vars = {vs for size in range(0, rc.n - min_dim + 1)
                        for vs in itertools.combinations(range(rc.n), size)}
    else:
        raise PreconditionError("give either an allowed prime set or a dimension floor")
    steps = search_filtration_steps(M.J, M.I, allowed_vars,
                                    box_margin=box_margin, node_cap=node_cap)
    if steps is None:
        raise CertificationError(
            "no prime filtration with the requested step primes exists "
            "within the search box")
    return _certified(M, steps)


def _clean_search_steps(J: MonomialIdeal, I: MonomialIdeal,
                        node_cap: int = 200_000) -> list[Step]:
    """Fallback used when a structural builder fails certification: search
    for a filtration whose support is exactly the minimal primes of J/I,
    which is what cleanness requires."""
    F = search_prime_filtration(quotient_module(J, I),
                                allowed=minimal_primes(colon_ideal(I, J)),
                                node_cap=node_cap)
    return list(F.steps)


# ---------------------------------------------------------------------------
# dimension filtration factors for n <= 5

def _shift_steps(steps: list[Step], u: Exponents) -> list[Step]:
    return [(mono_mul(u, m), P) for m, P in steps]


def _factor_steps(k: int, factor: QuotientModule, clean_only: bool,
                  node_cap: int = 200_000) -> list[Step]:
    """Steps for one dimension-filtration factor of Ass-dimension k."""
    rc = factor.ring
    J, I = factor.J, factor.I
    if k <= 0:
        return _finite_length_steps(J, I)
    if k == 1:
        return _clean_dim_le1_steps(J, I)
    if k == 2:
        report = koszul_depth(factor)
        if report.is_cm:
            return _cm2_steps(J, I)
        if clean_only:
            raise CertificationError("dimension-2 factor is not Cohen-Macaulay")
        try:
            return _verified_steps(J, I, _fdepth_ge1_steps(J, I))
        except CertificationError:
            F = search_prime_filtration(factor, min_dim=1, node_cap=node_cap)
            return list(F.steps)
    if k == rc.n - 1 and J.is_unit() and len(I.gens) == 1:
        return _principal_peel_steps(I.gens[0], rc)
    # remaining case: J is principal (or S); divide the common factor out
    # and search for a filtration of the cyclic quotient, then shift back
    if len(J.gens) != 1:
        raise CertificationError(f"unexpected shape for a dimension-{k} factor")
    u = J.gens[0]
    reduced = colon(I, u)
    M2 = quotient_module(unit_ideal(rc), reduced)
    report = koszul_depth(M2)
    if clean_only:
        if not report.is_cm:
            raise CertificationError(f"dimension-{k} factor is not Cohen-Macaulay")
        F = search_prime_filtration(M2, allowed=minimal_primes(reduced),
                                    node_cap=node_cap)
    else:
        F = search_prime_filtration(M2, min_dim=report.depth, node_cap=node_cap)
    return _shift_steps(list(F.steps), u)


def n5_factor_filtrations(I: MonomialIdeal, clean_factors: bool = True,
                          node_cap: int = 200_000) -> list[PrimeFiltration]:
    """One certified filtration per nonzero dimension-filtration factor of
    S/I, in increasing dimension order."""
    if I.ring.n > 5:
        raise PreconditionError("supported for at most five variables")
    out = []
    for k, factor in dimension_filtration_factors(I):
        steps = _factor_steps(k, factor, clean_only=clean_factors,
                              node_cap=node_cap)
        out.append(_certified(factor, steps))
    return out


def build_pretty_clean_n5(I: MonomialIdeal) -> tuple[PrimeFiltration, FiltrationVerdict]:
    """Pretty clean filtration of S/I for a sequentially Cohen-Macaulay I
    in at most five variables: clean filtrations of the dimension
    filtration factors, concatenated in increasing dimension order."""
    if not I.is_proper_nonzero():
        raise DomainError("needs a proper nonzero ideal")
    if I.ring.n > 5:
        raise PreconditionError("supported for at most five variables")
    for k, factor in dimension_filtration_factors(I):
        report = koszul_depth(factor)
        if not report.is_cm:
            raise NotSequentiallyCM(factor, report)
    steps: list[Step] = []
    for F in n5_factor_filtrations(I, clean_factors=True):
        steps += list(F.steps)
    F = _certified(cyclic_module(I), steps)
    verdict = verify_filtration(F)
    if not verdict.pretty_clean:
        raise CertificationError("assembled filtration is not pretty clean")
    return F, verdict
