"""Reproducible random monomial ideals for corpus sweeps and tests.

The model: a fixed number of generators drawn uniformly from nonzero
exponent vectors of total degree at most max_degree, redrawing any draw
comparable to an earlier one, then minimalized.  Each corpus instance gets
its own seed derived from (master seed, index) so instances are
independently replayable.
"""
from __future__ import annotations

import random

from .core import (
    Exponents,
    MonomialIdeal,
    PreconditionError,
    RingContext,
    minimal_generators,
    mono_divides,
    ring,
)


def instance_seed(master_seed: int, index: int) -> int:
    return master_seed * 1_000_003 + index * 7_919 + 1


def random_exponents(rng: random.Random, n: int, max_degree: int) -> Exponents:
    while True:
        e = tuple(rng.randint(0, max_degree) for _ in range(n))
        if 0 < sum(e) <= max_degree:
            return e


def random_ideal(rc: RingContext, rng: random.Random, gen_count: int = 4,
                 max_degree: int = 3, max_attempts: int = 200) -> MonomialIdeal:
    """Proper nonzero ideal with up to gen_count incomparable generators."""
    gens: list[Exponents] = []
    attempts = 0
    while len(gens) < gen_count and attempts < max_attempts:
        attempts += 1
        e = random_exponents(rng, rc.n, max_degree)
        if any(mono_divides(g, e) or mono_divides(e, g) for g in gens):
            continue
        gens.append(e)
    if not gens:
        gens.append(random_exponents(rng, rc.n, max_degree))
    return minimal_generators(gens, rc)


def corpus_instances(master_seed: int, count: int, n: int,
                     max_degree: int = 3, gen_count: int = 4, char: int = 0):
    """Yield (index, ideal) pairs; each index is independently seeded."""
    if n > 5:
        raise PreconditionError("corpus generation is certified for n <= 5 only")
    rc = ring(n, char=char)
    for index in range(count):
        rng = random.Random(instance_seed(master_seed, index))
        yield index, random_ideal(rc, rng, gen_count=gen_count,
                                  max_degree=max_degree)
