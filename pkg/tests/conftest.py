"""Shared strategies and helpers for the test suite."""
import random

from hypothesis import strategies as st

from stanleydec import minimal_generators, ring
from stanleydec.corpus import random_ideal


def rings(max_n=4):
    return st.integers(min_value=1, max_value=max_n).map(lambda n: ring(n))


def exponents(n, max_degree=3):
    return st.tuples(*([st.integers(min_value=0, max_value=max_degree)] * n))


@st.composite
def proper_ideals(draw, max_n=4, max_degree=3, max_gens=4):
    """A proper nonzero monomial ideal over a small ring."""
    rc = draw(rings(max_n))
    gens = draw(st.lists(exponents(rc.n, max_degree), min_size=1,
                         max_size=max_gens)
                .filter(lambda gs: all(sum(g) > 0 for g in gs)))
    return minimal_generators(gens, rc)


@st.composite
def ideals_in(draw, rc, max_degree=3, max_gens=4):
    gens = draw(st.lists(exponents(rc.n, max_degree), min_size=1,
                         max_size=max_gens)
                .filter(lambda gs: all(sum(g) > 0 for g in gs)))
    return minimal_generators(gens, rc)


def seeded_ideal(rc, seed, gen_count=4, max_degree=3):
    return random_ideal(rc, random.Random(seed), gen_count=gen_count,
                        max_degree=max_degree)
