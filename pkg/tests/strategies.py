"""Hypothesis strategies for small complexes, contexts and ideals."""
from itertools import combinations

from hypothesis import strategies as st

from virtualcm import SimplicialComplex, ToricContext


@st.composite
def complexes(draw, max_n=6, min_facets=1, max_facets=6):
    n = draw(st.integers(1, max_n))
    subsets = st.frozensets(st.integers(0, n - 1), min_size=0, max_size=n)
    facets = draw(st.lists(subsets, min_size=min_facets, max_size=max_facets))
    return SimplicialComplex(n, [sorted(f) for f in facets])


@st.composite
def pure_complexes(draw, max_n=6, max_facets=6):
    n = draw(st.integers(2, max_n))
    d = draw(st.integers(0, min(3, n - 1)))
    pool = list(combinations(range(n), d + 1))
    facets = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_facets, unique=True))
    return SimplicialComplex(n, facets)


@st.composite
def contexts(draw, max_n=6, max_blocks=3):
    n = draw(st.integers(2, max_n))
    r = draw(st.integers(1, min(max_blocks, n)))
    perm = draw(st.permutations(range(n)))
    cuts = sorted(draw(st.lists(st.integers(1, n - 1), min_size=r - 1, max_size=r - 1, unique=True)))
    bounds = [0, *cuts, n]
    return ToricContext(n, [sorted(perm[a:b]) for a, b in zip(bounds, bounds[1:])])


def monomial_gens(n, max_exp=2, max_gens=4):
    vec = st.lists(st.integers(0, max_exp), min_size=n, max_size=n).map(tuple)
    return st.lists(vec, min_size=1, max_size=max_gens)
