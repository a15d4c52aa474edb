import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import complexes, contexts, monomial_gens, pure_complexes
from virtualcm import (
    MonomialIdeal,
    SimplicialComplex,
    betti_hochster,
    codim,
    complex_from_sr,
    is_cohen_macaulay,
    minimal_nonfaces,
    saturate,
    sr_ideal,
)
from virtualcm.complex import mask_of, members
from virtualcm.io import ideal_from_doc


def _gens(ideal):
    return [ideal.format(g) for g in ideal.generators]


def test_running_sr_ideal(fx):
    i = sr_ideal(fx.complex("example14_delta"))
    assert _gens(i) == ["x0*y1", "x0*x1*y2", "x1*y0*y2", "y0*y1*y2"]
    assert i == ideal_from_doc(fx.doc("example14_IDelta"))


def test_simplex_has_zero_ideal():
    assert sr_ideal(SimplicialComplex.simplex(4, range(4))).is_zero


def test_complex_from_remark_J(fx):
    k = complex_from_sr(ideal_from_doc(fx.doc("remark_J")))
    assert ("y0", "y1", "y2") in k.facet_names()
    assert len(k.facets) == 5


def test_saturation_examples(fx):
    x = MonomialIdeal(["x"], [[2]])
    assert saturate(x, MonomialIdeal(["x"], [[1]])).is_unit
    ctx = fx.context("example14_delta")
    b = ctx.irrelevant_ideal()
    i = ideal_from_doc(fx.doc("example14_IDelta"))
    j = ideal_from_doc(fx.doc("remark_J"))
    assert saturate(i, b) == i
    assert saturate(j, b) == saturate(i, b)


def test_colon_by_zero_ideal_rejected():
    with pytest.raises(ValueError):
        MonomialIdeal(2, [[1, 0]]).colon(MonomialIdeal(2, []))


def test_running_betti(fx):
    b = betti_hochster(fx.complex("example14_delta"))
    assert b.totals == (1, 4, 4, 1) and b.pd == 3
    assert codim(fx.complex("example14_delta")) == 2


def test_principal_ideal_betti():
    b = betti_hochster(SimplicialComplex(2, [[0], [1]]))
    assert b.totals == (1, 1) and b.pd == 1


def test_remark_J_resolution(fx):
    b = betti_hochster(complex_from_sr(ideal_from_doc(fx.doc("remark_J"))))
    assert b.pd == 2 and b.totals == (1, 3, 2)


def test_codim():
    assert codim(SimplicialComplex.simplex(5, range(5))) == 0


def test_codim_section5(fx):
    assert codim(fx.complex("section5_delta")) == 2


def test_cm_verdicts(fx):
    r = is_cohen_macaulay(fx.complex("example14_delta"))
    assert not r
    assert is_cohen_macaulay(fx.complex("example14_delta_prime"))
    k = fx.complex("section5_delta")
    r = is_cohen_macaulay(k)
    assert not r and k.names(r.face) == ("x0", "x1") and r.degree == 0


@given(complexes())
def test_minimal_nonfaces_match_brute_force(k):
    want = {frozenset(s) for s in oracles.minimal_nonfaces(k.n, [members(f) for f in k.facets])}
    assert {frozenset(members(s)) for s in minimal_nonfaces(k)} == want


@given(complexes())
def test_stanley_reisner_round_trip(k):
    assert complex_from_sr(sr_ideal(k)) == k


@settings(max_examples=40)
@given(complexes(max_n=5))
def test_betti_matches_upper_koszul(k):
    assert betti_hochster(k).totals == oracles.betti_upper_koszul(k.n, [members(f) for f in k.facets])


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), monomial_gens(n), monomial_gens(n))))
def test_colon_and_intersection_match_box_oracle(args):
    n, a, b = args
    i, j = MonomialIdeal(n, a), MonomialIdeal(n, b)
    assert list(i.colon(j).generators) == _ordered(n, oracles.colon(i.generators, j.generators, n))
    assert list(i.intersect(j).generators) == _ordered(n, oracles.intersect(i.generators, j.generators, n))


def _ordered(n, gens):
    return list(MonomialIdeal(n, gens).generators)


@given(contexts(max_n=6), st.data())
def test_squarefree_saturation_matches_primary_decomposition(ctx, data):
    n = ctx.vertices.full.bit_length()
    facets = data.draw(st.lists(st.frozensets(st.integers(0, n - 1)), min_size=1, max_size=5))
    k = SimplicialComplex(n, [sorted(f) for f in facets])
    got = saturate(sr_ideal(k), ctx.irrelevant_ideal())
    blocks = [members(b) for b in ctx.blocks]
    want = MonomialIdeal.from_supports(n, [sorted(s) for s in oracles.squarefree_saturation(n, [members(f) for f in k.facets], blocks)])
    assert got == want


@settings(max_examples=40)
@given(pure_complexes(max_n=5))
def test_reisner_matches_brute_force(k):
    assert bool(is_cohen_macaulay(k)) == oracles.is_cm([members(f) for f in k.facets])


@given(complexes())
def test_cm_iff_pd_equals_codim(k):
    assert bool(is_cohen_macaulay(k)) == (betti_hochster(k).pd == codim(k))


def test_cm_witness_is_genuine(fx):
    k = fx.complex("example14_delta")
    r = is_cohen_macaulay(k)
    h = oracles.reduced_betti(oracles.link([members(f) for f in k.facets], members(r.face)))
    assert h.get(r.degree, 0) > 0
    assert mask_of([k.vertices.index("y2")]) == r.face
