import pytest
from hypothesis import given

from strategies import contexts
from virtualcm import SimplicialComplex, ToricContext, sr_ideal
from virtualcm.complex import submasks


def test_p1_p2(fx):
    ctx = fx.context("example14_delta")
    assert ctx.dims == (1, 2)
    assert sorted(ctx.irrelevant_complex().facet_names()) == [("x0", "x1"), ("y0", "y1", "y2")]
    b = ctx.irrelevant_ideal()
    assert len(b) == 6 and all(sum(g) == 2 for g in b.generators)
    assert ctx.is_relevant(["x0", "y0"])
    assert not ctx.is_relevant(["y0", "y1"])
    assert not ctx.is_relevant([])


def test_p1_cubed():
    ctx = ToricContext.product_of_projective_spaces([1, 1, 1])
    facets = ctx.irrelevant_complex().facets
    assert len(facets) == 3 and all(f.bit_count() == 4 for f in facets)


def test_single_factor():
    ctx = ToricContext.product_of_projective_spaces([3])
    assert ctx.irrelevant_complex() == SimplicialComplex.empty(ctx.vertices)
    assert len(ctx.irrelevant_ideal()) == 4


def test_p1_p1_generators():
    assert len(ToricContext.product_of_projective_spaces([1, 1]).irrelevant_ideal()) == 4


def test_drop_vertex(fx):
    ctx = fx.context("example14_delta")
    y = ctx.drop_vertex("y2")
    assert y.vertices.labels == ("x0", "x1", "y0", "y1") and y.dims == (1, 1)
    assert ToricContext.product_of_projective_spaces([2, 6]).drop_vertex(0).dims == (1, 6)
    # a P^0 factor is allowed; emptying a block is not
    p0 = ToricContext.product_of_projective_spaces([1, 1]).drop_vertex(1)
    assert p0.dims == (0, 1)
    with pytest.raises(ValueError):
        p0.drop_vertex(0)


def test_blocks_must_partition():
    with pytest.raises(ValueError):
        ToricContext(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        ToricContext(3, [[0, 1]])


@given(contexts())
def test_relevance_agrees_with_irrelevant_complex(ctx):
    irr = ctx.irrelevant_complex()
    for f in submasks(ctx.vertices.full):
        assert ctx.is_relevant(f) == (f not in irr)


@given(contexts())
def test_sr_ideal_of_irrelevant_complex_is_B(ctx):
    assert sr_ideal(ctx.irrelevant_complex()) == ctx.irrelevant_ideal()


@given(contexts())
def test_drop_vertex_shrinks_irrelevant_complex(ctx):
    for v in range(ctx.vertices.full.bit_length()):
        try:
            y = ctx.drop_vertex(v)
        except ValueError:
            continue
        irr_x = ctx.irrelevant_complex()
        for f in y.irrelevant_complex().all_faces:
            lifted = sum(1 << (i if i < v else i + 1) for i in range(y.vertices.full.bit_length()) if f >> i & 1)
            assert lifted in irr_x
