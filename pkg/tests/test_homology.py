import pytest
from hypothesis import given, settings

from oracles import faces_of, reduced_betti, relative_Z
from strategies import complexes
from virtualcm import (
    Field,
    SimplicialComplex,
    boundary_matrix,
    euler_characteristic,
    reduced_homology,
    relative_homology_Z,
)
from virtualcm.complex import members

TRIANGLE = SimplicialComplex(3, [[0, 1], [1, 2], [0, 2]])


def _mul(a, b):
    if not a or not b or not b[0]:
        return []
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def test_triangle_boundary():
    d1 = boundary_matrix(TRIANGLE, 1)
    assert len(d1) == 3 and len(d1[0]) == 3
    assert Field().rank(d1) == 2
    assert reduced_homology(TRIANGLE).nonzero() == {1: 1}


def test_single_vertex_augmentation():
    assert boundary_matrix(SimplicialComplex(1, [[0]]), 0) == [[1]]


def test_simplex_acyclic():
    for n in range(1, 6):
        assert reduced_homology(SimplicialComplex.simplex(n, range(n))).is_zero()


def test_empty_complex_has_h_minus_one():
    assert reduced_homology(SimplicialComplex.empty(2)).nonzero() == {-1: 1}
    with pytest.raises(ValueError):
        reduced_homology(SimplicialComplex.void(2))


def test_example3x_link(fx):
    lk = fx.complex("example3x_delta").link(["x0"])
    assert reduced_homology(lk).nonzero() == {0: 1, 1: 2}


def test_field_dependence():
    # RP^2 (6 vertices): H~_1 = Z/2, so it appears only in characteristic 2
    rp2 = SimplicialComplex(6, [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
                                [1, 2, 4], [2, 3, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5]])
    assert reduced_homology(rp2).is_zero()
    assert reduced_homology(rp2, Field(2)).nonzero() == {1: 1, 2: 1}
    h = relative_homology_Z(rp2, SimplicialComplex.void(6))
    assert h[1].torsion == (2,) and h[1].rank == 0


def test_relative_running_example(fx):
    k = fx.complex("example14_delta")
    a = k & fx.context("example14_delta").irrelevant_complex()
    h = relative_homology_Z(k, a)
    assert h[2].is_zero()
    assert (h[1].rank, h[1].torsion) == (1, ())
    assert relative_homology_Z(k, k).nonzero() == {}


def test_relative_example3x(fx):
    k = fx.complex("example3x_delta")
    a = k & fx.context("example3x_delta").irrelevant_complex()
    h = relative_homology_Z(k, a)
    assert h[1].rank == 1 and h[2].rank == 2


def test_relative_needs_subcomplex():
    with pytest.raises(ValueError):
        relative_homology_Z(TRIANGLE, SimplicialComplex(3, [[0, 1, 2]]))


@given(complexes())
def test_boundary_squared_is_zero(k):
    for d in range(1, int(max(k.dim, 0)) + 1):
        prod = _mul(boundary_matrix(k, d - 1), boundary_matrix(k, d))
        assert all(x == 0 for row in prod for x in row)


@given(complexes())
def test_euler_identity(k):
    h = reduced_homology(k)
    assert euler_characteristic(k) == sum((-1) ** i * d for i, d in h.dims.items())


@settings(max_examples=60)
@given(complexes(max_n=5))
def test_reduced_homology_matches_oracle(k):
    assert reduced_homology(k).nonzero() == reduced_betti([members(f) for f in k.facets])


@settings(max_examples=60)
@given(complexes(max_n=5), complexes(max_n=5, min_facets=0))
def test_relative_homology_matches_oracle(k, a):
    a = SimplicialComplex(k.vertices, [f & k.vertices.full for f in a.facets]) & k
    want = relative_Z([members(f) for f in k.facets], faces_of([members(f) for f in a.facets]))
    got = {i: (g.rank, g.torsion) for i, g in relative_homology_Z(k, a).nonzero().items()}
    assert got == want
