import pytest
from hypothesis import given

from strategies import pure_complexes
from virtualcm import SimplicialComplex, find_shelling, is_cohen_macaulay, is_shelling


def test_listed_orders(fx):
    assert is_shelling(fx.complex("example14_delta_prime"), fx.order("example14_delta_prime"))
    prime = fx.cert("section5_cert").delta_prime
    listed = fx.doc("section5_cert")["delta_prime"]["facets"]
    assert is_shelling(prime, [prime.face(f) for f in listed])


def test_first_failure_position(fx):
    k = fx.complex("example14_delta_prime")
    g1, g2, g3, g4 = fx.order("example14_delta_prime")
    r = is_shelling(k, [g1, g4, g2, g3])
    assert not r and r.failed_at == 1


def test_single_facet():
    k = SimplicialComplex.simplex(3, range(3))
    assert is_shelling(k, k.facets)
    assert find_shelling(k) == list(k.facets)


def test_find(fx):
    k = fx.complex("example14_delta_prime")
    assert is_shelling(k, find_shelling(k))
    assert find_shelling(fx.complex("example14_delta")) is None
    tri = SimplicialComplex(3, [[0, 1], [1, 2], [0, 2]])
    assert is_shelling(tri, find_shelling(tri))


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        is_shelling(SimplicialComplex(3, [[0, 1], [2]]), [[0, 1], [2]])
    k = SimplicialComplex(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        is_shelling(k, [[0, 1]])


@given(pure_complexes())
def test_shellable_implies_cm(k):
    order = find_shelling(k)
    if order is not None:
        assert is_shelling(k, order)
        assert is_cohen_macaulay(k)
