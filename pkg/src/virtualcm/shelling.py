"""Shelling orders of pure simplicial complexes: verification and search."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complex import Face, SimplicialComplex, maximal


@dataclass(frozen=True)
class ShellingResult:
    ok: bool
    failed_at: int | None = None  # 0-based position of the facet that could not be attached

    def __bool__(self) -> bool:
        return self.ok


def _attaches(facet: Face, prefix: Sequence[Face]) -> bool:
    """``<facet> ∩ <prefix>`` is pure of dimension ``dim facet - 1``."""
    inter = maximal(facet & g for g in prefix)
    want = facet.bit_count() - 1
    return all(m.bit_count() == want for m in inter)


def _as_order(delta: SimplicialComplex, order: Sequence) -> list[Face]:
    masks = [delta.face(f) for f in order]
    if sorted(masks) != sorted(delta.facets):
        raise ValueError("order is not a permutation of the facets")
    return masks


def is_shelling(delta: SimplicialComplex, order: Sequence) -> ShellingResult:
    """Check that each facet meets the union of its predecessors in a pure codimension-one complex."""
    if not delta.is_pure:
        raise ValueError("shellings are defined here for pure complexes only")
    masks = _as_order(delta, order)
    for i in range(1, len(masks)):
        if not _attaches(masks[i], masks[:i]):
            return ShellingResult(False, i)
    return ShellingResult(True)


def find_shelling(delta: SimplicialComplex) -> list[Face] | None:
    """Lexicographically first shelling order (facets in canonical order), or ``None``.

    Depth-first search over prefixes; since the attachability of the next
    facet depends only on the *set* of facets already placed, dead sets are
    memoised.
    """
    if not delta.is_pure:
        raise ValueError("shellings are defined here for pure complexes only")
    facets = list(delta.facets)
    n = len(facets)
    if n == 0:
        return []
    full = (1 << n) - 1
    dead: set[int] = set()
    order: list[int] = []

    def extend(used: int) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        prefix = [facets[j] for j in order]
        for i in range(n):
            if used >> i & 1 or not _attaches(facets[i], prefix):
                continue
            order.append(i)
            if extend(used | 1 << i):
                return True
            order.pop()
        dead.add(used)
        return False

    for first in range(n):
        order[:] = [first]
        if extend(1 << first):
            result = [facets[j] for j in order]
            assert is_shelling(delta, result)
            return result
    return None
