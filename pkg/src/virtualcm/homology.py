"""Reduced simplicial homology over Q or GF(p) and relative homology over Z.

Orientation convention: a face is the ascending tuple of its vertex indices
and deleting the vertex in position ``k`` contributes the sign ``(-1)**k``.
The empty face sits in degree -1, so chain complexes built from a whole
complex are augmented.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .complex import Face, SimplicialComplex, bits
from .linalg import QQ, Field, Matrix, smith_invariants


@dataclass(frozen=True)
class HomologyVector:
    """``dims[i] = dim H_i``; missing degrees are zero."""

    dims: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def nonzero(self) -> dict[int, int]:
        return {i: d for i, d in sorted(self.dims.items()) if d}

    def is_zero(self) -> bool:
        return not self.nonzero()


@dataclass(frozen=True)
class IntegerGroup:
    """``Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`` with ``t_1 | t_2 | ...``."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = ([f"Z^{self.rank}"] if self.rank else []) + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class IntegerHomologyVector:
    groups: dict[int, IntegerGroup] = field(default_factory=dict)

    def __getitem__(self, i: int) -> IntegerGroup:
        return self.groups.get(i, IntegerGroup())

    def nonzero(self) -> dict[int, IntegerGroup]:
        return {i: g for i, g in sorted(self.groups.items()) if not g.is_zero()}


def chain_basis(delta: SimplicialComplex, sub: SimplicialComplex | None = None) -> dict[int, list[Face]]:
    """Faces of ``delta`` not in ``sub``, grouped by dimension, canonically ordered."""
    basis: dict[int, list[Face]] = {}
    for f in delta.faces():
        if sub is not None and f in sub:
            continue
        basis.setdefault(f.bit_count() - 1, []).append(f)
    return basis


def _boundary(rows: list[Face], cols: list[Face]) -> Matrix:
    index = {f: i for i, f in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        for k, v in enumerate(bits(f)):
            i = index.get(f & ~(1 << v))
            if i is not None:
                m[i][j] = -1 if k % 2 else 1
    return m


def boundary_matrix(delta: SimplicialComplex, d: int) -> Matrix:
    """``∂_d``: rows are the (d-1)-faces, columns the d-faces (empty face in degree -1)."""
    basis = chain_basis(delta)
    return _boundary(basis.get(d - 1, []), basis.get(d, []))


def _ranks(basis: dict[int, list[Face]], top: int, rank) -> dict[int, int]:
    return {d: rank(_boundary(basis.get(d - 1, []), basis.get(d, []))) for d in range(-1, top + 2)}


def reduced_homology(delta: SimplicialComplex, k: Field = QQ) -> HomologyVector:
    """``dim_k H~_i(delta)`` for ``i = -1 .. dim delta``."""
    if delta.is_void:
        raise ValueError("reduced homology of the void complex is undefined")
    basis = chain_basis(delta)
    top = delta.dim
    ranks = _ranks(basis, top, k.rank)
    dims = {}
    for i in range(-1, top + 1):
        dims[i] = len(basis.get(i, [])) - ranks[i] - ranks[i + 1]
    return HomologyVector(dims)


def relative_homology_Z(delta: SimplicialComplex, sub: SimplicialComplex) -> IntegerHomologyVector:
    """Integer homology of the quotient chain complex ``C(delta) / C(sub)``.

    With ``sub = {∅}`` this is unreduced homology of ``delta``; with ``sub``
    void it is reduced homology.
    """
    if not sub.is_subcomplex_of(delta):
        raise ValueError("relative homology needs a subcomplex")
    if delta.is_void:
        return IntegerHomologyVector({})
    basis = chain_basis(delta, sub)
    top = delta.dim
    inv = {
        d: smith_invariants(_boundary(basis.get(d - 1, []), basis.get(d, [])))
        for d in range(-1, top + 2)
    }
    groups = {}
    for i in range(-1, top + 1):
        free = len(basis.get(i, [])) - len(inv[i]) - len(inv[i + 1])
        groups[i] = IntegerGroup(free, tuple(t for t in inv[i + 1] if t > 1))
    return IntegerHomologyVector(groups)


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``Σ (-1)^i f_i`` including the empty face."""
    return sum((-1) ** (f.bit_count() - 1) for f in delta.all_faces)


__all__ = [
    "HomologyVector",
    "IntegerGroup",
    "IntegerHomologyVector",
    "boundary_matrix",
    "chain_basis",
    "euler_characteristic",
    "reduced_homology",
    "relative_homology_Z",
]
