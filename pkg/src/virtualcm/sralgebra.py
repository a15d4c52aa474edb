"""Stanley-Reisner ideals, monomial ideal arithmetic and Betti numbers.

Monomials are exponent tuples over a :class:`VertexLabeling`.  Ideals keep a
minimal generating set in a fixed order (total degree, then lexicographic
with the first variable largest), so equal ideals compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .complex import Face, SimplicialComplex, VertexLabeling, bits, face_key, mask_of, maximal
from .homology import reduced_homology
from .linalg import QQ, Field

Monomial = tuple[int, ...]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def support(m: Monomial) -> Face:
    return mask_of(i for i, e in enumerate(m) if e)


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=sum)
    kept: list[Monomial] = []
    for g in uniq:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    kept.sort(key=lambda g: (sum(g), tuple(-e for e in g)))
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal given by (and stored as) its minimal generators.

    ``generators`` may be exponent vectors or dicts ``{variable: exponent}``.
    No generators means the zero ideal; the zero exponent vector is ``<1>``.
    """

    def __init__(self, ambient, generators: Iterable = ()):
        if not isinstance(ambient, VertexLabeling):
            ambient = VertexLabeling(ambient)
        self.ambient = ambient
        n = len(ambient)
        gens = []
        for g in generators:
            if isinstance(g, dict):
                e = [0] * n
                for v, k in g.items():
                    e[ambient.index(v)] += int(k)
                g = e
            g = tuple(int(x) for x in g)
            if len(g) != n or min(g, default=0) < 0:
                raise ValueError(f"bad exponent vector {g} for {n} variables")
            gens.append(g)
        self.generators: tuple[Monomial, ...] = _minimalize(gens)

    @classmethod
    def from_supports(cls, ambient, faces: Iterable) -> "MonomialIdeal":
        """Square-free ideal generated by the given vertex sets."""
        if not isinstance(ambient, VertexLabeling):
            ambient = VertexLabeling(ambient)
        n = len(ambient)
        return cls(ambient, [tuple((ambient.face(f) >> i) & 1 for i in range(n)) for f in faces])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.ambient == other.ambient
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return "<" + ", ".join(self.format(g) for g in self.generators) + ">"

    def format(self, m: Monomial) -> str:
        parts = []
        for lab, e in zip(self.ambient.labels, m):
            if e == 1:
                parts.append(lab)
            elif e > 1:
                parts.append(f"{lab}^{e}")
        return "*".join(parts) or "1"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def _check(self, other: "MonomialIdeal") -> None:
        if self.ambient != other.ambient:
            raise ValueError("ideals live in different polynomial rings")

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """``(self : other)``."""
        self._check(other)
        if other.is_zero:
            raise ValueError("colon by the zero ideal is undefined")
        result = None
        for g in other.generators:
            q = MonomialIdeal(self.ambient, [tuple(max(a - b, 0) for a, b in zip(m, g)) for m in self.generators])
            result = q if result is None else result.intersect(q)
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(
            self.ambient,
            [tuple(max(a, b) for a, b in zip(f, g)) for f in self.generators for g in other.generators],
        )

    def saturate(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """``(self : other^∞)`` by iterated colon until the generators stabilise."""
        cur = self
        while True:
            nxt = cur.colon(other)
            if nxt == cur:
                return cur
            cur = nxt


def colon(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    return i.colon(j)


def intersect_ideals(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    return i.intersect(j)


def saturate(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    return i.saturate(j)


def minimal_nonfaces(delta: SimplicialComplex) -> list[Face]:
    if delta.is_void:
        return [0]
    faces = delta.all_faces
    out = set()
    for f in faces:
        for v in range(delta.n):
            s = f | (1 << v)
            if s == f or s in faces or s in out:
                continue
            if all((s & ~(1 << u)) in faces for u in bits(s)):
                out.add(s)
    return sorted(out, key=face_key)


def sr_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """``I_Δ``, generated by the minimal non-faces."""
    return MonomialIdeal.from_supports(delta.vertices, minimal_nonfaces(delta))


def complex_from_sr(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the supports avoiding every generator support."""
    if not ideal.is_squarefree:
        raise ValueError("Stanley-Reisner correspondence needs a square-free ideal")
    if ideal.is_unit:
        return SimplicialComplex.void(ideal.ambient)
    gens = [support(g) for g in ideal.generators]
    n = len(ideal.ambient)
    facets: list[Face] = []

    # depth-first over vertices; a branch is kept only if no later vertex fits
    def grow(face: Face, start: int) -> None:
        extended = False
        for v in range(start, n):
            s = face | (1 << v)
            if not any(g & s == g for g in gens):
                extended = True
                grow(s, v + 1)
        if not extended:
            facets.append(face)

    grow(0, 0)
    return SimplicialComplex(ideal.ambient, maximal(facets))


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers ``β_{i,σ}`` of ``S/I`` on square-free degrees."""

    entries: dict[tuple[int, Face], int]

    @property
    def totals(self) -> tuple[int, ...]:
        top = max((i for (i, _), b in self.entries.items() if b), default=0)
        out = [0] * (top + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return tuple(out)

    @property
    def projective_dimension(self) -> int:
        return len(self.totals) - 1

    pd = projective_dimension

    def graded(self) -> dict[tuple[int, int], int]:
        """Coarse table ``(i, |σ|) -> β``."""
        out: dict[tuple[int, int], int] = {}
        for (i, s), b in self.entries.items():
            key = (i, s.bit_count())
            out[key] = out.get(key, 0) + b
        return out


def betti_hochster(delta: SimplicialComplex, k: Field = QQ) -> BettiTable:
    """Hochster's formula: ``β_{i,σ}(S/I_Δ) = dim H~_{|σ|-i-1}(Δ|_σ; k)``."""
    if delta.is_void:
        raise ValueError("Betti numbers of the void complex are not defined")
    entries: dict[tuple[int, Face], int] = {(0, 0): 1}
    n = delta.n
    for size in range(1, n + 1):
        for sigma in combinations(range(n), size):
            s = mask_of(sigma)
            if s in delta:
                continue  # a simplex: acyclic restriction
            h = reduced_homology(delta.restriction(s), k)
            for j, d in h.dims.items():
                if d:
                    entries[(size - j - 1, s)] = d
    return BettiTable(entries)


def codim(delta: SimplicialComplex) -> int:
    """``n - (dim Δ + 1)``."""
    if delta.is_void:
        raise ValueError("codimension of the void complex is not defined")
    return delta.n - (delta.dim + 1)


@dataclass(frozen=True)
class CMResult:
    """Outcome of Reisner's criterion; on failure ``face`` and ``degree`` locate it."""

    is_cm: bool
    face: Face | None = None
    degree: int | None = None

    def __bool__(self) -> bool:
        return self.is_cm


def is_cohen_macaulay(delta: SimplicialComplex, k: Field = QQ) -> CMResult:
    """Reisner's criterion, checking links of larger faces first.

    Returns the first face ``G`` (by decreasing size, then canonical order)
    and the lowest degree ``i < dim link(G)`` with ``H~_i(link(G); k) != 0``.
    """
    if delta.is_void:
        raise ValueError("Cohen-Macaulayness of the void complex is not defined")
    faces = sorted(delta.all_faces, key=lambda f: (-f.bit_count(), face_key(f)[1]))
    for g in faces:
        lk = delta.link(g)
        if lk.dim < 1:
            # dim 0: only H~_{-1} matters and a nonempty vertex set has none
            continue
        h = reduced_homology(lk, k)
        for i in range(-1, lk.dim):
            if h[i]:
                return CMResult(False, g, i)
    return CMResult(True)


def projective_dimension(delta: SimplicialComplex, k: Field = QQ) -> int:
    return betti_hochster(delta, k).projective_dimension


__all__ = [
    "BettiTable",
    "CMResult",
    "Monomial",
    "MonomialIdeal",
    "betti_hochster",
    "codim",
    "colon",
    "complex_from_sr",
    "intersect_ideals",
    "is_cohen_macaulay",
    "minimal_nonfaces",
    "projective_dimension",
    "saturate",
    "sr_ideal",
    "support",
]
