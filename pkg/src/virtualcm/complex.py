"""Finite simplicial complexes stored as facet lists of vertex bit sets.

A face is a plain ``int`` whose set bits are vertex indices into a
:class:`VertexLabeling`.  Complexes keep only their inclusion-maximal faces
and answer membership by subset tests.

Two degenerate complexes are kept apart:

* the *empty complex* ``{∅}`` has the single facet ``0`` and dimension -1;
* the *void complex* has no faces at all, not even ``∅``; its dimension is
  reported as ``-inf``.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

Face = int
FaceLike = Union[int, Iterable[Union[int, str]]]

VOID_DIM = float("-inf")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including ``mask`` itself and ``0``."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def face_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: dimension first, then the sorted index tuple."""
    return (mask.bit_count(), members(mask))


def maximal(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of ``masks``, in canonical order."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    kept.sort(key=face_key)
    return kept


class VertexLabeling:
    """Ordered, duplicate-free vertex labels with a label -> index lookup."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Union[int, Iterable[str]]):
        if isinstance(labels, int):
            labels = [str(i) for i in range(labels)]
        self.labels: tuple[str, ...] = tuple(str(x) for x in labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError(f"duplicate vertex labels in {self.labels}")

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexLabeling) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"VertexLabeling({list(self.labels)!r})"

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, v: Union[int, str]) -> int:
        if isinstance(v, str):
            try:
                return self._index[v]
            except KeyError:
                raise ValueError(f"unknown vertex {v!r}") from None
        if not 0 <= v < len(self.labels):
            raise ValueError(f"vertex index {v} out of range 0..{len(self.labels) - 1}")
        return int(v)

    def face(self, face: FaceLike) -> Face:
        """Convert a mask or an iterable of labels/indices to a checked mask."""
        if isinstance(face, int):
            if face < 0 or face >> len(self.labels):
                raise ValueError(f"face mask {face:#b} uses vertices outside 0..{len(self.labels) - 1}")
            return face
        return mask_of(self.index(v) for v in face)

    def names(self, mask: Face) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def format(self, mask: Face) -> str:
        return "{" + ",".join(self.names(mask)) + "}"


class SimplicialComplex:
    """A simplicial complex given by its facets.

    Parameters
    ----------
    vertices : VertexLabeling, sequence of labels, or int
        The ambient vertex set.  An int ``n`` means labels ``"0".."n-1"``.
    faces : iterable
        Generating faces, each a bit mask or an iterable of labels/indices.
        Non-maximal generators are absorbed.  An empty iterable gives the void
        complex; ``[[]]`` gives the empty complex ``{∅}``.
    """

    def __init__(self, vertices, faces: Iterable[FaceLike] = ()):
        if not isinstance(vertices, VertexLabeling):
            vertices = VertexLabeling(vertices)
        self.vertices = vertices
        self.facets: tuple[Face, ...] = tuple(maximal(vertices.face(f) for f in faces))

    @classmethod
    def simplex(cls, vertices, face: FaceLike) -> "SimplicialComplex":
        """The complex ``<F>`` generated by one face."""
        return cls(vertices, [face])

    @classmethod
    def void(cls, vertices) -> "SimplicialComplex":
        return cls(vertices, [])

    @classmethod
    def empty(cls, vertices) -> "SimplicialComplex":
        return cls(vertices, [0])

    # -- basic queries -------------------------------------------------

    def __repr__(self) -> str:
        body = ", ".join(self.vertices.format(f) for f in self.facets)
        return f"<{body}>" if self.facets else "<void>"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def __contains__(self, face: FaceLike) -> bool:
        m = self.vertices.face(face)
        return any(m & f == m for f in self.facets)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self):
        if not self.facets:
            return VOID_DIM
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    @property
    def vertex_support(self) -> Face:
        """Mask of vertices that actually occur in some face."""
        m = 0
        for f in self.facets:
            m |= f
        return m

    def face(self, face: FaceLike) -> Face:
        return self.vertices.face(face)

    def names(self, mask: Face) -> tuple[str, ...]:
        return self.vertices.names(mask)

    def facet_names(self) -> list[tuple[str, ...]]:
        return [self.names(f) for f in self.facets]

    @cached_property
    def all_faces(self) -> frozenset[Face]:
        out: set[Face] = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    def faces(self, d: int | None = None) -> list[Face]:
        """Faces in canonical order, optionally only those of dimension ``d``."""
        fs = self.all_faces if d is None else [f for f in self.all_faces if f.bit_count() == d + 1]
        return sorted(fs, key=face_key)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        self._check_same(other)
        return all(f in other for f in self.facets)

    def _check_same(self, other: "SimplicialComplex") -> None:
        if self.vertices != other.vertices:
            raise ValueError("complexes live on different vertex labelings")

    # -- constructions -------------------------------------------------

    def link(self, face: FaceLike) -> "SimplicialComplex":
        g = self.face(face)
        if g not in self:
            raise ValueError(f"{self.vertices.format(g)} is not a face of the complex")
        return SimplicialComplex(self.vertices, [f & ~g for f in self.facets if f & g == g])

    def restriction(self, sigma: FaceLike) -> "SimplicialComplex":
        """Faces contained in ``sigma``; the labeling is unchanged."""
        s = self.face(sigma)
        if self.is_void:
            return self
        return SimplicialComplex(self.vertices, [f & s for f in self.facets])

    def intersect(self, other: "SimplicialComplex") -> "SimplicialComplex":
        self._check_same(other)
        return SimplicialComplex(self.vertices, [f & g for f in self.facets for g in other.facets])

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        self._check_same(other)
        return SimplicialComplex(self.vertices, self.facets + other.facets)

    __and__ = intersect
    __or__ = union

    def reindexed(self, keep: Face) -> "SimplicialComplex":
        """The same complex on the sub-labeling ``keep``, reindexed contiguously."""
        if any(f & ~keep for f in self.facets):
            raise ValueError("a facet uses a vertex that is being dropped")
        kept = members(keep)
        pos = {old: new for new, old in enumerate(kept)}
        labels = VertexLabeling(self.vertices.labels[i] for i in kept)
        return SimplicialComplex(labels, [mask_of(pos[i] for i in bits(f)) for f in self.facets])

    def on_support(self) -> "SimplicialComplex":
        """Drop vertices that occur in no face."""
        return self.reindexed(self.vertex_support)


def closure(vertices, faces: Iterable[FaceLike]) -> SimplicialComplex:
    """Smallest simplicial complex containing the given faces."""
    return SimplicialComplex(vertices, faces)


class SimplicialMap:
    """A vertex map ``source -> target`` sending faces to faces.

    ``vertex_map[i]`` is the target index of source vertex ``i``.  The
    simplicial-map law is checked on construction.
    """

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex, vertex_map: Sequence[Union[int, str]]):
        if len(vertex_map) != source.n:
            raise ValueError(f"vertex_map has {len(vertex_map)} entries, source has {source.n} vertices")
        self.source = source
        self.target = target
        self.vertex_map: tuple[int, ...] = tuple(target.vertices.index(v) for v in vertex_map)
        for f in source.facets:
            if self.image(f) not in target:
                raise ValueError(
                    f"image of facet {source.vertices.format(f)} is "
                    f"{target.vertices.format(self.image(f))}, not a face of the target"
                )

    @classmethod
    def identity(cls, complex_: SimplicialComplex) -> "SimplicialMap":
        return cls(complex_, complex_, range(complex_.n))

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{a}->{self.target.vertices.labels[b]}" for a, b in zip(self.source.vertices.labels, self.vertex_map)
        )
        return f"SimplicialMap({pairs})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialMap)
            and self.source == other.source
            and self.target == other.target
            and self.vertex_map == other.vertex_map
        )

    def image(self, face: FaceLike) -> Face:
        g = self.source.face(face)
        out = 0
        for i in bits(g):
            out |= 1 << self.vertex_map[i]
        return out

    def preimage_vertices(self, face: FaceLike) -> Face:
        f = self.target.face(face)
        return mask_of(i for i, t in enumerate(self.vertex_map) if f >> t & 1)

    def fiber(self, face: FaceLike) -> list[Face]:
        """All source faces whose image is exactly ``face``."""
        f = self.target.face(face)
        if f not in self.target:
            raise ValueError(f"{self.target.vertices.format(f)} is not a face of the target")
        pre = self.preimage_vertices(f)
        found: set[Face] = set()
        for g in self.source.facets:
            for h in submasks(g & pre):
                if h not in found and self.image(h) == f:
                    found.add(h)
        return sorted(found, key=face_key)

    @cached_property
    def fibers(self) -> dict[Face, tuple[Face, ...]]:
        """Exact fibers of every face in the image, keyed by target face."""
        out: dict[Face, list[Face]] = {}
        for g in self.source.faces():
            out.setdefault(self.image(g), []).append(g)
        return {k: tuple(v) for k, v in out.items()}

    def dimension_violation(self) -> Face | None:
        """A source face whose image has smaller dimension, or ``None``."""
        for g in self.source.facets:
            if self.image(g).bit_count() != g.bit_count():
                seen: dict[int, int] = {}
                for i in bits(g):
                    t = self.vertex_map[i]
                    if t in seen:
                        return (1 << seen[t]) | (1 << i)
                    seen[t] = i
        return None

    def preserves_dimension(self) -> bool:
        return self.dimension_violation() is None

    def uncovered_facet(self) -> Face | None:
        """A target facet not covered by the image, or ``None`` if surjective on faces."""
        images = [self.image(g) for g in self.source.facets]
        for f in self.target.facets:
            if not any(f & im == f for im in images):
                return f
        return None

    def is_surjective(self) -> bool:
        return self.uncovered_facet() is None
