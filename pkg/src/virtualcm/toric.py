"""Products of projective spaces as block partitions of the Cox variables."""
from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence, Union

from .complex import Face, SimplicialComplex, VertexLabeling, bits, mask_of


class ToricContext:
    """``P^{n_1} x ... x P^{n_r}`` encoded as an ordered partition of vertices.

    Block ``i`` holds the ``n_i + 1`` variables of degree ``e_i``.

    >>> ctx = ToricContext(["x0", "x1", "y0", "y1", "y2"], [["x0", "x1"], ["y0", "y1", "y2"]])
    >>> ctx.dims
    (1, 2)
    """

    def __init__(self, vertices, blocks: Iterable[Iterable[Union[int, str]]]):
        if not isinstance(vertices, VertexLabeling):
            vertices = VertexLabeling(vertices)
        self.vertices = vertices
        self.blocks: tuple[Face, ...] = tuple(vertices.face(b) for b in blocks)
        if any(b == 0 for b in self.blocks):
            raise ValueError("every block must be nonempty")
        seen = 0
        for b in self.blocks:
            if seen & b:
                raise ValueError("blocks overlap")
            seen |= b
        if seen != vertices.full:
            missing = vertices.names(vertices.full & ~seen)
            raise ValueError(f"blocks do not cover vertices {missing}")
        self._block_of = {v: i for i, b in enumerate(self.blocks) for v in bits(b)}

    @classmethod
    def product_of_projective_spaces(cls, dims: Sequence[int], names: str = "xyzwuv") -> "ToricContext":
        """Context with default labels ``x0..``, ``y0..`` per factor."""
        labels: list[str] = []
        blocks: list[list[str]] = []
        for k, n in enumerate(dims):
            stem = names[k] if k < len(names) else f"t{k}_"
            block = [f"{stem}{j}" for j in range(n + 1)]
            labels += block
            blocks.append(block)
        return cls(labels, blocks)

    def __repr__(self) -> str:
        return " x ".join(f"P^{d}" for d in self.dims) + f" on {list(self.vertices.labels)}"

    def __eq__(self, other) -> bool:
        return isinstance(other, ToricContext) and self.vertices == other.vertices and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.vertices, self.blocks))

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(b.bit_count() - 1 for b in self.blocks)

    def multidegree(self, v: Union[int, str]) -> int:
        """Block index of vertex ``v``."""
        return self._block_of[self.vertices.index(v)]

    def is_relevant(self, face) -> bool:
        """True iff the face meets every block."""
        f = self.vertices.face(face)
        return all(f & b for b in self.blocks)

    def irrelevant_complex(self) -> SimplicialComplex:
        """Faces missing at least one block; facets are the block complements."""
        full = self.vertices.full
        return SimplicialComplex(self.vertices, [full & ~b for b in self.blocks])

    def irrelevant_ideal(self):
        """``B_X``: one generator per choice of a variable from every block."""
        from .sralgebra import MonomialIdeal

        n = len(self.vertices)
        gens = []
        for choice in product(*(list(bits(b)) for b in self.blocks)):
            e = [0] * n
            for i in choice:
                e[i] = 1
            gens.append(e)
        return MonomialIdeal(self.vertices, gens)

    def drop_vertex(self, v: Union[int, str]) -> "ToricContext":
        """The context with ``v`` removed from its factor (that factor drops one dimension)."""
        i = self.vertices.index(v)
        j = self._block_of[i]
        if self.blocks[j].bit_count() < 2:
            raise ValueError(f"dropping {self.vertices.labels[i]!r} would empty block {j}")
        keep = [k for k in range(len(self.vertices)) if k != i]
        labels = [self.vertices.labels[k] for k in keep]
        pos = {old: new for new, old in enumerate(keep)}
        blocks = [mask_of(pos[k] for k in bits(b) if k != i) for b in self.blocks]
        return ToricContext(labels, blocks)


def irrelevant_of(ctx: Union[ToricContext, SimplicialComplex]) -> SimplicialComplex:
    """The irrelevant complex of a context, or an explicitly supplied one as-is."""
    if isinstance(ctx, ToricContext):
        return ctx.irrelevant_complex()
    if isinstance(ctx, SimplicialComplex):
        return ctx
    raise TypeError(f"expected ToricContext or SimplicialComplex, got {type(ctx).__name__}")
