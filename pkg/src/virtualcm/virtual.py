"""Cohen-Macaulay covers and virtual shellings.

A *cover certificate* is a simplicial map ``psi: Δ' -> Δ`` together with an
irrelevant complex (usually that of a product of projective spaces).  It
certifies that ``Δ`` is virtually Cohen-Macaulay when ``psi`` is onto,
dimension-preserving, ``Δ'`` is Cohen-Macaulay, and every face of ``Δ`` with
more than one exact preimage is irrelevant.  A *virtual shelling certificate*
adds a facet order on ``Δ`` whose fibers are single facets shelling ``Δ'``.

Nothing here concludes that a complex is *not* virtually Cohen-Macaulay:
failed checks refute a certificate or a hypothesis, never the property.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Optional, Sequence, Union

import networkx as nx

from .complex import Face, SimplicialComplex, SimplicialMap, VertexLabeling, bits, face_key, mask_of, maximal, submasks
from .homology import relative_homology_Z
from .linalg import QQ, Field
from .shelling import is_shelling
from .sralgebra import is_cohen_macaulay, minimal_nonfaces
from .toric import ToricContext, irrelevant_of

Context = Union[ToricContext, SimplicialComplex]

PASS = "pass"
FAIL = "fail"
REFUTED = "refuted-hypothesis"
UNKNOWN = "unknown"


@dataclass
class Verdict:
    """Outcome of a check.

    ``condition`` names what failed (an int for the numbered conditions of a
    certificate, a string for named hypotheses); ``witness`` is a face given
    by vertex labels, or another small JSON-friendly value.
    """

    status: str
    condition: Any = None
    witness: Any = None
    message: str = ""
    details: dict = field(default_factory=dict)
    certificate: Any = None

    def __bool__(self) -> bool:
        return self.status == PASS

    @property
    def passed(self) -> bool:
        return self.status == PASS


def _fail(condition, witness, message, **details) -> Verdict:
    return Verdict(FAIL, condition, witness, message, details)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True, eq=False)
class CoverCertificate:
    """``psi: Δ' -> Δ`` plus the irrelevant data it is judged against."""

    psi: SimplicialMap
    context: Context
    field: Field = QQ

    def __post_init__(self):
        irr = irrelevant_of(self.context)
        if irr.vertices != self.delta.vertices:
            raise ValueError("context and Δ use different vertex labelings")

    @property
    def delta(self) -> SimplicialComplex:
        return self.psi.target

    @property
    def delta_prime(self) -> SimplicialComplex:
        return self.psi.source

    @property
    def irrelevant(self) -> SimplicialComplex:
        return irrelevant_of(self.context)


@dataclass(frozen=True, eq=False)
class VirtualShellingCertificate(CoverCertificate):
    """A cover certificate with a facet order on ``Δ`` and an optional ``C ⊆ B_X``."""

    order: tuple[Face, ...] = ()
    c: Optional[SimplicialComplex] = None

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "order", tuple(self.delta.face(f) for f in self.order))
        if sorted(self.order) != sorted(self.delta.facets):
            raise ValueError("order is not a permutation of the facets of Δ")

    @property
    def cover(self) -> CoverCertificate:
        return CoverCertificate(self.psi, self.context, self.field)

    @property
    def prime_order(self) -> tuple[Face, ...]:
        """``psi^{-1}(F_1), ..., psi^{-1}(F_n)`` when every fiber is a single face."""
        fib = self.psi.fibers
        return tuple(fib[f][0] for f in self.order if len(fib.get(f, ())) == 1)


# ---------------------------------------------------------------------------
# cover verification


def _check_map(cert: CoverCertificate) -> Optional[Verdict]:
    psi, delta, prime = cert.psi, cert.delta, cert.delta_prime
    lost = psi.uncovered_facet()
    if lost is not None:
        return _fail(0, delta.names(lost), "psi is not surjective on faces")
    bad = psi.dimension_violation()
    if bad is not None:
        return _fail(2, prime.names(bad), "psi identifies two vertices of a face of Δ'")
    irr = cert.irrelevant
    for f in sorted(psi.fibers, key=face_key):
        if len(psi.fibers[f]) > 1 and f not in irr:
            return _fail(
                3,
                delta.names(f),
                "a relevant face has more than one preimage",
                fiber=[prime.names(g) for g in psi.fibers[f]],
            )
    return None


def _multi_fibers(cert: CoverCertificate) -> list[tuple[str, ...]]:
    fib = cert.psi.fibers
    return [cert.delta.names(f) for f in sorted(fib, key=face_key) if len(fib[f]) > 1]


def verify_cover(cert: CoverCertificate) -> Verdict:
    """Check the Cohen-Macaulay cover conditions.

    Conditions: 0 surjectivity on faces, 1 ``Δ'`` Cohen-Macaulay over the
    field, 2 dimension preservation, 3 multi-preimage faces are irrelevant.
    On a pass the pair ``(Δ', psi)`` is echoed as the module witness
    ``M = k[Δ']``.
    """
    bad = _check_map(cert)
    if bad is not None:
        return bad
    cm = is_cohen_macaulay(cert.delta_prime, cert.field)
    if not cm:
        lk = cert.delta_prime.names(cm.face)
        return _fail(1, lk, f"Δ' is not Cohen-Macaulay: H~_{cm.degree} of this link is nonzero", degree=cm.degree)
    return Verdict(
        PASS,
        message="Δ is virtually Cohen-Macaulay",
        details={
            "module": "k[Δ'] with x_i acting as the sum of its preimages",
            "delta_prime": cert.delta_prime.facet_names(),
            "vertex_map": dict(zip(cert.delta_prime.vertices.labels, (cert.delta.vertices.labels[t] for t in cert.psi.vertex_map))),
            "multi_fiber_faces": _multi_fibers(cert),
            "field": str(cert.field),
        },
    )


def annihilation_witness(cert: CoverCertificate) -> Verdict:
    """Consistency check from the sheaf-isomorphism argument.

    Every face of ``Δ`` containing the support of a generator of the
    irrelevant ideal (i.e. every relevant face) must have a single preimage,
    so multiplying by ``B_X`` lands in the image of ``k[Δ]``.
    """
    delta, irr, fib = cert.delta, cert.irrelevant, cert.psi.fibers
    gens = minimal_nonfaces(irr)
    for b in gens:
        if b in delta and len(fib.get(b, ())) != 1:
            return _fail("generator", delta.names(b), "a generator support of B_X has a non-singleton fiber")
    for f in delta.faces():
        if any(b & f == b for b in gens) and len(fib.get(f, ())) != 1:
            return _fail("relevant-face", delta.names(f), "a relevant face has a non-singleton fiber",
                         fiber=[cert.delta_prime.names(g) for g in fib.get(f, ())])
    return Verdict(PASS, message="B_X annihilates the cokernel", details={"generators_in_delta": sum(b in delta for b in gens)})


def verify_virtual_shelling(cert: VirtualShellingCertificate) -> Verdict:
    """Check that ``cert.order`` is a virtual shelling order witnessed by ``cert.psi``.

    Condition numbers: 1 the fibers shell ``Δ'`` in order, 2 dimension
    preservation, 3 multi-preimage faces irrelevant, 4 each facet of ``Δ``
    has exactly one preimage.
    """
    delta, prime, fib = cert.delta, cert.delta_prime, cert.psi.fibers
    irr = cert.irrelevant
    if cert.c is not None:
        if not cert.c.is_subcomplex_of(irr):
            raise ValueError("C must be a subcomplex of the irrelevant complex")
        inside = [f for f in delta.facets if f in cert.c]
        if inside:
            raise ValueError(f"facet {delta.vertices.format(inside[0])} lies in C")
    for f in cert.order:
        pre = fib.get(f, ())
        if len(pre) != 1:
            return _fail(4, delta.names(f), f"facet has {len(pre)} preimages",
                         fiber=[prime.names(g) for g in pre])
        if pre[0] not in prime.facets:
            return _fail(4, delta.names(f), "the preimage of this facet is not a facet of Δ'")
    g_order = cert.prime_order
    extra = set(prime.facets) - set(g_order)
    if extra:
        g = min(extra, key=face_key)
        return _fail(1, prime.names(g), "Δ' has a facet that is not the preimage of a facet of Δ")
    if not prime.is_pure:
        return _fail(1, None, "Δ' is not pure")
    sh = is_shelling(prime, g_order)
    if not sh:
        g = g_order[sh.failed_at]
        return _fail(1, prime.names(g), "the induced order is not a shelling of Δ'", position=sh.failed_at)
    bad = _check_map(cert)
    if bad is not None:
        return bad
    return Verdict(
        PASS,
        message="virtual shelling order",
        details={
            "order": [delta.names(f) for f in cert.order],
            "prime_order": [prime.names(g) for g in g_order],
            "multi_fiber_faces": _multi_fibers(cert),
        },
    )


# ---------------------------------------------------------------------------
# the Ξ-set sufficient condition and its constructive cover


@dataclass(frozen=True)
class XiSet:
    """Faces of ``<F_1..F_i> ∩ <F_{i+1}>`` outside ``C`` (not closed downward)."""

    vertices: VertexLabeling
    faces: tuple[Face, ...]

    def closure(self) -> SimplicialComplex:
        return SimplicialComplex(self.vertices, self.faces)

    def names(self) -> list[tuple[str, ...]]:
        return [self.vertices.names(f) for f in self.faces]

    def maximal_names(self) -> list[tuple[str, ...]]:
        return [self.vertices.names(f) for f in maximal(self.faces)]

    def __contains__(self, f: Face) -> bool:
        return f in self.faces

    def __len__(self) -> int:
        return len(self.faces)


def _resolve_c(delta: SimplicialComplex, context: Context, c: Optional[SimplicialComplex]) -> SimplicialComplex:
    irr = irrelevant_of(context)
    if irr.vertices != delta.vertices:
        raise ValueError("context and Δ use different vertex labelings")
    if c is None:
        return irr
    if c.vertices != delta.vertices:
        raise ValueError("C and Δ use different vertex labelings")
    if not c.is_subcomplex_of(irr):
        raise ValueError("C must be a subcomplex of the irrelevant complex")
    return c


def xi_sets(delta: SimplicialComplex, order: Sequence, c: SimplicialComplex) -> list[XiSet]:
    """``Ξ_i`` for ``i = 1 .. n-1`` (list index ``i - 1``)."""
    masks = [delta.face(f) for f in order]
    if sorted(masks) != sorted(delta.facets):
        raise ValueError("order is not a permutation of the facets")
    for f in masks:
        if f in c:
            raise ValueError(f"facet {delta.vertices.format(f)} lies in C")
    out = []
    for i in range(1, len(masks)):
        new = masks[i]
        prefix = masks[:i]
        faces = {s for g in prefix for s in submasks(new & g) if s not in c}
        out.append(XiSet(delta.vertices, tuple(sorted(faces, key=face_key))))
    return out


def check_proposition(delta: SimplicialComplex, order: Sequence, context: Context,
                      c: Optional[SimplicialComplex] = None) -> Verdict:
    """Test the two Ξ-set conditions at every attachment step.

    ``c`` defaults to the irrelevant complex of ``context``.  A pass means the
    order is a virtual shelling order and :func:`construct_cover` succeeds.
    Failures report the 1-based step ``i`` (attaching ``F_{i+1}``).
    """
    if not delta.is_pure:
        raise ValueError("the Ξ-set condition needs a pure complex")
    c = _resolve_c(delta, context, c)
    xis = xi_sets(delta, order, c)
    masks = [delta.face(f) for f in order]
    d = delta.dim
    for i, xi in enumerate(xis, start=1):
        attaching = delta.names(masks[i])
        tops = maximal(xi.faces)
        if not tops or any(t.bit_count() != d for t in tops):
            return Verdict(FAIL, 1, [delta.names(t) for t in tops],
                           "closure of Ξ is not pure of dimension dim Δ - 1",
                           {"step": i, "attaching": attaching, "xi": xi.names()})
        ridges = [f for f in xi.faces if f.bit_count() == d]
        for a, b in combinations(ridges, 2):
            if a & b not in xi:
                return Verdict(FAIL, 2, delta.names(a & b),
                               "intersection of two ridges of Ξ is not in Ξ",
                               {"step": i, "attaching": attaching, "pair": [delta.names(a), delta.names(b)],
                                "xi": xi.names()})
    return Verdict(PASS, message="order satisfies the Ξ-set conditions",
                   details={"xi": [xi.names() for xi in xis]})


def _fresh_label(labels: list[str], base: str, copies: int) -> str:
    if copies == 0 and base not in labels:
        return base
    k = max(copies, 1)
    while f"{base}#{k}" in labels:
        k += 1
    return f"{base}#{k}"


def construct_cover(delta: SimplicialComplex, order: Sequence, context: Context,
                    c: Optional[SimplicialComplex] = None, field: Field = QQ,
                    trace: Optional[list] = None) -> VirtualShellingCertificate:
    """Build ``Δ'`` and ``psi`` by attaching one simplex per facet of ``order``.

    Start from ``<F_1>`` with the identity.  For each later facet ``F`` let
    ``Γ`` be the closure of ``psi^{-1}(Ξ)``.  If ``Γ`` has one facet ``H``,
    glue ``H ∪ {v}`` with a fresh vertex ``v`` sent to the vertex of ``F``
    missing from ``psi(H)``.  Otherwise ``Γ`` spans exactly ``dim F + 1``
    vertices and the simplex on them is glued in, with no new vertex.

    Fresh vertices reuse the target label if it is still unused in ``Δ'`` and
    are named ``label#k`` for the ``k``-th extra copy otherwise.  When
    ``trace`` is a list, one ``(step, case, attaching)`` tuple is appended per
    step.
    """
    verdict = check_proposition(delta, order, context, c)
    if not verdict:
        raise ValueError(f"order fails the Ξ-set conditions: {verdict.message} at step {verdict.details.get('step')}")
    c = _resolve_c(delta, context, c)
    masks = [delta.face(f) for f in order]
    xis = xi_sets(delta, masks, c)
    d = delta.dim

    first = list(bits(masks[0]))
    labels = [delta.vertices.labels[i] for i in first]
    vmap = list(first)
    prime_facets = [mask_of(range(len(first)))]

    def image(g: Face) -> Face:
        return mask_of(vmap[i] for i in bits(g))

    for step, (new, xi) in enumerate(zip(masks[1:], xis), start=1):
        pre = {h for g in prime_facets for h in submasks(g) if image(h) in xi}
        gamma = maximal(pre)
        if len(gamma) == 1:
            h = gamma[0]
            w = new & ~image(h)
            assert w.bit_count() == 1, "Case 1 needs exactly one missing vertex"
            w_idx = w.bit_length() - 1
            base = delta.vertices.labels[w_idx]
            labels.append(_fresh_label(labels, base, vmap.count(w_idx)))
            vmap.append(w_idx)
            g = h | 1 << (len(labels) - 1)
            case = 1
        else:
            g = 0
            for h in gamma:
                g |= h
            if g.bit_count() != d + 1:
                raise AssertionError(f"Case 2 at step {step}: Γ spans {g.bit_count()} vertices, expected {d + 1}")
            if image(g) != new:
                raise AssertionError(f"Case 2 at step {step}: glued simplex does not map onto the new facet")
            if any(g & p == g for p in prime_facets):
                raise AssertionError(f"Case 2 at step {step}: glued simplex already in Δ'")
            case = 2
        prime_facets.append(g)
        if trace is not None:
            trace.append((step, case, delta.names(new)))

    prime = SimplicialComplex(labels, prime_facets)
    psi = SimplicialMap(prime, delta, vmap)
    c_out = None if c == irrelevant_of(context) else c
    return VirtualShellingCertificate(psi, context, field, tuple(masks), c_out)


# ---------------------------------------------------------------------------
# links of virtually shellable complexes


@dataclass
class LinkComponent:
    vertex: str  # the vertex v of Δ' over x
    complex: SimplicialComplex  # Δ_v = psi(link_{Δ'}(v)) on Y
    certificate: VirtualShellingCertificate
    verdict: Verdict


@dataclass
class LinkDecomposition:
    vertex: str
    context: ToricContext  # Y
    link: SimplicialComplex  # link_Δ(x) on Y
    components: list[LinkComponent]
    union_ok: bool
    bad_intersections: list[tuple[str, str]]

    @property
    def ok(self) -> bool:
        return self.union_ok and not self.bad_intersections and all(c.verdict for c in self.components)


def link_decomposition(cert: VirtualShellingCertificate, x: Union[int, str]) -> LinkDecomposition:
    """Split ``link_Δ(x)`` into the images of the links of the preimages of ``x``.

    Each piece lives on ``Y`` (the context with ``x`` removed) and carries the
    restricted map and the order induced by the shelling of ``Δ'`` as its own
    virtual shelling certificate.
    """
    if not isinstance(cert.context, ToricContext):
        raise ValueError("link decomposition needs a product-of-projective-spaces context")
    base = verify_virtual_shelling(cert)
    if not base:
        raise ValueError(f"certificate does not verify: {base.message}")
    delta, prime, psi = cert.delta, cert.delta_prime, cert.psi
    xi = delta.vertices.index(x)
    if not any(f >> xi & 1 for f in delta.facets):
        raise ValueError(f"{delta.vertices.labels[xi]!r} is not a vertex of Δ")
    y_ctx = cert.context.drop_vertex(xi)
    keep = delta.vertices.full & ~(1 << xi)
    to_y = {old: new for new, old in enumerate(bits(keep))}

    def on_y(f: Face) -> Face:
        return mask_of(to_y[i] for i in bits(f))

    prime_order = cert.prime_order
    components = []
    for v in range(prime.n):
        if psi.vertex_map[v] != xi:
            continue
        link_facets = [g & ~(1 << v) for g in prime_order if g >> v & 1]
        lk = prime.link(1 << v)
        used = lk.vertex_support
        lk_small = lk.reindexed(used)
        small_map = [on_y(1 << psi.vertex_map[i]).bit_length() - 1 for i in bits(used)]
        images = [on_y(psi.image(h)) for h in link_facets]
        dv = SimplicialComplex(y_ctx.vertices, images)
        sub_psi = SimplicialMap(lk_small, dv, small_map)
        order = []
        for im in images:
            if im not in order:
                order.append(im)
        try:
            sub = VirtualShellingCertificate(sub_psi, y_ctx, cert.field, tuple(order))
            verdict = verify_virtual_shelling(sub)
        except ValueError as exc:
            sub = None
            verdict = Verdict(FAIL, "order", None, str(exc))
        components.append(LinkComponent(prime.vertices.labels[v], dv, sub, verdict))

    link_y = delta.link(1 << xi).reindexed(keep)
    union = SimplicialComplex.void(y_ctx.vertices)
    for comp in components:
        union = union | comp.complex
    irr_y = y_ctx.irrelevant_complex()
    bad = []
    for a, b in combinations(components, 2):
        if not (a.complex & b.complex).is_subcomplex_of(irr_y):
            bad.append((a.vertex, b.vertex))
    return LinkDecomposition(delta.vertices.labels[xi], y_ctx, link_y, components, union == link_y, bad)


# ---------------------------------------------------------------------------
# dual graph and the tree-order corollary


@dataclass(frozen=True)
class DualGraph:
    """Facets of ``Δ`` joined when they meet in a relevant ridge."""

    complex: SimplicialComplex
    edges: tuple[tuple[int, int], ...]  # indices into complex.facets

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.complex.facets)))
        g.add_edges_from(self.edges)
        return g

    def is_tree(self) -> bool:
        return len(self.complex.facets) > 0 and nx.is_tree(self.graph())

    def is_connected(self) -> bool:
        return len(self.complex.facets) > 0 and nx.is_connected(self.graph())

    def describe(self) -> list[dict]:
        fs = self.complex.facets
        return [
            {"facets": [self.complex.names(fs[i]), self.complex.names(fs[j])], "ridge": self.complex.names(fs[i] & fs[j])}
            for i, j in self.edges
        ]


def dual_graph(delta: SimplicialComplex, context: Context) -> DualGraph:
    irr = irrelevant_of(context)
    fs = delta.facets
    d = delta.dim
    edges = tuple(
        (i, j)
        for i, j in combinations(range(len(fs)), 2)
        if (fs[i] & fs[j]).bit_count() == d and (fs[i] & fs[j]) not in irr
    )
    return DualGraph(delta, edges)


def _tree_order(dg: DualGraph) -> list[int]:
    """Depth-first preorder from the first leaf, neighbours in canonical order."""
    g = dg.graph()
    start = min(n for n in g.nodes if g.degree(n) <= 1)
    return _dfs(g, start)


def _dfs(g: nx.Graph, start: int) -> list[int]:
    out, stack, seen = [], [start], set()
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        out.append(u)
        stack.extend(sorted((w for w in g[u] if w not in seen), reverse=True))
    return out


def corollary_order(delta: SimplicialComplex, context: Context, field: Field = QQ) -> Verdict:
    """Tree-order route to a virtual shelling.

    Hypotheses: ``Δ`` pure with only relevant facets, the relevant dual graph
    connected, and ``H_{dim Δ}(Δ, Δ ∩ B; Z) = 0``, which should coincide with
    the dual graph being a tree.  Both are computed; if they disagree the
    verdict is ``unknown``.  On success a depth-first tree order is checked
    against the Ξ-set conditions with ``C = B`` and the constructed
    certificate is returned.
    """
    if not delta.is_pure:
        raise ValueError("the corollary needs a pure complex")
    irr = irrelevant_of(context)
    bad = [f for f in delta.facets if f in irr]
    if bad:
        raise ValueError(f"facet {delta.vertices.format(bad[0])} is irrelevant")
    dg = dual_graph(delta, context)
    g = dg.graph()
    hom = relative_homology_Z(delta, delta & irr)[delta.dim]
    tree = dg.is_tree()
    details = {
        "dual_graph": dg.describe(),
        "connected": dg.is_connected(),
        "tree": tree,
        "relative_homology_degree": delta.dim,
        "relative_homology": {"rank": hom.rank, "torsion": list(hom.torsion)},
    }
    if not dg.is_connected():
        comps = [[delta.names(delta.facets[i]) for i in sorted(cc)] for cc in nx.connected_components(g)]
        return Verdict(REFUTED, "relevant-connected", comps, "dual graph is disconnected", details)
    if tree != hom.is_zero():
        return Verdict(UNKNOWN, "tree-vs-homology", None,
                       "dual-graph tree test and relative homology disagree", details)
    if not tree:
        cycle = nx.find_cycle(g)
        nodes = []
        for u, _ in cycle:
            nodes.append(delta.names(delta.facets[u]))
        return Verdict(REFUTED, "tree", nodes, "dual graph has a cycle", details)
    order = [delta.facets[i] for i in _tree_order(dg)]
    details["order"] = [delta.names(f) for f in order]
    prop = check_proposition(delta, order, context)
    if not prop:
        details["proposition"] = {"condition": prop.condition, **prop.details}
        return Verdict(UNKNOWN, "proposition", prop.witness, "tree order fails the Ξ-set conditions", details)
    cert = construct_cover(delta, order, context, field=field)
    vs = verify_virtual_shelling(cert)
    if not vs:
        return Verdict(UNKNOWN, "certificate", vs.witness, f"constructed certificate failed: {vs.message}", details)
    return Verdict(PASS, message="Δ is virtually shellable", details=details, certificate=cert)
