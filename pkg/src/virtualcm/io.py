"""JSON documents for complexes, maps, ideals and certificates.

Complex::

    {"vertices": ["x0", "x1", ...], "facets": [[0, 2, 4], ...], "blocks": [[0, 1], [2, 3, 4]]}

Indices are 0-based, facet arrays strictly increasing, ``blocks`` optional.
A map is ``{"source": <complex>, "target": <complex>, "vertex_map": [...]}``.
A certificate is ``{"delta": <complex>, "delta_prime": <complex>, "psi": [...],
"order": [[...], ...], "c": {"facets": ...}}`` where ``order`` lists facets
of ``delta`` and ``c`` may omit ``vertices`` (then ``delta``'s are used).
An ideal is either a bare array of monomials, each an array of
``[variable index, exponent]`` pairs, or ``{"vertices": ..., "generators":
<that array>, "blocks": ...}``.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Optional, Union

from .complex import SimplicialComplex, SimplicialMap, VertexLabeling, members
from .linalg import QQ, Field
from .sralgebra import MonomialIdeal
from .toric import ToricContext

FIXTURE_DIR = Path(__file__).with_name("fixtures")


class FormatError(ValueError):
    """A document does not follow the expected shape."""


def read_document(path: Union[str, Path]) -> Any:
    """Load JSON from ``path``; bare names fall back to ``<name>.json`` and the bundled fixtures."""
    p = Path(path)
    candidates = [p, p.with_name(p.name + ".json")]
    if p.parent.name == "fixtures" or len(p.parts) == 1:
        candidates += [FIXTURE_DIR / p.name, FIXTURE_DIR / (p.name + ".json")]
    for c in candidates:
        if c.is_file():
            try:
                return json.loads(c.read_text())
            except json.JSONDecodeError as exc:
                raise FormatError(f"{c}: {exc}") from None
    raise FileNotFoundError(f"no such document: {path}")


def _faces(raw, n: int, what: str) -> list[list[int]]:
    if not isinstance(raw, list):
        raise FormatError(f"{what} must be an array of index arrays")
    out = []
    for f in raw:
        if not isinstance(f, list) or not all(isinstance(i, int) for i in f):
            raise FormatError(f"{what}: {f!r} is not an array of indices")
        if any(b <= a for a, b in zip(f, f[1:])):
            raise FormatError(f"{what}: {f!r} is not strictly increasing")
        if f and not (0 <= f[0] and f[-1] < n):
            raise FormatError(f"{what}: {f!r} has an index outside 0..{n - 1}")
        out.append(f)
    return out


def complex_from_doc(doc: dict, vertices: Optional[VertexLabeling] = None) -> SimplicialComplex:
    if not isinstance(doc, dict):
        raise FormatError("a complex document must be an object")
    if "vertices" in doc:
        vertices = VertexLabeling(doc["vertices"])
    elif vertices is None:
        raise FormatError("complex document needs 'vertices'")
    if "facets" not in doc:
        raise FormatError("complex document needs 'facets'")
    return SimplicialComplex(vertices, _faces(doc["facets"], len(vertices), "facets"))


def raw_facets(doc: dict) -> list[list[int]]:
    """Facet arrays in file order (used to resolve ``--order`` indices)."""
    return [list(f) for f in doc["facets"]]


def context_from_doc(doc: dict) -> Optional[ToricContext]:
    if not isinstance(doc, dict) or "blocks" not in doc:
        return None
    vertices = VertexLabeling(doc["vertices"])
    return ToricContext(vertices, _faces(doc["blocks"], len(vertices), "blocks"))


def complex_to_doc(k: SimplicialComplex, context: Optional[ToricContext] = None) -> dict:
    doc = {"vertices": list(k.vertices.labels), "facets": [list(members(f)) for f in k.facets]}
    if context is not None:
        doc["blocks"] = [list(members(b)) for b in context.blocks]
    return doc


def map_from_doc(doc: dict) -> SimplicialMap:
    src = complex_from_doc(doc["source"])
    tgt = complex_from_doc(doc["target"])
    return SimplicialMap(src, tgt, doc["vertex_map"])


def map_to_doc(psi: SimplicialMap) -> dict:
    return {
        "source": complex_to_doc(psi.source),
        "target": complex_to_doc(psi.target),
        "vertex_map": list(psi.vertex_map),
    }


def ideal_from_doc(doc, ambient: Optional[VertexLabeling] = None) -> MonomialIdeal:
    if isinstance(doc, dict):
        if "vertices" in doc:
            ambient = VertexLabeling(doc["vertices"])
        gens = doc.get("generators")
    else:
        gens = doc
    if ambient is None:
        raise FormatError("ideal document needs 'vertices' (or an ambient ring from elsewhere)")
    if not isinstance(gens, list):
        raise FormatError("ideal generators must be an array of monomials")
    n = len(ambient)
    out = []
    for mono in gens:
        e = [0] * n
        for pair in mono:
            if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
                raise FormatError(f"monomial entry {pair!r} is not [variable, exponent]")
            i, k = pair
            if not 0 <= i < n or k < 0:
                raise FormatError(f"monomial entry {pair!r} out of range")
            e[i] += k
        out.append(e)
    return MonomialIdeal(ambient, out)


def ideal_to_doc(ideal: MonomialIdeal, context: Optional[ToricContext] = None) -> dict:
    doc = {
        "vertices": list(ideal.ambient.labels),
        "generators": [[[i, e] for i, e in enumerate(g) if e] for g in ideal.generators],
    }
    if context is not None:
        doc["blocks"] = [list(members(b)) for b in context.blocks]
    return doc


def certificate_from_doc(doc: dict, irrelevant: Optional[SimplicialComplex] = None,
                         context: Optional[ToricContext] = None, field: Field = QQ):
    """Build a cover certificate, or a virtual shelling certificate when ``order`` is present.

    The context comes from ``context``, else ``irrelevant``, else ``delta.blocks``.
    """
    from .virtual import CoverCertificate, VirtualShellingCertificate

    for key in ("delta", "delta_prime", "psi"):
        if key not in doc:
            raise FormatError(f"certificate needs {key!r}")
    delta = complex_from_doc(doc["delta"])
    prime = complex_from_doc(doc["delta_prime"])
    vm = doc["psi"]["vertex_map"] if isinstance(doc["psi"], dict) else doc["psi"]
    psi = SimplicialMap(prime, delta, vm)
    ctx = context or irrelevant or context_from_doc(doc["delta"])
    if ctx is None and doc.get("irrelevant") is not None:
        ctx = complex_from_doc(doc["irrelevant"], delta.vertices)
    if ctx is None:
        raise FormatError("certificate needs a context: 'blocks' on delta, --toric or --irrelevant")
    if "order" not in doc:
        return CoverCertificate(psi, ctx, field)
    order = [delta.face(f) for f in _faces(doc["order"], delta.n, "order")]
    c = complex_from_doc(doc["c"], delta.vertices) if doc.get("c") is not None else None
    return VirtualShellingCertificate(psi, ctx, field, tuple(order), c)


def certificate_to_doc(cert) -> dict:
    ctx = cert.context if isinstance(cert.context, ToricContext) else None
    doc = {
        "delta": complex_to_doc(cert.delta, ctx),
        "delta_prime": complex_to_doc(cert.delta_prime),
        "psi": list(cert.psi.vertex_map),
    }
    if ctx is None:
        doc["irrelevant"] = complex_to_doc(cert.context)
    order = getattr(cert, "order", None)
    if order:
        doc["order"] = [list(members(f)) for f in order]
    c = getattr(cert, "c", None)
    if c is not None:
        doc["c"] = {"facets": [list(members(f)) for f in c.facets]}
    return doc


_FLAT = re.compile(r"\[[^\[\]{}]*\]")
_NESTED = re.compile(r"\[\s*\[[^\[\]{}]*\](?:,\s*\[[^\[\]{}]*\])*\s*\]")


def _squash(m: re.Match) -> str:
    return re.sub(r"\s*\n\s*", " ", m.group(0)).replace("[ ", "[").replace(" ]", "]")


def dumps(doc: Any) -> str:
    """Indented JSON with innermost arrays (and short arrays of them) kept on one line."""
    text = _FLAT.sub(_squash, json.dumps(doc, indent=2))
    return _NESTED.sub(lambda m: s if len(s := _squash(m)) <= 40 else m.group(0), text)


def write_document(doc: Any, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(doc) + "\n")
