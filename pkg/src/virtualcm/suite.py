"""The bundled fixture matrix: expected versus computed values for every bundled example."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Union

from .io import FIXTURE_DIR, certificate_from_doc, complex_from_doc, context_from_doc, ideal_from_doc, read_document
from .homology import reduced_homology, relative_homology_Z
from .shelling import is_shelling
from .sralgebra import betti_hochster, codim, complex_from_sr, is_cohen_macaulay
from .virtual import (
    annihilation_witness,
    check_proposition,
    construct_cover,
    corollary_order,
    link_decomposition,
    verify_cover,
    verify_virtual_shelling,
)


@dataclass
class Row:
    name: str
    criterion: int
    expected: str
    computed: str = ""
    ok: bool = False
    witness: str = ""


class _Docs:
    def __init__(self, directory: Path):
        self.directory = directory
        self._cache: dict[str, object] = {}

    def has(self, name: str) -> bool:
        return (self.directory / f"{name}.json").is_file()

    def __getitem__(self, name: str):
        if name not in self._cache:
            self._cache[name] = read_document(self.directory / f"{name}.json")
        return self._cache[name]

    def complex(self, name):
        return complex_from_doc(self[name])

    def context(self, name):
        return context_from_doc(self[name])

    def cert(self, name):
        return certificate_from_doc(self[name])


_ROWS: list[tuple[str, int, str, tuple[str, ...], Callable]] = []


def _row(name: str, criterion: int, expected: str, *needs: str):
    def deco(fn):
        _ROWS.append((name, criterion, expected, needs, fn))
        return fn

    return deco


@_row("example14 check-cm", 1, "False", "example14_delta")
def _(d):
    r = is_cohen_macaulay(d.complex("example14_delta"))
    return str(r.is_cm), not r.is_cm, ""


@_row("example14 betti totals / pd", 1, "(1, 4, 4, 1) pd=3", "example14_delta")
def _(d):
    b = betti_hochster(d.complex("example14_delta"))
    return f"{b.totals} pd={b.pd}", b.totals == (1, 4, 4, 1) and b.pd == 3, ""


@_row("example14 codim", 1, "2", "example14_delta")
def _(d):
    c = codim(d.complex("example14_delta"))
    return str(c), c == 2, ""


@_row("example14 cover verify", 2, "pass", "example14_cert")
def _(d):
    v = verify_cover(d.cert("example14_cert").cover)
    return v.status, bool(v), f"{v.condition} {v.witness}" if not v else ""


@_row("example14 vshelling verify", 2, "pass", "example14_cert")
def _(d):
    v = verify_virtual_shelling(d.cert("example14_cert"))
    return v.status, bool(v), f"{v.condition} {v.witness}" if not v else ""


@_row("example14 Δ' check-cm", 2, "True", "example14_delta_prime")
def _(d):
    r = is_cohen_macaulay(d.complex("example14_delta_prime"))
    return str(r.is_cm), r.is_cm, ""


@_row("example14 Δ' shelling G1..G4", 2, "True", "example14_delta_prime")
def _(d):
    doc = d["example14_delta_prime"]
    k = d.complex("example14_delta_prime")
    r = is_shelling(k, [k.face(f) for f in doc["facets"]])
    return str(r.ok), r.ok, "" if r else f"position {r.failed_at}"


@_row("remark saturation J:B^∞ = I_Δ:B^∞ = I_Δ", 3, "equal", "remark_J", "example14_IDelta", "example14_IDelta_sat")
def _(d):
    j = ideal_from_doc(d["remark_J"])
    i = ideal_from_doc(d["example14_IDelta"])
    want = ideal_from_doc(d["example14_IDelta_sat"])
    b = d.context("remark_J").irrelevant_ideal()
    sj, si = j.saturate(b), i.saturate(b)
    ok = sj == si == want
    return ("equal" if ok else f"{sj} / {si}"), ok, ""


@_row("remark pd(S/J) = codim", 3, "pd=2 codim=2", "remark_J")
def _(d):
    k = complex_from_sr(ideal_from_doc(d["remark_J"]))
    b = betti_hochster(k)
    return f"pd={b.pd} codim={codim(k)} totals={b.totals}", b.pd == 2 == codim(k), ""


@_row("example3x link(x0) H~_0", 4, "1", "example3x_delta")
def _(d):
    k = d.complex("example3x_delta")
    h = reduced_homology(k.link(["x0"]))
    return str(h[0]), h[0] == 1, ""


@_row("example3x vshelling verify", 4, "pass", "example3x_cert")
def _(d):
    v = verify_virtual_shelling(d.cert("example3x_cert"))
    return v.status, bool(v), f"{v.condition} {v.witness}" if not v else ""


@_row("example3x check-prop C=<x0>", 4, "fail condition 2 attaching {x0,y0,y2}", "example3x_delta", "example3x_C")
def _(d):
    k = d.complex("example3x_delta")
    c = complex_from_doc(d["example3x_C"], k.vertices)
    v = check_proposition(k, [k.face(f) for f in d["example3x_delta"]["facets"]], d.context("example3x_delta"), c)
    att = v.details.get("attaching")
    ok = v.status == "fail" and v.condition == 2 and set(att or ()) == {"x0", "y0", "y2"}
    return f"{v.status} condition {v.condition} attaching {att}", ok, str(v.witness)


@_row("section5 link({x0,x1})", 5, "<{y0,y1}, {y2,y3}>", "section5_delta")
def _(d):
    k = d.complex("section5_delta")
    lk = k.link(["x0", "x1"])
    got = sorted(lk.facet_names())
    return str(lk), got == [("y0", "y1"), ("y2", "y3")], ""


@_row("section5 check-cm", 5, "False at {x0,x1}, degree 0", "section5_delta")
def _(d):
    k = d.complex("section5_delta")
    r = is_cohen_macaulay(k)
    face = k.names(r.face) if r.face is not None else None
    return f"{r.is_cm} at {face}, degree {r.degree}", (not r.is_cm and face == ("x0", "x1") and r.degree == 0), ""


@_row("section5 cover verify", 5, "pass", "section5_cert")
def _(d):
    v = verify_cover(d.cert("section5_cert").cover)
    return v.status, bool(v), f"{v.condition} {v.witness}" if not v else ""


@_row("example14 check-prop C=B_X", 6, "pass; Ξ = {x0,y0} | {x1,y0} | {x1,y1}", "example14_delta")
def _(d):
    k = d.complex("example14_delta")
    v = check_proposition(k, [k.face(f) for f in d["example14_delta"]["facets"]], d.context("example14_delta"))
    xi = v.details.get("xi")
    ok = bool(v) and xi == [[("x0", "y0")], [("x1", "y0")], [("x1", "y1")]]
    return f"{v.status} {xi}", ok, ""


@_row("example14 construct", 6, "6 vertices, equals hand fixture, cover+vshelling pass",
      "example14_delta", "example14_constructed_cert")
def _(d):
    k = d.complex("example14_delta")
    cert = construct_cover(k, [k.face(f) for f in d["example14_delta"]["facets"]], d.context("example14_delta"))
    hand = d.cert("example14_constructed_cert")
    same = cert.delta_prime == hand.delta_prime and cert.psi.vertex_map == hand.psi.vertex_map
    vc, vs = verify_cover(cert.cover), verify_virtual_shelling(cert)
    ok = cert.delta_prime.n == 6 and same and bool(vc) and bool(vs)
    return f"{cert.delta_prime.n} vertices, same={same}, cover={vc.status}, vshelling={vs.status}", ok, str(cert.delta_prime)


@_row("example14 corollary order", 7, "tree, H_2(Δ,B;Z)=0, order F1..F4, pass", "example14_delta")
def _(d):
    k = d.complex("example14_delta")
    ctx = d.context("example14_delta")
    v = corollary_order(k, ctx)
    listed = [k.names(k.face(f)) for f in d["example14_delta"]["facets"]]
    hom = relative_homology_Z(k, k & ctx.irrelevant_complex())[2]
    ok = bool(v) and v.details["tree"] and hom.is_zero() and v.details["order"] == listed
    return f"{v.status} tree={v.details.get('tree')} H2={hom} order={v.details.get('order')}", ok, ""


@_row("example3x corollary order", 7, "refuted-hypothesis: tree", "example3x_delta")
def _(d):
    k = d.complex("example3x_delta")
    v = corollary_order(k, d.context("example3x_delta"))
    return f"{v.status}: {v.condition}", v.status == "refuted-hypothesis" and v.condition == "tree", str(v.witness)


@_row("example3x link-decompose x0", 9, "2 components, union = link, intersections in B_Y, each pass", "example3x_cert")
def _(d):
    ld = link_decomposition(d.cert("example3x_cert"), "x0")
    return f"{len(ld.components)} components ok={ld.ok}", ld.ok and len(ld.components) == 2, ""


@_row("example14 link-decompose y2", 9, "2 components, union = link, intersections in B_Y, each pass", "example14_cert")
def _(d):
    ld = link_decomposition(d.cert("example14_cert"), "y2")
    return f"{len(ld.components)} components ok={ld.ok}", ld.ok and len(ld.components) == 2, ""


@_row("example14 annihilation", 2, "pass", "example14_cert")
def _(d):
    v = annihilation_witness(d.cert("example14_cert"))
    return v.status, bool(v), str(v.witness or "")


@_row("section5 annihilation", 5, "pass", "section5_cert")
def _(d):
    v = annihilation_witness(d.cert("section5_cert"))
    return v.status, bool(v), str(v.witness or "")


def run_fixture_suite(directory: Optional[Union[str, Path]] = None) -> list[Row]:
    """Evaluate every row whose fixtures exist in ``directory`` (default: bundled)."""
    docs = _Docs(Path(directory) if directory is not None else FIXTURE_DIR)
    rows = []
    for name, criterion, expected, needs, fn in _ROWS:
        if not all(docs.has(n) for n in needs):
            continue
        row = Row(name, criterion, expected)
        try:
            row.computed, row.ok, row.witness = fn(docs)
        except Exception as exc:  # a corrupted fixture must fail its row, not the run
            row.computed, row.ok, row.witness = "error", False, f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


def format_table(rows: list[Row]) -> str:
    lines = [f"{'':4} {'#':>2}  {'row':<44} {'expected':<40} computed"]
    for r in rows:
        mark = "PASS" if r.ok else "FAIL"
        line = f"{mark:4} {r.criterion:>2}  {r.name:<44} {r.expected:<40} {r.computed}"
        if not r.ok and r.witness:
            line += f"  [{r.witness}]"
        lines.append(line)
    return "\n".join(lines)
