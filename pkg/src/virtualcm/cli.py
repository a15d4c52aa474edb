"""``virtualcm`` command line: JSON verdicts on stdout, exit code from the status.

Exit codes: 0 pass, 1 fail / refuted-hypothesis / unknown, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .complex import SimplicialComplex
from .homology import reduced_homology, relative_homology_Z
from .io import (
    FormatError,
    certificate_from_doc,
    certificate_to_doc,
    complex_from_doc,
    context_from_doc,
    dumps,
    ideal_from_doc,
    ideal_to_doc,
    read_document,
    write_document,
)
from .linalg import Field
from .shelling import find_shelling, is_shelling
from .sralgebra import betti_hochster, codim, is_cohen_macaulay, sr_ideal
from .suite import format_table, run_fixture_suite
from .toric import ToricContext
from .virtual import (
    FAIL,
    PASS,
    Verdict,
    check_proposition,
    construct_cover,
    corollary_order,
    link_decomposition,
    verify_cover,
    verify_virtual_shelling,
)

ERROR = "error"
EXIT = {PASS: 0, ERROR: 2}


class InputError(Exception):
    pass


def exit_code(status: str) -> int:
    return EXIT.get(status, 1)


# ---------------------------------------------------------------------------
# input helpers


def _complex_doc(path: str) -> dict:
    doc = read_document(path)
    if isinstance(doc, dict) and "delta" in doc and "facets" not in doc:
        doc = doc["delta"]  # a certificate also names its Δ
    return doc


def _context(args, doc: dict, delta: SimplicialComplex):
    """ToricContext from ``--toric`` or the document's blocks, else an explicit complex from ``--irrelevant``."""
    if args.toric:
        tdoc = read_document(args.toric)
        blocks = tdoc["blocks"] if isinstance(tdoc, dict) else tdoc
        return ToricContext(delta.vertices, blocks)
    ctx = context_from_doc(doc)
    if ctx is not None:
        return ctx
    if getattr(args, "irrelevant", None):
        return complex_from_doc(read_document(args.irrelevant), delta.vertices)
    return None


def _require_context(args, doc, delta):
    ctx = _context(args, doc, delta)
    if ctx is None:
        raise InputError("no toric context: give 'blocks' in the input, --toric or --irrelevant")
    return ctx


def _order(args, doc: dict, delta: SimplicialComplex):
    facets = doc["facets"]
    if not args.order:
        return [delta.face(f) for f in facets]
    try:
        idx = [int(t) for t in args.order.split(",")]
    except ValueError:
        raise InputError(f"--order must be comma-separated facet indices, got {args.order!r}") from None
    if sorted(idx) != list(range(len(facets))):
        raise InputError(f"--order must be a permutation of 0..{len(facets) - 1}")
    return [delta.face(facets[i]) for i in idx]


def _names(delta, faces):
    return [list(delta.names(f)) for f in faces]


def _homology_doc(h) -> dict:
    return {str(i): d for i, d in h.nonzero().items()}


def _verdict_doc(v: Verdict) -> dict:
    out = {"status": v.status}
    if v.condition is not None:
        out["condition"] = v.condition
    if v.witness is not None:
        out["witness"] = v.witness
    if v.message:
        out["message"] = v.message
    if v.details:
        out["details"] = v.details
    if v.certificate is not None:
        out["certificate"] = certificate_to_doc(v.certificate)
    return out


# ---------------------------------------------------------------------------
# commands; each returns (result document, document for --out or None)


def cmd_check_cm(args):
    doc = _complex_doc(args.path)
    delta = complex_from_doc(doc)
    r = is_cohen_macaulay(delta, args.field)
    out = {"status": PASS if r else FAIL, "value": r.is_cm, "field": str(args.field)}
    if not r:
        out["witness"] = {"face": list(delta.names(r.face)), "degree": r.degree}
        out["message"] = f"H~_{r.degree}(link {delta.vertices.format(r.face)}) != 0"
    return out, None


def cmd_betti(args):
    delta = complex_from_doc(_complex_doc(args.path))
    b = betti_hochster(delta, args.field)
    graded = [[i, j, v] for (i, j), v in sorted(b.graded().items()) if v]
    return {"status": PASS, "totals": list(b.totals), "pd": b.pd, "graded": graded, "field": str(args.field)}, None


def cmd_codim(args):
    delta = complex_from_doc(_complex_doc(args.path))
    return {"status": PASS, "value": codim(delta)}, None


def cmd_sr_ideal(args):
    doc = _complex_doc(args.path)
    delta = complex_from_doc(doc)
    ideal = sr_ideal(delta)
    idoc = ideal_to_doc(ideal, context_from_doc(doc))
    return {"status": PASS, "ideal": idoc, "generators": [ideal.format(g) for g in ideal.generators]}, idoc


def cmd_saturate(args):
    doc = read_document(args.path)
    ideal = ideal_from_doc(doc)
    if args.by == "B_X":
        ctx = ToricContext(ideal.ambient, read_document(args.toric)["blocks"]) if args.toric else context_from_doc(doc)
        if ctx is None:
            raise InputError("--by B_X needs 'blocks' in the ideal document or --toric")
        by = ctx.irrelevant_ideal()
    else:
        by = ideal_from_doc(read_document(args.by), ideal.ambient)
    sat = ideal.saturate(by)
    sdoc = ideal_to_doc(sat, context_from_doc(doc) if isinstance(doc, dict) else None)
    out = {"status": PASS, "ideal": sdoc, "generators": [sat.format(g) for g in sat.generators]}
    if args.equals:
        want = ideal_from_doc(read_document(args.equals), ideal.ambient)
        if sat != want:
            out["status"] = FAIL
            out["witness"] = {
                "missing": [sat.format(g) for g in want.generators if g not in sat.generators],
                "extra": [sat.format(g) for g in sat.generators if g not in want.generators],
            }
    return out, sdoc


def cmd_homology(args):
    delta = complex_from_doc(_complex_doc(args.path))
    h = reduced_homology(delta, args.field)
    return {"status": PASS, "reduced": _homology_doc(h), "field": str(args.field)}, None


def cmd_rel_homology(args):
    doc = _complex_doc(args.path)
    delta = complex_from_doc(doc)
    if args.irrelevant and not args.toric and "blocks" not in doc:
        sub = complex_from_doc(read_document(args.irrelevant), delta.vertices)
    else:
        ctx = _require_context(args, doc, delta)
        sub = ctx.irrelevant_complex() if isinstance(ctx, ToricContext) else ctx
    h = relative_homology_Z(delta, delta & sub)
    groups = {str(i): {"rank": g.rank, "torsion": list(g.torsion)} for i, g in h.nonzero().items()}
    return {"status": PASS, "groups": groups, "subcomplex": _names(delta, (delta & sub).facets)}, None


def cmd_shelling_verify(args):
    doc = _complex_doc(args.path)
    delta = complex_from_doc(doc)
    order = _order(args, doc, delta)
    r = is_shelling(delta, order)
    out = {"status": PASS if r else FAIL, "value": r.ok, "order": _names(delta, order)}
    if not r:
        out["witness"] = {"position": r.failed_at, "facet": list(delta.names(order[r.failed_at]))}
    return out, None


def cmd_shelling_find(args):
    delta = complex_from_doc(_complex_doc(args.path))
    order = find_shelling(delta)
    if order is None:
        return {"status": FAIL, "value": False, "message": "no shelling order exists"}, None
    return {"status": PASS, "value": True, "order": _names(delta, order)}, None


def _prop_inputs(args):
    doc = _complex_doc(args.path)
    delta = complex_from_doc(doc)
    ctx = _require_context(args, doc, delta)
    c = None
    if args.irrelevant and isinstance(ctx, ToricContext):
        c = complex_from_doc(read_document(args.irrelevant), delta.vertices)
    return delta, _order(args, doc, delta), ctx, c


def cmd_check_prop(args):
    delta, order, ctx, c = _prop_inputs(args)
    return _verdict_doc(check_proposition(delta, order, ctx, c)), None


def cmd_construct(args):
    delta, order, ctx, c = _prop_inputs(args)
    prop = check_proposition(delta, order, ctx, c)
    if not prop:
        return _verdict_doc(prop), None
    trace: list = []
    cert = construct_cover(delta, order, ctx, c, field=args.field, trace=trace)
    v = verify_virtual_shelling(cert)
    cdoc = certificate_to_doc(cert)
    out = _verdict_doc(v)
    out["certificate"] = cdoc
    out["trace"] = [{"step": s, "case": case, "attaching": list(a)} for s, case, a in trace]
    return out, cdoc


def _certificate(args):
    doc = read_document(args.path)
    if not isinstance(doc, dict):
        raise FormatError("certificate document must be an object")
    delta = complex_from_doc(doc.get("delta", {}))
    ctx = None
    if args.toric:
        ctx = ToricContext(delta.vertices, read_document(args.toric)["blocks"])
    irr = complex_from_doc(read_document(args.irrelevant), delta.vertices) if args.irrelevant else None
    return certificate_from_doc(doc, irrelevant=irr, context=ctx, field=args.field)


def cmd_cover_verify(args):
    cert = _certificate(args)
    cover = cert.cover if hasattr(cert, "cover") else cert
    return _verdict_doc(verify_cover(cover)), None


def cmd_vshelling_verify(args):
    cert = _certificate(args)
    if not hasattr(cert, "order"):
        raise InputError("certificate has no 'order'")
    return _verdict_doc(verify_virtual_shelling(cert)), None


def cmd_link_decompose(args):
    cert = _certificate(args)
    if not hasattr(cert, "order"):
        raise InputError("certificate has no 'order'")
    ld = link_decomposition(cert, args.vertex)
    comps = []
    for comp in ld.components:
        entry = {
            "vertex": comp.vertex,
            "facets": comp.complex.facet_names(),
            "verdict": _verdict_doc(comp.verdict),
        }
        if comp.certificate is not None:
            entry["certificate"] = certificate_to_doc(comp.certificate)
        comps.append(entry)
    out = {
        "status": PASS if ld.ok else FAIL,
        "vertex": ld.vertex,
        "link": ld.link.facet_names(),
        "union_ok": ld.union_ok,
        "bad_intersections": [list(p) for p in ld.bad_intersections],
        "components": comps,
    }
    return out, None


def cmd_corollary(args):
    doc = _complex_doc(args.path)
    delta = complex_from_doc(doc)
    v = corollary_order(delta, _require_context(args, doc, delta), args.field)
    out = _verdict_doc(v)
    return out, out.get("certificate")


def cmd_fixtures(args):
    rows = run_fixture_suite(args.directory)
    out = {
        "status": PASS if all(r.ok for r in rows) else FAIL,
        "rows": [vars(r) for r in rows],
    }
    if args.pretty:
        out["_table"] = format_table(rows)
    return out, None


# ---------------------------------------------------------------------------
# parser


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=Field.parse("q"), help="q (default) or gf:<p>")
    common.add_argument("--toric", metavar="PATH", help="document whose 'blocks' define the toric context")
    common.add_argument("--irrelevant", metavar="PATH", help="explicit irrelevant complex B, or C for vshelling")
    common.add_argument("--order", metavar="LIST", help="comma-separated facet indices (default: file order)")
    common.add_argument("--out", metavar="PATH", help="also write the emitted document here")
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    p = argparse.ArgumentParser(prog="virtualcm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def leaf(parent, name, fn, help_, path=True):
        q = parent.add_parser(name, parents=[common], help=help_)
        if path:
            q.add_argument("path")
        q.set_defaults(func=fn)
        return q

    def group(name, help_):
        g = sub.add_parser(name, help=help_)
        return g.add_subparsers(dest="action", required=True, metavar="ACTION")

    leaf(sub, "check-cm", cmd_check_cm, "Reisner's criterion")
    leaf(sub, "betti", cmd_betti, "Betti numbers via Hochster's formula")
    leaf(sub, "codim", cmd_codim, "codimension of S/I_Δ")
    leaf(sub, "sr-ideal", cmd_sr_ideal, "Stanley-Reisner ideal")
    q = leaf(sub, "saturate", cmd_saturate, "saturate an ideal")
    q.add_argument("--by", required=True, help="B_X or a path to an ideal document")
    q.add_argument("--equals", metavar="PATH", help="compare with this ideal")
    leaf(sub, "homology", cmd_homology, "reduced homology over a field")
    leaf(sub, "rel-homology-z", cmd_rel_homology, "H_*(Δ, Δ ∩ B; Z)")

    g = group("shelling", "shelling orders")
    leaf(g, "verify", cmd_shelling_verify, "check a shelling order")
    leaf(g, "find", cmd_shelling_find, "search for a shelling order")

    g = group("vshelling", "virtual shellings")
    leaf(g, "check-prop", cmd_check_prop, "Ξ-set conditions for an order")
    leaf(g, "construct", cmd_construct, "build a virtual shelling certificate")
    leaf(g, "verify", cmd_vshelling_verify, "verify a virtual shelling certificate")

    g = group("cover", "virtual Cohen-Macaulay covers")
    leaf(g, "verify", cmd_cover_verify, "verify a cover certificate")

    q = leaf(sub, "link-decompose", cmd_link_decompose, "split the link of a duplicated vertex")
    q.add_argument("--vertex", required=True)

    g = group("corollary", "tree-order corollary")
    leaf(g, "order", cmd_corollary, "dual-graph tree order and certificate")

    g = group("fixtures", "bundled example corpus")
    q = leaf(g, "run", cmd_fixtures, "run the fixture matrix", path=False)
    q.add_argument("directory", nargs="?", help="fixture directory (default: bundled)")
    return p


def execute(args: argparse.Namespace) -> tuple[dict, int]:
    try:
        out, emitted = args.func(args)
        if args.out and emitted is not None:
            write_document(emitted, args.out)
    except (InputError, FormatError, FileNotFoundError, KeyError, TypeError, ValueError) as exc:
        msg = f"missing field {exc}" if isinstance(exc, KeyError) else str(exc)
        out = {"status": ERROR, "message": msg}
    out = json.loads(json.dumps(out))  # plain JSON values, exactly as printed
    return out, exit_code(out["status"])


def run(argv: Optional[Sequence[str]] = None) -> tuple[dict, int]:
    """Parse ``argv`` and execute; returns the result document and the exit code."""
    return execute(build_parser().parse_args(argv))


def _pretty(out: dict) -> str:
    if "_table" in out:
        return out["_table"]
    return "\n".join(f"{k}: {json.dumps(v, ensure_ascii=False)}" for k, v in out.items())


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return 2 if exc.code else 0
    out, code = execute(args)
    if args.pretty:
        print(_pretty(out))
    else:
        out.pop("_table", None)
        print(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
