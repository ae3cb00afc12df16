"""Command-line front end: ``lefrees <command> ...``.

Human-readable tables go to stdout.  ``--out PATH`` also writes a JSON
report whose bytes depend only on the input and flags (timing is printed,
never stored).  Errors print a JSON object to stderr and exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any

from . import __version__, exactla, kernels
from .complex import (
    f_vector,
    is_flag,
    is_simplicial_forest,
    one_skeleton_graph,
)
from .document import Document, DocumentError, load
from .lefschetz import linear_type_sufficient, slp_verdict, wlp_verdict
from .mixed import (
    compositions,
    face_indicator_polytope,
    is_generalized_permutohedron,
    simplicial_mixed_eulerian_positive,
    skeleton_ideals,
    subset_spreads,
)
from .monomial import defect_polynomial, edge_ideal, facet_ideal, sdefect
from .survey import QUESTIONS, survey


class UsageError(ValueError):
    pass


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _load_complex(args):
    doc = load(args.file)
    cx = doc.to_complex()
    if cx.dropped:
        args.warnings.append(
            "dropped non-maximal or repeated facets: "
            + " ".join(_fmt_face(doc, f) for f in cx.dropped)
        )
    return doc, cx


def _fmt_face(doc: Document, face) -> str:
    labs = doc.labelled(face)
    if all(isinstance(x, str) and len(x) == 1 for x in labs):
        return "".join(labs) if labs else "{}"
    return "{" + ",".join(str(x) for x in labs) + "}"


# --- commands ---------------------------------------------------------------------
# each returns (json result, list of human lines)


def cmd_analyze(args) -> tuple[dict, list[str]]:
    doc, cx = _load_complex(args)
    fv = f_vector(cx)
    forest = is_simplicial_forest(cx)
    lin = linear_type_sufficient(cx, args.budget)
    g = one_skeleton_graph(cx)
    used = set(cx.vertices)
    comps = [c for c in g.components() if c[0] in used]
    comp_rows = [
        {"vertices": doc.labelled(c), "bipartite": g.is_bipartite_component(c)} for c in comps
    ]
    res = {
        "n": cx.n,
        "dim": cx.dim,
        "f_vector": list(fv),
        "pure": cx.is_pure,
        "flag": is_flag(cx),
        "facets": [doc.labelled(f) for f in cx.facets],
        "dropped_facets": [doc.labelled(f) for f in cx.dropped],
        "forest": {
            "verdict": forest.is_forest,
            "leaf_order": [doc.labelled(f) for f in forest.order],
            "obstruction": [doc.labelled(f) for f in forest.obstruction],
        },
        "linear_type_sufficient": {
            "verdict": lin.verdict.value,
            "reason": lin.reason,
            "even_cycle": [doc.labelled(cx.facets[k]) for k in lin.even_cycle],
        },
        "one_skeleton_components": comp_rows,
    }
    lines = [
        f"vertices     {cx.n}",
        f"dimension    {cx.dim}",
        f"f-vector     {tuple(fv)}",
        f"pure         {cx.is_pure}",
        f"flag         {res['flag']}",
        f"forest       {forest.is_forest}",
    ]
    if forest.is_forest:
        lines.append("  leaf order " + " ".join(_fmt_face(doc, f) for f in forest.order))
    else:
        lines.append("  no leaf in " + " ".join(_fmt_face(doc, f) for f in forest.obstruction))
    lines.append(f"linear type  {lin.verdict.value} ({lin.reason})")
    if lin.even_cycle:
        lines.append("  even cycle " + " ".join(_fmt_face(doc, cx.facets[k]) for k in lin.even_cycle))
    for row, c in zip(comp_rows, comps):
        lines.append(
            f"component    {_fmt_face(doc, c)} {'bipartite' if row['bipartite'] else 'not bipartite'}"
        )
    return res, lines


def cmd_lefschetz(args) -> tuple[dict, list[str]]:
    doc, cx = _load_complex(args)
    chars = _ints(args.char, "--char")
    for p in chars:
        try:
            exactla.check_field(p)
        except ValueError as exc:
            raise UsageError(f"--char: {exc}") from None
    kinds = ["wlp", "slp"] if args.maps == "all" else [args.maps]
    out = []
    lines = [f"{'char':>4}  {'test':<4} {'i':>2} {'j':>2} {'src':>5} {'tgt':>5} {'rank':>5}  status"]
    for p in chars:
        for kind in kinds:
            rep = (wlp_verdict if kind == "wlp" else slp_verdict)(cx, p)
            out.append(rep.as_dict())
            for m in rep.maps:
                status = "full" if m.full_rank else "FAIL"
                lines.append(
                    f"{p:>4}  {kind:<4} {m.i:>2} {m.j:>2} {m.source_dim:>5} {m.target_dim:>5} {m.rank:>5}  {status}"
                )
                if m.witness is not None:
                    lines.append(f"{'':>6}witness {list(m.witness)}")
            lines.append(f"{p:>4}  {kind.upper()} {'holds' if rep.holds else 'FAILS'}")
    return {"f_vector": list(f_vector(cx)), "reports": out}, lines


def cmd_sdefect(args) -> tuple[dict, list[str]]:
    doc = load(args.file)
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    if args.poly:
        doc, cx = _load_complex(args)
        mu = defect_polynomial(cx, args.m)
        res = {"m": args.m, "polynomial": [[e, c] for e, c in mu.terms], "text": str(mu)}
        return res, [f"mu_{args.m}(t) = {mu}"]
    if doc.kind == "ideal":
        ideal = doc.to_ideal()
    elif doc.kind == "graph":
        ideal = edge_ideal(doc.to_graph())
    else:
        ideal = facet_ideal(_load_complex(args)[1])
    val = sdefect(ideal, args.m)
    return {"m": args.m, "sdefect": val}, [f"sdefect(I, {args.m}) = {val}"]


def cmd_survey(args) -> tuple[dict, list[str]]:
    qs = list(QUESTIONS) if args.question == "all" else [args.question]
    res = survey(args.max_vertices, qs, args.threads)
    lines = [f"forests surveyed  {res['forests']}"]
    for q in qs:
        bad = res["counterexamples"][q]
        lines.append(f"{q:<17} {len(bad)} counterexample(s)")
        for r in bad:
            lines.append(f"  {r['forest']} f={tuple(r['f_vector'])} mu2={r['mu2']} edges={r['edges']}")
    return res, lines


def cmd_mixed(args) -> tuple[dict, list[str]]:
    doc, cx = _load_complex(args)
    if not cx.is_pure:
        raise UsageError("mixed: the complex must be pure")
    if args.all == (args.a is not None):
        raise UsageError("mixed: give exactly one of --a or --all")
    spreads = subset_spreads(skeleton_ideals(cx)) if cx.dim > 1 else {}
    vecs = list(compositions(cx.n - 1, cx.dim)) if args.all else [tuple(_ints(args.a, "--a"))]
    reps = [simplicial_mixed_eulerian_positive(cx, a, spreads) for a in vecs]
    lines = [f"{'a':<24} verdict"]
    for r in reps:
        v = r.first_violation
        tail = "" if v is None else f"  violated at J={list(v[0])}: {v[1]} > {v[2]} - 1"
        lines.append(f"{str(list(r.a)):<24} {'positive' if r.positive else 'zero'}{tail}")
    res = {
        "spreads": [{"J": list(J), "spread": s} for J, s in sorted(spreads.items(), key=lambda kv: (len(kv[0]), kv[0]))],
        "results": [r.as_dict() for r in reps],
        "all_positive": all(r.positive for r in reps),
    }
    return res, lines


def cmd_permutohedron(args) -> tuple[dict, list[str]]:
    doc, cx = _load_complex(args)
    poly = face_indicator_polytope(cx, args.dim)
    res = is_generalized_permutohedron(poly, cap=args.cap)

    def named(v):
        return [doc.labels[k] for k, x in enumerate(v) if x]

    def edge_obj(e):
        return {"u": named(e.u), "v": named(e.v), "direction": list(e.direction)}

    out = {
        "vertices": len(poly.vertices),
        "edges": [edge_obj(e) for e in res.edges],
        "generalized_permutohedron": res.is_generalized_permutohedron,
        "non_root_edges": [edge_obj(e) for e in res.bad_edges],
    }
    lines = [
        f"vertices   {len(poly.vertices)}",
        f"edges      {len(res.edges)}",
        "verdict    " + ("generalized permutohedron" if res.is_generalized_permutohedron else "not a generalized permutohedron"),
    ]
    for e in res.bad_edges:
        lines.append(f"  edge {_fmt_face(doc, [k for k, x in enumerate(e.u) if x])} -- "
                     f"{_fmt_face(doc, [k for k, x in enumerate(e.v) if x])} direction {list(e.direction)}")
    return out, lines


COMMANDS = {
    "analyze": cmd_analyze,
    "lefschetz": cmd_lefschetz,
    "sdefect": cmd_sdefect,
    "survey-forests": cmd_survey,
    "mixed": cmd_mixed,
    "permutohedron": cmd_permutohedron,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report to this path")
    common.add_argument("--budget", type=int, default=10**7, help="search budget for cycle searches")
    common.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("LEFREES_THREADS", "1")),
        help="worker processes for the survey (default $LEFREES_THREADS or 1)",
    )
    ap = argparse.ArgumentParser(prog="lefrees", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"lefrees {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="f-vector, purity, flagness, forest test")
    p.add_argument("file")

    p = sub.add_parser("lefschetz", parents=[common], help="WLP/SLP rank tests")
    p.add_argument("file")
    p.add_argument("--char", default="0,2,3,5,7", help="comma-separated characteristics")
    p.add_argument("--maps", choices=["all", "wlp", "slp"], default="all")

    p = sub.add_parser("sdefect", parents=[common], help="symbolic defect or defect polynomial")
    p.add_argument("file")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--poly", action="store_true", help="defect polynomial of a complex")

    p = sub.add_parser("survey-forests", parents=[common], help="second defect polynomials of small forests")
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--question", choices=[*QUESTIONS, "all"], default="all")

    p = sub.add_parser("mixed", parents=[common], help="mixed multiplicity positivity for skeleta")
    p.add_argument("file")
    p.add_argument("--a", help="composition a_0,...,a_(d-1)")
    p.add_argument("--all", action="store_true", help="every composition of n - 1")

    p = sub.add_parser("permutohedron", parents=[common], help="edge directions of a face polytope")
    p.add_argument("file")
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--cap", type=int, default=40, help="maximum number of polytope vertices")
    return ap


def _echo(args) -> dict:
    skip = {"out", "threads", "command", "warnings"}
    return {"name": args.command, **{k: v for k, v in sorted(vars(args).items()) if k not in skip}}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.warnings = []
    started = time.perf_counter()
    try:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        result, lines = COMMANDS[args.command](args)
    except DocumentError as exc:
        return _fail(exc.as_dict())
    except UsageError as exc:
        return _fail({"error": "usage", "message": str(exc)})
    except OSError as exc:
        return _fail({"error": "io", "message": str(exc)})
    except ValueError as exc:
        return _fail({"error": "input", "message": str(exc)})
    report: dict[str, Any] = {
        "tool": "lefrees",
        "version": __version__,
        "command": _echo(args),
        "result": result,
        "warnings": args.warnings,
    }
    for line in lines:
        print(line)
    for w in args.warnings:
        print(f"warning: {w}")
    print(f"[{args.command} finished in {time.perf_counter() - started:.3f}s, kernels: {kernels.BACKEND}]")
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        except OSError as exc:
            return _fail({"error": "io", "message": str(exc)})
    return 0


def _fail(obj: dict) -> int:
    print(json.dumps(obj, sort_keys=True), file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
