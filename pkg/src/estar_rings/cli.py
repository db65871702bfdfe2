"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or nothing found under
``--expect-found``), 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import operators as ops
from .analyzer import classify
from .document import DocumentError, format_witness, load, report_to_dict, serialize_structure
from .explorer import SearchError, SearchGoal, count_topologies, enumerate_topologies, search
from .operators import DeltaMode, FamilyKind
from .ring import RingError
from .space import SpaceError
from .theorems import VARIANTS, UnknownCheck, check_ids, run_all, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _yes(flag: bool) -> str:
    return "YES" if flag else "no"


def _emit(args, payload: dict[str, Any], lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _parse_set(g, text: str) -> int:
    text = text.strip()
    if text.startswith("["):
        labels = json.loads(text)
    else:
        labels = [t for t in text.replace(",", " ").split() if t]
        if labels and any(t not in g.labels for t in labels) and len(labels) == 1 \
                and all(c in g.labels for c in labels[0]):
            labels = list(labels[0])  # "ab" shorthand for single-char labels
    try:
        return g.mask(str(x) for x in labels)
    except SpaceError as e:
        raise UsageError(str(e)) from None


# -- commands --------------------------------------------------------------------------

def cmd_classify(args) -> int:
    doc = load(args.file)
    s, g = doc.structure, doc.structure.ground
    kinds = [FamilyKind(k) for k in args.kinds.split(",")]
    c = classify(s, args.delta_mode, kinds)
    lines = [f"delta-mode: {c.delta_mode}"]
    lines += [f"{k}: {_yes(v)}" for k, v in c.kinds.items()]
    for r in c.reports:
        lines.append(f"  {r.check_id:<12} {r.status.value:<5} {format_witness(r, g)}".rstrip())
    _emit(args, {"delta_mode": c.delta_mode, "classification": c.kinds,
                 "reports": [report_to_dict(r, g) for r in c.reports]}, lines)
    return EXIT_OK


OPS: dict[str, Callable] = {
    "cl": lambda t, a, a_: t.closure(a),
    "int": lambda t, a, a_: t.interior(a),
    "delta-int": lambda t, a, a_: ops.delta_interior(t, a),
    "delta-cl": lambda t, a, a_: ops.delta_closure(t, a, a_.delta_mode),
    "e*-int": lambda t, a, a_: ops.gen_interior(t, FamilyKind.ESTAR, a, a_.delta_mode),
    "e*-cl": lambda t, a, a_: ops.gen_closure(t, FamilyKind.ESTAR, a, a_.delta_mode),
    "gen-int": lambda t, a, a_: ops.gen_interior(t, a_.kind, a, a_.delta_mode),
    "gen-cl": lambda t, a, a_: ops.gen_closure(t, a_.kind, a, a_.delta_mode),
}


def cmd_op(args) -> int:
    if args.op not in OPS:
        raise UsageError(f"unknown op {args.op!r}; choose from {', '.join(OPS)}")
    doc = load(args.file)
    t, g = doc.structure.topology, doc.structure.ground
    ops.check_sweep(t.n, args.max_n)
    a = _parse_set(g, args.set)
    out = OPS[args.op](t, a, args)
    _emit(args, {"op": args.op, "kind": args.kind, "delta_mode": args.delta_mode,
                 "input": g.names(a), "result": g.names(out)},
          [f"delta-mode: {args.delta_mode}", f"{args.op}({g.format(a)}) = {g.format(out)}"])
    return EXIT_OK


def cmd_families(args) -> int:
    doc = load(args.file)
    t, g = doc.structure.topology, doc.structure.ground
    fam = ops.family(t, args.kind, args.delta_mode, max_n=args.max_n)
    lines = [f"delta-mode: {args.delta_mode}", f"{args.kind}: {len(fam)} sets"]
    lines += [f"  {g.format(m)}" for m in fam]
    _emit(args, {"kind": args.kind, "delta_mode": args.delta_mode, "count": len(fam),
                 "sets": [g.names(m) for m in fam]}, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = load(args.file)
    s, g = doc.structure, doc.structure.ground
    ids = None if args.checks == "all" else [c.strip() for c in args.checks.split(",") if c.strip()]
    try:
        reports = run_all(s, args.variant, args.delta_mode, doc.hom, ids, max_n=args.max_n)
    except UnknownCheck as e:
        raise UsageError(f"unknown check id {e.args[0]!r}; known: {', '.join(check_ids())}") from None
    counts = summarize(reports)
    lines = [f"delta-mode: {args.delta_mode}  variant: {args.variant}"]
    for r in reports:
        tag = r.check_id + (f" [{r.variant}]" if r.variant else "")
        extra = format_witness(r, g)
        if r.hypothesis:
            extra = f"(needs {r.hypothesis}) " + extra
        if "clause" in r.evidence:
            vac = ", vacuous" if r.evidence.get("vacuous") else ""
            extra += f" clause={r.evidence['clause']}{vac}"
        if "found" in r.evidence:
            extra += f" found={'yes' if r.evidence['found'] else 'no'}"
        lines.append(f"  {tag:<24} {r.status.value:<24} {extra.strip()}".rstrip())
    lines.append(" ".join(f"{k}={v}" for k, v in counts.items()))
    _emit(args, {"delta_mode": args.delta_mode, "variant": args.variant, "summary": counts,
                 "reports": [report_to_dict(r, g) for r in reports]}, lines)
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def cmd_search(args) -> int:
    goal = SearchGoal.parse(args.goal)
    hits = search(goal, args.max_order, args.max_points, workers=args.workers,
                  brute=args.brute, mode=args.delta_mode)
    lines = [f"delta-mode: {args.delta_mode}  goal: {goal}", f"found: {len(hits)}"]
    payload = []
    for h in hits:
        s = h.structure
        g = s.ground
        opens = " ".join(g.format(u) for u in s.topology.opens)
        lines.append(f"  order {h.evidence['order']} ring #{h.evidence['ring_index']} "
                     f"topology #{h.evidence['topology_index']}: {opens}")
        payload.append({"structure": serialize_structure(s), "evidence": _labelled(h.evidence, g)})
    _emit(args, {"goal": str(goal), "delta_mode": args.delta_mode, "count": len(hits),
                 "results": payload}, lines)
    if args.expect_found and not hits:
        return EXIT_FAIL
    return EXIT_OK


def _labelled(ev: dict[str, Any], g) -> dict[str, Any]:
    out = dict(ev)
    for key in ("failure",):
        if key in out:
            out[key] = _label_report(out[key], g)
    if "witness" in out or "evidence" in out:
        out = _label_report(out, g)
    return out


def _label_report(rep: dict[str, Any], g) -> dict[str, Any]:
    rep = dict(rep)
    w = rep.get("witness")
    if w:
        rep["witness"] = {k: g.names(v) if k[:1].isupper() else g.labels[v] for k, v in w.items()}
    ev = dict(rep.get("evidence") or {})
    if "pairs" in ev:
        ev["pairs"] = [[g.names(a), g.names(b)] for a, b in ev["pairs"]]
    rep["evidence"] = ev
    return rep


def cmd_enumerate(args) -> int:
    n = args.n
    if args.count_only:
        count = count_topologies(n)
        _emit(args, {"n": n, "count": count}, [str(count)])
        return EXIT_OK
    tops = list(enumerate_topologies(n))
    lines = [f"{len(tops)} topologies on {n} points"]
    lines += ["  " + " ".join(t.ground.format(u) for u in t.opens) for t in tops]
    _emit(args, {"n": n, "count": len(tops),
                 "topologies": [[t.ground.names(u) for u in t.opens] for t in tops]}, lines)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--delta-mode", default=DeltaMode.STANDARD.value,
                        choices=[m.value for m in DeltaMode])
    common.add_argument("--max-n", type=int, default=None,
                        help="override the n <= 12 cap on 2^n subset sweeps")

    p = argparse.ArgumentParser(prog="estar-rings",
                                description="Finite e*-topological ring toolkit")
    sub = p.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in FamilyKind]

    c = sub.add_parser("classify", parents=[common], help="classify a structure")
    c.add_argument("file")
    c.add_argument("--kinds", default="open,beta,estar")
    c.set_defaults(func=cmd_classify)

    o = sub.add_parser("op", parents=[common], help="apply one operator to a subset")
    o.add_argument("file")
    o.add_argument("--op", required=True, help=", ".join(OPS))
    o.add_argument("--set", default="", help="labels, comma separated or a JSON list")
    o.add_argument("--kind", default=FamilyKind.ESTAR.value, choices=kinds,
                   help="family for gen-int / gen-cl")
    o.set_defaults(func=cmd_op)

    f = sub.add_parser("families", parents=[common], help="list a generalized-open family")
    f.add_argument("file")
    f.add_argument("--kind", required=True, choices=kinds)
    f.set_defaults(func=cmd_families)

    v = sub.add_parser("verify", parents=[common], help="run theorem checks")
    v.add_argument("file")
    v.add_argument("--checks", default="all")
    v.add_argument("--variant", default="both", choices=[*VARIANTS, "both"])
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="search small structures")
    s.add_argument("--goal", required=True,
                   help="separating:K1,K2 | converse:CHECK | census")
    s.add_argument("--max-points", type=int, default=4)
    s.add_argument("--max-order", type=int, default=4)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--brute", action="store_true", help="add brute-force rings (order <= 4)")
    s.add_argument("--expect-found", action="store_true")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("enumerate-topologies", parents=[common], help="list topologies on n points")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--count-only", action="store_true")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, SpaceError, RingError, SearchError, UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
