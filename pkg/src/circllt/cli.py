"""Command-line interface.

Exit codes: 0 on success, 1 when a theorem-level check fails (a witness is
printed as JSON), 2 on usage errors (bad diagram text, unknown names).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import diagrams as dg
from . import formulas as fm
from . import harness as hs
from . import orientations as ori
from .qalgebra import NotDivisible
from .symfunc import NotSymmetric, change_basis, omega

FAMILIES = ("dyck", "circular", "vstrip", "circular-vstrip", "ribbon", "circular-ribbon")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


def _diagram(text: str):
    return dg.parse_marked(text) if ";" in text else dg.parse_area(text)


def _table(rows, header) -> str:
    rows = [tuple(str(x) for x in r) for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    line = lambda r: "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()
    return "\n".join([line(header), line(["-" * w for w in widths])] + [line(r) for r in rows])


def cmd_expand(args) -> int:
    rec = hs.expand(args.diagram, args.kind, args.basis)
    if args.format == "json":
        print(_dump(rec.coeffs) if args.bare else _dump(rec.to_json()))
    elif args.format == "csv":
        hs.write_csv([rec], sys.stdout)
    else:
        print(_table(list(rec.coeffs.items()), [args.basis, "coefficient"]))
    return 0


def cmd_count(args) -> int:
    fam = args.family.replace("-", "_")
    lo = 1 if args.upto else args.n
    counts = {n: dg.count_diagrams(n, fam) for n in range(lo, args.n + 1)}
    if args.format == "json":
        print(_dump({"schema": hs.SCHEMA, "family": args.family, "counts": {str(k): v for k, v in counts.items()}}))
    else:
        for n, c in counts.items():
            print(c if not args.upto else f"{n} {c}")
    return 0


def _emit_reports(reports, args, title) -> int:
    blocking = any(r.blocking for r in reports)
    if args.format == "json":
        body = [r.to_json() for r in reports]
        if args.no_timing:
            for b in body:
                b.pop("ms")
        print(_dump({"schema": hs.SCHEMA, "suite": title, "ok": not blocking, "reports": body}))
    else:
        rows = [(r.check, r.kind, r.n, r.tested, r.status, "" if args.no_timing else r.ms) for r in reports]
        print(_table(rows, ["check", "kind", "n", "tested", "status", "ms"]))
        for r in reports:
            for d, w in r.failures[: args.max_witnesses]:
                print(f"  {r.check}: {d}: {w}")
    return 1 if blocking else 0


def cmd_verify(args) -> int:
    only = set(args.only.split(",")) if args.only else None
    if only:
        unknown = only - set(hs.THEOREMS)
        if unknown:
            raise KeyError(", ".join(sorted(unknown)))
    reports = hs.run_identity_suite(args.nmax, jobs=args.jobs, only=only)
    return _emit_reports(reports, args, args.suite)


def cmd_sweep(args) -> int:
    reports = hs.sweep_conjectures(args.nmax, args.conjectures, jobs=args.jobs)
    _emit_reports(reports, args, "conjectures")
    return 0  # findings are data, never a failing exit


def cmd_pexpand(args) -> int:
    a = dg.parse_area(args.diagram)
    from . import colorings as col

    truth = omega(col.chromatic_qsf(a) if args.side == "chromatic" else col.llt_poly(a, True))
    formula = fm.p_expansion_admissible(a, args.side)
    coeffs = change_basis(formula, "p").coeffs
    out = {
        "schema": hs.SCHEMA,
        "diagram": dg.format_area(a),
        "side": args.side,
        "agrees": formula == truth,
        "coeffs": {hs._key(k): str(v) for k, v in sorted(coeffs.items(), reverse=True)},
    }
    print(_dump(out))
    return 0 if out["agrees"] else 1


def cmd_rook(args) -> int:
    a = dg.parse_area(args.diagram)
    b = ori.board_of(a)
    out = {"schema": hs.SCHEMA, "diagram": dg.format_area(a), "rows": list(b.rows)}
    if args.v is not None:
        v = tuple(int(x) for x in args.v.split(","))
        arcs = ori.decode_acyclic(a, v)
        r = ori.orientation_to_rook(a, arcs)
        out.update(
            v=list(v),
            orientation=sorted(f"{i}->{j}" for i, j in arcs),
            rook_columns=list(r.cols),
            inversions=list(r.inversions),
        )
    else:
        out["placements"] = sum(1 for _ in ori.enum_rooks(b))
        out["inv_polynomial"] = str(ori.rook_tpoly(b))
    print(_dump(out))
    return 0


def cmd_orientations(args) -> int:
    d = _diagram(args.diagram)
    rows = []
    if args.kind == "acyclic":
        a = d.a if isinstance(d, dg.MarkedDiagram) else d
        for th in ori.enum_acyclic(a):
            rows.append({"arcs": th.text(a), "asc": th.asc, "sinks": list(th.sinks), "sources": list(th.sources)})
    else:
        for th in ori.enum_ostar(d):
            rows.append(
                {
                    "ascending": sorted(f"{i}->{j}" for i, j in th.ascending),
                    "asc": th.asc,
                    "half_sinks": list(th.half_sinks),
                    "half_sources": list(th.half_sources),
                }
            )
    rows.sort(key=lambda r: json.dumps(r, sort_keys=True))
    total = len(rows)
    if args.limit is not None:
        rows = rows[: args.limit]
    print(_dump({"schema": hs.SCHEMA, "diagram": args.diagram, "kind": args.kind, "count": total, "items": rows}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circllt", description="Chromatic and LLT polynomials of circular Dyck diagrams.")
    sub = p.add_subparsers(dest="cmd", required=True)

    e = sub.add_parser("expand", help="expand one polynomial in a basis")
    e.add_argument("--diagram", required=True, help='area sequence "2,2,3,2,1,0" or marked "1,1,0;strict=1-3;weak="')
    e.add_argument("--kind", choices=hs.KINDS, default="chromatic")
    e.add_argument("--basis", choices=hs.BASES, default="e")
    e.add_argument("--format", choices=("json", "table", "csv"), default="json")
    e.add_argument("--full", dest="bare", action="store_false", help="wrap the table with diagram/kind/basis metadata")
    e.set_defaults(func=cmd_expand)

    c = sub.add_parser("count", help="count diagrams in a family")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--upto", action="store_true", help="all sizes 1..n")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_count)

    for name, fn, helptext in (("verify", cmd_verify, "run the identity suite"), ("sweep", cmd_sweep, "run conjecture sweeps")):
        s = sub.add_parser(name, help=helptext)
        if name == "verify":
            s.add_argument("--suite", choices=("identities",), default="identities")
            s.add_argument("--only", help="comma-separated check names")
        else:
            s.add_argument("--conjectures", default="all", help='"all" or comma-separated names')
        s.add_argument("--nmax", type=int, default=None, help="cap on n (defaults are per check)")
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--format", choices=("json", "table"), default="json")
        s.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")
        s.add_argument("--max-witnesses", type=int, default=5)
        s.set_defaults(func=fn)

    pe = sub.add_parser("pexpand", help="admissible-permutation p-expansion against change of basis")
    pe.add_argument("--diagram", required=True)
    pe.add_argument("--side", choices=("chromatic", "llt"), default="chromatic")
    pe.set_defaults(func=cmd_pexpand)

    r = sub.add_parser("rook", help="board, rook placements and the orientation decoder")
    r.add_argument("--diagram", required=True)
    r.add_argument("--v", help="row ascent vector, e.g. 1,0,0")
    r.set_defaults(func=cmd_rook)

    o = sub.add_parser("orientations", help="list acyclic orientations or O* subsets")
    o.add_argument("--diagram", required=True)
    o.add_argument("--kind", choices=("acyclic", "ostar"), default="acyclic")
    o.add_argument("--limit", type=int)
    o.set_defaults(func=cmd_orientations)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (NotSymmetric, NotDivisible) as exc:
        print(_dump({"schema": hs.SCHEMA, "error": type(exc).__name__, "witness": str(exc)}))
        return 1
    except (dg.DiagramError, ori.BadRange, ori.NoDividers, KeyError, ValueError) as exc:
        print(f"circllt: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
