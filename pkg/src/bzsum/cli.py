"""Command line interface: ``bzsum {mult,enumerate,cone,verify,bench}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .four_point import cone_su2, cone_su3, enumerate4, reconstruct_diagram
from .n_point import BoxTooSmall, diagram_count_n, multiplicity_n
from .three_point import enumerate3, reconstruct_triangle
from .verify import acceptance_suite, methods, sweep
from .weights import NotInRootLattice, RankMismatch, Weight, format_weights, parse_weights

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 2, 3


class UsageError(Exception):
    pass


def _weights(args) -> list[Weight]:
    try:
        ws = parse_weights(args.weights)
    except ValueError as e:
        raise UsageError(f"cannot parse weights {args.weights!r}: {e}") from e
    ranks = {w.rank for w in ws}
    if len(ranks) != 1:
        raise UsageError("weights of different ranks")
    if args.rank is not None and ranks != {args.rank}:
        raise UsageError(f"--rank {args.rank} does not match weights of rank {ranks.pop()}")
    return ws


def _breakdown(ws) -> dict:
    """Terms of the first channel: rho in w1 (x) w2 and the rest of the string."""
    from .four_point import _m3, intermediate_weights

    out = {}
    for rho in intermediate_weights(ws[0], ws[1]):
        left = _m3(ws[0].labels, ws[1].labels, rho.labels[::-1])
        if not left:
            continue
        right = multiplicity_n([rho] + list(ws[2:]))
        if right:
            out[str(rho)] = [left, right]
    return out


def cmd_mult(args) -> int:
    ws = _weights(args)
    if len(ws) < 3:
        raise UsageError("need at least three weights")
    fns = methods(len(ws))
    if args.method == "all":
        vals = {}
        for name, f in fns.items():
            v = f(ws)
            if v is not None:
                vals[name] = v
        if len(set(vals.values())) > 1:
            print("disagreement: " + ", ".join(f"{k}={v}" for k, v in vals.items()), file=sys.stderr)
            return EXIT_DISAGREE
        value = vals["polytope"]
    else:
        if args.method not in fns:
            raise UsageError(f"method {args.method} is not available for {len(ws)} points")
        value = fns[args.method](ws)
    breakdown = _breakdown(ws) if args.explain and len(ws) >= 4 else None
    if breakdown is not None and sum(a * b for a, b in breakdown.values()) != value:
        print("disagreement: channel breakdown does not sum to the multiplicity", file=sys.stderr)
        return EXIT_DISAGREE
    if args.json:
        out = {"rank": ws[0].rank, "weights": [list(w.labels) for w in ws],
               "multiplicity": value, "method": args.method}
        if breakdown is not None:
            out["breakdown"] = breakdown
        print(json.dumps(out, sort_keys=True))
    else:
        print(value)
        if breakdown is not None:
            for rho, (a, b) in breakdown.items():
                print(f"  rho=({rho}): {a} x {b}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ws = _weights(args)
    if len(ws) == 3:
        vecs = enumerate3(*ws)
        for n, cv in enumerate(vecs, start=1):
            print(f"[{n}] v = {list(cv.as_tuple())}")
            if args.entries:
                print(reconstruct_triangle(ws[0], ws[1], ws[2], cv).pretty())
    elif len(ws) == 4:
        vecs = enumerate4(*ws)
        for n, cv in enumerate(vecs, start=1):
            hexes = sorted(cv.v1)
            print(f"[{n}] v1 = {[cv.v1[h] for h in hexes]} g = {list(cv.g)} "
                  f"v2 = {[cv.v2[h] for h in hexes]}")
            if args.entries:
                print(reconstruct_diagram(*ws, cv).pretty())
    else:
        raise UsageError("enumerate supports three or four weights")
    print(f"count: {len(vecs)}")
    return EXIT_OK


def cmd_cone(args) -> int:
    ws = _weights(args)
    if len(ws) != 4:
        raise UsageError("cone needs four weights")
    r = ws[0].rank
    if r == 1:
        rep = cone_su2(*(w[0] for w in ws))
    elif r == 2:
        rep = cone_su3(*ws)
    else:
        raise UsageError("cones are available for rank 1 and 2 only")
    print("member" if rep.member else "non-member")
    print("S = " + ", ".join(str(s) for s in rep.S))
    for v in rep.violated:
        print(f"violated: {v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite:
        jobs = list(acceptance_suite())
    else:
        if args.rank is None:
            raise UsageError("verify needs --rank (or --suite)")
        jobs = [(args.rank, args.max_label, args.points)]
    t0 = time.perf_counter()
    total = 0
    for r, L, pts in jobs:
        res = sweep(r, L, pts, stop_on_mismatch=True)
        print(res.summary())
        total += res.mismatches
        if res.mismatches:
            ws, vals = res.first
            print(f"counterexample: {';'.join(ws)} -> {vals}")
            break
    print(f"mismatches: {total}")
    print(f"elapsed: {time.perf_counter() - t0:.1f}s")
    return EXIT_DISAGREE if total else EXIT_OK


def _timed(f):
    t = time.perf_counter()
    v = f()
    return v, time.perf_counter() - t


FAMILIES = {
    # name: (description, k range, k -> weights)
    "su3-diagonal": ("(k,k)^3", range(1, 7), lambda k: [Weight((k, k))] * 3),
    "su3-four": ("(k,k)^4", range(1, 5), lambda k: [Weight((k, k))] * 4),
    "su2-five": ("(k)^5 with k even", range(2, 9, 2), lambda k: [Weight((k,))] * 5),
}
DEFAULT_FAMILY = "su3-four"


def cmd_bench(args) -> int:
    desc, ks, make = FAMILIES[args.family]
    if args.kmax is not None:
        ks = [k for k in ks if k <= args.kmax] or list(ks)[:1]
    rows = []
    for k in ks:
        ws = make(k)
        fns = methods(len(ws))
        nested, t_nested = _timed(lambda: fns["polytope"](ws))
        oracle, t_oracle = _timed(lambda: fns["oracle"](ws))
        try:
            box, t_box = _timed(lambda: diagram_count_n(ws))
        except (ValueError, BoxTooSmall):
            box, t_box = None, None
        rows.append({
            "family": args.family, "k": k, "size": sum(sum(w.labels) for w in ws),
            "weights": format_weights(ws), "multiplicity": nested,
            "t_nested": round(t_nested, 6), "box": box,
            "t_box": None if t_box is None else round(t_box, 6),
            "oracle": oracle, "t_oracle": round(t_oracle, 6),
        })
    if args.json:
        print(json.dumps({"family": args.family, "description": desc, "rows": rows}, indent=2))
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        print(buf.getvalue(), end="")
    bad = [r for r in rows if r["multiplicity"] != r["oracle"] or r["box"] not in (None, r["oracle"])]
    return EXIT_DISAGREE if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bzsum", description="Tensor product multiplicities of su(r+1).")
    sub = p.add_subparsers(dest="command", required=True)

    def weights_arg(sp):
        sp.add_argument("weights", help='Dynkin labels, weights separated by ";", e.g. "1,0;0,1;1,1"')
        sp.add_argument("--rank", type=int, default=None, help="expected rank (inferred if omitted)")

    sp = sub.add_parser("mult", help="singlet multiplicity")
    weights_arg(sp)
    sp.add_argument("--method", default="polytope",
                    choices=["polytope", "oracle", "channel", "explicit", "all"],
                    help="counting path; 'all' cross-checks every path")
    sp.add_argument("--explain", action="store_true", help="print the first-channel rho breakdown")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("enumerate", help="list the true triangles or diagrams")
    weights_arg(sp)
    sp.add_argument("--entries", action="store_true", help="also print the entries")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("cone", help="non-vanishing cone test (rank 1 or 2, four weights)")
    weights_arg(sp)
    sp.set_defaults(func=cmd_cone)

    sp = sub.add_parser("verify", help="exhaustive cross-check of all counting paths")
    sp.add_argument("--rank", type=int)
    sp.add_argument("--max-label", type=int, default=2)
    sp.add_argument("--points", type=int, default=3)
    sp.add_argument("--suite", action="store_true", help="run the full acceptance ranges")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="timing of nested sums, box search and oracle")
    sp.add_argument("--family", default=DEFAULT_FAMILY, choices=sorted(FAMILIES))
    sp.add_argument("--kmax", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RankMismatch, NotInRootLattice) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
