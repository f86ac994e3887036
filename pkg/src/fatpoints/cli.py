"""Command line interface.

Subcommands: dim, trace, oracle, verify, curves, restrict.  Multiplicity
lists are comma-separated, the degree is positional.  Output formats:
json (stable key order), csv, text.  The default seed comes from the
FATPOINTS_SEED environment variable; --seed overrides it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cremona import CremonaStep
from .curves import enumerate_minus_one
from .dimension import full_dim
from .errors import FatPointsError
from .oracle import (OracleConfig, oracle_dim_p2, oracle_dim_p3,
                     oracle_dim_quadric, primes_for)
from .quadric import restrict_with_image
from .sweep import compare_systems, enumerate_systems, mismatches, random_systems
from .systems import PlaneSystem, QuadricSystem, SystemP3


def _parse_mults(text):
    if not text or text == "-":
        return ()
    return tuple(int(x) for x in text.split(","))


def _sys_dict(s):
    if isinstance(s, QuadricSystem):
        return {"bidegree": list(s.bidegree), "mults": list(s.mults)}
    return {"degree": s.degree, "mults": list(s.mults)}


def _step_dict(step):
    detail = step.detail
    if isinstance(detail, CremonaStep):
        detail = {"k": detail.k, "base_indices": list(detail.base_indices)}
    elif isinstance(detail, dict):
        detail = {k: list(v) if isinstance(v, tuple) else v
                  for k, v in detail.items()}
    return {"kind": step.kind, "before": _sys_dict(step.before),
            "after": _sys_dict(step.after), "detail": detail}


def _dim_report(s, command):
    rep = full_dim(s)
    return {
        "command": command,
        "input": _sys_dict(s),
        "result": {"dim": rep.dim, "vdim": rep.vdim,
                   "speciality": rep.speciality, "special": rep.special},
        "trace": [_step_dict(st) for st in rep.trace],
        "oracle": None,
    }


def _emit_json(report, out):
    out.write(json.dumps(report, sort_keys=True, separators=(",", ":")))
    out.write("\n")


def _cfg_from(args):
    return OracleConfig(prime_bits=args.prime_bits, samples=args.samples,
                        seed=args.seed)


def _cmd_dim(args, out):
    s = SystemP3(args.degree, _parse_mults(args.mults))
    report = _dim_report(s, args.command)
    if args.format == "json":
        _emit_json(report, out)
    elif args.format == "csv":
        res = report["result"]
        out.write("dim,vdim,speciality,special\n")
        out.write(f"{res['dim']},{res['vdim']},{res['speciality']},"
                  f"{str(res['special']).lower()}\n")
    else:
        res = report["result"]
        for key in ("dim", "vdim", "speciality"):
            out.write(f"{key} = {res[key]}\n")
        out.write(f"special = {str(res['special']).lower()}\n")
        if args.command == "trace":
            for st in report["trace"]:
                before = st["before"]
                after = st["after"]
                out.write(f"  {st['kind']}: ({before['degree']}; "
                          f"{before['mults']}) -> ({after['degree']}; "
                          f"{after['mults']})  {st['detail'] or ''}\n")
    return 0


def _cmd_oracle(args, out):
    cfg = _cfg_from(args)
    mults = _parse_mults(args.mults)
    if args.space == "quadric":
        bideg = _parse_mults(args.degree)
        if len(bideg) != 2:
            raise FatPointsError("quadric degree must be 'a,b'")
        dim = oracle_dim_quadric(QuadricSystem(bideg, mults), cfg)
        inp = {"bidegree": list(bideg), "mults": list(mults)}
    elif args.space == "p2":
        dim = oracle_dim_p2(PlaneSystem(int(args.degree), mults), cfg)
        inp = {"degree": int(args.degree), "mults": list(mults)}
    else:
        dim = oracle_dim_p3(SystemP3(int(args.degree), mults), cfg)
        inp = {"degree": int(args.degree), "mults": list(mults)}
    if args.format == "json":
        _emit_json({"command": "oracle", "input": inp, "result": {"dim": dim},
                    "oracle": {"dim": dim, "samples": cfg.samples,
                               "primes": list(primes_for(cfg.prime_bits,
                                                         cfg.samples))}}, out)
    else:
        out.write(f"{dim}\n")
    return 0


def _cmd_verify(args, out):
    cfg = _cfg_from(args)
    systems = list(enumerate_systems(args.dmax, args.mmax, args.points))
    if args.random:
        systems += random_systems(args.random, args.random_dmax,
                                  args.random_mmax, args.points, args.seed)
    rows = compare_systems(systems, cfg, jobs=args.jobs)
    bad = mismatches(rows)
    if args.format == "csv":
        out.write("d," + ",".join(f"m{i}" for i in range(1, 9))
                  + ",fast_dim,oracle_dim,match\n")
        for row in rows:
            m = list(row.system.mults) + [0] * (8 - len(row.system.mults))
            out.write(f"{row.system.degree}," + ",".join(map(str, m))
                      + f",{row.fast_dim},{row.oracle_dim},"
                      f"{str(row.match).lower()}\n")
    elif args.format == "json":
        _emit_json({"command": "verify", "instances": len(rows),
                    "mismatches": [
                        {"input": _sys_dict(r.system), "fast": r.fast_dim,
                         "oracle": r.oracle_dim} for r in bad]}, out)
    else:
        out.write(f"{len(rows)} instances, {len(bad)} mismatches\n")
        for row in bad:
            out.write(f"  MISMATCH {row.system}: fast={row.fast_dim} "
                      f"oracle={row.oracle_dim}\n")
    return 0 if not bad else 1


def _cmd_curves(args, out):
    classes = enumerate_minus_one(args.points, args.bound)
    if args.format == "json":
        _emit_json({"command": "curves",
                    "classes": [{"degree": c.degree, "mults": list(c.mults)}
                                for c in classes]}, out)
    else:
        for c in classes:
            out.write(f"{c}\n")
    return 0


def _cmd_restrict(args, out):
    s = SystemP3(args.degree, _parse_mults(args.mults))
    res = restrict_with_image(s, args.a, args.point)
    if args.format == "json":
        _emit_json({"command": "restrict", "input": _sys_dict(s),
                    "quadric": _sys_dict(res.quadric),
                    "plane_image": _sys_dict(res.plane_image),
                    "point_used": res.point_used}, out)
    else:
        out.write(f"quadric: {res.quadric}\n")
        out.write(f"plane image: {res.plane_image}\n")
    return 0


def _add_common(p):
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default="text")
    p.add_argument("--seed", type=int,
                   default=int(os.environ.get("FATPOINTS_SEED", "0")))
    p.add_argument("--samples", type=int, default=2)
    p.add_argument("--prime-bits", type=int, default=51)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="Dimensions of linear systems of surfaces in P^3 "
                    "through at most eight fat points.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("dim", "trace"):
        p = sub.add_parser(name, help=f"{name} of a system (d; m1,...,mr)")
        p.add_argument("degree", type=int)
        p.add_argument("mults", nargs="?", default="")
        _add_common(p)
        p.set_defaults(fn=_cmd_dim)

    p = sub.add_parser("oracle", help="interpolation-rank dimension")
    p.add_argument("degree", help="degree, or 'a,b' for --space quadric")
    p.add_argument("mults", nargs="?", default="")
    p.add_argument("--space", choices=("p3", "p2", "quadric"), default="p3")
    _add_common(p)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify", help="sweep: algorithm vs oracle")
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--mmax", type=int, default=3)
    p.add_argument("--points", type=int, default=8)
    p.add_argument("--random", type=int, default=0,
                   help="additional random instances")
    p.add_argument("--random-dmax", type=int, default=12)
    p.add_argument("--random-mmax", type=int, default=7)
    p.add_argument("--jobs", type=int, default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("curves", help="enumerate (-1)-curve classes")
    p.add_argument("--points", type=int, default=8)
    p.add_argument("--bound", type=int, default=6)
    _add_common(p)
    p.set_defaults(fn=_cmd_curves)

    p = sub.add_parser("restrict", help="restrict to a standard-class quadric")
    p.add_argument("degree", type=int)
    p.add_argument("mults", nargs="?", default="")
    p.add_argument("--a", type=int, required=True,
                   help="number of points on the quadric (4..min(r,9))")
    p.add_argument("--point", type=int, default=0,
                   help="distinguished point for the plane correspondence")
    _add_common(p)
    p.set_defaults(fn=_cmd_restrict)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        return args.fn(args, out)
    except FatPointsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
