"""Command line front end.

Exit status: 0 when everything passes, 1 when an identity check fails,
2 for unreadable input or violated preconditions.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import identities
from .ehrhart import hstar
from .fan import TorusDivisor, face_fan, gorenstein_index, polytope_divisor
from .io import InputError, jsonable, parse_fan, parse_polytope, parse_polytopes, rational
from .polytope import gorenstein_data, is_reflexive, origin_is_interior
from .stringy import (
    euler_ci,
    euler_cy_ci,
    euler_hypersurface,
    inter_mixed,
    stringy_chern,
    stringy_e,
)
from .volume import normalized_volume

IDENTITIES = {
    "ldp12": identities.verify_ldp12,
    "refl2": identities.verify_refl2,
    "refl3": identities.verify_refl3,
    "refl4": identities.verify_refl4,
    "refl4sym": identities.verify_refl4_sym,
    "gor24": identities.verify_gor24,
    "gor12": identities.verify_gor12,
    "hodgepsi": identities.verify_hodgepsi,
    "lw": identities.verify_lw_reflexive,
    "lwfan": None,
}


def _parser():
    p = argparse.ArgumentParser(
        prog="stringy-toric",
        description="Stringy invariants of toric varieties from polytopes and fans.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="polytope file (default: stdin)")
    common.add_argument("--format", choices=("matrix", "palp"), default="matrix")
    common.add_argument("--report", choices=("json", "table"), default="json")
    common.add_argument("--fan", help="fan file; replaces the face fan of the input polytope")
    common.add_argument(
        "--normal-fan",
        action="store_true",
        help="use the normal fan of the input polytope; divisor P is then its polytope divisor",
    )
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common])
    sub.add_parser("dual", parents=[common])
    sub.add_parser("hstar", parents=[common])
    sub.add_parser("estr", parents=[common])
    s = sub.add_parser("chern", parents=[common])
    s.add_argument("--k", type=int, required=True)
    s = sub.add_parser("inter", parents=[common])
    s.add_argument("--divisors", nargs="+", required=True)
    s = sub.add_parser("euler-hyp", parents=[common])
    s.add_argument("--divisor", required=True)
    s = sub.add_parser("euler-ci", parents=[common])
    s.add_argument("--divisor", required=True)
    s.add_argument("--r", type=int, required=True)
    s = sub.add_parser("euler-gorenstein", parents=[common])
    s.add_argument("--r", type=int, required=True)
    s = sub.add_parser("verify", parents=[common])
    s.add_argument("--identity", choices=sorted(IDENTITIES), required=True)
    s = sub.add_parser("batch", parents=[common])
    s.add_argument("--file", required=True)
    s.add_argument("--identity", choices=sorted(k for k in IDENTITIES if k != "lwfan"), required=True)
    s.add_argument("--jobs", type=int, default=int(os.environ.get("STRINGY_JOBS", "1")))
    return p


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _fan_and_divisors(args, P):
    if args.fan:
        return parse_fan(_read(args.fan))
    if P is None:
        raise InputError("no polytope or fan given")
    if args.normal_fan:
        fan, D_P = polytope_divisor(P)
        return fan, {"K": TorusDivisor.anticanonical(fan), "P": D_P}
    return face_fan(P), {}


def _divisor(fan, table, name):
    if name in table:
        return table[name]
    if name == "K":
        return TorusDivisor.anticanonical(fan)
    if name.startswith("D") and name[1:].isdigit():
        i = int(name[1:])
        if i >= len(fan.rays):
            raise InputError(f"ray index {i} out of range")
        return TorusDivisor.prime(fan, i)
    if "," in name:
        coeffs = [Fraction(t) for t in name.split(",")]
        if len(coeffs) != len(fan.rays):
            raise InputError("divisor needs one coefficient per ray")
        return TorusDivisor(coeffs, name)
    raise InputError(f"unknown divisor {name!r}")


def _side(x):
    """Identity sides are rationals, except vector-valued ones (hodgepsi)."""
    return jsonable(x) if isinstance(x, tuple) else rational(x)


def _report(rep):
    return {
        "identity": rep.name,
        "lhs": _side(rep.lhs),
        "rhs": _side(rep.rhs),
        "pass": rep.passed,
        "witnesses": jsonable(rep.witnesses),
        "details": jsonable(rep.details),
        "checks": rep.checks,
    }


def _info(P):
    out = {
        "ambient_dim": P.ambient_dim,
        "dim": P.dim,
        "n_vertices": P.n_vertices,
        "f_vector": list(P.f_vector),
        "lattice": P.is_lattice,
        "volume": rational(normalized_volume(P)),
        "reflexive": None,
        "gorenstein_index": None,
    }
    if P.is_full_dimensional and origin_is_interior(P):
        out["reflexive"] = is_reflexive(P)
    if P.is_full_dimensional and P.is_lattice:
        out["n_lattice_points"] = P.n_lattice_points()
        gd = gorenstein_data(P)
        out["gorenstein_index"] = gd.index if gd else None
    return out


def _verify_one(task):
    """Worker for batch mode: ``(index, identity, polytope)``."""
    i, name, P = task
    try:
        rep = IDENTITIES[name](P)
    except ValueError as e:
        return {"index": i, "pass": False, "error": str(e)}
    return {"index": i, "pass": rep.passed, "lhs": _side(rep.lhs), "rhs": _side(rep.rhs)}


def _dispatch(args):
    """Return ``(payload, status)``."""
    cmd = args.command
    if cmd == "batch":
        polys = parse_polytopes(_read(args.file), args.format)
        tasks = [(i, args.identity, P) for i, P in enumerate(polys)]
        if args.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_verify_one, tasks))
        else:
            results = [_verify_one(t) for t in tasks]
        passed = sum(r["pass"] for r in results)
        summary = {
            "total": len(results),
            "passed": passed,
            "failed": len(results) - passed,
            "errors": sum("error" in r for r in results),
        }
        return {"identity": args.identity, "results": results, "summary": summary}, int(passed != len(results))

    needs_polytope = not (args.fan and cmd in ("estr", "chern", "inter", "euler-hyp", "euler-ci"))
    if cmd == "verify" and args.identity == "lwfan" and args.fan:
        needs_polytope = False
    P = parse_polytope(_read(args.input), args.format) if needs_polytope else None

    if cmd == "info":
        return _info(P), 0
    if cmd == "dual":
        Q = P.dual
        return {"vertices": [[rational(x) for x in v] for v in Q.vertices], "lattice": Q.is_lattice}, 0
    if cmd == "hstar":
        h = hstar(P)
        return {
            "psi": list(h.coefficients),
            "degree": h.degree,
            "palindromic": h.is_palindromic,
            "codegree": h.codegree,
        }, 0
    if cmd == "euler-gorenstein":
        return {"r": args.r, "value": rational(euler_cy_ci(P, args.r))}, 0
    if cmd == "verify" and args.identity != "lwfan":
        rep = IDENTITIES[args.identity](P)
        return _report(rep), int(not rep.passed)

    fan, table = _fan_and_divisors(args, P)
    if cmd == "verify":
        rep = identities.verify_lw_fan(fan)
        return _report(rep), int(not rep.passed)
    if cmd == "estr":
        E = stringy_e(fan)
        return {
            "terms": [{"exponent": rational(a), "coefficient": c} for a, c in E.terms],
            "q": gorenstein_index(fan),
            "euler_number": E.euler_number,
        }, 0
    if cmd == "chern":
        cyc = stringy_chern(fan, args.k)
        return {
            "k": args.k,
            "cones": [
                {"rays": sorted(c.rays), "generators": [list(g) for g in fan.generators(c)], "volume": v}
                for c, v in cyc.coefficients.items()
            ],
            "total": cyc.total,
        }, 0
    if cmd == "inter":
        Ds = [_divisor(fan, table, n) for n in args.divisors]
        return {"divisors": args.divisors, "value": rational(inter_mixed(fan, Ds))}, 0
    if cmd == "euler-hyp":
        D = _divisor(fan, table, args.divisor)
        return {"divisor": args.divisor, "value": rational(euler_hypersurface(fan, D))}, 0
    if cmd == "euler-ci":
        D = _divisor(fan, table, args.divisor)
        return {"divisor": args.divisor, "r": args.r, "value": rational(euler_ci(fan, D, args.r))}, 0
    raise InputError(f"unknown command {cmd}")


def _table(payload, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in payload.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_table(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for row in v:
                lines.append(pad + "  - " + ", ".join(f"{a}={b}" for a, b in row.items()))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(line for line in lines if line)


def run(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        payload, status = _dispatch(args)
    except (InputError, ValueError, ArithmeticError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.report == "json":
        print(json.dumps(payload))
    else:
        print(_table(payload))
    return status


def main():
    sys.exit(run())
