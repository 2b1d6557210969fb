"""Command line front end.

Exit codes: 0 success, 2 bad input, 3 budget exceeded, 4 verification
mismatch.  A reduction scan that finds bad primes is a successful run;
only internal cross-check failures use code 4.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .curves import DEFAULT_BUDGET, CurveGerm, GlobalCurve, parse_curve
from .errors import (BudgetExceeded, CurveInvError, InconsistentCounts,
                     IndexMismatch)
from .fields import GF, QQ, is_prime, primes_in_range
from .motivic import evaluate_motclass
from .resolution import good_reduction_scan, resolve_germ
from .semigroup import reduction_semigroup_scan, value_semigroup
from .zetaglobal import unit_index, verify_global_factorization
from .zetalocal import (brute_force_ideal_counts, counting_specialization,
                        default_bound, ideal_class, local_zeta,
                        poincare_series)


def _field_arg(spec):
    if spec in ("Q", "QQ", "0"):
        return QQ
    try:
        p = int(spec)
    except ValueError:
        raise argparse.ArgumentTypeError("field must be Q or a prime")
    if not is_prime(p):
        raise argparse.ArgumentTypeError("%d is not prime" % p)
    return GF(p)


def _primes_arg(spec):
    try:
        lo, hi = spec.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a range like 2..31")
    if hi < lo:
        raise argparse.ArgumentTypeError("empty prime range %s" % spec)
    return primes_in_range(lo, hi)


def _qlist_arg(spec):
    try:
        qs = [int(tok) for tok in spec.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a list like 2,3")
    if not qs or not all(is_prime(q) for q in qs):
        raise argparse.ArgumentTypeError("q values must be primes")
    return qs


def _point_arg(spec):
    try:
        a, b = (Fraction(tok) for tok in spec.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('expected a point like "1,-2"')
    return (a, b)


def _load_germ(args):
    field = args.field
    f = parse_curve(args.curve, field)
    if getattr(args, "point", None):
        a = field.coerce(args.point[0])
        b = field.coerce(args.point[1])
        f = f.translate(a, b)
    return CurveGerm(f)


def _field_name(field):
    if field is QQ:
        return "Q"
    return "F_%d" % field.characteristic


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text))
    return 0


def _cmd_analyze(args):
    germ = _load_germ(args)
    vs = value_semigroup(germ)
    res = resolve_germ(germ)
    payload = {"curve": germ.f.to_str(), "field": _field_name(germ.field)}
    payload.update(vs.to_json())
    payload["resolution"] = res.to_json()
    text = ["curve: %s over %s" % (payload["curve"], payload["field"]),
            "branches: %d" % vs.d,
            "delta: %d" % vs.delta,
            "conductor: %s" % list(vs.conductor),
            "blow-up multiplicities: %s" % res.multiplicities]
    if vs.generators is not None:
        text.insert(4, "semigroup generators: %s" % vs.generators)
    return _emit(args, payload, text)


def _cmd_reduce_scan(args):
    germ = CurveGerm.from_string(args.curve, QQ)
    proc = good_reduction_scan(germ, args.primes)
    semi = reduction_semigroup_scan(germ, args.primes)
    entries = []
    for pe, se in zip(proc.entries, semi.entries):
        assert pe.prime == se.prime
        if pe.status != "Good":
            entries.append(pe.to_json())
        elif se.status != "Good":
            entries.append(se.to_json())
        else:
            entries.append(pe.to_json())
    bad = sorted(set(proc.bad_primes) | set(semi.bad_primes))
    payload = {"curve": germ.f.to_str(), "primes": list(args.primes),
               "entries": entries, "bad": bad}
    text = ["curve: %s" % payload["curve"],
            "scanned primes: %s" % payload["primes"],
            "bad primes: %s" % bad]
    for e in entries:
        if e["status"] != "Good":
            text.append("  p=%d %s: %s" % (e["prime"], e["status"],
                                           e.get("detail", "")))
    return _emit(args, payload, text)


def _cmd_zeta(args):
    germ = _load_germ(args)
    bound = args.bound if args.bound is not None else default_bound(germ)
    z = local_zeta(germ, bound)
    pg = poincare_series(z)
    payload = z.to_json()
    payload["curve"] = germ.f.to_str()
    payload["field"] = _field_name(germ.field)
    payload["bound"] = bound
    payload["poincare"] = pg.to_json()
    specs = []
    for q in args.q or []:
        specs.append({"q": q,
                      "joint": counting_specialization(z.joint, q).to_json(),
                      "single": counting_specialization(z.single, q).to_json()})
    if specs:
        payload["specializations"] = specs
    text = ["curve: %s over %s" % (payload["curve"], payload["field"]),
            "delta: %d, conductor: %s" % (z.delta, list(z.conductor)),
            "zeta terms (coefficient of t^n):"]
    for term in payload["joint"]["terms"]:
        text.append("  n=%s: %s" % (term["n"], term["class"]))
    for spec in specs:
        text.append("specialized at q=%d:" % spec["q"])
        for term in spec["joint"]["terms"]:
            text.append("  n=%s: %s" % (term["n"], term["value"]))
    return _emit(args, payload, text)


def _cmd_oracle(args):
    germ = _load_germ(args)
    if germ.field is QQ:
        raise CurveInvError("the oracle needs --field p with p prime")
    bound = args.bound if args.bound is not None else default_bound(germ)
    counts = brute_force_ideal_counts(germ, bound, args.budget)
    q = counts.q
    payload = counts.to_json()
    payload["curve"] = germ.f.to_str()
    agree = True
    for entry in payload["counts"]:
        n = tuple(entry["n"])
        formula = evaluate_motclass(ideal_class(germ, n), q)
        assert formula.denominator == 1
        entry["formula"] = int(formula)
        if entry["formula"] != entry["ideals"]:
            agree = False
    payload["agree"] = agree
    text = ["curve: %s over F_%d, bound %d" % (payload["curve"], q, bound),
            "n: ideals (oracle / formula), fiber, projective fiber"]
    for entry in payload["counts"]:
        text.append("  %s: %d / %d, %d, %d"
                    % (entry["n"], entry["ideals"], entry["formula"],
                       entry["fiber"], entry["proj_fiber"]))
    text.append("agreement: %s" % agree)
    code = _emit(args, payload, text)
    return code if agree else 4


def _cmd_global_verify(args):
    reports = []
    worst = 0
    for q in args.q:
        curve = GlobalCurve.from_string(args.curve, q, args.budget)
        rep = verify_global_factorization(curve, args.bound, args.budget)
        reports.append(rep)
        if not rep.equal:
            worst = 4
    payload = {"curve": args.curve, "bound": args.bound,
               "reports": [r.to_json() for r in reports]}
    text = ["curve: %s" % args.curve]
    for r in reports:
        line = "q=%d: %s" % (r.q, "equal" if r.equal else
                             "MISMATCH at T^%d" % r.first_mismatch)
        text.append(line)
    code = _emit(args, payload, text)
    return code or worst


def _cmd_unit_index(args):
    germ = _load_germ(args)
    if germ.field is QQ:
        raise CurveInvError("the unit index needs --field p with p prime")
    idx = unit_index(germ, args.budget)
    vs = value_semigroup(germ)
    payload = {"curve": germ.f.to_str(), "q": germ.field.characteristic,
               "delta": vs.delta, "branches": vs.d, "index": idx}
    text = ["curve: %s over F_%d" % (payload["curve"], payload["q"]),
            "unit index: %d" % idx]
    return _emit(args, payload, text)


def build_parser():
    top = argparse.ArgumentParser(
        prog="curveinv",
        description="Exact invariants of plane curve singularities: "
                    "branches, resolutions, value semigroups, motivic "
                    "local zeta series and global zeta factorizations.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, field=True, point=True, bound=False):
        p.add_argument("curve", help="curve equation, e.g. \"y^2 - x^3\"")
        if field:
            p.add_argument("--field", type=_field_arg, default=QQ,
                           help="Q (default) or a prime p for F_p")
        if point:
            p.add_argument("--point", type=_point_arg, default=None,
                           help="recenter at the point \"a,b\"")
        if bound:
            p.add_argument("--bound", type=int, default=None,
                           help="series bound (default: |conductor| + 4)")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="enumeration budget (default 10^7)")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("analyze", help="semigroup and resolution of a germ")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("reduce-scan",
                       help="compare invariants across reductions mod p")
    p.add_argument("--primes", type=_primes_arg,
                   default=primes_in_range(2, 31),
                   help="prime range A..B (default 2..31)")
    common(p, field=False, point=False)
    p.set_defaults(func=_cmd_reduce_scan)

    p = sub.add_parser("zeta", help="motivic local zeta series")
    common(p, bound=True)
    p.add_argument("--q", type=_qlist_arg, default=None,
                   help="specialize L at these primes, e.g. 2,3")
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("oracle",
                       help="brute-force ideal counts against the formula")
    common(p, bound=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("global-verify",
                       help="verify the global zeta factorization")
    p.add_argument("--q", type=_qlist_arg, required=True,
                   help="base fields to check, e.g. 3,5")
    p.add_argument("--bound", type=int, default=6)
    common(p, field=False, point=False)
    p.set_defaults(func=_cmd_global_verify)

    p = sub.add_parser("unit-index",
                       help="unit index of a germ over a finite field")
    common(p)
    p.set_defaults(func=_cmd_unit_index)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as ex:
        print("budget exceeded: %s" % ex, file=sys.stderr)
        return 3
    except (IndexMismatch, InconsistentCounts) as ex:
        print("verification mismatch: %s" % ex, file=sys.stderr)
        return 4
    except CurveInvError as ex:
        print("error: %s" % ex, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
