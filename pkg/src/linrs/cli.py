"""Command-line front end.

Exit codes: 0 success, 2 parameter error, 3 budget exceeded,
4 disagreement between methods or a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import code, lattice, linearized, qbinom, wenger
from .errors import BudgetError, ConsistencyError, ParameterError
from .field import field_build
from .params import FieldParams, prime_power

EXIT_OK, EXIT_PARAM, EXIT_BUDGET, EXIT_DISAGREE = 0, 2, 3, 4


class Disagreement(Exception):
    def __init__(self, payload):
        super().__init__("methods disagree")
        self.payload = payload


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _params(args) -> FieldParams:
    return FieldParams(args.p, args.m, args.d, args.k)


def _ctx(args):
    return field_build(_params(args), args.modulus)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table(rows, header) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


# commands

def cmd_field_info(args):
    ctx = _ctx(args)
    n = ctx.order - 1
    order = ctx.multiplicative_order(ctx.pi)
    info = {
        "params": ctx.params.as_dict(),
        "field_size": ctx.order,
        "modulus": list(ctx.modulus),
        "pi": ctx.pi,
        "pi_order": order,
        "pi_primitive": order == n,
        "subfield_size": ctx.subfield.order,
        "subfield_basis": list(ctx.subfield_basis),
    }
    if args.format == "json":
        return _dump(info)
    rows = [(k, json.dumps(v)) for k, v in info.items()]
    if args.format == "csv":
        return "key,value\n" + "".join(f'{k},"{v}"\n' for k, v in rows)
    return _table(rows, ["key", "value"])


WEIGHT_METHODS = ("formula", "brute_force", "moebius")


def cmd_weight_dist(args):
    params = _params(args)
    methods = WEIGHT_METHODS if args.method == "all" else (args.method,)
    for m in methods:
        if m not in WEIGHT_METHODS:
            raise ParameterError(f"method {m!r} not available for weight-dist")
    results, skipped = {}, {}
    ctx = None
    for m in methods:
        if m == "formula":
            results[m] = code.weight_distribution_formula(params)
            continue
        if ctx is None:
            ctx = _ctx(args)
        if m == "brute_force":
            results[m] = code.weight_distribution_bruteforce(ctx, args.budget, args.workers)
        else:
            try:
                results[m] = code.weight_distribution_moebius(ctx)
            except BudgetError as exc:
                if args.method != "all":
                    raise
                skipped[m] = str(exc)
    tables = list(results.values())
    agree = all(t.counts == tables[0].counts for t in tables)
    if len(methods) == 1:
        wd = tables[0]
        out = {"json": lambda: _dump(wd.as_json()), "csv": wd.as_csv,
               "table": lambda: _table(wd.rows(), ["r", "weight", "count"])}[args.format]()
    else:
        if args.format == "json":
            out = _dump({"params": params.as_dict(),
                         "methods": {k: v.as_json() for k, v in results.items()},
                         "skipped": skipped,
                         "verdict": "agree" if agree else "disagree"})
        else:
            rows = [(name, r, w, n) for name, wd in results.items() for r, w, n in wd.rows()]
            if args.format == "csv":
                out = "method,r,weight,count\n" + "".join(",".join(map(str, r)) + "\n" for r in rows)
            else:
                out = _table(rows, ["method", "r", "weight", "count"])
                out += f"verdict: {'agree' if agree else 'disagree'}\n"
    if not agree:
        raise Disagreement(out)
    return out


def cmd_wenger_spectrum(args):
    ctx = _ctx(args)
    methods = ("formula", "counting", "dense") if args.method == "all" else ("formula", args.method)
    for m in methods:
        if m not in ("formula", "counting", "dense"):
            raise ParameterError(f"method {m!r} not available for wenger-spectrum")
    report = wenger.reconcile_report(ctx, methods, args.budget, args.workers)
    if args.format == "json":
        out = _dump(report)
    else:
        spec = wenger.spectrum_formula(ctx.params)
        if args.format == "csv":
            out = spec.as_csv()
        else:
            rows = [(k.sign, "-" if k.exponent is None else k.exponent, spec.entries[k])
                    for k in spec.keys()]
            out = _table(rows, ["sign", "lambda_sq_exponent", "multiplicity"])
            out += "".join(f"{k}: {json.dumps(report[k])}\n" for k in
                           ("verdicts", "mass_checks", "paper_zero_expr", "corrected_zero",
                            "erratum_flagged", "consistent"))
    if not report["verdicts"].get("formula_eq_counting", True) or not all(report["mass_checks"].values()):
        raise Disagreement(out)
    return out


def _conjecture_cell(cell):
    q, u = cell
    return [qbinom.verify_conjecture(q, u, i) for i in range(u + 1)]


def cmd_verify_conjecture(args):
    for q in args.q:
        if q < 2:
            raise ParameterError(f"q must be >= 2, got {q}")
    if args.u_max < 0:
        raise ParameterError("u-max must be nonnegative")
    cells = [(q, u) for q in args.q for u in range(args.u_max + 1)]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            chunks = list(pool.map(_conjecture_cell, cells))
    else:
        chunks = [_conjecture_cell(c) for c in cells]
    cases = [c for chunk in chunks for c in chunk]
    bad = next((c for c in cases if not c.holds), None)
    report = {"q": args.q, "u_max": args.u_max, "n_cases": len(cases),
              "all_hold": bad is None,
              "first_counterexample": None if bad is None else bad.as_record(),
              "cases": [c.as_record() for c in cases]}
    if args.format == "json":
        out = _dump(report)
    else:
        rows = [(c.q, c.u, c.i, c.holds, c.lhs, c.rhs) for c in cases]
        header = ["q", "u", "i", "holds", "lhs", "rhs"]
        out = ",".join(header) + "\n" + "".join(",".join(map(str, r)) + "\n" for r in rows) \
            if args.format == "csv" else _table(rows, header)
    if bad is not None:
        raise Disagreement(out)
    return out


def cmd_lattice_checks(args):
    q, n = args.q, args.n
    p, s = prime_power(q)
    if n < 0:
        raise ParameterError("n must be nonnegative")
    lat = lattice.Lattice.over(q, n)
    by_dim = lat.counts_by_dim()
    expected = [qbinom.gaussian_binom(n, i, q) for i in range(n + 1)]
    report = {
        "q": q, "n": n, "seed": args.seed,
        "subspaces": len(lat),
        "counts_by_dim": by_dim,
        "gaussian_binomials": expected,
        "counts_match": by_dim == expected,
        "moebius_delta": lattice.moebius_delta_check(q, n, lat),
        "inversion": lattice.inversion_check(q, n, seed=args.seed, lattice=lat),
    }
    if n >= 1:
        ctx = field_build(FieldParams(p, s * n, s, 1))
        sub = lattice.subfield_lattice(ctx)
        perps = {V: lattice.orth_complement(ctx, V) for V in sub.subspaces}
        involution = all(perps[perps[V]] == V and perps[V].dim == n - V.dim for V in sub.subspaces)
        reversing = all(lattice.is_subspace(perps[sub.subspaces[v]], perps[sub.subspaces[u]], ctx.subfield)
                        for v, below in enumerate(sub.below) for u in below)
        report["orth_involution"] = involution
        report["orth_inclusion_reversing"] = reversing
    ok = all(v for k, v in report.items() if isinstance(v, bool))
    report["ok"] = ok
    if args.format == "json":
        out = _dump(report)
    else:
        rows = [(k, json.dumps(v)) for k, v in report.items()]
        out = ("key,value\n" + "".join(f'{k},"{v}"\n' for k, v in rows)
               if args.format == "csv" else _table(rows, ["key", "value"]))
    if not ok:
        raise Disagreement(out)
    return out


def cmd_moore_rank_test(args):
    points = code.DEFAULT_GRID if args.grid else [(args.p, args.m, args.d, args.k)]
    reports = []
    for pt in points:
        ctx = field_build(FieldParams(*pt), None if args.grid else args.modulus)
        reports.append(linearized.moore_rank_trials(ctx, args.trials, args.seed))
    ok = all(r["ok"] for r in reports)
    if args.format == "json":
        out = _dump({"ok": ok, "results": reports})
    else:
        rows = [("{p},{m},{d},{k}".format(**r["params"]), r["trials"], r["full_rank"],
                 r["proportional_deficient"], r["failures"]) for r in reports]
        header = ["p,m,d,k", "trials", "full_rank", "proportional_deficient", "failures"]
        out = (_table(rows, header) if args.format == "table" else
               "params,trials,full_rank,proportional_deficient,failures\n"
               + "".join('"' + r[0] + '",' + ",".join(map(str, r[1:])) + "\n" for r in rows))
    if not ok:
        raise Disagreement(out)
    return out


# argument parsing

def _env_int(name, default):
    v = os.environ.get(name)
    return int(v) if v else default


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--out", help="write output to FILE instead of stdout")
    common.add_argument("--budget", type=int,
                        default=_env_int("LINRS_BUDGET", code.DEFAULT_BUDGET),
                        help="max enumeration count (env LINRS_BUDGET)")
    common.add_argument("--workers", type=int, default=_env_int("LINRS_WORKERS", 1),
                        help="worker processes (env LINRS_WORKERS)")
    common.add_argument("--seed", type=int, default=0)

    field_args = argparse.ArgumentParser(add_help=False)
    field_args.add_argument("--p", type=int, required=True)
    field_args.add_argument("--m", type=int, required=True)
    field_args.add_argument("--d", type=int, default=1)
    field_args.add_argument("--k", type=int, default=1)
    field_args.add_argument("--modulus", type=_int_list, default=None,
                            help="primitive polynomial, coefficients low degree first")

    parser = argparse.ArgumentParser(prog="linrs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", parents=[common, field_args])
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("weight-dist", parents=[common, field_args])
    p.add_argument("--method", default="all", choices=WEIGHT_METHODS + ("all",))
    p.set_defaults(func=cmd_weight_dist)

    p = sub.add_parser("wenger-spectrum", parents=[common, field_args])
    p.add_argument("--method", default="all", choices=("formula", "counting", "dense", "all"))
    p.set_defaults(func=cmd_wenger_spectrum)

    p = sub.add_parser("verify-conjecture", parents=[common])
    p.add_argument("--q", type=_int_list, default=[2, 3, 4, 5, 7, 8, 9])
    p.add_argument("--u-max", type=int, default=8)
    p.set_defaults(func=cmd_verify_conjecture)

    p = sub.add_parser("lattice-checks", parents=[common])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lattice_checks)

    p = sub.add_parser("moore-rank-test", parents=[common])
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--modulus", type=_int_list, default=None)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--grid", action="store_true", help="run every default grid point")
    p.set_defaults(func=cmd_moore_rank_test)
    return parser


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", 1) < 1 or getattr(args, "workers", 1) < 1:
        print("error: budget and workers must be >= 1", file=sys.stderr)
        return EXIT_PARAM
    if args.command == "moore-rank-test" and not args.grid and (args.p is None or args.m is None):
        print("error: --p and --m are required unless --grid is given", file=sys.stderr)
        return EXIT_PARAM
    try:
        _emit(args, args.func(args))
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except Disagreement as exc:
        _emit(args, exc.payload)
        print("error: disagreement or counterexample found", file=sys.stderr)
        return EXIT_DISAGREE
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
