"""Command-line surface: tables, rate curves, verification, simulation.

All output is CSV (comment lines prefixed with '#'), byte-deterministic
for a fixed configuration; floats carry 17 significant digits, rational
values print exactly.  Exit codes: 0 success, 1 verification failure,
2 assertion or invariant failure, 64 bad usage.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .enumerator import CodeParams, IrweTable, weight_distribution
from .oracle import make_field, monte_carlo, rs_systematic
from .rates import (MODES, derive_channel, event_budget, rate_at)
from .sphere import ball_volume, decoder_change_stats
from .tables import get_tables
from .verify import run_suites

EXIT_OK, EXIT_VERIFY, EXIT_ASSERT, EXIT_USAGE = 0, 1, 2, 64


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(v) -> str:
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def _emit(out_path, comments, header, rows):
    lines = [f"# {c}" for c in comments]
    lines.append(",".join(header))
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> CodeParams:
    q, b = args.q, getattr(args, "b", None)
    if b is not None and q is None:
        q = 2**b
    if q is None:
        print("mdsrel: one of --q or --b is required", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return CodeParams(args.n, args.k, q, b=b)


def _grid(args) -> list[float]:
    pmin, pmax, points = args.p_min, args.p_max, args.points
    if not (0 < pmin < pmax < 1):
        raise ValueError("grid bounds must satisfy 0 < p-min < p-max < 1")
    if points < 2:
        raise ValueError("curves need at least 2 grid points")
    if args.log:
        ratio = (pmax / pmin) ** (1 / (points - 1))
        return [pmin * ratio**i for i in range(points)]
    step = (pmax - pmin) / (points - 1)
    return [pmin + step * i for i in range(points)]


def cmd_irwe(args) -> int:
    params = _params(args)
    table = IrweTable.compute(params)
    total, expect = table.total(), params.q**params.k
    rows = [
        (i, j, table.counts[i][j])
        for i in range(params.k + 1)
        for j in range(params.n - params.k + 1)
    ]
    rows.append((f"# sum={total} q^k={expect} ok={total == expect}",))
    _emit(args.out,
          [f"irwe n={params.n} k={params.k} q={params.q}"],
          ["i", "j", "A_ij"], rows)
    return EXIT_OK if total == expect else EXIT_ASSERT


def cmd_wdist(args) -> int:
    params = _params(args)
    dists = {m: weight_distribution(params, m)
             for m in ("marginal", "mds-formula", "corollary")}
    agree = dists["marginal"] == dists["mds-formula"] == dists["corollary"]
    rows = [(r, a) for r, a in enumerate(dists["mds-formula"])]
    _emit(args.out,
          [f"wdist n={params.n} k={params.k} q={params.q}",
           f"methods-agree={agree}"],
          ["r", "A_r"], rows)
    return EXIT_OK if agree else EXIT_ASSERT


def cmd_sphere(args) -> int:
    params = _params(args)
    c = (args.c1, args.c2)
    rows, total = [], 0
    for r1 in range(params.k + 1):
        for r2 in range(params.n - params.k + 1):
            stats = decoder_change_stats(params, c, (r1, r2))
            total += stats.count
            rows.append((args.c1, args.c2, r1, r2, stats.count, stats.change_total))
    vol = ball_volume(params)
    _emit(args.out,
          [f"sphere n={params.n} k={params.k} q={params.q} t={params.t}",
           f"ball-volume={vol} cell-sum={total} ok={total == vol}"],
          ["c1", "c2", "r1", "r2", "count", "change_total"], rows)
    return EXIT_OK if total == vol else EXIT_ASSERT


def _check_assertion(name: str, values: list[float]) -> str | None:
    if name == "monotone":
        if all(b > a for a, b in zip(values, values[1:])):
            return None
        return "curve is not strictly increasing"
    if name == "interior-max":
        m = max(range(len(values)), key=values.__getitem__)
        if 0 < m < len(values) - 1 and values[0] < values[m] and values[-1] < values[m]:
            return None
        return "curve has no interior maximum"
    return f"unknown assertion {name!r}"


def _budget_rows(params, grid, mode, arithmetic, tables):
    rows = []
    for p in grid:
        pv = Fraction(p) if arithmetic == "rational" else p
        point = derive_channel(pv, params, arithmetic)
        er = event_budget(params, point, mode, tables)
        rows.append((er.p, er.ct_word, er.rc_word, er.fn_word, er.wc_word,
                     er.fp_word, er.ped_word, er.residual))
    return rows


def cmd_curve(args) -> int:
    params = _params(args)
    grid = _grid(args)
    tables = get_tables(params, args.cache, args.workers)
    comments = [
        f"curve n={params.n} k={params.k} q={params.q} b={params.b}",
        f"quantity={args.quantity} level={args.level} mode={args.mode} "
        f"arithmetic={args.arithmetic}",
    ]
    if args.quantity == "budget":
        rows = _budget_rows(params, grid, args.mode, args.arithmetic, tables)
        _emit(args.out, comments,
              ["p", "ct", "rc", "fn", "wc", "fp", "ped", "residual"], rows)
        return EXIT_OK
    rows = []
    for p in grid:
        pv = Fraction(p) if args.arithmetic == "rational" else p
        point = derive_channel(pv, params, args.arithmetic)
        rows.append((point.out(point.p),
                     rate_at(params, point, args.quantity, args.level,
                             args.mode, tables)))
    _emit(args.out, comments, ["p", "value"], rows)
    for assertion in getattr(args, "assertions", None) or ():
        err = _check_assertion(assertion, [float(v) for _, v in rows])
        if err:
            print(f"assertion {assertion} failed: {err}", file=sys.stderr)
            return EXIT_ASSERT
    return EXIT_OK


def cmd_budget(args) -> int:
    args.quantity = "budget"
    return cmd_curve(args)


def cmd_verify(args) -> int:
    results = run_suites(keep_going=args.keep_going, trials=args.trials,
                         seed=args.seed, workers=args.workers)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"[{status}] {res.name} ({res.seconds:.2f}s): {res.detail}")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed")
    return EXIT_OK if not failed else EXIT_VERIFY


def cmd_diff_modes(args) -> int:
    params = _params(args)
    grid = _grid(args)
    tables = get_tables(params, args.cache, args.workers)
    rows = []
    for p in grid:
        pv = Fraction(p) if args.arithmetic == "rational" else p
        point = derive_channel(pv, params, args.arithmetic)
        lit = rate_at(params, point, args.quantity, args.level, "literal", tables)
        cor = rate_at(params, point, args.quantity, args.level, "corrected", tables)
        diff = abs(lit - cor)
        if diff == 0:
            rel = 0 if isinstance(diff, int) else type(diff)(0)
        elif cor == 0:
            rel = float("inf")
        else:
            rel = diff / abs(cor)
        rows.append((point.out(point.p), lit, cor, diff, rel))
    _emit(args.out,
          [f"diff-modes n={params.n} k={params.k} q={params.q} "
           f"quantity={args.quantity} level={args.level}"],
          ["p", "literal", "corrected", "abs_diff", "rel_diff"], rows)
    return EXIT_OK


def cmd_simulate(args) -> int:
    params = _params(args)
    if params.b is None:
        raise SystemExit(EXIT_USAGE)
    code = rs_systematic(make_field(params.q), params.n, params.k)
    point = derive_channel(args.p, params, "float")
    res = monte_carlo(code, point, args.trials, args.seed, args.workers)
    rows = [
        (ev, res.counts[ev], res.word_rate[ev], res.word_se[ev],
         res.symbol_rate[ev], res.symbol_se[ev],
         res.bit_rate[ev], res.bit_se[ev])
        for ev in ("CT", "RC", "FN", "WC", "FP", "PED")
    ]
    _emit(args.out,
          [f"simulate n={params.n} k={params.k} q={params.q} b={params.b}",
           f"p={_fmt(res.p)} trials={res.trials} seed={res.seed}"],
          ["event", "count", "word_rate", "word_se", "symbol_rate",
           "symbol_se", "bit_rate", "bit_se"], rows)
    return EXIT_OK


def _add_code_args(sp, need_b=False):
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--b", type=int, default=None,
                    required=need_b, help="bits per symbol (q = 2^b)")


def _add_grid_args(sp):
    sp.add_argument("--p-min", type=float, required=True)
    sp.add_argument("--p-max", type=float, required=True)
    sp.add_argument("--points", type=int, default=30)
    sp.add_argument("--log", action="store_true",
                    help="log-spaced grid instead of linear")


def _add_common(sp):
    sp.add_argument("--out", default=None, help="output CSV path (default stdout)")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--cache", default=None,
                    help="table cache directory (default $MDSREL_CACHE)")


def build_parser() -> Parser:
    parser = Parser(prog="mdsrel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("irwe", help="split-weight codeword counts")
    _add_code_args(sp)
    _add_common(sp)
    sp.set_defaults(fn=cmd_irwe)

    sp = sub.add_parser("wdist", help="weight distribution, three methods")
    _add_code_args(sp)
    _add_common(sp)
    sp.set_defaults(fn=cmd_wdist)

    sp = sub.add_parser("sphere", help="sphere cells around one codeword split")
    _add_code_args(sp)
    sp.add_argument("--c1", type=int, required=True)
    sp.add_argument("--c2", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_sphere)

    for name in ("curve", "budget"):
        sp = sub.add_parser(name, help=f"{name} CSV over a p grid")
        _add_code_args(sp)
        _add_grid_args(sp)
        if name == "curve":
            sp.add_argument("--quantity", required=True,
                            choices=("fn", "wc", "fp", "ped", "budget"))
            sp.add_argument("--assert", dest="assertions", action="append",
                            choices=("monotone", "interior-max"),
                            help="exit 2 unless the curve satisfies this")
        sp.add_argument("--level", default="word",
                        choices=("word", "symbol", "bit"))
        sp.add_argument("--mode", default="corrected", choices=MODES)
        sp.add_argument("--arithmetic", default="float",
                        choices=("rational", "float"))
        _add_common(sp)
        sp.set_defaults(fn=cmd_curve if name == "curve" else cmd_budget)

    sp = sub.add_parser("verify", help="run all oracle-vs-formula suites")
    sp.add_argument("--keep-going", action="store_true",
                    help="run remaining suites after a failure")
    sp.add_argument("--trials", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=20240801)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("diff-modes", help="literal vs corrected comparison")
    _add_code_args(sp)
    _add_grid_args(sp)
    sp.add_argument("--quantity", required=True, choices=("wc", "ped"))
    sp.add_argument("--level", default="word", choices=("word", "symbol", "bit"))
    sp.add_argument("--arithmetic", default="float",
                    choices=("rational", "float"))
    _add_common(sp)
    sp.set_defaults(fn=cmd_diff_modes)

    sp = sub.add_parser("simulate", help="Monte Carlo channel simulation")
    _add_code_args(sp, need_b=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--trials", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=20240801)
    _add_common(sp)
    sp.set_defaults(fn=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, AssertionError) as exc:
        print(f"mdsrel: {exc}", file=sys.stderr)
        return EXIT_ASSERT


if __name__ == "__main__":
    sys.exit(main())
