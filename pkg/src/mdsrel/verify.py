"""Oracle-vs-formula verification suites.

Each suite checks one layer of the formula stack against an independent
route (a second formula, an exhaustive census, or a simulation) and
returns a pass/fail record; the CLI ``verify`` command and the test
suite both drive these.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from .combinatorics import identity_suite
from .enumerator import (CodeParams, irwe_closed, irwe_inclusion_exclusion,
                         pwe_two_block, totally_nonzero_closed,
                         totally_nonzero_recursive, weight_distribution)
from .oracle import (cauchy_matrix, census_events, census_irwe, census_sphere,
                     census_totally_nonzero, make_field, monte_carlo,
                     repetition_code, rs_systematic)
from .rates import derive_channel, event_budget
from .sphere import ball_volume, decoder_change_stats, sphere_count, sphere_count_cases
from .tables import get_tables

# the four canonical oracle codes: (n, k, q)
CANONICAL = {
    "T1": (3, 1, 2),
    "T2": (4, 2, 5),
    "T3": (6, 2, 7),
    "T4": (7, 3, 8),
}


def canonical_code(name: str):
    n, k, q = CANONICAL[name]
    field = make_field(q)
    if n <= q:
        return rs_systematic(field, n, k)
    return repetition_code(field, n)  # T1: binary repetition, n > q needs k = 1


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _timed(fn):
    def wrapper(**kw):
        t0 = time.perf_counter()
        passed, detail = fn(**kw)
        return SuiteResult(fn.__name__.removeprefix("suite_"), passed, detail,
                           time.perf_counter() - t0)
    wrapper.__name__ = fn.__name__
    return wrapper


@_timed
def suite_identities(**_):
    bad = identity_suite(20)
    if bad:
        return False, f"{len(bad)} violations, first: {bad[0]}"
    return True, "6 identity families exhaustive to magnitude 20"


@_timed
def suite_f_grids(**_):
    checked = 0
    for q in (2, 3, 4, 5, 7, 8):
        for i in range(21):
            for j in range(13):
                if totally_nonzero_closed(q, i, j) != totally_nonzero_recursive(q, i, j):
                    return False, f"closed != recurrence at q={q}, i={i}, j={j}"
                checked += 1
    brute = 0
    for q in (5, 7):
        field = make_field(q)
        for j in range(1, 4):
            for i in range(j + 1, 7):
                if i + j > q:
                    continue  # no totally-full-rank witness exists at this size
                m = cauchy_matrix(field, j, i)
                got = census_totally_nonzero(field, m)
                if got != totally_nonzero_closed(q, i, j):
                    return False, f"brute force {got} != closed form at q={q}, i={i}, j={j}"
                brute += 1
    return True, f"{checked} grid cells, {brute} brute-forced Cauchy systems"


@_timed
def suite_irwe_agreement(**_):
    for name in CANONICAL:
        code = canonical_code(name)
        p = code.params
        cens = census_irwe(code)
        for i in range(p.k + 1):
            for j in range(p.n - p.k + 1):
                vals = (
                    irwe_closed(p, i, j),
                    irwe_inclusion_exclusion(p, i, j),
                    pwe_two_block(p, i, j),
                    cens.counts[i][j],
                )
                if len(set(vals)) != 1:
                    return False, f"{name} cell ({i},{j}): {vals}"
        if cens.total() != p.q**p.k:
            return False, f"{name} census total != q^k"
    for k in (87, 107, 117):
        p = CodeParams(127, k, 128, b=7)
        total = sum(
            irwe_closed(p, i, j)
            for i in range(p.k + 1)
            for j in range(p.n - p.k + 1)
        )
        if total != p.q**p.k:
            return False, f"[127,{k}]_128 sum A_ij != q^k"
    return True, "4 censuses cell-exact; normalization holds at n=127"


@_timed
def suite_weight_distribution(**_):
    for q in (8, 16, 32):
        for n in range(2, 32):
            for k in range(1, n):
                p = CodeParams(n, k, q)
                a = weight_distribution(p, "marginal")
                if a != weight_distribution(p, "mds-formula"):
                    return False, f"marginal != mds-formula at [{n},{k}]_{q}"
                if a != weight_distribution(p, "corollary"):
                    return False, f"marginal != corollary at [{n},{k}]_{q}"
    p = CodeParams(127, 117, 128, b=7)
    a = weight_distribution(p, "marginal")
    if a != weight_distribution(p, "mds-formula") or a != weight_distribution(p, "corollary"):
        return False, "three-way disagreement at [127,117]_128"
    for name in CANONICAL:
        code = canonical_code(name)
        cens = [0] * (code.params.n + 1)
        for cw in code.codewords():
            cens[sum(1 for x in cw if x)] += 1
        if cens != weight_distribution(code.params, "mds-formula"):
            return False, f"{name} census != formula"
    return True, "1440 codes three-way equal; censuses match on T1-T4"


@_timed
def suite_sphere(**_):
    for name in CANONICAL:
        code = canonical_code(name)
        p = code.params
        nk = p.n - p.k
        for c1 in range(p.k + 1):
            for c2 in range(nk + 1):
                for r1 in range(p.k + 1):
                    for r2 in range(nk + 1):
                        a = sphere_count(p, (c1, c2), (r1, r2))
                        b = sphere_count_cases(p, (c1, c2), (r1, r2))
                        if a != b:
                            return False, (f"{name}: unified {a} != cases {b} at "
                                           f"c=({c1},{c2}), r=({r1},{r2})")
    for name in ("T2", "T3", "T4"):
        code = canonical_code(name)
        p = code.params
        vol = ball_volume(p)
        for cw in code.codewords():
            cells = census_sphere(code, cw)
            c = code.split_weight(cw)
            total = 0
            for r1 in range(p.k + 1):
                for r2 in range(p.n - p.k + 1):
                    stats = decoder_change_stats(p, c, (r1, r2))
                    got = cells.get((r1, r2), (0, 0))
                    if got != (stats.count, stats.change_total):
                        return False, (f"{name} codeword {cw}: census {got} != "
                                       f"formula {(stats.count, stats.change_total)} "
                                       f"at r=({r1},{r2})")
                    total += stats.count
            if total != vol:
                return False, f"{name}: sphere cells sum {total} != ball volume {vol}"
    return True, "unified == cases on full grids; ball censuses exact on T2-T4"


def _compare_rates(analytic, cens) -> str | None:
    for field in ("ct_word", "rc_word", "fn_word", "fn_symbol", "fn_bit",
                  "wc_word", "wc_symbol", "wc_bit", "fp_word",
                  "ped_word", "ped_symbol", "ped_bit", "residual"):
        a, c = getattr(analytic, field), getattr(cens, field)
        if a != c:
            return f"{field}: analytic {a} != census {c}"
    return None


@_timed
def suite_event_census(**_):
    for name in ("T1", "T2", "T3"):
        code = canonical_code(name)
        p = code.params
        tables = get_tables(p)
        for pv in (Fraction(1, 10), Fraction(1, 2)):
            # T1 gets a bit channel (b=1); T2/T3 run in direct-symbol mode
            point = derive_channel(pv, p)
            analytic = event_budget(p, point, "corrected", tables)
            cens = census_events(code, point)
            err = _compare_rates(analytic, cens)
            if err:
                return False, f"{name} at p={pv}: {err}"
            if analytic.residual != 0:
                return False, f"{name} at p={pv}: residual {analytic.residual} != 0"
    return True, "corrected rates == censuses, residual exactly 0 (T1-T3)"


@_timed
def suite_monte_carlo(trials: int = 1_000_000, seed: int = 20240801, workers: int = 1, **_):
    code = canonical_code("T4")
    p = code.params
    point = derive_channel(Fraction(1, 50), p)
    analytic = event_budget(p, point, "corrected", get_tables(p))
    ana = {
        "CT": analytic.ct_word, "RC": analytic.rc_word, "FN": analytic.fn_word,
        "WC": analytic.wc_word, "FP": analytic.fp_word, "PED": analytic.ped_word,
    }
    res = monte_carlo(code, point, trials, seed, workers)
    worst = 0.0
    for ev, a in ana.items():
        a = float(a)
        se = sqrt(a * (1 - a) / trials)
        diff = abs(res.word_rate[ev] - a)
        sigmas = diff / se if se else (0.0 if diff == 0 else float("inf"))
        worst = max(worst, sigmas)
        if sigmas > 4:
            return False, (f"{ev}: empirical {res.word_rate[ev]:.6g} vs analytic "
                           f"{a:.6g} is {sigmas:.1f} sigma at {trials} trials")
    return True, f"all six events within 4 sigma (worst {worst:.2f}) at {trials} trials"


ALL_SUITES = (
    suite_identities,
    suite_f_grids,
    suite_irwe_agreement,
    suite_weight_distribution,
    suite_sphere,
    suite_event_census,
    suite_monte_carlo,
)


def run_suites(keep_going: bool = False, trials: int = 1_000_000,
               seed: int = 20240801, workers: int = 1) -> list[SuiteResult]:
    results = []
    for suite in ALL_SUITES:
        res = suite(trials=trials, seed=seed, workers=workers)
        results.append(res)
        if not res.passed and not keep_going:
            break
    return results
