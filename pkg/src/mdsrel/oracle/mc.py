"""Monte Carlo validation at sizes where censuses are infeasible.

Transmits the zero codeword, flips each bit independently with
probability p (so the symbol width b must be defined), decodes with the
bounded-distance reproducing rule, and classifies.  Trials are split into
fixed 2^16-trial blocks, each driven by its own Philox counter-based
stream (stream index = block index), so results depend only on
(seed, trials), never on the worker pool size.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import sqrt

import numpy as np

from .code import EVENTS, SystematicCode

BLOCK = 1 << 16
_CHUNK = 4096
_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


@dataclass(frozen=True)
class MonteCarloResult:
    trials: int
    seed: int
    p: float
    counts: dict[str, int]
    word_rate: dict[str, float]
    word_se: dict[str, float]
    symbol_rate: dict[str, float]
    symbol_se: dict[str, float]
    bit_rate: dict[str, float]
    bit_se: dict[str, float]


def _run_block(code_arrays, params, p, seed, block_index, ntrials):
    cw, zero_info = code_arrays
    n, k, b, t = params
    rng = np.random.Generator(np.random.Philox(seed).jumped(block_index))
    bits = rng.random((ntrials, n, b)) < p
    received = np.zeros((ntrials, n), dtype=np.uint8)
    for j in range(b):
        received |= bits[:, :, j].astype(np.uint8) << j

    out = {ev: np.zeros(5, dtype=np.int64) for ev in EVENTS}
    for lo in range(0, ntrials, _CHUNK):
        rec = received[lo:lo + _CHUNK]
        dist = (rec[:, None, :] != cw[None, :, :]).sum(axis=2)
        dmin = dist.min(axis=1)
        amin = dist.argmin(axis=1)
        wt = (rec != 0).sum(axis=1)
        in_sphere = dmin <= t
        is_cw = dmin == 0
        dec_info = np.where(in_sphere[:, None], cw[amin][:, :k], rec[:, :k])
        sym_err = (dec_info != 0).sum(axis=1)
        bit_err = _POPCOUNT[dec_info].sum(axis=1)

        masks = {
            "CT": wt == 0,
            "RC": in_sphere & (amin == 0) & (wt > 0),
            "FN": is_cw & (amin != 0),
            "WC": in_sphere & (amin != 0) & ~is_cw,
            "FP": ~in_sphere & (rec[:, :k] == 0).all(axis=1),
            "PED": ~in_sphere & (rec[:, :k] != 0).any(axis=1),
        }
        for ev, mask in masks.items():
            s = sym_err[mask].astype(np.int64)
            e = bit_err[mask].astype(np.int64)
            out[ev] += np.array(
                [mask.sum(), s.sum(), e.sum(), (s * s).sum(), (e * e).sum()],
                dtype=np.int64,
            )
    return out


def monte_carlo(code: SystematicCode, point, trials: int, seed: int,
                workers: int = 1) -> MonteCarloResult:
    """Empirical event rates with standard errors, reproducible for a
    fixed (seed, trials)."""
    p = code.params
    if p.b is None:
        raise ValueError("bit-level sampling needs a power-of-two alphabet")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    pf = float(point.p if hasattr(point, "p") else point)
    cw = np.array(code.codewords(), dtype=np.uint8)
    arrays = (cw, None)
    shape = (p.n, p.k, p.b, p.t)

    blocks = [(bi, min(BLOCK, trials - bi * BLOCK))
              for bi in range((trials + BLOCK - 1) // BLOCK)]
    totals = {ev: np.zeros(5, dtype=np.int64) for ev in EVENTS}
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda blk: _run_block(arrays, shape, pf, seed, *blk), blocks))
    else:
        results = [_run_block(arrays, shape, pf, seed, *blk) for blk in blocks]
    for res in results:
        for ev in EVENTS:
            totals[ev] += res[ev]

    counts, wrate, wse, srate, sse, brate, bse = {}, {}, {}, {}, {}, {}, {}
    kb = p.k * p.b
    for ev in EVENTS:
        cnt, ssum, bsum, ssq, bsq = (int(x) for x in totals[ev])
        counts[ev] = cnt
        r = cnt / trials
        wrate[ev] = r
        wse[ev] = sqrt(r * (1 - r) / trials)
        sm = ssum / (p.k * trials)
        srate[ev] = sm
        sse[ev] = sqrt(max(ssq / (p.k**2 * trials) - sm * sm, 0.0) / trials)
        bm = bsum / (kb * trials)
        brate[ev] = bm
        bse[ev] = sqrt(max(bsq / (kb**2 * trials) - bm * bm, 0.0) / trials)
    return MonteCarloResult(trials, seed, pf, counts, wrate, wse,
                            srate, sse, brate, bse)
