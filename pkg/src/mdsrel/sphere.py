"""Counts of words inside the radius-t sphere of a codeword, by split weight.

For a codeword with c1 non-zero information symbols and c2 non-zero
redundancy symbols, counts the words with split weight (r1, r2) lying
within Hamming distance t, together with the total number of information
symbols the bounded-distance decoder gets wrong across those words.  Two
independent routes exist for the count: the unified formula (production
path) and the four sign-case formulas it was derived from (cross-check
only).  Everything here depends only on (n, k, q, t) and the split
weights, never on a concrete code.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .combinatorics import binom, int_pow
from .enumerator import CodeParams, IrweTable


class SplitWeight(NamedTuple):
    info: int
    red: int


def _check_split(params: CodeParams, w, what: str) -> SplitWeight:
    w = SplitWeight(*w)
    if not (0 <= w.info <= params.k and 0 <= w.red <= params.n - params.k):
        raise ValueError(f"{what} split weight {tuple(w)} out of range for {params}")
    return w


def ball_volume(params: CodeParams) -> int:
    """Number of words within Hamming distance t of any fixed word."""
    n, q, t = params.n, params.q, params.t
    return sum(binom(n, s) * int_pow(q - 1, s) for s in range(t + 1))


def sphere_count(params: CodeParams, c, r) -> int:
    """Words of split weight r within distance t of a split-weight-c codeword.

    Unified formula: the inner pair-of-changes sum is collapsed to a
    single binomial.  Empty index ranges give 0, and (q-2)**0 = 1 keeps
    the q = 2 case alive.  Returns 0 whenever the sphere cannot reach the
    target weight (alpha < 0).
    """
    c = _check_split(params, c, "codeword")
    r = _check_split(params, r, "word")
    n, k, q, t = params.n, params.k, params.q, params.t
    c1, c2 = c
    r1, r2 = r
    alpha = t - abs(c1 - r1) - abs(c2 - r2)
    beta = t - c1 + r1 - c2 + r2
    if alpha < 0:
        return 0
    total = 0
    for bigj in range(alpha + 1):
        for bigi in range((beta - bigj) // 2 + 1):
            inner = sum(
                binom(c1, r1 - i)
                * binom(c2, r2 - bigi + i)
                * binom(k - c1, i)
                * binom(n - k - c2, bigi - i)
                for i in range(bigi + 1)
            )
            if inner:
                total += (
                    int_pow(q - 2, bigj)
                    * int_pow(q - 1, bigi)
                    * binom(r1 + r2 - bigi, bigj)
                    * inner
                )
    return total


def sphere_count_cases(params: CodeParams, c, r) -> int:
    """Same count as :func:`sphere_count` via the four sign-case formulas.

    Dispatches on the signs of (r1-c1, r2-c2); the cases share one
    summand shape (with the explicit j-split of the value-modification
    changes) and differ in the upper limit of the outer weight-shuffle
    sum.  Kept as an independent arithmetic path for verification.
    """
    c = _check_split(params, c, "codeword")
    r = _check_split(params, r, "word")
    n, k, q, t = params.n, params.k, params.q, params.t
    c1, c2 = c
    r1, r2 = r
    alpha = t - abs(c1 - r1) - abs(c2 - r2)
    if alpha < 0:
        return 0
    shift = (r1 - c1 if r1 > c1 else 0) + (r2 - c2 if r2 > c2 else 0)
    total = 0
    for bigj in range(alpha + 1):
        for bigi in range((alpha - bigj) // 2 + shift + 1):
            coef = int_pow(q - 2, bigj) * int_pow(q - 1, bigi)
            for j in range(bigj + 1):
                for i in range(bigi + 1):
                    total += coef * (
                        binom(c1, j)
                        * binom(c2, bigj - j)
                        * binom(c1 - j, c1 - r1 + i)
                        * binom(c2 - bigj + j, c2 - r2 + bigi - i)
                        * binom(k - c1, i)
                        * binom(n - k - c2, bigi - i)
                    )
    return total


@dataclass(frozen=True)
class SphereStats:
    """Count and decoder-change total for one (codeword, word) split-weight cell."""

    count: int
    change_total: int
    alpha: int
    beta: int

    @property
    def average_change(self) -> Fraction:
        """Mean decoder-written wrong info symbols per sphere word (0 for empty cells)."""
        if self.count == 0:
            return Fraction(0)
        return Fraction(self.change_total, self.count)


def decoder_change_stats(params: CodeParams, c, r, printed_kernel: bool = False) -> SphereStats:
    """Sphere count plus the summed number of information symbols the
    decoder gets wrong (positions where the decoded codeword is non-zero
    and differs from the received word) over all words of the cell.

    The change kernel (c1-r1+i)*C(r1+r2-I, J) + (r1-i)*C(r1+r2-I-1, J-1)
    applies for every sign of r1-c1; ``printed_kernel=True`` switches the
    r1 > c1 branch to i*C(r1+r2-I, J) + (r1-i)*C(r1+r2-I-1, J-1), which
    counts changed-nonzero received symbols instead and is kept only for
    literal-mode rate assembly.
    """
    c = _check_split(params, c, "codeword")
    r = _check_split(params, r, "word")
    n, k, q, t = params.n, params.k, params.q, params.t
    c1, c2 = c
    r1, r2 = r
    alpha = t - abs(c1 - r1) - abs(c2 - r2)
    beta = t - c1 + r1 - c2 + r2
    if alpha < 0:
        return SphereStats(0, 0, alpha, beta)
    count = 0
    changes = 0
    use_alt = printed_kernel and r1 > c1
    for bigj in range(alpha + 1):
        for bigi in range((beta - bigj) // 2 + 1):
            coef = int_pow(q - 2, bigj) * int_pow(q - 1, bigi)
            cnt_kernel = binom(r1 + r2 - bigi, bigj)
            mod_kernel = binom(r1 + r2 - bigi - 1, bigj - 1)
            for i in range(bigi + 1):
                base = (
                    binom(c1, r1 - i)
                    * binom(c2, r2 - bigi + i)
                    * binom(k - c1, i)
                    * binom(n - k - c2, bigi - i)
                )
                if not base:
                    continue
                count += coef * base * cnt_kernel
                fixed = i if use_alt else c1 - r1 + i
                changes += coef * base * (fixed * cnt_kernel + (r1 - i) * mod_kernel)
    return SphereStats(count, changes, alpha, beta)


class SphereCell(NamedTuple):
    """Per-cell sphere statistics with both change-kernel readings."""

    count: int
    change_total: int
    change_total_printed: int


def _split_cells(params: CodeParams, split: tuple[int, int]):
    k, nk, t = params.k, params.n - params.k, params.t
    c1, c2 = split
    out = []
    for r1 in range(max(0, c1 - t), min(k, c1 + t) + 1):
        rad = t - abs(c1 - r1)
        for r2 in range(max(0, c2 - rad), min(nk, c2 + rad) + 1):
            stats = decoder_change_stats(params, (c1, c2), (r1, r2))
            if r1 > c1:
                printed = decoder_change_stats(
                    params, (c1, c2), (r1, r2), printed_kernel=True
                ).change_total
            else:
                printed = stats.change_total
            out.append(((c1, c2, r1, r2),
                        SphereCell(stats.count, stats.change_total, printed)))
    return out


def build_sphere_table(
    params: CodeParams, irwe: IrweTable, workers: int = 1
) -> dict[tuple[int, int, int, int], SphereCell]:
    """All reachable sphere cells for every split weight with codewords.

    Maps (c1, c2, r1, r2) -> SphereCell, restricted to codeword splits
    with A_{c1,c2} > 0 and to cells with |c1-r1| + |c2-r2| <= t (others
    are identically zero).  This is the one expensive per-code artifact;
    rate assembly aggregates over it.  The result is identical for any
    worker count (cells are merged in split order).
    """
    splits = irwe.nonzero_splits()
    if workers > 1 and len(splits) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_split_cells, [params] * len(splits), splits,
                              chunksize=max(1, len(splits) // (4 * workers)))
            pairs = [kv for chunk in chunks for kv in chunk]
    else:
        pairs = [kv for split in splits for kv in _split_cells(params, split)]
    return dict(pairs)
