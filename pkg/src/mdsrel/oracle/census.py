"""Exhaustive censuses: ground truth for every count and probability.

These walk actual words of actual codes (split-weight tallies over all
codewords, radius-t balls around single codewords, and the full q^n word
space classified by decoding event) and accumulate exact rational rates
under the same channel conventions the analytic formulas use, so any
disagreement with the formula routes is a formula bug, not noise.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction

from ..enumerator import IrweTable
from ..rates import ChannelPoint, EventRates, decoder_bit_error_fraction
from .code import SystematicCode
from .field import FiniteField

EVENT_SPACE_LIMIT = 1 << 24


def census_irwe(code: SystematicCode) -> IrweTable:
    """Split-weight codeword counts by direct enumeration."""
    p = code.params
    grid = [[0] * (p.n - p.k + 1) for _ in range(p.k + 1)]
    for cw in code.codewords():
        i, j = code.split_weight(cw)
        grid[i][j] += 1
    return IrweTable(p, tuple(tuple(row) for row in grid))


def ball_words(code: SystematicCode, center):
    """Every word within Hamming distance t of the center, center included."""
    p, f = code.params, code.field
    center = tuple(center)
    for s in range(p.t + 1):
        for pos in itertools.combinations(range(p.n), s):
            choices = [[v for v in f.elements() if v != center[m]] for m in pos]
            for vals in itertools.product(*choices):
                w = list(center)
                for m, v in zip(pos, vals):
                    w[m] = v
                yield tuple(w)


def _decoder_wrong_info(code: SystematicCode, codeword, word) -> int:
    # info positions the decoder gets wrong: codeword symbol non-zero and
    # not what was received
    k = code.params.k
    return sum(1 for m in range(k) if codeword[m] != 0 and word[m] != codeword[m])


def census_sphere(code: SystematicCode, codeword, r=None):
    """Ball census around one codeword, tallied by split weight.

    Returns {(r1, r2): (count, change_total)} over the non-empty cells,
    or the single (count, change_total) pair when a target split weight
    ``r`` is given.  change_total sums, over the cell's words, the number
    of information symbols the decoder gets wrong when correcting the
    word back to this codeword.
    """
    cells: dict[tuple[int, int], list[int]] = defaultdict(lambda: [0, 0])
    for w in ball_words(code, codeword):
        cell = cells[code.split_weight(w)]
        cell[0] += 1
        cell[1] += _decoder_wrong_info(code, codeword, w)
    out = {sw: (c, g) for sw, (c, g) in cells.items()}
    if r is None:
        return out
    return out.get(tuple(r), (0, 0))


def census_events(code: SystematicCode, point: ChannelPoint) -> EventRates:
    """Classify every word of the space and accumulate exact event rates.

    Word probabilities use the symmetric-channel mass p_s^wt q_s^(n-wt);
    symbol rates weight by (wrong info symbols)/k; bit rates weight
    channel-written wrong symbols by p_{b|s} and decoder-written ones by
    q/(2(q-1)).  The transmitted word is the zero codeword.
    """
    p = code.params
    n, k, q, t = p.n, p.k, p.q, p.t
    if q**n > EVENT_SPACE_LIMIT:
        raise ValueError(f"q^n = {q ** n} too large for an event census")
    if point.q != q:
        raise ValueError("channel point is for a different alphabet")

    codewords = code.codewords()
    place = [q ** (n - 1 - m) for m in range(n)]

    def index(word):
        return sum(v * pl for v, pl in zip(word, place))

    target = [-1] * q**n
    for ci, cw in enumerate(codewords):
        for w in ball_words(code, cw):
            target[index(w)] = ci
    codeword_index = {index(cw): ci for ci, cw in enumerate(codewords)}

    # per (class, weight): word count, wrong-info-symbol sum, and the
    # channel/decoder split of those wrong symbols
    agg: dict[tuple[str, int], list[int]] = defaultdict(lambda: [0, 0, 0, 0])
    idx = 0
    for word in itertools.product(range(q), repeat=n):
        wt = n - word.count(0)
        i1 = k - word[:k].count(0)
        ci = target[idx]
        if wt == 0:
            cls, sym, chan, dec = "CT", 0, 0, 0
        elif ci == 0:
            cls, sym, chan, dec = "RC", 0, 0, 0
        elif ci > 0:
            cw = codewords[ci]
            c1 = code.split_weight(cw)[0]
            if idx in codeword_index:
                cls, sym, chan, dec = "FN", c1, c1, 0
            else:
                wrong = _decoder_wrong_info(code, cw, word)
                cls, sym, chan, dec = "WC", c1, c1 - wrong, wrong
        elif i1 == 0:
            cls, sym, chan, dec = "FP", 0, 0, 0
        else:
            cls, sym, chan, dec = "PED", i1, i1, 0
        cell = agg[cls, wt]
        cell[0] += 1
        cell[1] += sym
        cell[2] += chan
        cell[3] += dec
        idx += 1

    mass = {wt: point.p_s**wt * point.q_s ** (n - wt) for wt in range(n + 1)}
    gamma = decoder_bit_error_fraction(q)
    pbgs = point.p_bgs if point.p_bgs is not None else Fraction(0)

    def word_rate(cls):
        return sum((cnt * mass[wt] for (c, wt), (cnt, _, _, _) in agg.items()
                    if c == cls), Fraction(0))

    def symbol_rate(cls):
        return sum((Fraction(sym, k) * mass[wt]
                    for (c, wt), (_, sym, _, _) in agg.items() if c == cls),
                   Fraction(0))

    def bit_rate(cls):
        return sum(((Fraction(chan, k) * pbgs + Fraction(dec, k) * gamma) * mass[wt]
                    for (c, wt), (_, _, chan, dec) in agg.items() if c == cls),
                   Fraction(0))

    has_bits = p.b is not None
    ct, rc = word_rate("CT"), word_rate("RC")
    fn_w, wc_w, fp_w, ped_w = (word_rate(c) for c in ("FN", "WC", "FP", "PED"))
    residual = 1 - (ct + rc + fn_w + wc_w + fp_w + ped_w)
    return EventRates(
        p=point.out(point.p),
        ct_word=point.out(ct), rc_word=point.out(rc),
        fn_word=point.out(fn_w),
        fn_symbol=point.out(symbol_rate("FN")),
        fn_bit=point.out(bit_rate("FN")) if has_bits else None,
        wc_word=point.out(wc_w),
        wc_symbol=point.out(symbol_rate("WC")),
        wc_bit=point.out(bit_rate("WC")) if has_bits else None,
        fp_word=point.out(fp_w),
        ped_word=point.out(ped_w),
        ped_symbol=point.out(symbol_rate("PED")),
        ped_bit=point.out(bit_rate("PED")) if has_bits else None,
        residual=point.out(residual),
    )


def cauchy_matrix(field: FiniteField, rows: int, cols: int):
    """rows x cols Cauchy matrix 1/(x_a - y_b); every square submatrix is
    nonsingular.  Needs rows + cols <= q so the x and y sets stay
    disjoint (the differences then never vanish)."""
    q = field.q
    if rows + cols > q:
        raise ValueError(f"no Cauchy {rows}x{cols} matrix over GF({q})")
    xs = list(range(rows))
    ys = list(range(rows, rows + cols))
    return [[field.inv(field.sub(x, y)) for y in ys] for x in xs]


def census_totally_nonzero(field: FiniteField, matrix) -> int:
    """Brute-force count of totally non-zero solutions of matrix @ v = 0."""
    q = field.q
    cols = len(matrix[0])
    count = 0
    for v in itertools.product(range(1, q), repeat=cols):
        if all(
            _dot(field, row, v) == 0 for row in matrix
        ):
            count += 1
    return count


def _dot(field: FiniteField, row, vec) -> int:
    acc = 0
    for a, x in zip(row, vec):
        acc = field.add(acc, field.mul(a, x))
    return acc
