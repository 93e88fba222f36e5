"""Channel model and decoding-event probabilities.

Assembles the word-, symbol-, and information-bit-level probabilities of
the six decoding events (correct transmission CT, right correction RC,
false negative FN, wrong correction WC, false positive FP, pure error
detection PED) from the enumerator and sphere tables.  Two evaluation
modes exist for WC and PED: ``corrected`` (the default; satisfies the
partition of unity and matches the exhaustive oracle) and ``literal``
(reproduces the as-published formulas verbatim, kept for comparison via
the diff-modes command).  All arithmetic is exact rational; ``float``
mode only converts inputs and outputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import binom, int_pow
from .enumerator import CodeParams
from .tables import CodeTables, FormulaInconsistencyError, get_tables

LEVELS = ("word", "symbol", "bit")
MODES = ("literal", "corrected")
ARITHMETIC = ("rational", "float")


def decoder_bit_error_fraction(q: int) -> Fraction:
    """Expected fraction of wrong bits in a uniformly-distributed wrong
    symbol: q / (2(q-1)).  Used for decoder-written symbols in corrected
    mode; literal mode uses the as-published factor 1 + 1/(q-1) instead.
    """
    return Fraction(q, 2 * (q - 1))


@dataclass(frozen=True)
class ChannelPoint:
    """Channel parameters at one operating point.

    With a symbol width b, ``p`` is the channel bit-error rate and the
    symbol quantities follow from independent bit flips; without b
    (direct-symbol mode) ``p`` is the total symbol-error probability
    1 - q_s, and bit-level quantities are unavailable (p_bgs is None,
    as it also is at p = 0 where the conditional is undefined).
    """

    p: Fraction
    q: int
    b: int | None
    q_s: Fraction
    p_s: Fraction
    p_bgs: Fraction | None
    exact: bool

    def out(self, value: Fraction):
        return value if self.exact else float(value)


def derive_channel(p, params: CodeParams, arithmetic: str = "rational") -> ChannelPoint:
    """Channel point at bit-error rate p (or symbol-error probability p
    when params.b is None)."""
    if arithmetic not in ARITHMETIC:
        raise ValueError(f"arithmetic must be one of {ARITHMETIC}")
    pe = Fraction(p)
    if not 0 <= pe <= 1:
        raise ValueError(f"p must be in [0, 1], got {p}")
    q, b = params.q, params.b
    if b is not None:
        q_s = (1 - pe) ** b
        p_s = (1 - q_s) / (q - 1)
        p_bgs = pe / (1 - q_s) if 0 < pe else None
    else:
        q_s = 1 - pe
        p_s = pe / (q - 1)
        p_bgs = None
    return ChannelPoint(pe, q, b, q_s, p_s, p_bgs, arithmetic == "rational")


def channel_from_ps(p_s, params: CodeParams, arithmetic: str = "rational") -> ChannelPoint:
    """Direct-symbol channel point specified by the per-pair transition
    probability p_s itself (census convenience)."""
    return derive_channel(Fraction(p_s) * (params.q - 1),
                          CodeParams(params.n, params.k, params.q), arithmetic)


@dataclass(frozen=True)
class EventRates:
    """Word/symbol/bit probabilities of the six decoding events at one p.

    ``residual`` is 1 minus the word-level total; it is exactly 0 in
    corrected mode with rational arithmetic.  Bit-level fields are None
    when the channel has no symbol width.
    """

    p: Fraction | float
    ct_word: Fraction | float
    rc_word: Fraction | float
    fn_word: Fraction | float
    fn_symbol: Fraction | float
    fn_bit: Fraction | float | None
    wc_word: Fraction | float
    wc_symbol: Fraction | float
    wc_bit: Fraction | float | None
    fp_word: Fraction | float
    ped_word: Fraction | float
    ped_symbol: Fraction | float
    ped_bit: Fraction | float | None
    residual: Fraction | float


def _check_level(level: str) -> None:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level!r}")


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _mass(coeffs, point: ChannelPoint, n: int) -> Fraction:
    # sum of coeffs[w] * p_s^w * q_s^(n-w), exact
    total = Fraction(0)
    for w in sorted(coeffs):
        cf = coeffs[w]
        if cf:
            total += Fraction(cf) * point.p_s**w * point.q_s ** (n - w)
    return total


def _bit_factor(point: ChannelPoint) -> Fraction:
    # p_{b|s}; only ever multiplied into masses that vanish at p = 0
    if point.b is None:
        raise ValueError("bit-level rates need a symbol width (params.b)")
    if point.p_bgs is None:
        return Fraction(0)
    return point.p_bgs


def p_fn(params: CodeParams, point: ChannelPoint, level: str = "word",
         tables: CodeTables | None = None):
    """Probability that the received word is a wrong codeword."""
    _check_level(level)
    tb = tables or get_tables(params)
    if level == "word":
        return point.out(_mass(tb.fn_word, point, params.n))
    sym = _mass(tb.fn_sym, point, params.n) / params.k
    if level == "symbol":
        return point.out(sym)
    return point.out(sym * _bit_factor(point))


def p_wc(params: CodeParams, point: ChannelPoint, level: str = "word",
         mode: str = "corrected", tables: CodeTables | None = None):
    """Probability of decoding to a wrong codeword.

    Corrected mode keys the channel mass by the received word's weight
    and removes the codeword itself only from its own cell; literal mode
    reproduces the as-published sums, including the (N-1) subtraction in
    every cell and the codeword-weight exponent.
    """
    _check_level(level)
    _check_mode(mode)
    tb = tables or get_tables(params)
    n, k, q = params.n, params.k, params.q
    if mode == "corrected":
        if level == "word":
            return point.out(_mass(tb.wc_word, point, n))
        if level == "symbol":
            return point.out(_mass(tb.wc_sym, point, n) / k)
        gamma = decoder_bit_error_fraction(q)
        val = (_mass(tb.wc_chan, point, n) * _bit_factor(point)
               + _mass(tb.wc_dec, point, n) * gamma) / k
        return point.out(val)
    if level == "word":
        return point.out(_mass(tb.wc_lit_word, point, n))
    if level == "symbol":
        return point.out(_mass(tb.wc_lit_sym, point, n) / k)
    printed = 1 + Fraction(1, q - 1)
    val = (_mass(tb.wc_lit_chan, point, n) * _bit_factor(point)
           + _mass(tb.wc_lit_dec, point, n) * printed) / k
    return point.out(val)


def c_corrected_count(params: CodeParams, r: int,
                      tables: CodeTables | None = None) -> int:
    """Number of words with zero information part and redundancy weight r
    that the decoder (wrongly) corrects to a codeword."""
    tb = tables or get_tables(params)
    nk, t = params.n - params.k, params.t
    if not t + 1 <= r <= nk:
        raise ValueError(f"r must be in [{t + 1}, {nk}], got {r}")
    return tb.c_counts[r]


def fp_count(params: CodeParams, r: int, tables: CodeTables | None = None) -> int:
    """Number of false-positive words of redundancy weight r."""
    tb = tables or get_tables(params)
    nk, t = params.n - params.k, params.t
    if not t + 1 <= r <= nk:
        raise ValueError(f"r must be in [{t + 1}, {nk}], got {r}")
    return tb.fp_counts[r]


def p_fp(params: CodeParams, point: ChannelPoint,
         tables: CodeTables | None = None):
    """Probability of an uncorrectable-error flag with a clean
    information part (word level; FP has no symbol or bit rate)."""
    tb = tables or get_tables(params)
    coeffs = {r: tb.fp_counts[r] for r in tb.fp_counts}
    return point.out(_mass(coeffs, point, params.n))


def ped_count(params: CodeParams, i1: int, i2: int, mode: str = "corrected",
              tables: CodeTables | None = None) -> int:
    """Number of split-weight-(i1, i2) words classified as pure error
    detection: reproduced by the decoder, with information errors.

    Both modes agree numerically; the literal path subtracts FP(i2) as
    published (read as 0 for i1 > 0 or i2 out of its range, which is
    exactly what makes the i1 = 0 row vanish), while the corrected path
    never forms the FP term.
    """
    _check_mode(mode)
    tb = tables or get_tables(params)
    k, nk, q, t = params.k, params.n - params.k, params.q, params.t
    if not (0 <= i1 <= k and 0 <= i2 <= nk):
        raise ValueError(f"split weight ({i1},{i2}) out of range")
    if i1 + i2 <= t:
        return 0
    if mode == "corrected":
        return tb.ped[i1][i2]
    fp_star = tb.fp_counts[i2] if (i1 == 0 and t + 1 <= i2 <= nk) else 0
    v = (binom(k, i1) * binom(nk, i2) * int_pow(q - 1, i1 + i2)
         - fp_star - tb.sphere_mass.get((i1, i2), 0))
    if v < 0:
        raise FormulaInconsistencyError(f"PED({i1},{i2}) = {v} < 0")
    return v


def p_ped(params: CodeParams, point: ChannelPoint, level: str = "word",
          mode: str = "corrected", tables: CodeTables | None = None):
    """Probability of a pure error detection.

    Literal mode sums i1 >= 1, i2 >= 1 as published; corrected mode also
    includes the i2 = 0 column (information-only error patterns beyond
    the correction radius).
    """
    _check_level(level)
    _check_mode(mode)
    tb = tables or get_tables(params)
    n, k = params.n, params.k
    word_c = tb.ped_word if mode == "corrected" else tb.ped_lit_word
    sym_c = tb.ped_sym if mode == "corrected" else tb.ped_lit_sym
    if level == "word":
        return point.out(_mass(word_c, point, n))
    sym = _mass(sym_c, point, n) / k
    if level == "symbol":
        return point.out(sym)
    return point.out(sym * _bit_factor(point))


def trivial_rates(params: CodeParams, point: ChannelPoint):
    """(P_CT, P_RC): clean reception, and correctable error patterns."""
    n, q, t = params.n, params.q, params.t
    ct = point.q_s**n
    rc = sum(
        Fraction(binom(n, s) * int_pow(q - 1, s)) * point.p_s**s * point.q_s ** (n - s)
        for s in range(1, t + 1)
    )
    return point.out(ct), point.out(Fraction(rc))


def event_budget(params: CodeParams, point: ChannelPoint,
                 mode: str = "corrected", tables: CodeTables | None = None) -> EventRates:
    """All word-level event probabilities plus the partition-of-unity
    residual; symbol/bit levels included for FN, WC, PED."""
    _check_mode(mode)
    tb = tables or get_tables(params)
    has_bits = params.b is not None
    ct, rc = trivial_rates(params, point)
    fn_w = p_fn(params, point, "word", tb)
    fn_s = p_fn(params, point, "symbol", tb)
    wc_w = p_wc(params, point, "word", mode, tb)
    wc_s = p_wc(params, point, "symbol", mode, tb)
    fp_w = p_fp(params, point, tb)
    ped_w = p_ped(params, point, "word", mode, tb)
    ped_s = p_ped(params, point, "symbol", mode, tb)
    residual = 1 - (ct + rc + fn_w + wc_w + fp_w + ped_w)
    return EventRates(
        p=point.out(point.p),
        ct_word=ct, rc_word=rc,
        fn_word=fn_w, fn_symbol=fn_s,
        fn_bit=p_fn(params, point, "bit", tb) if has_bits else None,
        wc_word=wc_w, wc_symbol=wc_s,
        wc_bit=p_wc(params, point, "bit", mode, tb) if has_bits else None,
        fp_word=fp_w,
        ped_word=ped_w, ped_symbol=ped_s,
        ped_bit=p_ped(params, point, "bit", mode, tb) if has_bits else None,
        residual=residual,
    )


QUANTITIES = ("fn", "wc", "fp", "ped")


def rate_at(params: CodeParams, point: ChannelPoint, quantity: str,
            level: str = "word", mode: str = "corrected",
            tables: CodeTables | None = None):
    """Single (quantity, level, mode) probability at one channel point."""
    if quantity == "fn":
        return p_fn(params, point, level, tables)
    if quantity == "wc":
        return p_wc(params, point, level, mode, tables)
    if quantity == "fp":
        if level != "word":
            raise ValueError("fp is a word-level quantity")
        return p_fp(params, point, tables)
    if quantity == "ped":
        return p_ped(params, point, level, mode, tables)
    raise ValueError(f"quantity must be one of {QUANTITIES}, got {quantity!r}")


def curve(params: CodeParams, p_grid, quantity: str, level: str = "word",
          mode: str = "corrected", arithmetic: str = "float",
          tables: CodeTables | None = None):
    """[(p, value)] over a strictly increasing grid inside (0, 1)."""
    grid = [Fraction(p) for p in p_grid]
    if any(not 0 < p < 1 for p in grid):
        raise ValueError("grid points must lie strictly inside (0, 1)")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    tb = tables or get_tables(params)
    out = []
    for p in grid:
        point = derive_channel(p, params, arithmetic)
        out.append((point.out(p), rate_at(params, point, quantity, level, mode, tb)))
    return out
