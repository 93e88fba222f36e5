"""Systematic Reed-Solomon codes and the bounded-distance reproducing decoder.

Everything here is deliberately brute-force: codes are verified by
enumerating codewords (or by checking every square submatrix of the
redundancy block when enumeration is infeasible), and decoding scans the
full codeword list.  The point is to be obviously correct at small sizes,
not fast.
"""
from __future__ import annotations

import itertools
from typing import NamedTuple

from ..enumerator import CodeParams
from .field import FiniteField

ENUM_LIMIT = 1 << 20          # max q^k for codeword enumeration
SUBMATRIX_LIMIT = 4_000_000   # max square submatrices for the regularity check


class SystematicCode:
    """[n, k] code with generator (I_k | R) over a small finite field."""

    def __init__(self, field: FiniteField, generator: list[list[int]]):
        self.field = field
        k = len(generator)
        n = len(generator[0])
        self.params = CodeParams(n, k, field.q, b=field.b)
        for i in range(k):
            for j in range(k):
                if generator[i][j] != (1 if i == j else 0):
                    raise ValueError("generator is not in systematic form")
        self.G = tuple(tuple(row) for row in generator)
        self.R = tuple(tuple(row[k:]) for row in self.G)
        self._codewords: list[tuple[int, ...]] | None = None

    def encode(self, message) -> tuple[int, ...]:
        f = self.field
        word = [0] * self.params.n
        for i, m in enumerate(message):
            if m:
                row = self.G[i]
                word = [f.add(w, f.mul(m, g)) for w, g in zip(word, row)]
        return tuple(word)

    def codewords(self) -> list[tuple[int, ...]]:
        """All q^k codewords, in message lexicographic order (index 0 is
        the zero codeword)."""
        if self._codewords is None:
            p = self.params
            if p.q**p.k > ENUM_LIMIT:
                raise ValueError(f"q^k = {p.q ** p.k} too large to enumerate")
            self._codewords = [
                self.encode(msg)
                for msg in itertools.product(range(p.q), repeat=p.k)
            ]
        return self._codewords

    def split_weight(self, word) -> tuple[int, int]:
        k = self.params.k
        return (sum(1 for x in word[:k] if x), sum(1 for x in word[k:] if x))


def _det(field: FiniteField, m: list[list[int]]) -> int:
    m = [row[:] for row in m]
    size = len(m)
    det = 1
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = field.neg(det)
        det = field.mul(det, m[col][col])
        inv = field.inv(m[col][col])
        for r in range(col + 1, size):
            if m[r][col]:
                c = field.mul(m[r][col], inv)
                m[r] = [field.sub(x, field.mul(c, y)) for x, y in zip(m[r], m[col])]
    return det


def submatrix_regularity(field: FiniteField, R) -> bool:
    """Whether every square submatrix of R is nonsingular."""
    rows, cols = len(R), len(R[0])
    for size in range(1, min(rows, cols) + 1):
        for rsel in itertools.combinations(range(rows), size):
            for csel in itertools.combinations(range(cols), size):
                sub = [[R[r][c] for c in csel] for r in rsel]
                if _det(field, sub) == 0:
                    return False
    return True


def _submatrix_count(rows: int, cols: int) -> int:
    from math import comb
    return sum(comb(rows, s) * comb(cols, s) for s in range(1, min(rows, cols) + 1))


def rs_systematic(field: FiniteField, n: int, k: int, verify: bool = True) -> SystematicCode:
    """Systematic Reed-Solomon code of length n <= q, evaluated at the
    first n field elements and row-reduced to (I_k | R).

    With ``verify`` the minimum distance n - k + 1 is confirmed by
    codeword enumeration when q^k is small enough, otherwise by the
    exhaustive submatrix regularity check on R.
    """
    q = field.q
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    if n > q:
        raise ValueError(f"evaluation-point construction needs n <= q, got n={n}, q={q}")
    points = list(range(n))
    rows = [[field.pow(x, i) for x in points] for i in range(k)]
    # Gauss-Jordan on the first k columns
    for col in range(k):
        piv = next(r for r in range(col, k) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = field.inv(rows[col][col])
        rows[col] = [field.mul(inv, x) for x in rows[col]]
        for r in range(k):
            if r != col and rows[r][col]:
                c = rows[r][col]
                rows[r] = [field.sub(x, field.mul(c, y))
                           for x, y in zip(rows[r], rows[col])]
    code = SystematicCode(field, rows)
    if verify:
        if q**k <= ENUM_LIMIT:
            d = min(sum(1 for x in cw if x) for cw in code.codewords()[1:])
            if d != n - k + 1:
                raise AssertionError(f"minimum distance {d} != {n - k + 1}")
        elif _submatrix_count(k, n - k) <= SUBMATRIX_LIMIT:
            if not submatrix_regularity(field, code.R):
                raise AssertionError("redundancy block has a singular submatrix")
        else:
            raise ValueError(
                "code too large to verify; pass verify=False to skip")
    return code


def repetition_code(field: FiniteField, n: int) -> SystematicCode:
    """[n, 1] repetition code: MDS (d = n) over any field, any length.

    Covers the lengths the evaluation-point construction cannot reach
    (n > q), in particular the binary repetition code."""
    return SystematicCode(field, [[1] * n])


class DecodeResult(NamedTuple):
    status: str                       # "corrected" or "reproduced"
    output: tuple[int, ...]           # what the receiver sees
    codeword: tuple[int, ...] | None  # decode target when corrected


def bdd_decode(code: SystematicCode, word) -> DecodeResult:
    """Bounded-distance reproducing decoder: output the unique codeword
    within distance t when one exists, else the received word unchanged.
    Exhaustive scan; spheres of radius t are disjoint, so the first hit
    is the only one."""
    t = code.params.t
    word = tuple(word)
    for cw in code.codewords():
        if sum(1 for a, c in zip(word, cw) if a != c) <= t:
            return DecodeResult("corrected", cw, cw)
    return DecodeResult("reproduced", word, None)


EVENTS = ("CT", "RC", "FN", "WC", "FP", "PED")


def classify_event(code: SystematicCode, received) -> str:
    """Decoding-event class of a received word, with the zero codeword
    transmitted: CT, RC, FN, WC, FP, or PED.  The six classes are
    exhaustive and mutually exclusive."""
    received = tuple(received)
    k, t = code.params.k, code.params.t
    wt = sum(1 for x in received if x)
    if wt == 0:
        return "CT"
    if wt <= t:
        return "RC"
    res = bdd_decode(code, received)
    if res.status == "corrected":
        return "FN" if res.codeword == received else "WC"
    return "FP" if all(x == 0 for x in received[:k]) else "PED"
