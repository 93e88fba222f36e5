"""Split-weight codeword counts for q-ary MDS codes.

Counts codewords by (information weight i, redundancy weight j) for a
systematic [n, k] MDS code over an alphabet of size q, via three
independent formulas (a closed form, an inclusion-exclusion form built on
the totally-non-zero solution counts, and the two-block partition weight
enumerator), plus the plain weight distribution three ways.  All values
are exact integers; the formulas are purely combinatorial in (n, k, q),
so no field construction is involved here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

from .combinatorics import binom, int_pow


@dataclass(frozen=True)
class CodeParams:
    """Parameters of an [n, k] MDS code over an alphabet of size q.

    ``b`` is the optional symbol width in bits (q = 2**b); leave it None
    for alphabets that are not a power of two, which disables bit-level
    rate computations downstream.
    """

    n: int
    k: int
    q: int
    b: int | None = None

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        if self.q < 2:
            raise ValueError(f"need q >= 2, got q={self.q}")
        if self.b is not None and self.q != 2**self.b:
            raise ValueError(f"q={self.q} is not 2**b for b={self.b}")

    @property
    def d(self) -> int:
        """Minimum distance n - k + 1."""
        return self.n - self.k + 1

    @property
    def t(self) -> int:
        """Correction radius floor((n - k) / 2)."""
        return (self.n - self.k) // 2


@cache
def _tnz(q: int, i: int, j: int) -> int:
    if j == 0:
        # zero equations: every coordinate free and non-zero
        return int_pow(q - 1, i)
    if i <= j:
        return 0
    return int_pow(q - 1, i - j) - sum(
        binom(j, h) * _tnz(q, i - h, j) for h in range(1, j + 1)
    )


def totally_nonzero_recursive(q: int, i: int, j: int) -> int:
    """Count of totally non-zero solutions of an i-variable, j-equation
    homogeneous system whose coefficient matrix has totally full rank,
    by the subtraction recurrence.  Memoized on (q, i, j).
    """
    if i < 0 or j < 0 or q < 2:
        raise ValueError(f"need i, j >= 0 and q >= 2, got i={i}, j={j}, q={q}")
    return _tnz(q, i, j)


def totally_nonzero_closed(q: int, i: int, j: int) -> int:
    """Same count as :func:`totally_nonzero_recursive`, by the alternating
    closed form; the empty sum (i <= j) is 0.
    """
    if i < 0 or j < 0 or q < 2:
        raise ValueError(f"need i, j >= 0 and q >= 2, got i={i}, j={j}, q={q}")
    if j == 0:
        return int_pow(q - 1, i)
    return sum(
        (-1) ** l * binom(j + l - 1, l) * int_pow(q - 1, i - j - l)
        for l in range(i - j)
    )


def _check_cell(params: CodeParams, i: int, j: int) -> None:
    if not (0 <= i <= params.k and 0 <= j <= params.n - params.k):
        raise ValueError(f"split weight ({i},{j}) outside [0,{params.k}]x[0,{params.n - params.k}]")


def irwe_inclusion_exclusion(params: CodeParams, i: int, j: int) -> int:
    """A_{i,j} via inclusion-exclusion over the redundancy coordinates
    forced to zero, on top of the totally-non-zero counts.
    """
    _check_cell(params, i, j)
    if i == 0:
        return 1 if j == 0 else 0
    n, k, q = params.n, params.k, params.q
    s = sum(
        (-1) ** l * binom(j, l) * _tnz(q, i, n - k - j + l) for l in range(j + 1)
    )
    return binom(k, i) * binom(n - k, j) * s


def irwe_closed(params: CodeParams, i: int, j: int) -> int:
    """A_{i,j} in closed form (single alternating sum); empty sum is 0."""
    _check_cell(params, i, j)
    if i == 0:
        return 1 if j == 0 else 0
    n, k, q = params.n, params.k, params.q
    s = sum(
        (-1) ** h * binom(n - k + h - 1, h) * int_pow(q - 1, i - n + k + j - h)
        for h in range(i - n + k + j)
    )
    return binom(k, i) * binom(n - k, j) * s


def pwe_two_block(params: CodeParams, i: int, j: int) -> int:
    """A_{i,j} via the partition weight enumerator specialized to the
    (information, redundancy) two-block partition: a double alternating
    sum with the (q**(k - n + j1 + j2) - 1) kernel.  Contractually equal
    to :func:`irwe_closed` everywhere (i = 0 uses the same delta
    convention; the literal double sum is empty there).
    """
    _check_cell(params, i, j)
    if i == 0:
        return 1 if j == 0 else 0
    n, k, q, d = params.n, params.k, params.q, params.d
    total = 0
    for j1 in range(i + 1):
        inner = 0
        for j2 in range(max(0, d - j1), j + 1):
            inner += (
                binom(j, j2) * (-1) ** (j - j2) * (q ** (k - n + j1 + j2) - 1)
            )
        total += binom(i, j1) * (-1) ** (i - j1) * inner
    return binom(k, i) * binom(n - k, j) * total


@dataclass(frozen=True)
class IrweTable:
    """Exact (k+1) x (n-k+1) grid of codeword counts by split weight."""

    params: CodeParams
    counts: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def compute(cls, params: CodeParams) -> "IrweTable":
        grid = tuple(
            tuple(irwe_closed(params, i, j) for j in range(params.n - params.k + 1))
            for i in range(params.k + 1)
        )
        return cls(params, grid)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.counts[i][j]

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def validate(self) -> None:
        """Raise on any violated structural invariant of the table."""
        p = self.params
        if self.counts[0][0] != 1:
            raise AssertionError("A_{0,0} != 1")
        for j in range(1, p.n - p.k + 1):
            if self.counts[0][j] != 0:
                raise AssertionError(f"A_{{0,{j}}} != 0")
        for i in range(p.k + 1):
            for j in range(p.n - p.k + 1):
                a = self.counts[i][j]
                if a < 0:
                    raise AssertionError(f"A_{{{i},{j}}} < 0")
                if 0 < i + j <= p.n - p.k and a != 0:
                    raise AssertionError(f"A_{{{i},{j}}} != 0 below minimum distance")
        if self.total() != p.q**p.k:
            raise AssertionError(f"sum A_ij = {self.total()} != q^k = {p.q ** p.k}")

    def nonzero_splits(self) -> list[tuple[int, int]]:
        """Split weights (c1, c2) with at least one codeword, in row order."""
        p = self.params
        return [
            (i, j)
            for i in range(p.k + 1)
            for j in range(p.n - p.k + 1)
            if self.counts[i][j] > 0
        ]


WD_METHODS = ("marginal", "mds-formula", "corollary")


def weight_distribution(params: CodeParams, method: str = "mds-formula") -> list[int]:
    """Weight distribution A_0..A_n of the MDS code, by the requested method.

    ``marginal`` sums the split-weight table along anti-diagonals,
    ``mds-formula`` evaluates the classical two-sum expression, and
    ``corollary`` evaluates the (q-1)-power alternating sum; all three
    agree (A_0 = 1 is a stated special case of the latter).
    """
    n, k, q, d = params.n, params.k, params.q, params.d
    if method == "marginal":
        return [
            sum(
                irwe_closed(params, i, r - i)
                for i in range(max(0, r - (n - k)), min(r, k) + 1)
            )
            for r in range(n + 1)
        ]
    if method == "mds-formula":
        out = [1] + [0] * n
        for r in range(d, n + 1):
            head = sum(
                (-1) ** j * binom(r, j) * q ** (r - j + 1 - d) for j in range(r - d + 1)
            )
            tail = sum((-1) ** j * binom(r, j) for j in range(r - d + 1, r + 1))
            out[r] = binom(n, r) * (head + tail)
        return out
    if method == "corollary":
        out = [1] + [0] * n
        for r in range(1, n + 1):
            out[r] = binom(n, r) * sum(
                (-1) ** h * binom(n - k + h - 1, h) * int_pow(q - 1, r - n + k - h)
                for h in range(r - n + k)
            )
        return out
    raise ValueError(f"unknown method {method!r}, expected one of {WD_METHODS}")
