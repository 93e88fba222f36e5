"""Exact integer primitives and the combinatorial identity suite.

Every count in this package is assembled from index-shifted alternating
sums whose out-of-range terms must vanish, so ``binom`` returns 0 for any
argument outside 0 <= r <= a (including negative upper arguments).
"""
from __future__ import annotations

from math import comb
from typing import NamedTuple


def binom(a: int, r: int) -> int:
    """C(a, r), with 0 for r < 0, r > a, or a < 0."""
    if a < 0 or r < 0 or r > a:
        return 0
    return comb(a, r)


def int_pow(base: int, exp: int) -> int:
    """base**exp for exp >= 0, with 0**0 = 1."""
    if exp < 0:
        raise ValueError(f"negative exponent: {exp}")
    return base**exp


class IdentityViolation(NamedTuple):
    identity: str
    args: tuple
    lhs: int
    rhs: int


def identity_suite(bound: int) -> list[IdentityViolation]:
    """Exhaustively check the six binomial identities the count formulas rely on.

    Checks, for all admissible parameter tuples with magnitudes <= bound:
    the Chu-Vandermonde convolution, three product/absorption identities,
    the alternating partial sum, the sum-product identity, and the
    finite-difference annihilation of monomials of degree < alpha.  The
    admissible ranges are the ones where the identities hold under this
    module's out-of-range-is-zero convention (alternating sum needs
    alpha >= 1, sum-product needs beta >= alpha + delta).  Returns the
    (empty, on a correct build) list of violations.
    """
    if not 1 <= bound <= 40:
        raise ValueError(f"bound must be in [1, 40], got {bound}")
    bad: list[IdentityViolation] = []

    def check(name, args, lhs, rhs):
        if lhs != rhs:
            bad.append(IdentityViolation(name, args, lhs, rhs))

    rng = range(bound + 1)
    for a in rng:
        for b in rng:
            for rho in rng:
                lhs = sum(binom(a, kk) * binom(b, rho - kk) for kk in range(rho + 1))
                check("chu_vandermonde", (a, b, rho), lhs, binom(a + b, rho))

    for a in rng:
        for g in rng:
            for kk in rng:
                check("prod_split", (a, g, kk),
                      binom(a, g) * binom(a - g, kk),
                      binom(a, kk) * binom(a - kk, g))
                check("prod_chain", (a, g, kk),
                      binom(a, g) * binom(g, kk),
                      binom(a, kk) * binom(a - kk, g - kk))
        for kk in range(1, bound + 1):
            # integer form of (alpha/kappa) C(alpha-1, kappa-1) = C(alpha, kappa)
            check("absorption", (a, kk),
                  a * binom(a - 1, kk - 1),
                  kk * binom(a, kk))

    for a in range(1, bound + 1):
        for kk in rng:
            lhs = sum((-1) ** g * binom(a, g) for g in range(kk + 1))
            check("alternating_sum", (a, kk), lhs, (-1) ** kk * binom(a - 1, kk))

    for delta in range(1, bound + 1):
        for a in rng:
            for b in range(a + delta, bound + 1):
                rhs = sum(binom(b - delta - kk, a - kk) * binom(delta + kk - 1, kk)
                          for kk in range(a + 1))
                check("sum_product", (delta, a, b), binom(b, a), rhs)

    for a in range(1, bound + 1):
        for deg in range(a):
            lhs = sum((-1) ** (a - d) * binom(a, d) * d**deg for d in range(a + 1))
            check("finite_difference", (a, deg), lhs, 0)

    return bad
