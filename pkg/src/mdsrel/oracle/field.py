"""Small finite fields with deterministic, table-backed arithmetic.

Prime fields use modular arithmetic directly; binary extension fields
GF(2^b), b <= 8, use full multiplication tables built from fixed reduction
polynomials so every table, count, and seed downstream is reproducible
bit-for-bit.
"""
from __future__ import annotations

# reduction polynomials, bit-encoded with the leading term included
MODULI = {
    4: 0b111,            # x^2 + x + 1
    8: 0b1011,           # x^3 + x + 1
    16: 0b10011,         # x^4 + x + 1
    32: 0b100101,        # x^5 + x^2 + 1
    64: 0b1000011,       # x^6 + x + 1
    128: 0b10000011,     # x^7 + x + 1
    256: 0b100011011,    # x^8 + x^4 + x^3 + x + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class FiniteField:
    """Field of order q, elements encoded as integers 0..q-1."""

    def __init__(self, q: int, kind: str, b: int | None = None,
                 modulus: int | None = None):
        self.q = q
        self.kind = kind
        self.b = b
        self.modulus = modulus
        if kind == "binary":
            self._mul = [[self._polymul(a, c) for c in range(q)] for a in range(q)]
            self._inv = [0] * q
            for a in range(1, q):
                self._inv[a] = next(x for x in range(1, q) if self._mul[a][x] == 1)

    def _polymul(self, a: int, c: int) -> int:
        r = 0
        while c:
            if c & 1:
                r ^= a
            c >>= 1
            a <<= 1
            if a & self.q:
                a ^= self.modulus
        return r

    def add(self, a: int, c: int) -> int:
        return a ^ c if self.kind == "binary" else (a + c) % self.q

    def sub(self, a: int, c: int) -> int:
        return a ^ c if self.kind == "binary" else (a - c) % self.q

    def neg(self, a: int) -> int:
        return a if self.kind == "binary" else (-a) % self.q

    def mul(self, a: int, c: int) -> int:
        return self._mul[a][c] if self.kind == "binary" else (a * c) % self.q

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._inv[a] if self.kind == "binary" else pow(a, self.q - 2, self.q)

    def div(self, a: int, c: int) -> int:
        return self.mul(a, self.inv(c))

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self):
        return f"FiniteField(q={self.q}, kind={self.kind!r})"


def make_field(q: int) -> FiniteField:
    """Field of order q, for q prime or q = 2^b with b <= 8."""
    if q in MODULI:
        return FiniteField(q, "binary", b=q.bit_length() - 1, modulus=MODULI[q])
    if q == 2:
        return FiniteField(2, "prime")
    if _is_prime(q):
        return FiniteField(q, "prime")
    raise ValueError(f"unsupported field order {q}: need a prime or 2^b, b <= 8")
