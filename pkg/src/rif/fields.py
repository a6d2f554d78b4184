"""Small finite fields GF(p^e) with table-driven arithmetic.

Elements are the integers 0..q-1; integer x encodes the polynomial whose
coefficient of t^i is the i-th base-p digit of x.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from rif.errors import NotPrimePower


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with q = p**e, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m (coefficient lists, low degree first)."""
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible(m: list[int], p: int) -> bool:
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(m, divisor, p)):
                return False
    return True


def irreducible_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree e over GF(p).

    Candidates are ordered by their coefficient vectors read from the
    constant term upwards.
    """
    if e == 1:
        return (0, 1)
    for low in product(range(p), repeat=e):
        m = list(low) + [1]
        if m[0] and _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    def __init__(self, q: int):
        p, e = prime_power(q)
        self.p, self.e, self.q = p, e, q
        self.modulus = irreducible_modulus(p, e)
        digits = [self._digits(x) for x in range(q)]
        self._add = [[self._pack([(a + b) % p for a, b in zip(da, db)]) for db in digits] for da in digits]
        self._mul = [[self._mul_poly(da, db) for db in digits] for da in digits]
        self._neg = [self._pack([(-a) % p for a in da]) for da in digits]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = next(b for b in range(1, q) if self._mul[a][b] == 1)

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(x % self.p)
            x //= self.p
        return out

    def _pack(self, digits: list[int]) -> int:
        x = 0
        for d in reversed(digits):
            x = x * self.p + d
        return x

    def _mul_poly(self, a: list[int], b: list[int]) -> int:
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        return self._pack(_poly_mod(prod, list(self.modulus), self.p))

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def pow(self, a: int, k: int) -> int:
        out = 1
        for _ in range(k):
            out = self._mul[out][a]
        return out

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, modulus={self.modulus})"


@lru_cache(maxsize=32)
def gf(q: int) -> FiniteField:
    return FiniteField(q)
