"""Finite fields GF(p^e) with table arithmetic.

An element is an integer ``0 <= a < q`` whose base-p digits are the
coefficients of a polynomial in the defining root ``x`` (least significant
digit = constant term). Tables are precomputed, which keeps every operation
an array lookup; fields beyond a few thousand elements are not intended.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np
from sympy import factorint, isprime

# Monic defining polynomials, coefficients from constant term upward.
DEFINING_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),                    # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),                 # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),              # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),           # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 1, 1, 0, 1),        # x^6 + x^4 + x^3 + x + 1
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),     # x^7 + x + 1
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),  # x^8 + x^4 + x^3 + x^2 + 1
    (3, 2): (2, 1, 1),                    # x^2 + x + 2
    (3, 3): (1, 2, 0, 1),                 # x^3 + 2x + 1
    (3, 4): (2, 0, 0, 2, 1),              # x^4 + 2x^3 + 2
    (3, 5): (1, 2, 0, 0, 0, 1),           # x^5 + 2x + 1
    (5, 2): (2, 4, 1),                    # x^2 + 4x + 2
    (5, 3): (3, 3, 0, 1),                 # x^3 + 3x + 3
    (7, 2): (3, 6, 1),                    # x^2 + 6x + 3
}


def _polymulmod(a, b, poly, p):
    e = len(poly) - 1
    prod_ = [0] * (2 * e - 1 if e > 0 else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod_[i + j] = (prod_[i + j] + ai * bj) % p
    for k in range(len(prod_) - 1, e - 1, -1):
        c = prod_[k]
        if c:
            for t in range(e + 1):
                prod_[k - e + t] = (prod_[k - e + t] - c * poly[t]) % p
    return prod_[:e]


def _is_irreducible(poly, p) -> bool:
    """Brute-force irreducibility: no monic factor of degree <= e/2."""
    e = len(poly) - 1
    for d in range(1, e // 2 + 1):
        for coeffs in product(range(p), repeat=d):
            f = list(coeffs) + [1]
            # polynomial remainder of poly by f
            r = list(poly)
            for k in range(e, d - 1, -1):
                c = r[k]
                if c:
                    for t in range(d + 1):
                        r[k - d + t] = (r[k - d + t] - c * f[t]) % p
            if not any(r[:d]):
                return False
    return True


class FiniteField:
    """GF(p^e) with a fixed defining polynomial and primitive element."""

    def __init__(self, p: int, e: int = 1, poly: tuple[int, ...] | None = None):
        if not isprime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = q = p**e
        if e == 1:
            poly = (0, 1)
        elif poly is None:
            poly = DEFINING_POLYNOMIALS.get((p, e)) or _least_primitive_polynomial(p, e)
        poly = tuple(poly)
        if len(poly) != e + 1 or poly[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree e")
        if e > 1 and not _is_irreducible(poly, p):
            raise ValueError(f"polynomial {poly} is reducible over GF({p})")
        self.poly = poly

        digits = np.array([[(a // p**i) % p for i in range(e)] for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(e, dtype=np.int64)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.sub = ((digits[:, None, :] - digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights
        self._weights = weights
        if e > 1 and self._x_is_primitive():
            self.prim = p
            exp, log = self._powers_of(p)
            idx = (log[1:, None] + log[None, 1:]) % (q - 1)
            mul = np.zeros((q, q), dtype=np.int64)
            mul[1:, 1:] = exp[idx]
            self.mul = mul
        else:
            mul = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                da = list(digits[a])
                for b in range(a, q):
                    if e == 1:
                        v = (a * b) % p
                    else:
                        v = int(np.dot(_polymulmod(da, list(digits[b]), poly, p), weights))
                    mul[a, b] = mul[b, a] = v
            self.mul = mul
            self.prim = self._find_primitive()
            exp, log = self._powers_of(self.prim)
        self.exp = exp
        self.log = log
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        self.inv = inv
        self.frob = np.array([self.power(a, p) for a in range(q)], dtype=np.int64)

    def _times_x(self, a: int) -> int:
        d = [0] + self.digits(a)
        c = d[-1]
        d = d[:-1]
        if c:
            d = [(d[t] - c * self.poly[t]) % self.p for t in range(self.e)]
        return self.from_digits(d)

    def _x_is_primitive(self) -> bool:
        x, seen = 1, 0
        while True:
            x = self._times_x(x)
            seen += 1
            if x == 1:
                return seen == self.q - 1

    def _powers_of(self, g: int):
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._times_x(x) if g == self.p and self.e > 1 else int(self.mul[x, g])
        return exp, log

    def _find_primitive(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        factors = list(factorint(n))
        candidates = ([self.p] if self.e > 1 else []) + list(range(2, self.q))
        for g in candidates:
            if all(self._pow_raw(g, n // r) != 1 for r in factors):
                return g
        raise AssertionError("no primitive element found")

    def _pow_raw(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    def power(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k > 0 else 1
        return int(self.exp[(self.log[a] * k) % (self.q - 1)]) if hasattr(self, "log") else self._pow_raw(a, k)

    def eps(self, k: int = 1) -> int:
        """The k-th power of the primitive element."""
        return int(self.exp[k % (self.q - 1)])

    def order_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        from math import gcd
        return n // gcd(n, int(self.log[a]))

    def elements(self) -> range:
        return range(self.q)

    def subfield(self, t: int) -> list[int]:
        """Elements of the subfield GF(p^t), t | e."""
        if self.e % t:
            raise ValueError(f"{t} does not divide {self.e}")
        k = (self.q - 1) // (self.p**t - 1)
        return [0] + sorted(self.eps(k * i) for i in range(self.p**t - 1))

    def from_digits(self, digits) -> int:
        return sum(int(d) * self.p**i for i, d in enumerate(digits))

    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.e, self.poly) == (other.p, other.e, other.poly)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.poly))


def _least_primitive_polynomial(p: int, e: int) -> tuple[int, ...]:
    q = p**e
    factors = list(factorint(q - 1))
    for coeffs in product(range(p), repeat=e):
        poly = tuple(coeffs[::-1]) + (1,)
        if poly[0] == 0 or not _is_irreducible(poly, p):
            continue
        # x must have order q - 1 modulo poly
        def xpow(k):
            result = [1] + [0] * (e - 1)
            base = [0, 1] + [0] * (e - 2)
            while k:
                if k & 1:
                    result = _polymulmod(result, base, poly, p)
                base = _polymulmod(base, base, poly, p)
                k >>= 1
            return result
        one = [1] + [0] * (e - 1)
        if all(xpow((q - 1) // r) != one for r in factors):
            return poly
    raise ValueError(f"no primitive polynomial of degree {e} over GF({p})")


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, e) with p^e = q, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, e), = f.items()
    return p, e


@lru_cache(maxsize=None)
def GF(q: int, e: int | None = None) -> FiniteField:
    """Cached field constructor: ``GF(16)`` or ``GF(2, 4)``."""
    if e is None:
        pe = prime_power(q)
        if pe is None:
            raise ValueError(f"{q} is not a prime power")
        return FiniteField(*pe)
    return FiniteField(q, e)
