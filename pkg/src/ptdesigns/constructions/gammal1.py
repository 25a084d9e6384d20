"""Subgroups of GammaL(1, p^d) in standard form, and primitive prime divisors.

With tau: x -> eps*x and sigma: x -> x^p, the element tau^j sigma^t is taken
to be x -> eps^j x^(p^t). On discrete logarithms it is a -> j + a p^t mod
p^d - 1, and tau^i is a -> a + i.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import primefactors

from ..algebra import GF, FqMatrix, MatrixGroup, rref
from ..permgroup import GeneratedGroup, Permutation, orbits


def _divides(a: int, b: int) -> bool:
    return b % a == 0


@dataclass(frozen=True)
class GammaL1Subgroup:
    p: int
    d: int
    i: int
    j: int
    t: int

    def __post_init__(self):
        n = self.p**self.d - 1
        if not (self.i > 0 and _divides(self.i, n)):
            raise ValueError(f"i={self.i} must be positive and divide p^d-1={n}")
        if not (self.t > 0 and _divides(self.t, self.d)):
            raise ValueError(f"t={self.t} must be positive and divide d={self.d}")
        if not 0 <= self.j < self.i:
            raise ValueError(f"j={self.j} must satisfy 0 <= j < i={self.i}")
        if not _divides(self.i, self.j * n // (self.p**self.t - 1)):
            raise ValueError("i must divide j(p^d-1)/(p^t-1)")

    @property
    def q(self) -> int:
        return self.p**self.d

    def log_generators(self) -> list[Permutation]:
        """Generators as permutations of the logarithms 0..q-2."""
        n = self.q - 1
        pt = self.p**self.t
        return [Permutation([(a + self.i) % n for a in range(n)]),
                Permutation([(self.j + a * pt) % n for a in range(n)])]

    def on_nonzero(self) -> GeneratedGroup:
        """Action on the nonzero field elements 1..q-1, computed with field tables."""
        F = GF(self.q)
        n = self.q - 1
        frob_t = [F.power(x, self.p**self.t) for x in range(self.q)]
        ei, ej = F.eps(self.i), F.eps(self.j)
        g1 = [F.mul[ei, x] - 1 for x in range(1, self.q)]
        g2 = [F.mul[ej, frob_t[x]] - 1 for x in range(1, self.q)]
        return GeneratedGroup(n, [Permutation(g1), Permutation(g2)],
                              f"<tau^{self.i}, tau^{self.j} sigma^{self.t}>")


def standard_form_triples(p: int, d: int):
    n = p**d - 1
    for i in (x for x in range(1, n + 1) if n % x == 0):
        for t in (x for x in range(1, d + 1) if d % x == 0):
            for j in range(i):
                if _divides(i, j * n // (p**t - 1)):
                    yield GammaL1Subgroup(p, d, i, j, t)


def gammal1_is_transitive(s: GammaL1Subgroup) -> bool:
    """Transitivity on the nonzero vectors by the arithmetic criterion."""
    if s.i == 1:
        return True
    p, t, i, j = s.p, s.t, s.i, s.j

    def divides_at(k):
        return _divides(i, j * (p**(k * t) - 1) // (p**t - 1))

    if not (j > 0 and divides_at(i)):
        return False
    return not any(divides_at(k) for k in range(2, i))


def gammal1_orbits(s: GammaL1Subgroup) -> list[list[int]]:
    """Orbits on the nonzero field elements, by explicit closure."""
    return orbits(s.q - 1, s.on_nonzero().generators)


def zsigmondy_ppd(p: int, d: int) -> set[int]:
    """Primes dividing p^d - 1 but no p^c - 1 with 0 < c < d."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return {s for s in primefactors(p**d - 1)
            if all((p**c - 1) % s for c in range(1, d))}


# -- matrices ----------------------------------------------------------------


def _linear_map_matrix(F, f) -> FqMatrix:
    """Matrix over GF(p) of an additive map of GF(p^e); row k is f(basis_k)."""
    P = GF(F.p)
    rows = []
    for k in range(F.e):
        basis = F.from_digits([1 if s == k else 0 for s in range(F.e)])
        rows.append(F.digits(f(basis)))
    return FqMatrix(P, rows)


def gammal1_matrices(s: GammaL1Subgroup) -> MatrixGroup:
    """The subgroup as d x d matrices over GF(p), acting on digit vectors."""
    F = GF(s.q)
    pt = s.p**s.t
    ei, ej = F.eps(s.i), F.eps(s.j)
    A = _linear_map_matrix(F, lambda x: F.mul[ei, x])
    B = _linear_map_matrix(F, lambda x: F.mul[ej, F.power(x, pt)])
    return MatrixGroup(GF(s.p), s.d, [A, B], f"<tau^{s.i}, tau^{s.j} sigma^{s.t}> < GL({s.d},{s.p})")


def subfield_subspace(q: int, t: int) -> tuple[tuple[int, ...], ...]:
    """GF(p^t) inside GF(q), as an RREF basis of a GF(p)-subspace of digit vectors."""
    F = GF(q)
    return rref(GF(F.p), [F.digits(x) for x in F.subfield(t)])
