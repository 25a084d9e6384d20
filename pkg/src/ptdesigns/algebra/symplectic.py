"""Symplectic groups and quadratic forms over GF(2).

The fixed alternating form on GF(q)^{2n} pairs coordinates (0,1), (2,3), ...:
``B(x, y) = sum_i x[2i] y[2i+1] - x[2i+1] y[2i]``. Quadratic forms on
GF(2)^{2m} polarising to it are ``Q_a(x) = sum_i x[2i] x[2i+1] + a.x``,
one for each vector ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod

import numpy as np

from ..permgroup import GeneratedGroup, Permutation
from .field import GF, FiniteField
from .linear import FqMatrix, MatrixGroup, all_vectors, restrict_scalars, vecs_times_matrix, vectors_index


def symplectic_order(n: int, q: int) -> int:
    """|Sp(2n, q)|."""
    return q ** (n * n) * prod(q ** (2 * i) - 1 for i in range(1, n + 1))


def standard_gram(field: FiniteField, n: int) -> np.ndarray:
    J = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = int(field.neg[1])
    return J


def _transvection(field: FiniteField, J: np.ndarray, v, lam: int) -> FqMatrix:
    # x -> x + lam * B(x, v) * v, with B(x, v) = x J v^T
    d = len(v)
    col = vecs_times_matrix(field, J, np.asarray(v, dtype=np.int64).reshape(d, 1))[:, 0]
    M = np.eye(d, dtype=np.int64)
    for i in range(d):
        for j in range(d):
            t = int(field.mul[field.mul[lam, col[i]], v[j]])
            M[i, j] = int(field.add[M[i, j], t])
    return FqMatrix(field, M)


def symplectic_matrices(n: int, field: FiniteField) -> MatrixGroup:
    """Sp(2n, q) generated by transvections.

    Transvection vectors are the basis vectors e_i and the sums e_i + e_j
    (i < j); scalars run over 1 and the primitive element.
    """
    d = 2 * n
    J = standard_gram(field, n)
    vecs = []
    for i in range(d):
        v = [0] * d
        v[i] = 1
        vecs.append(v)
    for i in range(d):
        for j in range(i + 1, d):
            v = [0] * d
            v[i] = v[j] = 1
            vecs.append(v)
    scalars = [1] if field.q == 2 else [1, field.prim]
    gens = [_transvection(field, J, v, lam) for v in vecs for lam in scalars]
    return MatrixGroup(field, d, gens, f"Sp({d},{field.q})")


def _symplectic_basis(field: FiniteField, gram: np.ndarray) -> np.ndarray:
    """Rows p_0..p_{d-1} with B(p_{2i}, p_{2i+1}) = 1 and all other pairs orthogonal.

    ``gram`` must be alternating and non-degenerate over a field of
    characteristic 2.
    """
    d = gram.shape[0]

    def B(x, y):
        return int(vecs_times_matrix(field, vecs_times_matrix(field, x[None, :], gram), y[:, None])[0, 0])

    remaining = [np.eye(d, dtype=np.int64)[i] for i in range(d)]
    basis = []
    while remaining:
        x = remaining.pop(0)
        if not x.any():
            continue
        partner = next((k for k, y in enumerate(remaining) if B(x, y)), None)
        if partner is None:
            raise ValueError("form is degenerate")
        y = remaining.pop(partner)
        s = int(field.inv[B(x, y)])
        y = field.mul[s, y]
        basis.extend([x, y])
        new = []
        for z in remaining:
            # z - B(z, y) x + B(z, x) y  (characteristic 2, so signs drop)
            a, b = B(z, y), B(z, x)
            z = field.add[z, field.mul[a, x]]
            z = field.add[z, field.mul[b, y]]
            new.append(z)
        remaining = new
    return np.asarray(basis, dtype=np.int64)


def embedded_symplectic(m: int, e: int = 1) -> MatrixGroup:
    """Sp(2m/e, 2^e) as a subgroup of Sp(2m, 2) preserving the fixed form.

    The GF(2^e)-group is written over GF(2) by restriction of scalars; it
    then preserves Tr(B), which a change of basis carries to the fixed
    form.
    """
    if m % e:
        raise ValueError(f"e={e} does not divide m={m}")
    F2 = GF(2)
    if e == 1:
        return symplectic_matrices(m, F2)
    Fq = GF(2, e)
    n = m // e
    big = symplectic_matrices(n, Fq)
    gens = [restrict_scalars(A, F2) for A in big.generators]
    # Gram matrix of Tr(B) on GF(2)^{2m}
    d = 2 * m
    basis = np.eye(d, dtype=np.int64)
    Jq = standard_gram(Fq, n)

    def lift(row):
        return [Fq.from_digits(row[i * e:(i + 1) * e]) for i in range(2 * n)]

    def trace(a):
        t, x = 0, a
        for _ in range(e):
            t = int(Fq.add[t, x])
            x = int(Fq.frob[x])
        return t

    gram = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        xi = np.asarray(lift(basis[i]))
        xJ = vecs_times_matrix(Fq, xi[None, :], Jq)[0]
        for j in range(d):
            yj = np.asarray(lift(basis[j]))
            val = 0
            for a, b in zip(xJ, yj):
                val = int(Fq.add[val, Fq.mul[a, b]])
            gram[i, j] = trace(val)
    P = FqMatrix(F2, _symplectic_basis(F2, gram))
    Pinv = P.inverse()
    # rows of P are a symplectic basis for Tr(B), so P Gram P^T = J and
    # h = P g P^{-1} preserves J
    conj = [P @ g @ Pinv for g in gens]
    return MatrixGroup(F2, d, conj, f"Sp({2 * n},{Fq.q})<Sp({d},2)")


def preserves_form(A: FqMatrix, J: np.ndarray) -> bool:
    F = A.field
    left = vecs_times_matrix(F, vecs_times_matrix(F, A.entries, J), A.entries.T.copy())
    return bool(np.array_equal(left, J))


@dataclass(frozen=True)
class QuadraticForm:
    """Q_a on GF(2)^{2m}, stored as an upper-triangular coefficient bit matrix."""

    m: int
    coeffs: tuple[tuple[int, ...], ...]

    @classmethod
    def standard(cls, m: int, shift=None) -> "QuadraticForm":
        d = 2 * m
        C = [[0] * d for _ in range(d)]
        for i in range(m):
            C[2 * i][2 * i + 1] = 1
        if shift is not None:
            for j, a in enumerate(shift):
                C[j][j] ^= int(a) & 1
        return cls(m, tuple(tuple(r) for r in C))

    @property
    def dim(self) -> int:
        return 2 * self.m

    @property
    def linear_part(self) -> tuple[int, ...]:
        return tuple(self.coeffs[i][i] for i in range(self.dim))

    def __call__(self, x) -> int:
        d = self.dim
        s = 0
        for i in range(d):
            if x[i]:
                for j in range(i, d):
                    if self.coeffs[i][j] and x[j]:
                        s ^= 1
        return s

    @cached_property
    def truth_table(self) -> np.ndarray:
        """Values on all 2^{2m} vectors in index order."""
        V = all_vectors(GF(2), self.dim)
        C = np.asarray(self.coeffs, dtype=np.int64)
        vals = np.einsum("ni,ij,nj->n", V, C, V) % 2
        vals.setflags(write=False)
        return vals

    @property
    def zero_count(self) -> int:
        return int((self.truth_table == 0).sum())

    @property
    def kind(self) -> str:
        """'hyperbolic' or 'elliptic', decided by counting zeros."""
        hyp = 2 ** (2 * self.m - 1) + 2 ** (self.m - 1)
        ell = 2 ** (2 * self.m - 1) - 2 ** (self.m - 1)
        z = self.zero_count
        if z == hyp:
            return "hyperbolic"
        if z == ell:
            return "elliptic"
        raise ValueError(f"zero count {z} fits neither type; form is degenerate")

    def polar(self, x, y) -> int:
        xy = [(a + b) % 2 for a, b in zip(x, y)]
        return self(xy) ^ self(x) ^ self(y)


def fixed_alternating(x, y) -> int:
    return sum(x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i] for i in range(len(x) // 2)) % 2


def forms_polarising(m: int) -> list[QuadraticForm]:
    """All 2^{2m} forms polarising to the fixed form, indexed by their linear part."""
    if m < 1:
        raise ValueError("m must be positive")
    V = all_vectors(GF(2), 2 * m)
    return [QuadraticForm.standard(m, row) for row in V]


class SymplecticGroup:
    """Sp(2m/e, 2^e) <= Sp(2m, 2) with its actions on vectors and forms."""

    def __init__(self, m: int, e: int = 1):
        self.m = m
        self.e = e
        self.matrices = embedded_symplectic(m, e)
        J = standard_gram(GF(2), m)
        for g in self.matrices.generators:
            if not preserves_form(g, J):
                raise AssertionError("generator does not preserve the fixed form")

    @property
    def label(self) -> str:
        return self.matrices.label

    def expected_order(self) -> int:
        return symplectic_order(self.m // self.e, 2**self.e)

    def on_vectors(self) -> GeneratedGroup:
        return self.matrices.on_vectors()

    def affine_on_vectors(self, derived: bool = False) -> GeneratedGroup:
        """2^{2m}:G_0 on the vectors; with ``derived`` G_0 is replaced by G_0'."""
        from ..permgroup import derived_subgroup

        linear = self.on_vectors()
        if derived:
            linear = derived_subgroup(linear)
        F2 = GF(2)
        n = 2**(2 * self.m)
        V = all_vectors(F2, 2 * self.m)
        gens = list(linear.generators)
        for i in range(2 * self.m):
            t = np.zeros(2 * self.m, dtype=np.int64)
            t[i] = 1
            gens.append(Permutation(vectors_index(F2, (V + t) % 2), check=False))
        name = f"2^{2 * self.m}:{self.label}" + ("'" if derived else "")
        return GeneratedGroup(n, gens, name)

    def on_forms(self, forms: list[QuadraticForm] | None = None) -> GeneratedGroup:
        """Action Q -> Q^g with Q^g(x g) = Q(x), computed on truth tables."""
        forms = forms_polarising(self.m) if forms is None else forms
        index = {f.truth_table.tobytes(): i for i, f in enumerate(forms)}
        perms = []
        for pv in self.on_vectors().generators:
            img = np.asarray(pv.images)
            out = []
            for f in forms:
                T = np.empty_like(f.truth_table)
                T[img] = f.truth_table
                out.append(index[T.tobytes()])
            perms.append(Permutation(out))
        return GeneratedGroup(len(forms), perms, f"{self.label} on forms")


def symplectic_group(m: int, e: int = 1) -> SymplecticGroup:
    if m < 1:
        raise ValueError("m must be positive")
    return SymplecticGroup(m, e)
