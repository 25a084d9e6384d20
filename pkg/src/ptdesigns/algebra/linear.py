"""Vectors, matrices and subspaces over a :class:`FiniteField`.

Vectors are row vectors and matrices act on the right, ``x -> x A``, so a
product ``A B`` applies ``A`` first; this matches the left-to-right
convention of :mod:`ptdesigns.permgroup`. The vectors of GF(q)^d are indexed
by reading the coordinates as a base-q numeral, coordinate 0 most
significant.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from ..permgroup import GeneratedGroup, Permutation
from .field import FiniteField


def all_vectors(field: FiniteField, d: int) -> np.ndarray:
    """Array of shape (q^d, d); row i is the vector with index i."""
    q = field.q
    idx = np.arange(q**d, dtype=np.int64)
    cols = [(idx // q ** (d - 1 - j)) % q for j in range(d)]
    return np.stack(cols, axis=1) if d else np.zeros((1, 0), dtype=np.int64)


def vector_index(field: FiniteField, v: Sequence[int]) -> int:
    out = 0
    for x in v:
        out = out * field.q + int(x)
    return out


def vectors_index(field: FiniteField, V: np.ndarray) -> np.ndarray:
    d = V.shape[1]
    w = field.q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return V @ w


def vec_add(field: FiniteField, a, b):
    return field.add[np.asarray(a), np.asarray(b)]


def vecs_times_matrix(field: FiniteField, V: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Row vectors ``V`` (n x d) times ``A`` (d x e) over the field."""
    n, d = V.shape
    e = A.shape[1]
    out = np.zeros((n, e), dtype=np.int64)
    for j in range(e):
        acc = np.zeros(n, dtype=np.int64)
        for i in range(d):
            acc = field.add[acc, field.mul[V[:, i], A[i, j]]]
        out[:, j] = acc
    return out


def rref(field: FiniteField, rows) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon basis (zero rows dropped) as a hashable tuple."""
    M = [list(map(int, r)) for r in rows]
    if not M:
        return ()
    ncols = len(M[0])
    add, mul, inv, neg = field.add, field.mul, field.inv, field.neg
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        s = int(inv[M[r][c]])
        M[r] = [int(mul[s, x]) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = int(neg[M[i][c]])
                M[i] = [int(add[x, mul[f, y]]) for x, y in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return tuple(tuple(row) for row in M[:r])


def rank(field: FiniteField, rows) -> int:
    return len(rref(field, rows))


def span_vectors(field: FiniteField, basis: Sequence[Sequence[int]]) -> np.ndarray:
    """All q^k vectors in the span of ``basis`` (rows)."""
    k = len(basis)
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    B = np.asarray(basis, dtype=np.int64)
    coeffs = all_vectors(field, k)
    return vecs_times_matrix(field, coeffs, B)


def enumerate_subspaces(field: FiniteField, d: int, k: int) -> list[tuple[tuple[int, ...], ...]]:
    """All k-dimensional subspaces of GF(q)^d as RREF bases, sorted."""
    q = field.q
    out = []
    for pivots in combinations(range(d), k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, d) if c not in pivots]
        for vals in product(range(q), repeat=len(free)):
            M = [[0] * d for _ in range(k)]
            for r, c in enumerate(pivots):
                M[r][c] = 1
            for (r, c), x in zip(free, vals):
                M[r][c] = x
            out.append(tuple(tuple(row) for row in M))
    out.sort()
    return out


def gaussian_binomial(d: int, k: int, q: int) -> int:
    if k < 0 or k > d:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


class FqMatrix:
    """A matrix over a finite field, immutable."""

    __slots__ = ("field", "entries", "_key")

    def __init__(self, field: FiniteField, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError("matrix entry outside the field")
        arr.setflags(write=False)
        self.field = field
        self.entries = arr
        self._key = (arr.shape, arr.tobytes())

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "FqMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        return FqMatrix(self.field, vecs_times_matrix(self.field, self.entries, other.entries))

    __mul__ = __matmul__

    def __eq__(self, other) -> bool:
        return isinstance(other, FqMatrix) and self._key == other._key and self.field == other.field

    def __hash__(self) -> int:
        return hash(self._key)

    def rank(self) -> int:
        return rank(self.field, self.entries)

    def is_invertible(self) -> bool:
        n, m = self.shape
        return n == m and self.rank() == n

    def inverse(self) -> "FqMatrix":
        n, m = self.shape
        if n != m:
            raise ValueError("only square matrices are invertible")
        aug = np.concatenate([self.entries, np.eye(n, dtype=np.int64)], axis=1)
        R = rref(self.field, aug)
        if len(R) < n or any(R[i][i] != 1 for i in range(n)) or any(R[i][j] for i in range(n) for j in range(n) if i != j):
            raise ValueError("matrix is singular")
        return FqMatrix(self.field, [row[n:] for row in R])

    def det(self) -> int:
        F = self.field
        M = [list(map(int, r)) for r in self.entries]
        n = len(M)
        det = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if M[i][c]), None)
            if piv is None:
                return 0
            if piv != c:
                M[c], M[piv] = M[piv], M[c]
                det = int(F.neg[det])
            det = int(F.mul[det, M[c][c]])
            s = int(F.inv[M[c][c]])
            for i in range(c + 1, n):
                if M[i][c]:
                    f = int(F.neg[F.mul[M[i][c], s]])
                    M[i] = [int(F.add[x, F.mul[f, y]]) for x, y in zip(M[i], M[c])]
        return det

    def frobenius(self, k: int = 1) -> "FqMatrix":
        """Entrywise x -> x^(p^k)."""
        arr = self.entries
        for _ in range(k):
            arr = self.field.frob[arr]
        return FqMatrix(self.field, arr)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(vecs_times_matrix(self.field, np.asarray([v], dtype=np.int64), self.entries)[0])

    def __repr__(self) -> str:
        return f"FqMatrix({self.field}, {self.entries.tolist()})"


def elementary(field: FiniteField, n: int, i: int, j: int, a: int) -> FqMatrix:
    M = np.eye(n, dtype=np.int64)
    M[i, j] = a
    return FqMatrix(field, M)


def diagonal(field: FiniteField, entries: Sequence[int]) -> FqMatrix:
    return FqMatrix(field, np.diag(np.asarray(entries, dtype=np.int64)))


class MatrixGroup:
    """A group of invertible d x d matrices over a field, with its actions.

    ``frobenius`` adds the field automorphism x -> x^p acting coordinatewise,
    which turns the linear group into a semilinear one; semilinear elements
    only ever exist as permutations of the chosen object set.
    """

    def __init__(self, field: FiniteField, dim: int, generators: Iterable[FqMatrix], label: str = "", frobenius: bool = False):
        self.field = field
        self.dim = dim
        self.generators = tuple(generators)
        for g in self.generators:
            if g.shape != (dim, dim):
                raise ValueError("generator has the wrong shape")
        self.label = label
        self.frobenius = frobenius and field.e > 1

    def __repr__(self) -> str:
        return f"<MatrixGroup {self.label!r} {self.field} dim={self.dim} gens={len(self.generators)}>"

    @cached_property
    def vectors(self) -> np.ndarray:
        return all_vectors(self.field, self.dim)

    def vector_permutation(self, A: FqMatrix) -> Permutation:
        img = vecs_times_matrix(self.field, self.vectors, A.entries)
        return Permutation(vectors_index(self.field, img), check=False)

    def frobenius_vector_permutation(self) -> Permutation:
        img = self.field.frob[self.vectors]
        return Permutation(vectors_index(self.field, img), check=False)

    def _vector_perms(self) -> list[Permutation]:
        perms = [self.vector_permutation(A) for A in self.generators]
        if self.frobenius:
            perms.append(self.frobenius_vector_permutation())
        return perms

    def on_vectors(self, label: str | None = None) -> GeneratedGroup:
        return GeneratedGroup(self.field.q**self.dim, self._vector_perms(), label or self.label)

    def on_nonzero_vectors(self, label: str | None = None) -> GeneratedGroup:
        n = self.field.q**self.dim
        return GeneratedGroup(n - 1, [Permutation([g(i) - 1 for i in range(1, n)]) for g in self._vector_perms()],
                              label or self.label)

    def affine(self, label: str | None = None) -> GeneratedGroup:
        """Translations together with the linear part, acting on vectors."""
        F = self.field
        perms = self._vector_perms()
        for i in range(self.dim):
            for a in (F.p**s for s in range(F.e)):
                t = np.zeros(self.dim, dtype=np.int64)
                t[i] = a
                img = F.add[self.vectors, t[None, :]]
                perms.append(Permutation(vectors_index(F, img), check=False))
        return GeneratedGroup(F.q**self.dim, perms, label or f"{F.q}^{self.dim}:{self.label}")

    def on_subspaces(self, subspaces: Sequence[tuple], label: str | None = None) -> GeneratedGroup:
        """Action on a list of subspaces (RREF bases); the list must be invariant."""
        index = {s: i for i, s in enumerate(subspaces)}
        perms = []
        mats = [A.entries for A in self.generators]
        for A in mats:
            perms.append(Permutation([index[rref(self.field, vecs_times_matrix(self.field, np.asarray(s), A))]
                                      for s in subspaces]))
        if self.frobenius:
            perms.append(Permutation([index[rref(self.field, self.field.frob[np.asarray(s)])]
                                      for s in subspaces]))
        return GeneratedGroup(len(subspaces), perms, label or self.label)

    def subspace_image(self, subspace, A: FqMatrix):
        return rref(self.field, vecs_times_matrix(self.field, np.asarray(subspace), A.entries))

    def order(self) -> int:
        return self.on_vectors().order()


def general_linear(field: FiniteField, n: int) -> MatrixGroup:
    return MatrixGroup(field, n, _sl_generators(field, n) + [_gl_extra(field, n)], f"GL({n},{field.q})")


def special_linear(field: FiniteField, n: int) -> MatrixGroup:
    return MatrixGroup(field, n, _sl_generators(field, n), f"SL({n},{field.q})")


def semilinear(field: FiniteField, n: int) -> MatrixGroup:
    return MatrixGroup(field, n, _sl_generators(field, n) + [_gl_extra(field, n)], f"GammaL({n},{field.q})",
                       frobenius=True)


def _gl_extra(field: FiniteField, n: int) -> FqMatrix:
    return diagonal(field, [field.prim] + [1] * (n - 1))


def _sl_generators(field: FiniteField, n: int) -> list[FqMatrix]:
    """Transvections I + a E_{01} (a over a GF(p)-basis) and a signed n-cycle."""
    if n == 1:
        return []
    gens = [elementary(field, n, 0, 1, field.eps(k) if k else 1) for k in range(field.e)]
    W = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        W[i, i + 1] = 1
    W[n - 1, 0] = int(field.neg[1]) if n % 2 == 0 else 1
    gens.append(FqMatrix(field, W))
    return gens


def restrict_scalars(M: FqMatrix, base: FiniteField) -> FqMatrix:
    """Matrix over GF(p^e) as a (de x de) matrix over the prime field.

    Coordinates of GF(p^e) use the digit basis 1, x, ..., x^(e-1) of the
    field's integer encoding, so vector (a_1..a_d) becomes the concatenated
    digit lists of a_1, ..., a_d.
    """
    F = M.field
    if base.q != F.p or base.e != 1:
        raise ValueError("base must be the prime subfield")
    d = M.shape[0]
    e = F.e
    out = np.zeros((d * e, d * e), dtype=np.int64)
    for i in range(d):
        for s in range(e):
            basis_elem = F.p**s
            row = [int(F.mul[basis_elem, M.entries[i, j]]) for j in range(d)]
            digits = [dg for a in row for dg in F.digits(a)]
            out[i * e + s] = digits
    return FqMatrix(base, out)


def scalars_to_prime_field(F: FiniteField, v: Sequence[int]) -> list[int]:
    return [dg for a in v for dg in F.digits(a)]
