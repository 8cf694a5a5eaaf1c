"""Exact dense linear algebra over GF(2^e).

Matrices are plain 2-d ``numpy.uint8`` arrays of field elements; every
function takes the field as its first argument.  Over GF(2) row reduction
runs on bit-packed 64-bit words, which is what keeps the Hom-space systems
of the larger syzygies tractable.  Vectors are columns when a matrix acts
on them (``A @ v``); subspaces store their basis as rows.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .field import GF2e

__all__ = [
    "DimensionError",
    "Subspace",
    "column_space",
    "eye",
    "inverse",
    "kernel_basis",
    "kron",
    "matmul",
    "rank",
    "rank_and_rref",
    "rref",
    "scale",
    "solve",
    "subspace_combine",
    "zeros",
]


class DimensionError(ValueError):
    pass


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.uint8)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def _as_mat(A) -> np.ndarray:
    A = np.asarray(A, dtype=np.uint8)
    if A.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got shape {A.shape}")
    return A


# ---------------------------------------------------------------------------
# products


def _gf2_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    # float64 BLAS is exact here: entries are 0/1 and inner dims stay far below 2^53
    C = A.astype(np.float64) @ B.astype(np.float64)
    return (C.astype(np.int64) & 1).astype(np.uint8)


def matmul(F: GF2e, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product over ``F``; also accepts stacked (batched) operands."""
    A = np.asarray(A, dtype=np.uint8)
    B = np.asarray(B, dtype=np.uint8)
    if A.shape[-1] != B.shape[-2]:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    if F.degree == 1:
        return _gf2_matmul(A, B)
    e = F.degree
    planes_a = [((A >> i) & 1) for i in range(e)]
    planes_b = [((B >> j) & 1) for j in range(e)]
    out_shape = np.broadcast_shapes(A.shape[:-2], B.shape[:-2]) + (A.shape[-2], B.shape[-1])
    out = np.zeros(out_shape, dtype=np.uint8)
    for k in range(2 * e - 1):
        acc = np.zeros(out_shape, dtype=np.uint8)
        for i in range(max(0, k - e + 1), min(k, e - 1) + 1):
            acc ^= _gf2_matmul(planes_a[i], planes_b[k - i])
        out ^= acc * F.tpow[k]
    return out


def scale(F: GF2e, c: int, A: np.ndarray) -> np.ndarray:
    return F.mul_table[int(c), np.asarray(A, dtype=np.uint8)]


def kron(F: GF2e, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = _as_mat(A)
    B = _as_mat(B)
    prod = F.mul_table[A[:, None, :, None], B[None, :, None, :]]
    return prod.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


# ---------------------------------------------------------------------------
# row reduction


def _pack(A: np.ndarray) -> np.ndarray:
    m, n = A.shape
    words = max(1, (n + 63) // 64)
    padded = np.zeros((m, words * 64), dtype=np.uint8)
    padded[:, :n] = A
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64).copy()


def _unpack(P: np.ndarray, n: int) -> np.ndarray:
    m = P.shape[0]
    bits = np.unpackbits(P.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :n].reshape(m, n).copy()


def _rref_gf2(A: np.ndarray, ncols: int) -> tuple[np.ndarray, list[int]]:
    m, n = A.shape
    P = _pack(A)
    pivots: list[int] = []
    r = 0
    one = np.uint64(1)
    for c in range(ncols):
        if r == m:
            break
        w, b = divmod(c, 64)
        shift = np.uint64(b)
        col = (P[r:, w] >> shift) & one
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            P[[r, p]] = P[[p, r]]
        hit = (P[:, w] >> shift) & one
        hit[r] = 0
        rows = np.flatnonzero(hit)
        if rows.size:
            P[rows, w:] ^= P[r, w:]
        pivots.append(c)
        r += 1
    return _unpack(P, n), pivots


def _rref_generic(F: GF2e, A: np.ndarray, ncols: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy()
    m, n = A.shape
    mul, inv = F.mul_table, F.inv_table
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r, c:] = mul[inv[A[r, c]], A[r, c:]]
        rows = np.flatnonzero(A[:, c])
        rows = rows[rows != r]
        if rows.size:
            A[rows, c:] ^= mul[A[rows, c][:, None], A[r, c:][None, :]]
        pivots.append(c)
        r += 1
    return A, pivots


def rref(F: GF2e, A: np.ndarray, ncols: Optional[int] = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns.

    Pivots are searched only among the first ``ncols`` columns (all by
    default); the remaining columns ride along, which is how augmented
    systems are solved.  The returned matrix has the input's shape.
    """
    A = _as_mat(A)
    ncols = A.shape[1] if ncols is None else ncols
    if A.size == 0:
        return A.copy(), []
    if F.degree == 1:
        return _rref_gf2(A, ncols)
    return _rref_generic(F, A, ncols)


def rank_and_rref(F: GF2e, A: np.ndarray) -> tuple[int, np.ndarray]:
    R, piv = rref(F, A)
    return len(piv), R


def rank(F: GF2e, A: np.ndarray) -> int:
    A = _as_mat(A)
    # fewer pivot searches on the short side
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(rref(F, A)[1])


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of ``F^n`` held as its unique reduced row-echelon basis.

    Equality of subspaces is therefore equality of basis arrays.
    ``coordinates`` reads off coefficients at the pivot columns, which is
    valid for vectors known to lie in the subspace.
    """

    def __init__(self, field: GF2e, ambient_dim: int, rows=None, _reduced: bool = False):
        self.field = field
        self.ambient_dim = int(ambient_dim)
        if rows is None:
            rows = zeros(0, self.ambient_dim)
        rows = np.asarray(rows, dtype=np.uint8)
        rows = rows.reshape(-1, self.ambient_dim) if self.ambient_dim else zeros(0, 0)
        if _reduced:
            self.basis = rows
            self.pivots = [int(np.flatnonzero(r)[0]) for r in rows]
        else:
            R, piv = rref(field, rows)
            self.basis = R[: len(piv)]
            self.pivots = piv

    @classmethod
    def full(cls, field: GF2e, n: int) -> "Subspace":
        return cls(field, n, eye(n), _reduced=True)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and other.field == self.field
            and other.ambient_dim == self.ambient_dim
            and np.array_equal(other.basis, self.basis)
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _rows(self, vectors) -> np.ndarray:
        V = np.asarray(vectors, dtype=np.uint8)
        if self.ambient_dim == 0:
            return zeros(V.shape[0] if V.ndim == 2 else 0, 0)
        return V.reshape(-1, self.ambient_dim)

    def _check(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim or other.field != self.field:
            raise DimensionError(
                f"ambient mismatch: {self.ambient_dim} over {self.field!r} vs "
                f"{other.ambient_dim} over {other.field!r}"
            )

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.ambient_dim, np.vstack([self.basis, other.basis]))

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.field, self.ambient_dim)
        # x A = y B  <=>  [A; B]^T (x, y) = 0
        stacked = np.vstack([self.basis, other.basis]).T
        ker = kernel_basis(self.field, stacked).basis
        vecs = matmul(self.field, ker[:, : self.dim], self.basis)
        return Subspace(self.field, self.ambient_dim, vecs)

    def contains(self, vectors) -> bool:
        """True when every row of ``vectors`` lies in the subspace."""
        V = self._rows(vectors)
        if V.shape[0] == 0:
            return True
        return (self + Subspace(self.field, self.ambient_dim, V)).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return other.contains(self.basis)

    def coordinates(self, vectors) -> np.ndarray:
        """Coefficients (one row per input row) in terms of ``basis``."""
        V = self._rows(vectors)
        return V[:, self.pivots]

    def complement_basis(self, candidates) -> np.ndarray:
        """Rows of ``candidates`` that greedily extend this subspace, in order."""
        C = self._rows(candidates)
        stacked = np.vstack([self.basis, C])
        # pivots of the transposed stack pick out the independent rows in order
        _, piv = rref(self.field, stacked.T)
        chosen = [p - self.dim for p in piv if p >= self.dim]
        return C[chosen]


def subspace_combine(a: Subspace, b: Subspace, mode: str = "sum") -> Subspace:
    if mode == "sum":
        return a + b
    if mode == "intersection":
        return a & b
    raise ValueError(f"mode must be 'sum' or 'intersection', got {mode!r}")


def column_space(F: GF2e, A: np.ndarray) -> Subspace:
    A = _as_mat(A)
    return Subspace(F, A.shape[0], A.T)


def kernel_basis(F: GF2e, A: np.ndarray) -> Subspace:
    """Solution space of ``A v = 0`` as a subspace of ``F^cols``."""
    A = _as_mat(A)
    m, n = A.shape
    if m == 0:
        return Subspace.full(F, n)
    R, piv = rref(F, A)
    free = [c for c in range(n) if c not in set(piv)]
    basis = zeros(len(free), n)
    for k, f in enumerate(free):
        basis[k, f] = 1
        # characteristic 2: -x = x
        basis[k, piv] = R[: len(piv), f]
    return Subspace(F, n, basis)


def solve(F: GF2e, A: np.ndarray, B: np.ndarray) -> Optional[np.ndarray]:
    """A particular solution ``S`` of ``A S = B``, or ``None`` if there is none.

    Free variables are set to zero, so the answer is deterministic.
    """
    A = _as_mat(A)
    B = np.asarray(B, dtype=np.uint8)
    vector = B.ndim == 1
    if vector:
        B = B[:, None]
    if A.shape[0] != B.shape[0]:
        raise DimensionError(f"row mismatch: A has {A.shape[0]} rows, B has {B.shape[0]}")
    m, n = A.shape
    k = B.shape[1]
    R, piv = rref(F, np.hstack([A, B]), ncols=n)
    r = len(piv)
    if np.any(R[r:, n:]):
        return None
    S = zeros(n, k)
    S[piv, :] = R[:r, n:]
    return S[:, 0] if vector else S


def inverse(F: GF2e, A: np.ndarray) -> np.ndarray:
    A = _as_mat(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DimensionError(f"inverse of non-square matrix {A.shape}")
    R, piv = rref(F, np.hstack([A, eye(n)]), ncols=n)
    if len(piv) != n:
        raise np.linalg.LinAlgError("matrix is singular")
    return R[:, n:].copy()
