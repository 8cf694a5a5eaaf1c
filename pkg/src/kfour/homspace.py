"""Hom-spaces, fixed points, relative traces and Higman's criterion.

Homomorphisms are computed from a presentation of the source: pick top
generators of M as a module for the subgroup algebra, read off the
relations among the words in those generators, and solve for generator
images in N that satisfy the same relations.  This keeps the linear
systems at (#generators * dim N) unknowns instead of dim M * dim N.

Hom-space elements are flattened column-major when treated as vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import linalg as la
from .kgmod import CHI, KGModule, ModuleError, Subgroup, transversal

__all__ = [
    "FULL",
    "HomSpace",
    "TransferData",
    "chi_transfer_image",
    "fixed_points",
    "flatten",
    "hom_basis",
    "is_equivariant",
    "is_rel_projective",
    "transfer",
    "transfer_vectors",
    "underline_hom_dim",
    "unflatten",
]

FULL = Subgroup.G


def flatten(A: np.ndarray) -> np.ndarray:
    """Column-major flattening of one matrix or a stack of matrices."""
    A = np.asarray(A, dtype=np.uint8)
    if A.ndim == 2:
        return A.T.reshape(-1).copy()
    return np.transpose(A, (0, 2, 1)).reshape(A.shape[0], -1).copy()


def unflatten(v: np.ndarray, rows: int, cols: int) -> np.ndarray:
    v = np.asarray(v, dtype=np.uint8)
    if v.ndim == 1:
        return v.reshape(cols, rows).T.copy()
    return np.transpose(v.reshape(-1, cols, rows), (0, 2, 1)).copy()


@dataclass(frozen=True, eq=False)
class HomSpace:
    source: KGModule
    target: KGModule
    subgroup: Subgroup
    basis: np.ndarray  # (k, dim target, dim source)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def flat(self) -> la.Subspace:
        F = self.source.field
        return la.Subspace(F, self.source.dim * self.target.dim, flatten(self.basis))

    def contains(self, A: np.ndarray) -> bool:
        return self.flat().contains(flatten(A))


def _check_fields(m: KGModule, n: KGModule):
    if m.field != n.field:
        raise ModuleError(f"modules over different fields: {m.field!r} and {n.field!r}")


def _words(ops: list, d: int, F) -> list:
    """All products of subsets of the commuting operators, identity first."""
    words = [la.eye(d)]
    for op in ops:
        words = words + [la.matmul(F, w, op) for w in words]
    return words


def _presentation(m: KGModule, h: Subgroup):
    F = m.field
    ops = m.operators(h)
    words = _words(ops, m.dim, F)
    if ops:
        rad = la.column_space(F, np.hstack(ops))
    else:
        rad = la.Subspace(F, m.dim)
    gens = rad.complement_basis(la.eye(m.dim)).T  # columns
    r = gens.shape[1]
    # W[:, g * nw + w] = word_w * gen_g
    W = la.matmul(F, np.stack(words), gens[None, :, :])  # (nw, d, r)
    W = np.transpose(W, (1, 2, 0)).reshape(m.dim, r * len(words))
    return gens, words, W


def _raw_hom(m: KGModule, n: KGModule, h: Subgroup) -> np.ndarray:
    """Basis of Hom_{kh}(m, n) as a (k, dn, dm) stack, not canonicalized."""
    F = m.field
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return np.zeros((0, dn, dm), dtype=np.uint8)
    gens, words, W = _presentation(m, h)
    r, nw = gens.shape[1], len(words)
    wordsN = np.stack(_words(n.operators(h), dn, F))  # (nw, dn, dn)
    rel = la.kernel_basis(F, W).basis  # (nrel, r*nw); rows c with W c = 0
    nrel = rel.shape[0]
    if nrel:
        # block (rel, g) = sum_w c[g, w] * word_w(N)
        C = rel.reshape(nrel, r, nw)
        blocks = np.zeros((nrel, r, dn, dn), dtype=np.uint8)
        for w in range(nw):
            blocks ^= F.mul_table[C[:, :, w][:, :, None, None], wordsN[w][None, None, :, :]]
        system = np.transpose(blocks, (0, 2, 1, 3)).reshape(nrel * dn, r * dn)
        sols = la.kernel_basis(F, system).basis  # (k, r*dn)
    else:
        sols = la.eye(r * dn)
    k = sols.shape[0]
    if k == 0:
        return np.zeros((0, dn, dm), dtype=np.uint8)
    images = sols.reshape(k, r, dn)  # images[s, g] = image of generator g
    # Psi[s][:, g * nw + w] = word_w(N) images[s, g]
    psi = la.matmul(F, wordsN[None, None], images[:, :, None, :, None])  # (k, r, nw, dn, 1)
    psi = np.transpose(psi[..., 0], (0, 3, 1, 2)).reshape(k, dn, r * nw)
    _, piv = la.rref(F, W)
    Winv = la.inverse(F, W[:, piv])
    return la.matmul(F, psi[:, :, piv], Winv)


def _canonical(F, basis: np.ndarray) -> np.ndarray:
    k, dn, dm = basis.shape
    if k == 0:
        return basis
    sub = la.Subspace(F, dn * dm, flatten(basis))
    return unflatten(sub.basis, dn, dm)


def hom_basis(m: KGModule, n: KGModule, h: Subgroup = FULL) -> HomSpace:
    """Basis of Hom_{kh}(m, n), canonical (reduced echelon in flattened form)."""
    _check_fields(m, n)
    return HomSpace(m, n, h, _canonical(m.field, _raw_hom(m, n, h)))


def is_equivariant(m: KGModule, n: KGModule, A: np.ndarray, h: Subgroup = FULL) -> bool:
    F = m.field
    A = np.asarray(A, dtype=np.uint8)
    if A.shape != (n.dim, m.dim):
        return False
    return all(
        np.array_equal(la.matmul(F, A, a), la.matmul(F, b, A))
        for a, b in zip(m.operators(h), n.operators(h))
    )


def fixed_points(m: KGModule, h: Subgroup = FULL) -> la.Subspace:
    F = m.field
    ops = m.operators(h)
    if not ops:
        return la.Subspace.full(F, m.dim)
    return la.kernel_basis(F, np.vstack(ops))


def _transfer_stack(m: KGModule, n: KGModule, h: Subgroup, betas: np.ndarray) -> np.ndarray:
    F = m.field
    out = np.zeros_like(betas)
    for start in range(0, betas.shape[0], 512):
        chunk = betas[start : start + 512]
        for g in transversal(h):
            # g^{-1} = g for every element of G
            out[start : start + 512] ^= la.matmul(
                F, la.matmul(F, n.action(g), chunk), m.action(g)
            )
    return out


def _effective(chi: frozenset) -> list:
    # Tr_1^G = Tr_H^G Tr_1^H, so the trivial subgroup adds nothing next to an H_i
    if Subgroup.TRIV in chi and chi & CHI:
        chi = chi - {Subgroup.TRIV}
    return sorted(chi, key=lambda s: s.value)


def _transfer_rows(m: KGModule, n: KGModule, chi: frozenset) -> list:
    rows = []
    for h in _effective(chi):
        betas = _raw_hom(m, n, h) if h is not Subgroup.TRIV else _elementary(n.dim, m.dim)
        if betas.shape[0]:
            rows.append(flatten(_transfer_stack(m, n, h, betas)))
    return rows


def transfer(m: KGModule, n: KGModule, h: Subgroup, beta: np.ndarray) -> np.ndarray:
    """Tr_h^G(beta) = sum over a transversal of g beta g^{-1}."""
    _check_fields(m, n)
    if h is FULL:
        raise ValueError("transfer needs a proper subgroup")
    if not is_equivariant(m, n, beta, h):
        raise ModuleError(f"beta is not {h.value}-equivariant")
    return _transfer_stack(m, n, h, np.asarray(beta, dtype=np.uint8)[None])[0]


def transfer_vectors(m: KGModule, h: Subgroup, vectors: np.ndarray) -> np.ndarray:
    """Tr_h^G on vectors (rows of ``vectors``), returned as rows."""
    F = m.field
    V = np.asarray(vectors, dtype=np.uint8).reshape(-1, m.dim)
    out = la.zeros(*V.shape)
    for g in transversal(h):
        out ^= la.matmul(F, V, m.action(g).T)
    return out


@dataclass(frozen=True, eq=False)
class TransferData:
    chi: frozenset
    hom: HomSpace
    image: la.Subspace  # inside the flattened Hom_k(m, n)

    @property
    def underline_dim(self) -> int:
        return self.hom.dim - self.image.dim

    def is_zero_class(self, A: np.ndarray) -> bool:
        return self.image.contains(flatten(A))

    def residue(self, A: np.ndarray) -> np.ndarray:
        """Coordinates of the class of ``A`` in a complement of the image."""
        F = self.hom.source.field
        comp = self.complement()
        if comp.shape[0] == 0:
            return la.zeros(1, 0)[0]
        M = np.vstack([self.image.basis, flatten(comp)])
        x = la.solve(F, M.T, flatten(A))
        if x is None:
            raise ModuleError("map is not in the Hom-space")
        return x[self.image.dim :]

    def complement(self) -> np.ndarray:
        """Basis maps completing the transfer image to the whole Hom-space."""
        rows = self.image.complement_basis(flatten(self.hom.basis))
        return unflatten(rows, self.hom.target.dim, self.hom.source.dim).reshape(
            -1, self.hom.target.dim, self.hom.source.dim
        )


def chi_transfer_image(m: KGModule, n: KGModule, chi: Iterable[Subgroup]) -> TransferData:
    """Sum over h in chi of Tr_h^G(Hom_{kh}(m, n)) inside Hom_{kG}(m, n)."""
    _check_fields(m, n)
    chi = frozenset(chi)
    F = m.field
    size = m.dim * n.dim
    rows = [la.zeros(0, size)] + _transfer_rows(m, n, chi)
    return TransferData(chi, hom_basis(m, n), la.Subspace(F, size, np.vstack(rows)))


def _elementary(rows: int, cols: int) -> np.ndarray:
    E = np.zeros((rows * cols, rows, cols), dtype=np.uint8)
    idx = np.arange(rows * cols)
    E[idx, idx % rows, idx // rows] = 1
    return E


def underline_hom_dim(m: KGModule, n: KGModule, chi: Iterable[Subgroup]) -> int:
    return chi_transfer_image(m, n, chi).underline_dim


def _key(m: KGModule):
    return (m.field.degree, m.dim, m.X.tobytes(), m.Y.tobytes())


@lru_cache(maxsize=4096)
def _rel_proj_cached(key, chi: frozenset) -> bool:
    degree, d, xb, yb = key
    from .field import gf

    F = gf(degree)
    X = np.frombuffer(xb, dtype=np.uint8).reshape(d, d)
    Y = np.frombuffer(yb, dtype=np.uint8).reshape(d, d)
    m = KGModule(F, X, Y)
    return _higman(m, chi)


def _higman(m: KGModule, chi: frozenset) -> bool:
    if m.dim == 0:
        return True
    if not chi:
        return False
    F = m.field
    size = m.dim * m.dim
    rows = _transfer_rows(m, m, chi)
    if not rows:
        return False
    return la.Subspace(F, size, np.vstack(rows)).contains(flatten(la.eye(m.dim)))


def is_rel_projective(m: KGModule, chi: Iterable[Subgroup]) -> bool:
    """Higman's criterion: id_m is a sum of transfers from the subgroups in chi."""
    return _rel_proj_cached(_key(m), frozenset(chi))
