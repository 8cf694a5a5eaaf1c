"""Relatively split covers, relative Heller shifts and minimal resolutions.

A cover of M is assembled from pieces induced from the subgroups in chi.
For a maximal subgroup H with nilpotent t, M restricted to H splits as
free pieces kH.u (t u != 0) plus trivial pieces k.w, using a basis of M
adapted to t.  Each free piece induces to P and each trivial piece to the
two-dimensional Q_H; the trivial subgroup contributes one P per basis
vector.  Every piece is generated by a single vector, which makes lifting
maps through covers a matter of choosing one preimage per piece.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import linalg as la
from .decomp import strip_rel_projective
from .kgmod import (
    CHI,
    Q_OF,
    KGModule,
    Label,
    ModuleError,
    Proj,
    Subgroup,
    direct_sum,
    dual,
    induce,
    induce_trivial,
    transversal,
    trivial,
    zero_module,
)

__all__ = [
    "CoverData",
    "CoverError",
    "OmegaMap",
    "Resolution",
    "Summand",
    "injective_hull",
    "lift_through_covers",
    "minimal_cover",
    "minimal_resolution",
    "omega_chi",
    "omega_of_hom",
    "standard_cover",
]


class CoverError(RuntimeError):
    """A construction that theory guarantees has failed: this is a bug."""


# a word is (group element, apply t_h first); pieces are spanned by words applied to a generator
_P_FROM_TRIV = (("1", False), ("s", False), ("t", False), ("st", False))


def _p_words(g: str) -> tuple:
    return (("1", False), ("1", True), (g, False), (g, True))


def _q_words(g: str) -> tuple:
    return (("1", False), (g, False))


_P_SHAPE = la.zeros(2, 2)
_P_SHAPE[1, 0] = 1


@dataclass(frozen=True)
class Summand:
    label: Label
    subgroup: Subgroup
    offset: int
    words: tuple

    @property
    def dim(self) -> int:
        return self.label.dim

    @property
    def free(self) -> bool:
        return isinstance(self.label, Proj)


def _word(m: KGModule, h: Subgroup, word) -> np.ndarray:
    g, use_t = word
    A = m.action(g)
    if use_t:
        A = la.matmul(m.field, A, m.nilpotent(h))
    return A


@dataclass(frozen=True, eq=False)
class CoverData:
    module: KGModule
    chi: frozenset
    total: KGModule
    pi: np.ndarray  # dim M x dim Q
    summands: list
    splittings: dict  # subgroup -> s_h, dim Q x dim M
    kernel: KGModule
    embedding: np.ndarray  # dim Q x dim K, columns span ker pi
    pivots: list = field(default_factory=list)  # embedding[pivots, :] = I

    def labels(self) -> list:
        return sorted((s.label for s in self.summands), key=lambda lab: lab.sort_key())

    def kernel_coordinates(self, vectors: np.ndarray) -> np.ndarray:
        """Coordinates in the kernel basis of columns known to lie in ker pi."""
        return np.asarray(vectors, dtype=np.uint8)[self.pivots, :]

    def check(self) -> None:
        """Raise CoverError unless every stored identity holds."""
        F = self.module.field
        M, Q = self.module, self.total
        for a, b in ((M.X, Q.X), (M.Y, Q.Y)):
            if not np.array_equal(la.matmul(F, self.pi, b), la.matmul(F, a, self.pi)):
                raise CoverError("pi is not G-equivariant")
        if la.rank(F, self.pi) != M.dim:
            raise CoverError("pi is not surjective")
        for h, s in self.splittings.items():
            if not np.array_equal(la.matmul(F, self.pi, s), la.eye(M.dim)):
                raise CoverError(f"s_{h.value} is not a section")
            for a, b in zip(M.operators(h), Q.operators(h)):
                if not np.array_equal(la.matmul(F, b, s), la.matmul(F, s, a)):
                    raise CoverError(f"s_{h.value} is not {h.value}-equivariant")
        if np.any(la.matmul(F, self.pi, self.embedding)):
            raise CoverError("kernel is not in ker pi")
        if self.embedding.shape[1] != Q.dim - M.dim:
            raise CoverError("kernel has the wrong dimension")


def _adapted_basis(m: KGModule, h: Subgroup):
    """(U, W): t U is a basis of im t and W completes im t inside ker t."""
    F = m.field
    t = m.nilpotent(h)
    _, piv = la.rref(F, t)
    U = la.eye(m.dim)[:, piv]
    img = la.column_space(F, t)
    ker = la.kernel_basis(F, t)
    W = img.complement_basis(ker.basis).T
    return U, W


def _pieces(m: KGModule, chi: frozenset):
    """Cover pieces as (module, summand-without-offset, pi columns)."""
    F = m.field
    out = []
    for h in sorted(chi, key=lambda s: s.value):
        if h is Subgroup.TRIV:
            for i in range(m.dim):
                cols = np.stack([m.action(w[0])[:, i] for w in _P_FROM_TRIV], axis=1)
                out.append((induce_trivial(1, F), Proj(), h, _P_FROM_TRIV, cols))
            continue
        if h not in CHI:
            raise ValueError(f"chi may only contain triv, H1, H2, H3; got {h!r}")
        g = transversal(h)[1]
        U, W = _adapted_basis(m, h)
        free_piece = induce(_P_SHAPE, h, F)
        for j in range(U.shape[1]):
            words = _p_words(g)
            cols = np.hstack([la.matmul(F, _word(m, h, w), U[:, j : j + 1]) for w in words])
            out.append((free_piece, Proj(), h, words, cols))
        triv_piece = induce(la.zeros(1, 1), h, F)
        for k in range(W.shape[1]):
            words = _q_words(g)
            cols = np.hstack([la.matmul(F, _word(m, h, w), W[:, k : k + 1]) for w in words])
            out.append((triv_piece, Q_OF[h], h, words, cols))
    return out


def _splittings(m: KGModule, Q: KGModule, pi: np.ndarray, chi: frozenset, bases: dict) -> Optional[dict]:
    """Explicit sections s_h for each h in chi, or None if pi is not chi-split."""
    F = m.field
    out = {}
    for h in chi:
        if h is Subgroup.TRIV:
            s = la.solve(F, pi, la.eye(m.dim))
            if s is None:
                return None
            out[h] = s
            continue
        U, W = bases[h]
        tM = m.nilpotent(h)
        tQ = Q.nilpotent(h)
        qU = la.solve(F, pi, U)
        if qU is None:
            return None
        if W.shape[1]:
            A = np.vstack([pi, tQ])
            rhs = np.vstack([W, la.zeros(Q.dim, W.shape[1])])
            qW = la.solve(F, A, rhs)
            if qW is None:
                return None
        else:
            qW = la.zeros(Q.dim, 0)
        B = np.hstack([U, la.matmul(F, tM, U), W])
        img = np.hstack([qU, la.matmul(F, tQ, qU), qW])
        out[h] = la.matmul(F, img, la.inverse(F, B))
    return out


def _assemble(m: KGModule, chi: frozenset, pieces, bases) -> Optional[CoverData]:
    F = m.field
    if not pieces:
        Q = zero_module(F)
        pi = la.zeros(m.dim, 0)
    else:
        Q = direct_sum(*(p[0] for p in pieces))
        pi = np.hstack([p[4] for p in pieces])
    if la.rank(F, pi) != m.dim:
        return None
    split = _splittings(m, Q, pi, chi, bases)
    if split is None:
        return None
    summands, off = [], 0
    for mod, label, h, words, _ in pieces:
        summands.append(Summand(label, h, off, words))
        off += mod.dim
    ker = la.kernel_basis(F, pi)
    E = ker.basis.T.copy()
    piv = ker.pivots
    if E.shape[1]:
        K = KGModule(F, la.matmul(F, Q.X, E)[piv, :], la.matmul(F, Q.Y, E)[piv, :])
    else:
        K = zero_module(F)
    return CoverData(m, chi, Q, pi, summands, split, K, E, list(piv))


def _prepare(m: KGModule, chi) -> tuple:
    chi = frozenset(chi)
    if not chi:
        raise ValueError("chi must be non-empty")
    bases = {h: _adapted_basis(m, h) for h in chi if h is not Subgroup.TRIV}
    return chi, bases


def standard_cover(m: KGModule, chi) -> CoverData:
    """The sum over h in chi of the induced pieces of M restricted to h."""
    chi, bases = _prepare(m, chi)
    cover = _assemble(m, chi, _pieces(m, chi), bases)
    if cover is None:
        raise CoverError("standard cover is not split")
    return cover


def minimal_cover(m: KGModule, chi) -> CoverData:
    """Drop pieces of the standard cover (largest first) while it stays a split cover.

    Being a split cover is preserved under adding pieces, and any cover whose
    kernel has a relatively projective summand loses a piece by the exchange
    property, so the greedy result is a relative projective cover.
    """
    chi, bases = _prepare(m, chi)
    pieces = _pieces(m, chi)
    if _assemble(m, chi, pieces, bases) is None:
        raise CoverError("standard cover is not split")
    order = sorted(range(len(pieces)), key=lambda j: -pieces[j][0].dim)
    keep = set(range(len(pieces)))
    for j in order:
        trial = sorted(keep - {j})
        if _assemble(m, chi, [pieces[i] for i in trial], bases) is not None:
            keep.discard(j)
    return _assemble(m, chi, [pieces[i] for i in sorted(keep)], bases)


def injective_hull(m: KGModule, chi) -> tuple[KGModule, np.ndarray]:
    """Relative injective hull as the dual of the minimal cover of the dual."""
    cover = minimal_cover(dual(m), chi)
    return dual(cover.total), cover.pi.T.copy()


# ---------------------------------------------------------------------------
# Heller shifts


def omega_chi(m: KGModule, chi, i: int = 1) -> KGModule:
    """Relative Heller shift, in canonical form with no relatively projective summands."""
    chi = frozenset(chi)
    if i < 0:
        return strip_rel_projective(dual(omega_chi(dual(m), chi, -i)), chi)
    cur = strip_rel_projective(m, chi)
    for _ in range(i):
        if cur.dim == 0:
            break
        cur = strip_rel_projective(minimal_cover(cur, chi).kernel, chi)
    return cur


@dataclass(frozen=True, eq=False)
class OmegaMap:
    matrix: np.ndarray  # ker(pi_M) -> ker(pi_N) in the stored kernel bases
    lift: np.ndarray  # Q_M -> Q_N with pi_N lift = f pi_M
    source: CoverData
    target: CoverData


def lift_through_covers(f: np.ndarray, cm: CoverData, cn: CoverData) -> np.ndarray:
    """A G-map Q_M -> Q_N with pi_N . lift = f . pi_M, built piece by piece."""
    F = cm.module.field
    fpi = la.matmul(F, f, cm.pi)
    lift = la.zeros(cn.total.dim, cm.total.dim)
    for s in cm.summands:
        y = fpi[:, s.offset]
        if s.free:
            q = la.solve(F, cn.pi, y)
        else:
            # generator is fixed by s.subgroup, so take an h-fixed preimage
            q = la.matmul(F, cn.splittings[s.subgroup], y[:, None])[:, 0]
        if q is None:
            raise CoverError("target cover is not surjective")
        for k, w in enumerate(s.words):
            lift[:, s.offset + k] = la.matmul(F, _word(cn.total, s.subgroup, w), q[:, None])[:, 0]
    QM, QN = cm.total, cn.total
    for a, b in ((QM.X, QN.X), (QM.Y, QN.Y)):
        if not np.array_equal(la.matmul(F, lift, a), la.matmul(F, b, lift)):
            raise CoverError("lifted map is not G-equivariant")
    if not np.array_equal(la.matmul(F, cn.pi, lift), fpi):
        raise CoverError("lifted map does not cover f")
    return lift


def omega_of_hom(
    f: np.ndarray,
    m: KGModule,
    n: KGModule,
    chi=CHI,
    cover_m: Optional[CoverData] = None,
    cover_n: Optional[CoverData] = None,
) -> OmegaMap:
    """Omega_chi(f): the restriction to kernels of a lift of f through the covers."""
    f = np.asarray(f, dtype=np.uint8)
    F = m.field
    for a, b in ((m.X, n.X), (m.Y, n.Y)):
        if not np.array_equal(la.matmul(F, f, a), la.matmul(F, b, f)):
            raise ModuleError("f is not G-equivariant")
    cm = cover_m or minimal_cover(m, chi)
    cn = cover_n or minimal_cover(n, chi)
    lift = lift_through_covers(f, cm, cn)
    image = la.matmul(F, lift, cm.embedding)
    return OmegaMap(cn.kernel_coordinates(image), lift, cm, cn)


# ---------------------------------------------------------------------------
# resolutions


class Resolution:
    """Minimal relative resolution of the trivial module, extended on demand.

    ``syzygy(i)`` is the kernel at step i in its stored basis (not
    canonicalized), so maps between syzygies compose consistently.
    """

    def __init__(self, field, chi):
        self.field = field
        self.chi = frozenset(chi)
        if not self.chi:
            raise ValueError("chi must be non-empty")
        self._syz = [trivial(field)]
        self._covers: list[CoverData] = []

    def _extend(self, length: int) -> None:
        while len(self._covers) <= length:
            cover = minimal_cover(self._syz[-1], self.chi)
            self._covers.append(cover)
            self._syz.append(cover.kernel)

    def syzygy(self, i: int) -> KGModule:
        self._extend(i)
        return self._syz[i]

    def cover(self, i: int) -> CoverData:
        self._extend(i)
        return self._covers[i]

    def module(self, i: int) -> KGModule:
        return self.cover(i).total

    def boundary(self, i: int) -> np.ndarray:
        """d_i : Q_{i+1} -> Q_i, the kernel embedding after the next cover map."""
        nxt = self.cover(i + 1)
        return la.matmul(self.field, self.cover(i).embedding, nxt.pi)

    def augmentation(self) -> np.ndarray:
        return self.cover(0).pi

    def is_exact(self, length: int) -> bool:
        F = self.field
        for i in range(length):
            d_i = self.boundary(i)
            nxt = self.augmentation() if i == 0 else self.boundary(i - 1)
            if np.any(la.matmul(F, nxt, d_i)):
                return False
            if la.rank(F, d_i) != self.module(i).dim - la.rank(F, nxt):
                return False
        return True

    def omega_power_of_hom(self, g: np.ndarray, j: int, i: int) -> np.ndarray:
        """Omega^i(g) : syzygy(i + j) -> syzygy(i) for g : syzygy(j) -> k."""
        cur = np.asarray(g, dtype=np.uint8)
        for step in range(i):
            om = omega_of_hom(
                cur,
                self.syzygy(j + step),
                self.syzygy(step),
                self.chi,
                cover_m=self.cover(j + step),
                cover_n=self.cover(step),
            )
            cur = om.matrix
        return cur


@lru_cache(maxsize=None)
def _resolution(degree: int, chi: frozenset) -> Resolution:
    from .field import gf

    return Resolution(gf(degree), chi)


def minimal_resolution(chi: Iterable = CHI, length: int = 2, field=None) -> Resolution:
    """Shared (cached) resolution for (field, chi), extended to ``length``."""
    from .field import gf

    F = field or gf(1)
    res = _resolution(F.degree, frozenset(chi))
    res._extend(length)
    return res
