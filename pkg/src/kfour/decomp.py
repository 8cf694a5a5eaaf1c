"""Krull-Schmidt decomposition and identification of kG-modules.

Splitting is Meataxe-style: look for an endomorphism f that is neither
nilpotent nor invertible, and split along the Fitting decomposition
M = ker f^N + im f^N.  A piece is declared indecomposable once a bounded
search of its endomorphism ring finds only nilpotent or invertible
elements; identification then double-checks the result against the
classification, and any inconsistency surfaces as UndecidedError.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import linalg as la
from . import poly
from .homspace import FULL, _raw_hom, fixed_points, is_rel_projective
from .kgmod import (
    KGModule,
    Label,
    ModuleError,
    Proj,
    Theta,
    VEven,
    VMinus,
    VPlus,
    build_indecomposable,
    direct_sum,
    zero_module,
)

__all__ = [
    "DEFAULT_SEED",
    "Decomposition",
    "UndecidedError",
    "decompose",
    "identify",
    "is_isomorphic",
    "strip_rel_projective",
]

DEFAULT_SEED = 0x4B464F55
_RANDOM_TRIES = 256
_ENUMERATE_UP_TO = 6


class UndecidedError(RuntimeError):
    """The bounded search could not settle a splitting question."""


def default_seed() -> int:
    env = os.environ.get("KFOUR_SEED")
    return int(env, 0) if env else DEFAULT_SEED


@dataclass(frozen=True, eq=False)
class Decomposition:
    module: KGModule
    labels: list  # one label per block, in block order
    witness: np.ndarray  # columns: concatenated bases of the blocks
    offsets: list = field(default_factory=list)

    @property
    def parts(self) -> list[tuple[Label, int]]:
        counts = Counter(self.labels)
        return sorted(counts.items(), key=lambda kv: kv[0].sort_key())

    def multiset(self) -> Counter:
        return Counter(self.labels)

    def block(self, j: int) -> np.ndarray:
        o = self.offsets[j]
        return self.witness[:, o : o + self.labels[j].dim]

    def __repr__(self):
        inner = ", ".join(f"{lab}" + (f" x{c}" if c > 1 else "") for lab, c in self.parts)
        return f"Decomposition({inner})"


# ---------------------------------------------------------------------------
# splitting


def _components(m: KGModule) -> list[list[int]]:
    d = m.dim
    adj = (m.X != 0) | (m.Y != 0)
    adj = adj | adj.T
    seen = np.zeros(d, dtype=bool)
    comps = []
    for s in range(d):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in np.flatnonzero(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        comps.append(sorted(comp))
    return comps


def _fitting_power(F, f: np.ndarray) -> np.ndarray:
    d = f.shape[0]
    p = f
    k = 1
    while k < d:
        p = la.matmul(F, p, p)
        k *= 2
    return p


def _candidates(F, ends: np.ndarray, rng: np.random.Generator):
    k = ends.shape[0]
    if k == 0:
        return
    yield from ends
    if F.order**k <= F.order**_ENUMERATE_UP_TO:
        for idx in range(1, F.order**k):
            coeffs = [(idx // F.order**j) % F.order for j in range(k)]
            if sum(c != 0 for c in coeffs) < 2:
                continue
            yield _combine(F, ends, coeffs)
        return
    for _ in range(_RANDOM_TRIES):
        yield _combine(F, ends, F.random(rng, k))


def _combine(F, ends: np.ndarray, coeffs) -> np.ndarray:
    out = np.zeros(ends.shape[1:], dtype=np.uint8)
    for c, e in zip(coeffs, ends):
        if c:
            out ^= F.mul_table[int(c), e]
    return out


def _split_once(m: KGModule, rng) -> Optional[tuple[np.ndarray, np.ndarray]]:
    """Bases of a nontrivial decomposition, or None if none was found."""
    F = m.field
    d = m.dim
    ends = _raw_hom(m, m, FULL)
    for f in _candidates(F, ends, rng):
        p = _fitting_power(F, f)
        if not np.any(p):
            continue
        r = la.rank(F, p)
        if r == d:
            continue
        ker = la.kernel_basis(F, p).basis.T
        img = la.column_space(F, p).basis.T
        return ker, img
    return None


def _indecomposable_pieces(m: KGModule, E: np.ndarray, rng) -> list[tuple[KGModule, np.ndarray]]:
    """Split ``m`` (embedded by the columns of E) into certified pieces."""
    if m.dim <= 1:
        return [(m, E)]
    F = m.field
    found = _split_once(m, rng)
    if found is None:
        return [(m, E)]
    out = []
    for B in found:
        sub = m.submodule(B)
        out.extend(_indecomposable_pieces(sub, la.matmul(F, E, B), rng))
    return out


# ---------------------------------------------------------------------------
# identification


def _even_label(m: KGModule) -> Label:
    F = m.field
    d = m.dim
    n = d // 2
    rad = la.column_space(F, np.hstack([m.X, m.Y]))
    if rad.dim != n:
        raise UndecidedError(f"radical of an even-dimensional piece has dim {rad.dim}, expected {n}")
    top = rad.complement_basis(la.eye(d)).T
    Xb = rad.coordinates(la.matmul(F, m.X, top).T).T
    Yb = rad.coordinates(la.matmul(F, m.Y, top).T).T
    if la.rank(F, Yb) < n:
        return VEven.inf(n)
    C = la.matmul(F, la.inverse(F, Yb), Xb)
    theta = _cyclic_min_poly(F, C)
    if theta is None:
        raise UndecidedError("pencil map is not cyclic; module is decomposable")
    root = poly.prime_power_root(F, theta)
    if root is None:
        raise UndecidedError(f"{poly.to_str(theta)} is not a power of an irreducible")
    q, mult = root
    return VEven(n, Theta(q, mult))


def _cyclic_min_poly(F, C: np.ndarray) -> Optional[tuple]:
    n = C.shape[0]
    rng = np.random.default_rng(n)
    trials = [la.eye(n)[i] for i in range(n)] + [F.random(rng, n) for _ in range(32)]
    for v in trials:
        p = poly.minimal_poly_of_vector(F, C, v)
        if poly.deg(p) == n:
            return p
    return None


def identify(m: KGModule, certified: bool = False, seed: Optional[int] = None) -> Label:
    """Catalogue label of an indecomposable module."""
    if m.dim == 0:
        raise ModuleError("the zero module has no label")
    if not certified:
        dec = decompose(m, seed=seed)
        if len(dec.labels) != 1:
            raise ModuleError(f"module is decomposable: {dec!r}")
        return dec.labels[0]
    d = m.dim
    if d % 2:
        n = d // 2
        fp = fixed_points(m, FULL).dim
        if fp == n and n >= 1:
            return VPlus(n)
        if fp == n + 1:
            return VMinus(n)
        raise UndecidedError(f"odd piece of dim {d} has {fp}-dimensional fixed points")
    if d == 4 and np.any(m.XY):
        return Proj()
    if np.any(m.XY):
        raise UndecidedError(f"piece of dim {d} has XY != 0")
    return _even_label(m)


def _find_iso(F, C: KGModule, S: KGModule, rng) -> np.ndarray:
    homs = _raw_hom(C, S, FULL)
    for f in _candidates(F, homs, rng):
        if la.rank(F, f) == C.dim:
            return f
    raise UndecidedError("no isomorphism found onto the canonical module")


def decompose(m: KGModule, seed: Optional[int] = None) -> Decomposition:
    """Decompose into indecomposables with a witness change of basis.

    ``inverse(witness) @ X @ witness`` is block diagonal with blocks equal
    to ``build_indecomposable(label).X`` (and likewise for Y).
    """
    F = m.field
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    pieces = []
    for comp in _components(m):
        E = la.eye(m.dim)[:, comp]
        sub = KGModule(F, m.X[np.ix_(comp, comp)], m.Y[np.ix_(comp, comp)])
        pieces.extend(_indecomposable_pieces(sub, E, rng))
    found = []
    for S, E in pieces:
        label = identify(S, certified=True)
        C = build_indecomposable(label, F)
        phi = _find_iso(F, C, S, rng)
        found.append((label, la.matmul(F, E, phi)))
    found.sort(key=lambda t: t[0].sort_key())
    labels = [lab for lab, _ in found]
    offsets = list(np.cumsum([0] + [lab.dim for lab in labels[:-1]])) if labels else []
    witness = np.hstack([B for _, B in found]) if found else la.zeros(m.dim, 0)
    return Decomposition(m, labels, witness, [int(o) for o in offsets])


def is_isomorphic(a: KGModule, b: KGModule, seed: Optional[int] = None) -> bool:
    if a.field != b.field or a.dim != b.dim:
        return False
    return decompose(a, seed).multiset() == decompose(b, seed).multiset()


def strip_rel_projective(m: KGModule, chi, seed: Optional[int] = None, with_embedding: bool = False):
    """Direct sum of the summands of ``m`` that are not projective relative to chi.

    The result is in canonical (catalogue) form.  With ``with_embedding``
    also return the matrix whose columns embed it into ``m``.
    """
    F = m.field
    chi = frozenset(chi)
    dec = decompose(m, seed)
    keep = [
        j
        for j, lab in enumerate(dec.labels)
        if not is_rel_projective(build_indecomposable(lab, F), chi)
    ]
    if keep:
        out = direct_sum(*(build_indecomposable(dec.labels[j], F) for j in keep))
        E = np.hstack([dec.block(j) for j in keep])
    else:
        out = zero_module(F)
        E = la.zeros(m.dim, 0)
    return (out, E) if with_embedding else out
