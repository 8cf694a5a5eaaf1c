"""Modules for the Klein four-group G = <s, t> over GF(2^e).

A kG-module is stored as the pair of operators X = s - 1 and Y = t - 1,
i.e. as a module for k[X, Y]/(X^2, Y^2).  Matrices act on column vectors,
so column j of X is the image of basis vector j.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from . import linalg as la
from . import poly
from .field import GF2e, gf

__all__ = [
    "CHI",
    "Label",
    "KGModule",
    "ModuleError",
    "Proj",
    "Subgroup",
    "Theta",
    "VEven",
    "VMinus",
    "VPlus",
    "build_indecomposable",
    "catalogue",
    "direct_sum",
    "dual",
    "induce",
    "induce_trivial",
    "parse_chi",
    "restrict",
    "tensor_product",
    "trivial",
]


class ModuleError(ValueError):
    pass


class Subgroup(enum.Enum):
    TRIV = "triv"
    H1 = "H1"  # <s>
    H2 = "H2"  # <t>
    H3 = "H3"  # <st>
    G = "G"

    def __repr__(self):
        return self.value

    @property
    def order(self) -> int:
        return {"triv": 1, "G": 4}.get(self.value, 2)


CHI = frozenset({Subgroup.H1, Subgroup.H2, Subgroup.H3})

# coset representative outside each maximal subgroup
_COSET_REP = {Subgroup.H1: "t", Subgroup.H2: "s", Subgroup.H3: "s"}


def parse_chi(text: Union[str, Iterable]) -> frozenset:
    """``"H1,H2,H3"``, ``"all"`` or ``"triv"`` (any case) to a set of subgroups."""
    if not isinstance(text, str):
        return frozenset(text)
    text = text.strip()
    if text.lower() == "all":
        return CHI
    if text.lower() in ("", "none"):
        return frozenset()
    out = set()
    for tok in text.split(","):
        tok = tok.strip()
        key = tok.lower()
        if key in ("triv", "1", "trivial"):
            out.add(Subgroup.TRIV)
        elif key in ("h1", "h2", "h3"):
            out.add(Subgroup(key.upper()))
        else:
            raise ValueError(f"unknown subgroup {tok!r} (expected triv, H1, H2, H3)")
    return frozenset(out)


def transversal(h: Subgroup) -> list[str]:
    if h is Subgroup.TRIV:
        return ["1", "s", "t", "st"]
    if h is Subgroup.G:
        return ["1"]
    return ["1", _COSET_REP[h]]


# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class Theta:
    """Either infinity (``q is None``) or ``q**m`` with ``q`` monic irreducible."""

    q: Optional[tuple] = None
    m: int = 1

    @property
    def infinite(self) -> bool:
        return self.q is None

    def poly(self, F: GF2e) -> tuple:
        return poly.power(F, self.q, self.m)

    def __str__(self):
        if self.infinite:
            return "inf"
        return f"theta:{poly.to_str(self.q)}^{self.m}"


INF = Theta()


class Label:
    """Base for the names in the classification of indecomposables."""

    dim: int

    def sort_key(self):
        raise NotImplementedError


@dataclass(frozen=True)
class VMinus(Label):
    """V_{-(2n+1)}: tops a_1..a_n, socle b_0..b_n, X a_i = b_{i-1}, Y a_i = b_i."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")

    @property
    def dim(self):
        return 2 * self.n + 1

    def sort_key(self):
        return (0, self.dim, "")

    def __str__(self):
        return f"V-{self.dim}"


@dataclass(frozen=True)
class VPlus(Label):
    """V_{2n+1}: tops a_0..a_n, socle b_1..b_n, Y a_{i-1} = b_i, X a_i = b_i.

    ``VPlus(0)`` is the trivial module and is returned as ``VMinus(0)``.
    """

    n: int

    def __new__(cls, n: int):
        if n == 0:
            return VMinus(0)
        return super().__new__(cls)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 0")

    @property
    def dim(self):
        return 2 * self.n + 1

    def sort_key(self):
        return (1, self.dim, "")

    def __str__(self):
        return f"V+{self.dim}"


@dataclass(frozen=True)
class VEven(Label):
    """V_{2n,theta} or V_{2n,inf}; ``n = deg(q) * m`` for finite theta."""

    n: int
    theta: Theta = INF

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not self.theta.infinite:
            if self.theta.m < 1 or poly.deg(self.theta.q) * self.theta.m != self.n:
                raise ValueError(f"theta {self.theta} does not have degree {self.n}")

    @classmethod
    def inf(cls, n: int) -> "VEven":
        return cls(n, INF)

    @classmethod
    def of(cls, q, m: int = 1) -> "VEven":
        q = poly.norm(q)
        return cls(poly.deg(q) * m, Theta(q, m))

    @property
    def dim(self):
        return 2 * self.n

    def sort_key(self):
        return (2, self.dim, str(self.theta))

    def __str__(self):
        return f"V{self.dim},{self.theta}"


@dataclass(frozen=True)
class Proj(Label):
    """The projective indecomposable P = kG."""

    @property
    def dim(self):
        return 4

    def sort_key(self):
        return (3, 4, "")

    def __str__(self):
        return "P"


# Q_s = V_{2,x}, Q_t = V_{2,inf}, Q_st = V_{2,x+1}
Q_SIGMA = VEven.of((0, 1))
Q_TAU = VEven.inf(1)
Q_SIGMATAU = VEven.of((1, 1))
Q_OF = {Subgroup.H1: Q_SIGMA, Subgroup.H2: Q_TAU, Subgroup.H3: Q_SIGMATAU}


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True, eq=False)
class KGModule:
    field: GF2e
    X: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.X, dtype=np.uint8)
        Y = np.asarray(self.Y, dtype=np.uint8)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        d = X.shape[0] if X.ndim == 2 else -1
        if X.shape != (d, d) or Y.shape != (d, d):
            raise ModuleError(f"X and Y must be square of equal size, got {X.shape} and {Y.shape}")
        if np.any(X >= self.field.order) or np.any(Y >= self.field.order):
            raise ModuleError(f"entries out of range for {self.field!r}")
        F = self.field
        if np.any(la.matmul(F, X, X)):
            raise ModuleError("X^2 != 0")
        if np.any(la.matmul(F, Y, Y)):
            raise ModuleError("Y^2 != 0")
        if not np.array_equal(la.matmul(F, X, Y), la.matmul(F, Y, X)):
            raise ModuleError("XY != YX")

    @property
    def dim(self) -> int:
        return self.X.shape[0]

    @property
    def XY(self) -> np.ndarray:
        return la.matmul(self.field, self.X, self.Y)

    def __eq__(self, other):
        return (
            isinstance(other, KGModule)
            and other.field == self.field
            and np.array_equal(other.X, self.X)
            and np.array_equal(other.Y, self.Y)
        )

    def __repr__(self):
        return f"KGModule(dim={self.dim}, field={self.field!r})"

    def action(self, g: str) -> np.ndarray:
        """Matrix of the group element ``g`` in {"1", "s", "t", "st"}."""
        I = la.eye(self.dim)
        if g == "1":
            return I
        if g == "s":
            return I ^ self.X
        if g == "t":
            return I ^ self.Y
        if g == "st":
            return I ^ self.X ^ self.Y ^ self.XY
        raise ValueError(f"unknown group element {g!r}")

    def nilpotent(self, h: Subgroup) -> np.ndarray:
        """Generator minus one for the cyclic subgroup ``h`` (zero for TRIV)."""
        if h is Subgroup.H1:
            return self.X
        if h is Subgroup.H2:
            return self.Y
        if h is Subgroup.H3:
            return self.X ^ self.Y ^ self.XY
        if h is Subgroup.TRIV:
            return la.zeros(self.dim, self.dim)
        raise ValueError(f"{h!r} is not cyclic")

    def operators(self, h: Subgroup) -> list:
        """Generating nilpotents of the group algebra of ``h`` acting here."""
        if h is Subgroup.G:
            return [self.X, self.Y]
        if h is Subgroup.TRIV:
            return []
        return [self.nilpotent(h)]

    def change_basis(self, P: np.ndarray) -> "KGModule":
        """The module in the basis given by the columns of ``P``."""
        F = self.field
        Pinv = la.inverse(F, P)
        return KGModule(
            F,
            la.matmul(F, Pinv, la.matmul(F, self.X, P)),
            la.matmul(F, Pinv, la.matmul(F, self.Y, P)),
        )

    def submodule(self, E: np.ndarray) -> "KGModule":
        """Module structure on the invariant subspace spanned by the columns of ``E``."""
        F = self.field
        E = np.asarray(E, dtype=np.uint8)
        if E.shape[1] == 0:
            return KGModule(F, la.zeros(0, 0), la.zeros(0, 0))
        cx = la.solve(F, E, la.matmul(F, self.X, E))
        cy = la.solve(F, E, la.matmul(F, self.Y, E))
        if cx is None or cy is None:
            raise ModuleError("subspace is not invariant under X and Y")
        return KGModule(F, cx, cy)


def zero_module(F: GF2e) -> KGModule:
    return KGModule(F, la.zeros(0, 0), la.zeros(0, 0))


def trivial(F: GF2e = None) -> KGModule:
    F = F or gf(1)
    return KGModule(F, la.zeros(1, 1), la.zeros(1, 1))


def build_indecomposable(label: Label, F: GF2e = None) -> KGModule:
    """The module named by ``label`` in its diagram basis (tops first)."""
    F = F or gf(1)
    if isinstance(label, Proj):
        # a, b1, b2, c
        X = la.zeros(4, 4)
        Y = la.zeros(4, 4)
        X[1, 0] = 1  # X a = b1
        Y[2, 0] = 1  # Y a = b2
        Y[3, 1] = 1  # Y b1 = c
        X[3, 2] = 1  # X b2 = c
        return KGModule(F, X, Y)
    if isinstance(label, VMinus):
        n = label.n
        d = 2 * n + 1
        X, Y = la.zeros(d, d), la.zeros(d, d)
        # a_i at i-1 (i = 1..n), b_j at n + j (j = 0..n)
        for i in range(1, n + 1):
            X[n + i - 1, i - 1] = 1
            Y[n + i, i - 1] = 1
        return KGModule(F, X, Y)
    if isinstance(label, VPlus):
        n = label.n
        d = 2 * n + 1
        X, Y = la.zeros(d, d), la.zeros(d, d)
        # a_i at i (i = 0..n), b_j at n + j (j = 1..n)
        for i in range(1, n + 1):
            Y[n + i, i - 1] = 1
            X[n + i, i] = 1
        return KGModule(F, X, Y)
    if isinstance(label, VEven):
        n = label.n
        d = 2 * n
        X, Y = la.zeros(d, d), la.zeros(d, d)
        # a_i at i-1, b_i at n + i - 1 (i = 1..n)
        if label.theta.infinite:
            for i in range(1, n + 1):
                X[n + i - 1, i - 1] = 1
                if i < n:
                    Y[n + i, i - 1] = 1
            return KGModule(F, X, Y)
        q = label.theta.q
        if any(c >= F.order for c in q):
            raise ModuleError(f"theta coefficients do not lie in {F!r}")
        if q[-1] != 1 or not poly.is_irreducible(F, q):
            raise ModuleError(f"{poly.to_str(q)} is not monic irreducible over {F!r}")
        theta = label.theta.poly(F)
        for i in range(1, n + 1):
            Y[n + i - 1, i - 1] = 1
            if i >= 2:
                X[n + i - 2, i - 1] = 1
        # theta = x^n + sum lambda_i x^{n-i};  X a_1 = sum lambda_i b_i
        for i in range(1, n + 1):
            X[n + i - 1, 0] = theta[n - i]
        return KGModule(F, X, Y)
    raise TypeError(f"not a label: {label!r}")


def direct_sum(*mods: KGModule) -> KGModule:
    if not mods:
        raise ValueError("direct_sum needs at least one module")
    F = mods[0].field
    for m in mods:
        if m.field != F:
            raise ModuleError("direct sum of modules over different fields")
    d = sum(m.dim for m in mods)
    X, Y = la.zeros(d, d), la.zeros(d, d)
    o = 0
    for m in mods:
        X[o : o + m.dim, o : o + m.dim] = m.X
        Y[o : o + m.dim, o : o + m.dim] = m.Y
        o += m.dim
    return KGModule(F, X, Y)


def tensor_product(a: KGModule, b: KGModule) -> KGModule:
    """Diagonal action: s acts as s (x) s, so X = X(x)1 + 1(x)X + X(x)X."""
    if a.field != b.field:
        raise ModuleError("tensor product of modules over different fields")
    F = a.field
    Ia, Ib = la.eye(a.dim), la.eye(b.dim)

    def op(A, B):
        return la.kron(F, A, Ib) ^ la.kron(F, Ia, B) ^ la.kron(F, A, B)

    return KGModule(F, op(a.X, b.X), op(a.Y, b.Y))


def dual(m: KGModule) -> KGModule:
    # g acts on M* by (g^{-1})^T and every g is an involution
    return KGModule(m.field, m.X.T.copy(), m.Y.T.copy())


def restrict(m: KGModule, h: Subgroup) -> np.ndarray:
    """The nilpotent ``t_h`` describing M restricted to the cyclic subgroup ``h``.

    M restricted to h is ``rank`` copies of kh plus ``dim - 2 rank`` trivial modules.
    """
    return m.nilpotent(h)


def induce(t: np.ndarray, h: Subgroup, F: GF2e = None) -> KGModule:
    """Induce the kh-module (V, t) to G; basis is V followed by gV."""
    F = F or gf(1)
    t = np.asarray(t, dtype=np.uint8)
    if h is Subgroup.TRIV:
        if np.any(t):
            raise ModuleError("the trivial subgroup acts by t = 0")
        return induce_trivial(t.shape[0], F)
    if h not in CHI:
        raise ValueError(f"cannot induce from {h!r}")
    if np.any(la.matmul(F, t, t)):
        raise ModuleError("t is not square-zero")
    d = t.shape[0]
    I = la.eye(d)
    Z = la.zeros(d, d)
    diag_t = np.block([[t, Z], [Z, t]])
    swap_plus = np.block([[I, I], [I, I]])  # g + 1 with g the block swap
    if h is Subgroup.H1:
        X, Y = diag_t, swap_plus
    elif h is Subgroup.H2:
        X, Y = swap_plus, diag_t
    else:
        # g = s and tau = s * st, so tau = [[0, 1+t], [1+t, 0]]
        A = I ^ t
        X = swap_plus
        Y = np.block([[I, A], [A, I]])
    return KGModule(F, X, Y)


_REGULAR_PERM = {
    # basis 1, s, t, st of kG; left multiplication
    "s": [1, 0, 3, 2],
    "t": [2, 3, 0, 1],
}


def induce_trivial(d: int, F: GF2e = None) -> KGModule:
    """``d`` copies of the regular module, blocks ordered 1, s, t, st."""
    F = F or gf(1)
    mats = []
    for g in ("s", "t"):
        Pm = la.zeros(4, 4)
        for src, dst in enumerate(_REGULAR_PERM[g]):
            Pm[dst, src] = 1
        mats.append(la.kron(F, Pm ^ la.eye(4), la.eye(d)))
    return KGModule(F, mats[0], mats[1])


def catalogue(max_dim: int, F: GF2e = None) -> list:
    """Every label of dimension <= max_dim, theta running over all q^m over F."""
    F = F or gf(1)
    labels: list = [VMinus(0)]
    for n in range(1, (max_dim - 1) // 2 + 1):
        labels += [VPlus(n), VMinus(n)]
    for n in range(1, max_dim // 2 + 1):
        labels.append(VEven.inf(n))
        for d in range(1, n + 1):
            if n % d:
                continue
            for q in poly.monic_polys(F, d):
                if poly.is_irreducible(F, q):
                    labels.append(VEven.of(q, n // d))
    if max_dim >= 4:
        labels.append(Proj())
    return sorted(labels, key=lambda lab: lab.sort_key())
