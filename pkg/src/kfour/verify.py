"""End-to-end checks of the Heller-shift, cohomology and cup-product results.

Each ``check_*`` function recomputes one family of statements from
scratch and returns a :class:`Check`; nothing is asserted here, so the
CLI can report every failure at once.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import linalg as la
from .cohom import closed_form_dim, rel_cohom_dim
from .cup import composition_vanishes, verify_cup_vanishing
from .decomp import decompose, default_seed
from .field import gf
from .homspace import fixed_points, is_rel_projective, transfer_vectors, underline_hom_dim
from .kgmod import (
    CHI,
    Q_SIGMA,
    Q_SIGMATAU,
    Q_TAU,
    Proj,
    Subgroup,
    VEven,
    VMinus,
    VPlus,
    build_indecomposable,
    catalogue,
    direct_sum,
    dual,
    induce,
    restrict,
    trivial,
)
from .relproj import minimal_cover, omega_chi, standard_cover

__all__ = ["Check", "ACCEPTANCE", "run_all"]

TRIV = frozenset({Subgroup.TRIV})
Q_LABELS = [Q_SIGMA, Q_TAU, Q_SIGMATAU]


@dataclass
class Check:
    name: str
    passed: bool = True
    cases: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, what: str) -> None:
        self.cases += 1
        if not ok:
            self.passed = False
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] {self.name} ({self.cases} cases){extra}"


def _labels(mod) -> Counter:
    return decompose(mod).multiset()


def _canon(*labels) -> Counter:
    return Counter(labels)


def _random_basis_change(m, rng):
    F = m.field
    while True:
        P = F.random(rng, (m.dim, m.dim))
        if la.rank(F, P) == m.dim:
            return m.change_basis(P)


def _random_sum(rng, pool, max_dim):
    """Labels drawn from pool with total dimension at most max_dim."""
    picked, total = [], 0
    for _ in range(rng.integers(1, 4)):
        lab = pool[rng.integers(len(pool))]
        if total + lab.dim <= max_dim:
            picked.append(lab)
            total += lab.dim
    return picked or [pool[0]]


# ---------------------------------------------------------------------------
# 1-4: cohomology tables


def check_trivial_cohomology(max_i: int = 8) -> Check:
    c = Check(f"H^i_chi(G,k) for i = 0..{max_i}")
    k = trivial()
    expected = [1] + [max(0, 2 * i - 3) for i in range(1, max_i + 1)]
    got = [rel_cohom_dim(k, CHI, i) for i in range(max_i + 1)]
    for i, (a, b) in enumerate(zip(got, expected)):
        c.record(a == b, f"i={i}: got {a}, expected {b}")
    return c


def _table(c: Check, labels, max_i: int, F=None) -> Check:
    for lab in labels:
        mod = build_indecomposable(lab, F or gf(1))
        for i in range(max_i + 1):
            got = rel_cohom_dim(mod, CHI, i)
            want = closed_form_dim(lab, i)
            c.record(got == want, f"{lab} i={i}: got {got}, expected {want}")
    return c


def check_odd_positive(max_n: int = 6, max_i: int = 6) -> Check:
    labels = [VMinus(0)] + [VPlus(n) for n in range(1, max_n + 1)]
    return _table(Check(f"H^i(V_2n+1), n <= {max_n}, i <= {max_i}"), labels, max_i)


def check_odd_negative(max_n: int = 8, max_i: int = 8) -> Check:
    labels = [VMinus(n) for n in range(1, max_n + 1)]
    return _table(Check(f"H^i(V_-(2n+1)), 1 <= n <= {max_n}, i <= {max_i}"), labels, max_i)


def check_even(max_n: int = 5, max_i: int = 5) -> Check:
    c = Check(f"H^i(V_2n,theta), n <= {max_n}, i <= {max_i}")
    F2, F4 = gf(1), gf(2)
    special = []
    for n in range(1, max_n + 1):
        special += [VEven.inf(n), VEven.of((0, 1), n), VEven.of((1, 1), n)]
    generic2 = [VEven.of((1, 1, 1), n // 2) for n in range(2, max_n + 1, 2)]
    w = F4.generator.value
    generic4 = [VEven.of((w, 1), n) for n in range(1, max_n + 1)]
    for lab in special:
        want = [lab.n] + [lab.n - 1] * max_i
        got = [rel_cohom_dim(build_indecomposable(lab, F2), CHI, i) for i in range(max_i + 1)]
        c.record(got == want, f"{lab}: got {got}, expected {want}")
    for F, labs in ((F2, generic2), (F4, generic4)):
        for lab in labs:
            want = [lab.n] * (max_i + 1)
            got = [rel_cohom_dim(build_indecomposable(lab, F), CHI, i) for i in range(max_i + 1)]
            c.record(got == want, f"{lab} over {F!r}: got {got}, expected {want}")
    return c


# ---------------------------------------------------------------------------
# 5-6: Heller shifts and covers


def _omega_triv(m, i):
    return omega_chi(m, TRIV, i)


def check_relative_heller(max_dim: int = 13) -> Check:
    c = Check(f"Omega_chi(M) = Omega^-2(M) (odd) or M (even), dim <= {max_dim}")
    F = gf(1)
    for lab in catalogue(max_dim, F):
        M = build_indecomposable(lab, F)
        if is_rel_projective(M, CHI):
            continue
        rel = _labels(omega_chi(M, CHI, 1))
        want = _labels(_omega_triv(M, -2)) if lab.dim % 2 else _canon(lab)
        c.record(rel == want, f"{lab}: Omega_chi = {dict(rel)}, expected {dict(want)}")
    return c


def check_cover_shapes() -> Check:
    c = Check("minimal relative projective covers")
    F2, F4 = gf(1), gf(2)
    Q = Counter(Q_LABELS)

    def shape(lab, F=F2):
        return Counter(minimal_cover(build_indecomposable(lab, F), CHI).labels())

    for n in range(0, 5):
        want = Q + Counter({Proj(): n})
        got = shape(VMinus(n))
        c.record(got == want, f"V-{2 * n + 1}: {dict(got)}")
    c.record(shape(VPlus(1)) == Q, "V+3")
    for n in range(2, 6):
        want = Q + Counter({Proj(): n - 2})
        c.record(shape(VPlus(n)) == want, f"V+{2 * n + 1}")
    for n in range(2, 6):
        want = Counter({Q_TAU: 2, Proj(): n - 1})
        got = shape(VEven.inf(n))
        c.record(got == want, f"V{2 * n},inf: {dict(got)}")
    generic = [
        lab
        for lab in catalogue(8, F2)
        if isinstance(lab, VEven) and not lab.theta.infinite and lab.theta.q not in ((0, 1), (1, 1))
    ]
    w = F4.generator.value
    for lab, F in [(g, F2) for g in generic] + [(VEven.of((w, 1), n), F4) for n in range(1, 5)]:
        got = shape(lab, F)
        c.record(got == Counter({Proj(): lab.n}), f"{lab}: {dict(got)}")
    return c


# ---------------------------------------------------------------------------
# 7: cup products


def check_cup_products(max_total: int = 6, pair_total: int = 6) -> Check:
    c = Check(f"cup products vanish in positive degree, i + j <= {max_total}")
    rep = verify_cup_vanishing(CHI, max_total)
    for e in rep.entries:
        c.record(e.is_zero_class, f"chi=all ({e.i},{e.j}) {e.class_index_pair}: nonzero class")
        c.record(e.is_zero_map, f"chi=all ({e.i},{e.j}) {e.class_index_pair}: composite not zero")
    for pair in itertools.combinations(sorted(CHI, key=lambda h: h.value), 2):
        rep = verify_cup_vanishing(frozenset(pair), pair_total)
        for e in rep.entries:
            name = "+".join(h.value for h in pair)
            c.record(e.is_zero_class, f"chi={name} ({e.i},{e.j}): nonzero class")
    for l_, m_, n_ in [(2, 1, 0), (3, 2, 0), (4, 2, 1), (5, 3, 1), (6, 4, 2)]:
        c.record(composition_vanishes(l_, m_, n_), f"composition {l_}>{m_}>{n_}")
    return c


# ---------------------------------------------------------------------------
# 8: machinery


def check_higman(max_dim: int = 13, random_cases: int = 50, seed: Optional[int] = None) -> Check:
    c = Check("Higman criterion <=> summand of the induced sum")
    F = gf(1)
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    cases = [[lab] for lab in catalogue(max_dim, F)]
    pool = catalogue(6, F)
    cases += [_random_sum(rng, pool, 10) for _ in range(random_cases)]
    for labs in cases:
        M = direct_sum(*(build_indecomposable(lab, F) for lab in labs))
        if len(labs) > 1:
            M = _random_basis_change(M, rng)
        induced = Counter()
        for h in sorted(CHI, key=lambda s: s.value):
            induced += _labels(induce(restrict(M, h), h, F))
        summand = not (Counter(labs) - induced)
        higman = is_rel_projective(M, CHI)
        c.record(higman == summand, f"{[str(x) for x in labs]}: higman={higman}, summand={summand}")
    return c


def check_schanuel(cases: int = 20, seed: Optional[int] = None) -> Check:
    c = Check("relative Schanuel: standard and minimal cover kernels agree")
    F = gf(1)
    rng = np.random.default_rng((default_seed() if seed is None else seed) + 1)
    pool = catalogue(7, F)
    for _ in range(cases):
        labs = _random_sum(rng, pool, 12)
        M = _random_basis_change(direct_sum(*(build_indecomposable(x, F) for x in labs)), rng)
        std = standard_cover(M, CHI).kernel
        mini = minimal_cover(M, CHI)
        mk = _labels(mini.kernel)
        stripped_std = Counter({k: v for k, v in _labels(std).items() if not _rp(k)})
        no_rp = not any(_rp(k) for k in mk)
        c.record(stripped_std == mk and no_rp, f"{[str(x) for x in labs]}")
    return c


def _rp(label) -> bool:
    return is_rel_projective(build_indecomposable(label, gf(1)), CHI)


def check_suspension(max_dim: int = 9) -> Check:
    c = Check(f"stable Hom preserved by Omega_chi, pairs of dim <= {max_dim}")
    F = gf(1)
    mods = {lab: build_indecomposable(lab, F) for lab in catalogue(max_dim, F)}
    shifted = {lab: omega_chi(m, CHI, 1) for lab, m in mods.items()}
    for a, b in itertools.product(mods, repeat=2):
        before = underline_hom_dim(mods[a], mods[b], CHI)
        after = underline_hom_dim(shifted[a], shifted[b], CHI)
        c.record(before == after, f"({a}, {b}): {before} vs {after}")
    return c


def check_relproj_fixed_points(max_dim: int = 12, seed: Optional[int] = None) -> Check:
    c = Check(f"M^G = sum of transfers for relative projectives, dim <= {max_dim}")
    F = gf(1)
    rng = np.random.default_rng((default_seed() if seed is None else seed) + 2)
    blocks = [Proj()] + Q_LABELS
    for counts in itertools.product(range(4), repeat=4):
        dim = sum(k * b.dim for k, b in zip(counts, blocks))
        if dim == 0 or dim > max_dim:
            continue
        labs = [b for k, b in zip(counts, blocks) for _ in range(k)]
        M = _random_basis_change(direct_sum(*(build_indecomposable(x, F) for x in labs)), rng)
        fixed = fixed_points(M)
        rows = [transfer_vectors(M, h, fixed_points(M, h).basis) for h in CHI]
        traced = la.Subspace(F, M.dim, np.vstack(rows))
        c.record(fixed == traced, f"{[str(x) for x in labs]}")
    return c


def check_ordinary_heller(max_dim: int = 13) -> Check:
    c = Check(f"ordinary Heller shifts, dim <= {max_dim}")
    F = gf(1)
    for lab in catalogue(max_dim, F):
        if isinstance(lab, Proj):
            continue
        M = build_indecomposable(lab, F)
        if isinstance(lab, VEven):
            got, want = _labels(_omega_triv(M, 1)), _canon(lab)
            c.record(got == want, f"Omega({lab}) = {dict(got)}")
            continue
        n = lab.n
        if isinstance(lab, VPlus) or n == 0:
            got, want = _labels(_omega_triv(M, 1)), _canon(VPlus(n + 1))
            c.record(got == want, f"Omega({lab}) = {dict(got)}")
        if isinstance(lab, VMinus):
            got, want = _labels(_omega_triv(M, -1)), _canon(VMinus(n + 1))
            c.record(got == want, f"Omega^-1({lab}) = {dict(got)}")
    return c


# ---------------------------------------------------------------------------
# 9: duality


def check_duality(max_dim: int = 13) -> Check:
    c = Check(f"duals of indecomposables, dim <= {max_dim}")
    F = gf(1)
    for lab in catalogue(max_dim, F):
        M = build_indecomposable(lab, F)
        if isinstance(lab, VPlus):
            want = VMinus(lab.n)
        elif isinstance(lab, VMinus):
            want = VPlus(lab.n)
        else:
            want = lab
        got = _labels(dual(M))
        c.record(got == _canon(want), f"dual({lab}) = {dict(got)}")
    return c


def check_machinery() -> list:
    return [
        check_higman(),
        check_schanuel(),
        check_suspension(),
        check_relproj_fixed_points(),
        check_ordinary_heller(),
    ]


ACCEPTANCE: list[tuple[str, Callable[[], list]]] = [
    ("1 trivial-module cohomology", lambda: [check_trivial_cohomology()]),
    ("2 odd positive table", lambda: [check_odd_positive()]),
    ("3 odd negative table", lambda: [check_odd_negative()]),
    ("4 even table", lambda: [check_even()]),
    ("5 relative Heller shifts", lambda: [check_relative_heller()]),
    ("6 cover shapes", lambda: [check_cover_shapes()]),
    ("7 cup products", lambda: [check_cup_products()]),
    ("8 machinery", check_machinery),
    ("9 duality", lambda: [check_duality()]),
]


def run_all(max_dim: int = 13, max_i: int = 6, echo: Callable[[str], None] = print) -> bool:
    """Run every family at the given scale; print one line per check."""
    checks = [
        lambda: check_trivial_cohomology(max(max_i, 8)),
        lambda: check_odd_positive(min(6, (max_dim - 1) // 2), max_i),
        lambda: check_odd_negative(min(8, max(1, (max_dim - 1) // 2)), max(max_i, 8)),
        lambda: check_even(min(5, max_dim // 2), min(max_i, 5)),
        lambda: check_relative_heller(max_dim),
        check_cover_shapes,
        lambda: check_cup_products(min(6, max_i), min(6, max_i)),
        lambda: check_higman(max_dim),
        check_schanuel,
        lambda: check_suspension(min(9, max_dim)),
        lambda: check_relproj_fixed_points(min(12, max_dim)),
        lambda: check_ordinary_heller(max_dim),
        lambda: check_duality(max_dim),
    ]
    ok = True
    for make in checks:
        result = make()
        echo(result.line())
        ok = ok and result.passed
    return ok

