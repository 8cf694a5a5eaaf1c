"""Cup products on relative cohomology of the trivial module.

A class of degree i is represented by a G-map f from the i-th syzygy to k,
up to maps that are transfers from chi.  For f of degree i and g of
degree j the product is represented by f . Omega^i(g), with Omega^i(g)
obtained by lifting g i times through the stored resolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import linalg as la
from .homspace import TransferData, chi_transfer_image, hom_basis
from .field import GF2e, gf
from .kgmod import CHI, trivial
from .relproj import minimal_resolution

__all__ = [
    "CohomClass",
    "CupEntry",
    "CupReport",
    "CupResult",
    "class_basis",
    "composition_vanishes",
    "cup_product",
    "make_class",
    "transfer_data",
    "verify_cup_vanishing",
]


@dataclass(frozen=True, eq=False)
class CohomClass:
    degree: int
    representative: np.ndarray  # 1 x dim syzygy(degree)
    residue: np.ndarray
    chi: frozenset
    field: GF2e

    def is_zero(self) -> bool:
        return not np.any(self.residue)

    def __eq__(self, other):
        return (
            isinstance(other, CohomClass)
            and other.degree == self.degree
            and other.chi == self.chi
            and np.array_equal(other.residue, self.residue)
        )


_TD_CACHE: dict = {}


def transfer_data(chi: Iterable, i: int, F=None) -> TransferData:
    """Transfer image inside Hom(syzygy(i), k), cached per (field, chi, i)."""
    F = F or gf(1)
    chi = frozenset(chi)
    key = (F.degree, chi, i)
    if key not in _TD_CACHE:
        res = minimal_resolution(chi, i, F)
        _TD_CACHE[key] = chi_transfer_image(res.syzygy(i), trivial(F), chi)
    return _TD_CACHE[key]


def make_class(f: np.ndarray, chi: Iterable, i: int, F=None) -> CohomClass:
    F = F or gf(1)
    chi = frozenset(chi)
    td = transfer_data(chi, i, F)
    f = np.asarray(f, dtype=np.uint8).reshape(1, -1)
    return CohomClass(i, f, td.residue(f), chi, F)


def class_basis(chi: Iterable = CHI, i: int = 0, F=None) -> list:
    """Representatives of a basis of H^i_chi(G, k)."""
    chi = frozenset(chi)
    if not chi:
        raise ValueError("chi must be non-empty")
    td = transfer_data(chi, i, F)
    return [make_class(f, chi, i, F) for f in td.complement()]


@dataclass(frozen=True, eq=False)
class CupResult:
    product: CohomClass
    composite: np.ndarray  # f . Omega^i(g), a map syzygy(i + j) -> k

    @property
    def is_zero_map(self) -> bool:
        return not np.any(self.composite)


def cup_product(a: CohomClass, b: CohomClass, chi: Optional[Iterable] = None) -> CupResult:
    chi = frozenset(chi) if chi is not None else a.chi
    if a.chi != chi or b.chi != chi:
        raise ValueError("classes belong to a different chi")
    if a.field != b.field:
        raise ValueError("classes over different fields")
    i, j = a.degree, b.degree
    res = minimal_resolution(chi, i + j, a.field)
    shifted = res.omega_power_of_hom(b.representative, j, i)
    composite = la.matmul(res.field, a.representative, shifted)
    return CupResult(make_class(composite, chi, i + j, res.field), composite)


@dataclass(frozen=True)
class CupEntry:
    i: int
    j: int
    class_index_pair: tuple
    is_zero_class: bool
    is_zero_map: bool

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "class_index_pair": list(self.class_index_pair),
            "is_zero_class": self.is_zero_class,
            "is_zero_map": self.is_zero_map,
        }


@dataclass
class CupReport:
    chi: frozenset
    max_total_degree: int
    entries: list = field(default_factory=list)
    check_maps: bool = False

    @property
    def vacuous(self) -> bool:
        return not self.entries

    @property
    def passed(self) -> bool:
        return all(
            e.is_zero_class and (e.is_zero_map or not self.check_maps) for e in self.entries
        )

    def to_json(self) -> dict:
        return {
            "chi": sorted(h.value for h in self.chi),
            "max_total_degree": self.max_total_degree,
            "check_maps": self.check_maps,
            "vacuous": self.vacuous,
            "passed": self.passed,
            "entries": [e.to_json() for e in self.entries],
        }


def verify_cup_vanishing(chi: Iterable = CHI, max_total_degree: int = 6, F=None) -> CupReport:
    """All products of positive-degree basis classes with i + j <= max_total_degree.

    For chi = {H1, H2, H3} the composed representatives are also required
    to be literally zero.
    """
    chi = frozenset(chi)
    report = CupReport(chi, max_total_degree, check_maps=chi == CHI)
    bases = {d: class_basis(chi, d, F) for d in range(1, max_total_degree)}
    for i in range(1, max_total_degree):
        for j in range(1, max_total_degree - i + 1):
            for ai, a in enumerate(bases[i]):
                for bj, b in enumerate(bases[j]):
                    r = cup_product(a, b, chi)
                    report.entries.append(
                        CupEntry(i, j, (ai, bj), r.product.is_zero(), r.is_zero_map)
                    )
    return report


def composition_vanishes(l: int, m: int, n: int, F=None) -> bool:
    """Every composite V_{-(2l+1)} -> V_{-(2m+1)} -> V_{-(2n+1)} is zero (l > m > n)."""
    from .kgmod import VMinus, build_indecomposable

    F = F or gf(1)
    A, B, C = (build_indecomposable(VMinus(x), F) for x in (l, m, n))
    psi = hom_basis(A, B).basis
    phi = hom_basis(B, C).basis
    if psi.shape[0] == 0 or phi.shape[0] == 0:
        return True
    prods = la.matmul(F, phi[:, None], psi[None, :])
    return not np.any(prods)

