"""Relative cohomology dimensions H^i_chi(G, N) and their closed forms.

For i > 0, H^i_chi(G, N) is the stable Hom-space from the i-th syzygy of
the trivial module to N, taken modulo maps that are transfers from chi.
Degree zero is the space of G-fixed points.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Optional

from .homspace import fixed_points, underline_hom_dim
from .kgmod import CHI, KGModule, Label, Proj, VEven, VMinus, VPlus, build_indecomposable
from .relproj import minimal_resolution

__all__ = [
    "CellCheck",
    "CohomRow",
    "CohomTable",
    "closed_form_dim",
    "rel_cohom_dim",
    "table_labels",
    "to_csv",
    "verify_tables",
]


def rel_cohom_dim(n: KGModule, chi: Iterable = CHI, i: int = 0) -> int:
    chi = frozenset(chi)
    if not chi:
        raise ValueError("chi must be non-empty")
    if i < 0:
        raise ValueError("degree must be non-negative")
    if i == 0:
        return fixed_points(n).dim
    res = minimal_resolution(chi, i, n.field)
    return underline_hom_dim(res.syzygy(i), n, chi)


def _special_theta(label: VEven) -> bool:
    # infinity, x^n and (x+1)^n: the bands that contain a Q_H summand on restriction
    return label.theta.infinite or label.theta.q in ((0, 1), (1, 1))


def closed_form_dim(label: Label, i: int) -> int:
    """dim H^i_chi(G, V) for chi = {H1, H2, H3} and an indecomposable V."""
    if i < 0:
        raise ValueError("degree must be non-negative")
    if isinstance(label, Proj):
        return 1 if i == 0 else 0
    if isinstance(label, VPlus) or label == VMinus(0):
        n = label.n
        if i == 0:
            return n if n > 0 else 1
        return max(0, n + 2 * i - 3)
    if isinstance(label, VMinus):
        n = label.n
        if 2 * i <= n:
            return n + 1 - 2 * i
        return max(0, 2 * i - n - 3)
    if isinstance(label, VEven):
        n = label.n
        if _special_theta(label):
            return n if i == 0 else n - 1
        return n
    raise TypeError(f"not a catalogue label: {label!r}")


@dataclass(frozen=True)
class CohomRow:
    module: str
    degree: int
    dim: int
    method: str  # "resolution" or "closed_form"


@dataclass(frozen=True)
class CellCheck:
    module: str
    degree: int
    computed: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.computed == self.expected


@dataclass
class CohomTable:
    rows: list
    cells: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    def mismatches(self) -> list:
        return [c for c in self.cells if not c.passed]


def table_labels(max_n: int, field=None) -> list:
    """Labels used by the dimension tables: odd types and the even families up to n."""
    from .field import gf

    F = field or gf(1)
    labels: list = [VMinus(0)]
    labels += [VPlus(n) for n in range(1, max_n + 1)]
    labels += [VMinus(n) for n in range(1, max_n + 1)]
    for n in range(1, max_n + 1):
        labels += [VEven.inf(n), VEven.of((0, 1), n), VEven.of((1, 1), n)]
        if F.degree == 1 and n % 2 == 0:
            labels.append(VEven.of((1, 1, 1), n // 2))
        if F.degree > 1:
            w = F.generator.value
            labels.append(VEven.of((w, 1), n))
    labels.append(Proj())
    return labels


def verify_tables(
    max_n: int,
    max_i: int,
    chi: Iterable = CHI,
    field=None,
    labels: Optional[list] = None,
) -> CohomTable:
    """Compute every cell by resolution and by closed form; mismatches are data."""
    from .field import gf

    F = field or gf(1)
    chi = frozenset(chi)
    if chi != CHI:
        raise ValueError("closed forms are stated for chi = {H1, H2, H3}")
    rows, cells = [], []
    for lab in labels if labels is not None else table_labels(max_n, F):
        mod = build_indecomposable(lab, F)
        for i in range(max_i + 1):
            got = rel_cohom_dim(mod, chi, i)
            want = closed_form_dim(lab, i)
            rows.append(CohomRow(str(lab), i, got, "resolution"))
            rows.append(CohomRow(str(lab), i, want, "closed_form"))
            cells.append(CellCheck(str(lab), i, got, want))
    return CohomTable(rows, cells)


def to_csv(rows: Iterable[CohomRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["module", "degree", "dim", "method"])
    for r in rows:
        w.writerow([r.module, r.degree, r.dim, r.method])
    return buf.getvalue()

