"""Relative homological algebra for the Klein four-group over GF(2^e).

Modules are pairs of commuting square-zero matrices X = sigma - 1 and
Y = tau - 1.  The package decomposes them into the indecomposable
catalogue, builds relative projective covers and resolutions for a family
of subgroups chi, and computes relative cohomology and cup products.
"""

from .cohom import closed_form_dim, rel_cohom_dim, verify_tables
from .cup import class_basis, cup_product, verify_cup_vanishing
from .decomp import Decomposition, UndecidedError, decompose, identify, is_isomorphic, strip_rel_projective
from .field import FieldError, GF2e, gf
from .homspace import hom_basis, is_rel_projective, transfer, underline_hom_dim
from .io import LabelError, load_module, dump_module, parse_label, parse_module_spec
from .kgmod import (
    CHI,
    KGModule,
    ModuleError,
    Proj,
    Q_SIGMA,
    Q_SIGMATAU,
    Q_TAU,
    Subgroup,
    Theta,
    VEven,
    VMinus,
    VPlus,
    build_indecomposable,
    catalogue,
    direct_sum,
    dual,
    induce,
    restrict,
    tensor_product,
    trivial,
)
from .relproj import Resolution, injective_hull, minimal_cover, minimal_resolution, omega_chi, omega_of_hom, standard_cover

__version__ = "0.1.0"

__all__ = [
    "CHI",
    "Decomposition",
    "FieldError",
    "GF2e",
    "KGModule",
    "LabelError",
    "ModuleError",
    "Proj",
    "Q_SIGMA",
    "Q_SIGMATAU",
    "Q_TAU",
    "Resolution",
    "Subgroup",
    "Theta",
    "UndecidedError",
    "VEven",
    "VMinus",
    "VPlus",
    "build_indecomposable",
    "catalogue",
    "class_basis",
    "closed_form_dim",
    "cup_product",
    "decompose",
    "direct_sum",
    "dual",
    "dump_module",
    "gf",
    "hom_basis",
    "identify",
    "induce",
    "injective_hull",
    "is_isomorphic",
    "is_rel_projective",
    "load_module",
    "minimal_cover",
    "minimal_resolution",
    "omega_chi",
    "omega_of_hom",
    "parse_label",
    "parse_module_spec",
    "rel_cohom_dim",
    "restrict",
    "standard_cover",
    "strip_rel_projective",
    "tensor_product",
    "transfer",
    "trivial",
    "underline_hom_dim",
    "verify_cup_vanishing",
    "verify_tables",
]
