"""Label strings and JSON files for modules, matrices and decompositions."""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Union

import numpy as np

from . import poly
from .decomp import Decomposition
from .field import FieldError, GF2e, gf
from .kgmod import (
    Q_SIGMA,
    Q_SIGMATAU,
    Q_TAU,
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
)

__all__ = [
    "LabelError",
    "decomposition_to_json",
    "dump_module",
    "format_label",
    "load_module",
    "matrix_from_json",
    "matrix_to_json",
    "module_from_json",
    "module_to_json",
    "parse_label",
    "parse_module_spec",
    "split_label_list",
]


class LabelError(ValueError):
    pass


_ALIASES = {"P": Proj(), "K": VMinus(0), "QS": Q_SIGMA, "QT": Q_TAU, "QST": Q_SIGMATAU}


def format_label(label: Label) -> str:
    return str(label)


def _parse_theta(F: GF2e, text: str, n: int) -> Theta:
    text = text.strip()
    if text.startswith("theta:"):
        text = text[len("theta:") :]
    q, m = None, 1
    hit = re.fullmatch(r"(.*)\^(\d+)", text)
    if hit:
        head = hit.group(1)
        if head.startswith("(") and head.endswith(")") and head.count("(") == 1:
            head = head[1:-1]
        try:
            q = poly.from_str(F, head)
            m = int(hit.group(2))
        except ValueError:
            q = None
    if q is None:
        q, m = poly.from_str(F, text), 1
    full = poly.power(F, q, m)
    root = poly.prime_power_root(F, full)
    if root is None:
        raise LabelError(f"theta {text!r} is not a power of a monic irreducible over {F!r}")
    q, m = root
    if poly.deg(q) * m != n:
        raise LabelError(f"theta {text!r} has degree {poly.deg(q) * m}, expected {n}")
    return Theta(q, m)


def parse_label(text: str, F: GF2e = None) -> Label:
    """Parse "V+3", "V-5", "V4,inf", "V4:inf", "V4,theta:x^2+x+1^1", "P", "Qs", "k"."""
    F = F or gf(1)
    s = text.strip()
    if s.upper() in _ALIASES:
        return _ALIASES[s.upper()]
    hit = re.fullmatch(r"V([+-]?)(\d+)(?:[,:](.+))?", s)
    if not hit:
        raise LabelError(f"cannot parse label {text!r}")
    sign, k, rest = hit.group(1), int(hit.group(2)), hit.group(3)
    if k % 2:
        if rest:
            raise LabelError(f"odd-dimensional label {text!r} takes no theta")
        n = (k - 1) // 2
        if sign == "+":
            return VPlus(n)
        if sign == "-" or n == 0:
            return VMinus(n)
        raise LabelError(f"odd-dimensional label {text!r} needs a sign, e.g. V+3 or V-3")
    if sign or not rest or k == 0:
        raise LabelError(f"even-dimensional label {text!r} needs the form V<2n>,inf or V<2n>,theta:<poly>^<m>")
    n = k // 2
    if rest.strip() in ("inf", "theta:inf"):
        return VEven.inf(n)
    label = VEven(n, _parse_theta(F, rest, n))
    build_indecomposable(label, F)  # validates coefficients
    return label


# ---------------------------------------------------------------------------
# JSON


def matrix_to_json(A: np.ndarray) -> list:
    return np.asarray(A, dtype=np.uint8).tolist()


def matrix_from_json(data, name: str = "matrix", field: GF2e = None) -> np.ndarray:
    try:
        A = np.array(data, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ModuleError(f"{name}: not a rectangular integer array ({exc})") from None
    if A.size == 0:
        A = A.reshape(0, 0) if A.ndim < 2 else A
    if A.ndim != 2:
        raise ModuleError(f"{name}: expected a 2-d array, got {A.ndim} dimensions")
    hi = field.order if field is not None else 256
    if A.size and (A.min() < 0 or A.max() >= hi):
        raise ModuleError(f"{name}: entries must lie in 0..{hi - 1}")
    return A.astype(np.uint8)


def module_to_json(m: KGModule) -> dict:
    return {
        "field": m.field.to_json(),
        "dim": m.dim,
        "X": matrix_to_json(m.X),
        "Y": matrix_to_json(m.Y),
    }


def module_from_json(data) -> KGModule:
    if not isinstance(data, dict):
        raise ModuleError("module file must hold a JSON object")
    for key in ("field", "dim", "X", "Y"):
        if key not in data:
            raise ModuleError(f"missing field {key!r}")
    fld = data["field"]
    if not isinstance(fld, dict) or "degree" not in fld:
        raise ModuleError("field: expected an object {\"degree\": e}")
    try:
        F = gf(fld["degree"])
    except (FieldError, TypeError) as exc:
        raise ModuleError(f"field: {exc}") from None
    d = data["dim"]
    if not isinstance(d, int) or d < 0:
        raise ModuleError(f"dim: expected a non-negative integer, got {d!r}")
    X = matrix_from_json(data["X"], "X", F)
    Y = matrix_from_json(data["Y"], "Y", F)
    if d == 0:
        X, Y = X.reshape(0, 0), Y.reshape(0, 0)
    for name, A in (("X", X), ("Y", Y)):
        if A.shape != (d, d):
            raise ModuleError(f"{name}: expected shape {d}x{d}, got {A.shape[0]}x{A.shape[1]}")
    return KGModule(F, X, Y)


def dump_module(m: KGModule, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(module_to_json(m)) + "\n")


def load_module(path: Union[str, Path]) -> KGModule:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ModuleError(f"{path}: invalid JSON ({exc})") from None
    return module_from_json(data)


def parse_module_spec(spec: str, F: GF2e = None) -> KGModule:
    """A JSON file path, a label, or labels joined with '+' (e.g. "V+3+P")."""
    F = F or gf(1)
    p = Path(spec)
    if p.suffix == ".json" or p.is_file():
        return load_module(p)
    parts = _split_sum(spec)
    return direct_sum(*(build_indecomposable(parse_label(x, F), F) for x in parts))


def _split_sum(spec: str) -> list:
    # "+" is a sign right after "V", a polynomial term inside theta, or a separator
    out, cur, depth = [], "", 0
    for i, ch in enumerate(spec):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0 and cur and cur.strip() != "V" and ":" not in cur:
            out.append(cur)
            cur = ""
            continue
        cur += ch
    out.append(cur)
    return [x.strip() for x in out if x.strip()]


def decomposition_to_json(dec: Decomposition) -> list:
    return [{"label": str(lab), "multiplicity": mult} for lab, mult in dec.parts]


def split_label_list(text: str) -> list:
    """Split a comma-separated list of labels, keeping "V4,inf" and "V4,theta:..." whole."""
    out: list = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if out and (tok == "inf" or tok.startswith("theta:")):
            out[-1] = f"{out[-1]},{tok}"
        else:
            out.append(tok)
    return out
