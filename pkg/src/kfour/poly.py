"""Univariate polynomials over GF(2^e).

A polynomial is a tuple of field elements (ints), lowest degree first,
with no trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterator, Optional

import numpy as np

from .field import GF2e
from . import linalg as la

Poly = tuple


def norm(p) -> Poly:
    p = [int(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def deg(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return norm(
        (p[i] if i < len(p) else 0) ^ (q[i] if i < len(q) else 0) for i in range(n)
    )


def mul(F: GF2e, p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] ^= F.mul(a, b)
    return norm(out)


def power(F: GF2e, p: Poly, k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = mul(F, out, p)
    return out


def divmod_(F: GF2e, p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [0] * max(0, len(p) - len(q) + 1)
    lead_inv = F.inv(q[-1])
    while len(r) >= len(q) and any(r):
        c = F.mul(r[-1], lead_inv)
        shift = len(r) - len(q)
        quot[shift] = c
        for i, b in enumerate(q):
            r[shift + i] ^= F.mul(c, b)
        r = list(norm(r))
    return norm(quot), norm(r)


def monic_polys(F: GF2e, d: int) -> Iterator[Poly]:
    for low in itertools.product(range(F.order), repeat=d):
        yield tuple(low) + (1,)


def smallest_factor(F: GF2e, p: Poly) -> Poly:
    """Monic divisor of least positive degree; it is irreducible."""
    for d in range(1, deg(p) // 2 + 1):
        for cand in monic_polys(F, d):
            if not divmod_(F, p, cand)[1]:
                return cand
    lead_inv = F.inv(p[-1])
    return tuple(F.mul(c, lead_inv) for c in p)


def is_irreducible(F: GF2e, p: Poly) -> bool:
    p = norm(p)
    if deg(p) < 1:
        return False
    return deg(smallest_factor(F, p)) == deg(p)


def prime_power_root(F: GF2e, p: Poly) -> Optional[tuple[Poly, int]]:
    """``(q, m)`` with ``p == q**m`` and ``q`` monic irreducible, or ``None``."""
    p = norm(p)
    if deg(p) < 1 or p[-1] != 1:
        return None
    q = smallest_factor(F, p)
    m, rest = 0, p
    while deg(rest) > 0:
        quot, rem = divmod_(F, rest, q)
        if rem:
            return None
        rest, m = quot, m + 1
    return (q, m) if rest == (1,) else None


# ---------------------------------------------------------------------------
# text form: "x^2+w*x+(w+1)"; "w" is the class of t in the field


def _fmt_elem(c: int) -> str:
    if c == 1:
        return "1"
    terms = []
    for k in range(c.bit_length() - 1, -1, -1):
        if (c >> k) & 1:
            terms.append("1" if k == 0 else "w" if k == 1 else f"w^{k}")
    s = "+".join(terms)
    return s if len(terms) == 1 else f"({s})"


def to_str(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for k in range(deg(p), -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
        if k == 0:
            terms.append(_fmt_elem(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{_fmt_elem(c)}*{mono}")
    return "+".join(terms)


def _parse_elem(F: GF2e, s: str) -> int:
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    val = 0
    t = F.generator.value
    for tok in s.split("+"):
        tok = tok.strip()
        if tok == "1":
            val ^= 1
        elif tok == "0":
            continue
        elif re.fullmatch(r"w(\^\d+)?", tok):
            k = int(tok[2:]) if "^" in tok else 1
            val ^= F.pow(t, k)
        else:
            raise ValueError(f"bad field coefficient {tok!r}")
    return val


def _split_terms(s: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


def from_str(F: GF2e, s: str) -> Poly:
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in _split_terms(s):
        m = re.fullmatch(r"(?:(.+)\*)?x(?:\^(\d+))?", term)
        if m:
            c = _parse_elem(F, m.group(1)) if m.group(1) else 1
            k = int(m.group(2)) if m.group(2) else 1
        else:
            c, k = _parse_elem(F, term), 0
        coeffs[k] = coeffs.get(k, 0) ^ c
    top = max(coeffs)
    return norm(coeffs.get(k, 0) for k in range(top + 1))


# ---------------------------------------------------------------------------
# matrices


def minimal_poly_of_vector(F: GF2e, C: np.ndarray, v: np.ndarray) -> Poly:
    """Monic generator of the annihilator of ``v`` under ``C`` (Krylov)."""
    n = C.shape[0]
    if not np.any(v):
        return (1,)
    vecs = [v.astype(np.uint8)]
    while True:
        K = np.stack(vecs, axis=1)
        nxt = la.matmul(F, C, vecs[-1][:, None])[:, 0]
        sol = la.solve(F, K, nxt)
        if sol is not None:
            # C^k v = sum sol_i C^i v  ->  x^k + sum sol_i x^i (char 2)
            return norm(list(sol) + [1])
        if len(vecs) > n:  # pragma: no cover - impossible for a square C
            raise ArithmeticError("Krylov sequence failed to close")
        vecs.append(nxt)


def eval_matrix(F: GF2e, p: Poly, C: np.ndarray) -> np.ndarray:
    n = C.shape[0]
    out = la.zeros(n, n)
    for c in reversed(p):
        out = la.matmul(F, out, C) ^ la.scale(F, c, la.eye(n))
    return out
