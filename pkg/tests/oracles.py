"""Brute-force oracles for the test suite.

Nothing here imports kfour.linalg or kfour.field: arithmetic is redone from
scratch with Python integers so that agreement is independent evidence.
"""

import itertools

import numpy as np

# same polynomial-basis encoding as the library: bit i is the coefficient of t^i
MODULI = {1: 0b11, 2: 0b111, 3: 0b1011, 4: 0b10011}


def gf_mul(a: int, b: int, e: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> e:
            a ^= MODULI[e]
    return out


def mat_mul(A, B, e: int = 1) -> np.ndarray:
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    if e == 1:
        return (A @ B) % 2
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            acc = 0
            for k in range(A.shape[1]):
                acc ^= gf_mul(int(A[i, k]), int(B[k, j]), e)
            out[i, j] = acc
    return out


def gf2_rank(M) -> int:
    """Rank over GF(2) by xor-elimination on rows packed into integers."""
    rows = [int("".join(str(int(x) & 1) for x in r) or "0", 2) for r in np.asarray(M)]
    rank = 0
    while rows:
        pivot = max(rows)
        rows.remove(pivot)
        if pivot == 0:
            break
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> top) & 1 else r for r in rows]
    return rank


def all_vectors(n: int, q: int = 2):
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(-1, n)


def kernel_count(A, q: int = 2, e: int = 1) -> int:
    """Number of column vectors v with A v = 0, by enumeration."""
    A = np.asarray(A, dtype=np.int64)
    V = all_vectors(A.shape[1], q)
    if e == 1:
        return int(np.sum(~np.any((V @ A.T) % 2, axis=1)))
    return sum(not np.any(mat_mul(A, v[:, None], e)) for v in V)


def hom_dim_kron(MX, MY, NX, NY) -> int:
    """dim Hom_G(M, N) over GF(2): nullity of the Kronecker system on vec(A)."""
    dm, dn = len(MX), len(NX)
    if dm == 0 or dn == 0:
        return 0
    In, Im = np.eye(dn, dtype=np.int64), np.eye(dm, dtype=np.int64)
    rows = []
    for a, b in ((MX, NX), (MY, NY)):
        # vec(A a) = (a^T kron I) vec A,  vec(b A) = (I kron b) vec A
        rows.append((np.kron(np.asarray(a).T, In) + np.kron(Im, np.asarray(b))) % 2)
    return dm * dn - gf2_rank(np.vstack(rows))


def hom_count_brute(MX, MY, NX, NY) -> int:
    """Number of G-maps M -> N over GF(2) by enumerating every matrix."""
    dm, dn = len(MX), len(NX)
    size = dm * dn
    assert size <= 16, "enumeration too large"
    A = all_vectors(size).reshape(-1, dn, dm)
    ok = np.ones(A.shape[0], dtype=bool)
    for a, b in ((MX, NX), (MY, NY)):
        lhs = np.einsum("kij,jl->kil", A, np.asarray(a)) % 2
        rhs = np.einsum("ij,kjl->kil", np.asarray(b), A) % 2
        ok &= np.all(lhs == rhs, axis=(1, 2))
    return int(ok.sum())


def mobius(n: int) -> int:
    out, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def irreducible_count(d: int, q: int = 2) -> int:
    """Monic irreducibles of degree d over GF(q) (necklace formula)."""
    return sum(mobius(d // k) * q**k for k in range(1, d + 1) if d % k == 0) // d


def catalogue_size(max_dim: int, q: int = 2) -> int:
    """Number of indecomposable labels of dimension <= max_dim."""
    odd = 1 + 2 * ((max_dim - 1) // 2)
    even = 0
    for n in range(1, max_dim // 2 + 1):
        even += 1 + sum(irreducible_count(d, q) for d in range(1, n + 1) if n % d == 0)
    return odd + even + (1 if max_dim >= 4 else 0)


def group_matrices(X, Y):
    """sigma, tau and sigma*tau as 0/1 matrices over GF(2)."""
    X, Y = np.asarray(X, dtype=np.int64), np.asarray(Y, dtype=np.int64)
    I = np.eye(len(X), dtype=np.int64)
    s, t = (I + X) % 2, (I + Y) % 2
    return {"1": I, "s": s, "t": t, "st": (s @ t) % 2}


def fixed_point_count(X, Y) -> int:
    """Vectors fixed by every group element, by enumeration over GF(2)."""
    V = all_vectors(len(X))
    ok = np.ones(len(V), dtype=bool)
    for g in group_matrices(X, Y).values():
        ok &= np.all((V @ np.asarray(g).T) % 2 == V, axis=1)
    return int(ok.sum())
