"""Small dense linear algebra over GF(p)."""
from __future__ import annotations

import math

import numpy as np
from sympy.ntheory import isprime, primitive_root

from . import kernels


def dixon_prime(order: int, e: int) -> int:
    """Smallest prime P = 1 (mod e) with P > 2*isqrt(order)."""
    bound = 2 * math.isqrt(order)
    P = e + 1
    while P <= bound or not isprime(P):
        P += e
    return P


def root_of_unity(P: int, e: int) -> int:
    """A primitive e-th root of unity mod P (requires e | P - 1)."""
    if (P - 1) % e:
        raise ValueError(f"{e} does not divide {P} - 1")
    return pow(int(primitive_root(P)), (P - 1) // e, P)


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the right null space of ``a`` over GF(p)."""
    rows, cols = a.shape
    R, pivots = kernels.rref_mod_p(np.ascontiguousarray(a, dtype=np.int64), p)
    pivots = list(pivots.tolist())
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for t, f in enumerate(free):
        basis[f, t] = 1
        for i, c in enumerate(pivots):
            basis[c, t] = (-R[i, f]) % p
    return basis


def column_echelon(B: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Normalize a column basis so its pivot rows form an identity block."""
    R, pivots = kernels.rref_mod_p(np.ascontiguousarray(B.T, dtype=np.int64), p)
    R = R[: len(pivots)]
    return np.ascontiguousarray(R.T), pivots


def charpoly(a: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial over GF(p) via Hessenberg reduction, low degree first."""
    n = a.shape[0]
    H = [[int(x) % p for x in row] for row in a.tolist()]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(H[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = H[i][m - 1] * inv % p
            if not u:
                continue
            Hi, Hm = H[i], H[m]
            for j in range(n):
                Hi[j] = (Hi[j] - u * Hm[j]) % p
            for row in H:
                row[m] = (row[m] + u * row[i]) % p
    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = [0] + prev
        for k, c in enumerate(prev):
            cur[k] = (cur[k] - H[m - 1][m - 1] * c) % p
        t = 1
        for i in range(1, m):
            t = t * H[m - i][m - i - 1] % p
            coef = t * H[m - i - 1][m - 1] % p
            if coef:
                for k, c in enumerate(polys[m - i - 1]):
                    cur[k] = (cur[k] - coef * c) % p
        polys.append(cur)
    return polys[n]


def roots(poly: list[int], p: int) -> list[int]:
    """All roots in GF(p), by evaluation at every residue."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + c) % p
    return np.nonzero(acc == 0)[0].tolist()
