"""Pure numpy implementations of the hot kernels.

Every function here has a twin of the same name and signature in the
compiled ``_ckernels`` extension; ``caminakit.kernels`` picks one at import.
All integer arrays are C-contiguous ``int64``.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def is_associative(table: np.ndarray) -> bool:
    n = table.shape[0]
    for a in range(n):
        # (a*b)*c over all (b, c) against a*(b*c)
        if not np.array_equal(table[table[a]], table[a][table]):
            return False
    return True


def conjugacy_labels(table: np.ndarray, inverse: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    everything = np.arange(n)
    nxt = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        orbit = table[table[inverse, x], everything]
        labels[orbit] = nxt
        nxt += 1
    return labels


def class_mult_coeffs(table: np.ndarray, inverse: np.ndarray,
                      class_of: np.ndarray, nclasses: int) -> tuple[np.ndarray, bool]:
    """Structure constants a[i, j, k]; the flag reports z-independence."""
    n = table.shape[0]
    r = nclasses
    coeffs = np.zeros((r, r, r), dtype=np.int64)
    seen = np.zeros(r, dtype=bool)
    consistent = True
    for z in range(n):
        k = class_of[z]
        y = table[inverse, z]
        counts = np.bincount(class_of * r + class_of[y], minlength=r * r).reshape(r, r)
        if not seen[k]:
            coeffs[:, :, k] = counts
            seen[k] = True
        elif not np.array_equal(coeffs[:, :, k], counts):
            consistent = False
    return coeffs, consistent


def coset_in_class(table: np.ndarray, class_of: np.ndarray,
                   outside: np.ndarray, sub: np.ndarray) -> bool:
    if len(outside) == 0:
        return True
    prods = table[np.ix_(outside, sub)]
    return bool(np.all(class_of[prods] == class_of[outside][:, None]))


def commutators_cover(table: np.ndarray, inverse: np.ndarray,
                      outside: np.ndarray, sub: np.ndarray) -> bool:
    n = table.shape[0]
    for g in outside:
        comms = table[table[inverse[g], inverse], table[g]]
        hit = np.zeros(n, dtype=bool)
        hit[comms] = True
        if not hit[sub].all():
            return False
    return True


def closure(table: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``gens``."""
    n = table.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    gens = np.unique(gens)
    if len(gens) == 0:
        return mask
    frontier = np.array([0], dtype=np.int64)
    while len(frontier):
        prods = np.unique(table[np.ix_(frontier, gens)])
        new = prods[~mask[prods]]
        mask[new] = True
        frontier = new
    return mask


def rref_mod_p(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form over GF(p); returns (matrix, pivot columns)."""
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        factors = m[:, c].copy()
        factors[r] = 0
        m = (m - np.outer(factors, m[r])) % p
        pivots.append(c)
        r += 1
    return m, np.array(pivots, dtype=np.int64)
