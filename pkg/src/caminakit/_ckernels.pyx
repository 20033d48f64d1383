# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the kernels in ``_pykernels``."""
import numpy as np
cimport numpy as cnp

ctypedef long long i64

BACKEND = "cython"


def is_associative(const i64[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t a, b, c
    cdef i64 ab
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return False
    return True


def conjugacy_labels(const i64[:, ::1] table, const i64[::1] inverse):
    cdef Py_ssize_t n = table.shape[0]
    labels_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] labels = labels_arr
    cdef Py_ssize_t x, g
    cdef i64 nxt = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        for g in range(n):
            labels[table[table[inverse[g], x], g]] = nxt
        nxt += 1
    return labels_arr


def class_mult_coeffs(const i64[:, ::1] table, const i64[::1] inverse,
                      const i64[::1] class_of, Py_ssize_t nclasses):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t r = nclasses
    coeffs_arr = np.zeros((r, r, r), dtype=np.int64)
    counts_arr = np.zeros((r, r), dtype=np.int64)
    seen_arr = np.zeros(r, dtype=np.uint8)
    cdef i64[:, :, ::1] coeffs = coeffs_arr
    cdef i64[:, ::1] counts = counts_arr
    cdef unsigned char[::1] seen = seen_arr
    cdef Py_ssize_t z, x, i, j, k
    cdef bint consistent = True
    for z in range(n):
        k = class_of[z]
        counts[:, :] = 0
        for x in range(n):
            counts[class_of[x], class_of[table[inverse[x], z]]] += 1
        if not seen[k]:
            for i in range(r):
                for j in range(r):
                    coeffs[i, j, k] = counts[i, j]
            seen[k] = 1
        else:
            for i in range(r):
                for j in range(r):
                    if coeffs[i, j, k] != counts[i, j]:
                        consistent = False
    return coeffs_arr, bool(consistent)


def coset_in_class(const i64[:, ::1] table, const i64[::1] class_of,
                   const i64[::1] outside, const i64[::1] sub):
    cdef Py_ssize_t a, b
    cdef i64 g, cg
    for a in range(outside.shape[0]):
        g = outside[a]
        cg = class_of[g]
        for b in range(sub.shape[0]):
            if class_of[table[g, sub[b]]] != cg:
                return False
    return True


def commutators_cover(const i64[:, ::1] table, const i64[::1] inverse,
                      const i64[::1] outside, const i64[::1] sub):
    cdef Py_ssize_t n = table.shape[0]
    hit_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] hit = hit_arr
    cdef Py_ssize_t a, y, b
    cdef i64 g, ginv
    for a in range(outside.shape[0]):
        g = outside[a]
        ginv = inverse[g]
        hit[:] = 0
        for y in range(n):
            hit[table[table[ginv, inverse[y]], table[g, y]]] = 1
        for b in range(sub.shape[0]):
            if not hit[sub[b]]:
                return False
    return True


def closure(const i64[:, ::1] table, gens_in):
    cdef Py_ssize_t n = table.shape[0]
    gens_arr = np.ascontiguousarray(np.unique(gens_in), dtype=np.int64)
    cdef i64[::1] gens = gens_arr
    mask_arr = np.zeros(n, dtype=bool)
    cdef cnp.npy_bool[::1] mask = mask_arr
    queue_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 1, k
    cdef i64 x, y
    mask[0] = True
    queue[0] = 0
    while head < tail:
        x = queue[head]
        head += 1
        for k in range(gens.shape[0]):
            y = table[x, gens[k]]
            if not mask[y]:
                mask[y] = True
                queue[tail] = y
                tail += 1
    return mask_arr


def rref_mod_p(a, i64 p):
    m_arr = np.array(a, dtype=np.int64) % p
    cdef i64[:, ::1] m = m_arr
    cdef Py_ssize_t rows = m.shape[0], cols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f, t
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                t = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = t
        inv = pow(int(m[r, c]), -1, p)
        for j in range(cols):
            m[r, j] = (m[r, j] * inv) % p
        for i in range(rows):
            if i == r or m[i, c] == 0:
                continue
            f = m[i, c]
            for j in range(cols):
                m[i, j] = (m[i, j] - f * m[r, j]) % p
                if m[i, j] < 0:
                    m[i, j] += p
        pivots.append(c)
        r += 1
    return m_arr, np.array(pivots, dtype=np.int64)
