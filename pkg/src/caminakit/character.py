"""Exact irreducible characters via the class-algebra method.

Central characters are found as common eigenvectors of the class-sum
matrices over GF(P), for the smallest prime P = 1 (mod exponent) above
2*isqrt(|G|). Each value chi(g) is then lifted to Z[zeta_e] by recovering
the multiplicities of the roots of unity among the eigenvalues of g with a
discrete Fourier sum mod P; those multiplicities are at most chi(1) < P.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from . import cyclotomic as cyc
from . import kernels, modp
from .cyclotomic import Cyclotomic
from .errors import (EigenspaceSplitFailure, InternalError, InvalidQuery,
                     NonIntegralResult, NotNormal)
from .group import ConjugacyPartition, ElementSet, Embedded, Group, as_group, exponent


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: Group
    classes: ConjugacyPartition
    e: int
    values: np.ndarray = field(repr=False)  # (rows, classes, e) canonical coefficients
    degrees: tuple[int, ...]
    prime: int
    root: int
    trivial_row: int = 0

    def __len__(self) -> int:
        return len(self.degrees)

    @property
    def class_sizes(self) -> np.ndarray:
        return np.array(self.classes.sizes, dtype=np.int64)

    @property
    def centralizer_orders(self) -> np.ndarray:
        return self.group.order // self.class_sizes

    def value(self, row: int, cls: int) -> Cyclotomic:
        return Cyclotomic(self.e, self.values[row, cls], reduced=True)

    def row(self, row: int) -> tuple[Cyclotomic, ...]:
        return tuple(self.value(row, k) for k in range(len(self.classes)))

    def at(self, row: int, x: int) -> Cyclotomic:
        """Value of a row at the element ``x``."""
        return self.value(row, int(self.classes.class_of[x]))

    @property
    def zero_mask(self) -> np.ndarray:
        """zero_mask[i, k] is True when row i vanishes on class k."""
        return ~self.values.any(axis=-1)


@dataclass(frozen=True)
class CharacterSubset:
    table: CharacterTable = field(repr=False)
    rows: tuple[int, ...]
    label: Literal["Irr(G)", "Irr(G|M)", "Irr(G/M)", "custom"]


def class_mult_coefficients(G: Group) -> np.ndarray:
    """a[i, j, k]: pairs (x, y) in classes i, j with x*y equal to a fixed z in class k."""
    coeffs, consistent = kernels.class_mult_coeffs(
        G.table, G.inverse, G.classes.class_of, len(G.classes))
    if not consistent:
        raise InternalError("class multiplication coefficients depend on the chosen z")
    return coeffs


def _power_map(G: Group, e: int) -> np.ndarray:
    """pm[k, l] = class of rep_k ** l."""
    r = len(G.classes)
    pm = np.zeros((r, e), dtype=np.int64)
    for k, g in enumerate(G.classes.reps):
        x = 0
        for l in range(e):
            pm[k, l] = G.classes.class_of[x]
            x = int(G.table[x, g])
    return pm


def _common_eigenvectors(coeffs: np.ndarray, P: int) -> list[np.ndarray]:
    r = coeffs.shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    for j in range(r):
        if all(B.shape[1] == 1 for B in spaces):
            break
        M = coeffs[j] % P
        refined = []
        for B in spaces:
            d = B.shape[1]
            if d == 1:
                refined.append(B)
                continue
            B, pivots = modp.column_echelon(B, P)
            C = (M @ B % P)[pivots]
            pieces = []
            for lam in modp.roots(modp.charpoly(C, P), P):
                Y = modp.nullspace((C - lam * np.eye(d, dtype=np.int64)) % P, P)
                pieces.append(B @ Y % P)
            if sum(Y.shape[1] for Y in pieces) != d:
                raise EigenspaceSplitFailure(f"class matrix {j} is not diagonalizable mod {P}")
            refined.extend(pieces)
        spaces = refined
    if any(B.shape[1] != 1 for B in spaces):
        raise EigenspaceSplitFailure("common eigenspaces did not split into lines")
    return [B[:, 0] for B in spaces]


def character_table(G: Group) -> CharacterTable:
    n = G.order
    cp = G.classes
    r = len(cp)
    sizes = np.array(cp.sizes, dtype=np.int64)
    inv_cls = cp.class_of[G.inverse[list(cp.reps)]]
    e = exponent(G)
    P = modp.dixon_prime(n, e)
    z = modp.root_of_unity(P, e)
    coeffs = class_mult_coefficients(G)

    rows_modp = []
    degrees = []
    size_inv = np.array([pow(int(h), -1, P) for h in sizes], dtype=np.int64)
    for w in _common_eigenvectors(coeffs, P):
        if w[0] % P == 0:
            raise EigenspaceSplitFailure("eigenvector vanishes on the identity class")
        w = w * pow(int(w[0]), -1, P) % P
        norm = int((w * w[inv_cls] % P * size_inv % P).sum() % P)
        target = n * pow(norm, -1, P) % P
        d = next((d for d in range(1, math.isqrt(n) + 1) if d * d % P == target), None)
        if d is None or n % d:
            raise EigenspaceSplitFailure(f"no valid degree for central character mod {P}")
        degrees.append(d)
        rows_modp.append(d * w % P * size_inv % P)

    pm = _power_map(G, e)
    orders = G.element_orders[list(cp.reps)]
    values = np.zeros((r, r, e), dtype=np.int64)
    for i, (d, row) in enumerate(zip(degrees, rows_modp)):
        for k in range(r):
            m = int(orders[k])
            step = e // m
            u = pow(z, step, P)
            seq = row[pm[k, :m]]
            m_inv = pow(m, -1, P)
            vec = np.zeros(e, dtype=np.int64)
            for j in range(m):
                uj = pow(u, (-j) % m, P)
                mu = sum(int(seq[l]) * pow(uj, l, P) for l in range(m)) * m_inv % P
                if mu > d:
                    raise EigenspaceSplitFailure(f"root multiplicity {mu} exceeds degree {d}")
                vec[j * step] += mu
            values[i, k] = vec
    values = cyc.canonical(values)

    for i, row in enumerate(rows_modp):
        if not np.array_equal(cyc.mod_p(values[i], P, z), row % P):
            raise InternalError("lifted values do not reduce to the modular table")

    order = _row_order(values, degrees)
    values = np.ascontiguousarray(values[order])
    values.setflags(write=False)
    return CharacterTable(
        group=G, classes=cp, e=e, values=values,
        degrees=tuple(degrees[i] for i in order), prime=P, root=z,
    )


def _row_order(values: np.ndarray, degrees: list[int]) -> list[int]:
    r = len(degrees)
    trivial = [i for i in range(r)
               if degrees[i] == 1 and all(cyc.integer_value(v) == 1 for v in values[i])]
    if len(trivial) != 1:
        raise InternalError("expected exactly one trivial character")
    rest = sorted((i for i in range(r) if i != trivial[0]),
                  key=lambda i: (degrees[i], values[i].ravel().tolist()))
    return trivial + rest


def kernel_of(T: CharacterTable, row: int) -> ElementSet:
    deg = np.zeros(T.e, dtype=np.int64)
    deg[0] = T.degrees[row]
    hit = [k for k in range(len(T.classes)) if np.array_equal(T.values[row, k], deg)]
    members = sorted(x for k in hit for x in T.classes.classes[k])
    return ElementSet(tuple(members), True, True)


def _check_normal_nontrivial(G: Group, M: ElementSet) -> None:
    if len(M) <= 1:
        raise InvalidQuery("M must be a nontrivial normal subgroup")
    if not G.element_set(M.members).is_normal:
        raise NotNormal(f"subgroup of order {len(M)} is not normal in {G.name}")


def irr_over(T: CharacterTable, M: ElementSet) -> CharacterSubset:
    """Irr(G|M): rows whose kernel does not contain M."""
    _check_normal_nontrivial(T.group, M)
    rows = tuple(i for i in range(len(T)) if not M.issubset(kernel_of(T, i)))
    return CharacterSubset(T, rows, "Irr(G|M)")


def irr_of_quotient_rows(T: CharacterTable, M: ElementSet) -> CharacterSubset:
    """The complement of Irr(G|M): inflations of Irr(G/M)."""
    over = set(irr_over(T, M).rows)
    return CharacterSubset(T, tuple(i for i in range(len(T)) if i not in over), "Irr(G/M)")


def _as_array(T: CharacterTable, f) -> np.ndarray:
    if isinstance(f, np.ndarray):
        return f
    return np.array([v.embed(T.e).array if isinstance(v, Cyclotomic)
                     else Cyclotomic.from_int(T.e, int(v)).array for v in f], dtype=np.int64)


def inner_product(T: CharacterTable, f, g) -> Cyclotomic:
    """(1/|G|) sum_x f(x) conj(g(x)) for class functions indexed by classes."""
    fa, ga = _as_array(T, f), _as_array(T, g)
    total = cyc.gram(fa[None], cyc.conj_array(ga)[None], T.class_sizes)[0, 0]
    if (total % T.group.order).any():
        raise NonIntegralResult("inner product is not divisible by |G|")
    return Cyclotomic(T.e, total // T.group.order, reduced=True)


def regular_character(T: CharacterTable) -> np.ndarray:
    f = np.zeros((len(T.classes), T.e), dtype=np.int64)
    f[0, 0] = T.group.order
    return f


def subgroup_table(G: Group, N: ElementSet) -> tuple[Embedded, CharacterTable]:
    emb = as_group(G, N)
    return emb, character_table(emb.group)


def _local_index(G: Group, N: ElementSet) -> np.ndarray:
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[N.array] = np.arange(len(N))
    return pos


def _check_normal(G: Group, N: ElementSet) -> None:
    if not G.element_set(N.members).is_normal:
        raise NotNormal(f"subgroup of order {len(N)} is not normal in {G.name}")


def _conjugation_class_maps(G: Group, N: ElementSet, T_N: CharacterTable,
                            conjugators: Sequence[int]) -> np.ndarray:
    """maps[t, c] = class of N containing g * rep_c * g^-1 for g = conjugators[t]."""
    pos = _local_index(G, N)
    reps = N.array[list(T_N.classes.reps)]
    g = np.asarray(conjugators, dtype=np.int64)
    conj = G.table[G.table[np.ix_(g, reps)], G.inverse[g][:, None]]
    return T_N.classes.class_of[pos[conj]]


def induce_from_normal(T_N: CharacterTable, theta_row: int, G: Group, N: ElementSet) -> np.ndarray:
    """theta^G as a class function on G, shape (classes of G, exponent of G)."""
    _check_normal(G, N)
    transversal = np.unique(G.table[:, N.array].min(axis=1))
    inv_t = G.inverse[transversal]
    maps = _conjugation_class_maps(G, N, T_N, inv_t)  # t^-1 x t
    summed = T_N.values[theta_row][maps].sum(axis=0)  # (classes of N, e_N)
    e_G = exponent(G)
    on_n = cyc.embed_array(summed, e_G)
    pos = _local_index(G, N)
    out = np.zeros((len(G.classes), e_G), dtype=np.int64)
    for k, rep in enumerate(G.classes.reps):
        if pos[rep] >= 0:
            out[k] = on_n[T_N.classes.class_of[pos[rep]]]
    return out


def inertia_group(T_N: CharacterTable, theta_row: int, G: Group, N: ElementSet) -> ElementSet:
    """{g : theta(g x g^-1) = theta(x) for all x in N}."""
    _check_normal(G, N)
    maps = _conjugation_class_maps(G, N, T_N, range(G.order))
    theta = T_N.values[theta_row]
    fixed = (theta[maps] == theta[None]).all(axis=(1, 2))
    return G.element_set(np.nonzero(fixed)[0].tolist())


def conjugate_characters(T_N: CharacterTable, theta_row: int, G: Group, N: ElementSet) -> list[int]:
    """Rows of T_N that are G-conjugates of theta, sorted."""
    maps = _conjugation_class_maps(G, N, T_N, range(G.order))
    theta = T_N.values[theta_row]
    found = set()
    for cmap in np.unique(maps, axis=0):
        img = theta[cmap]
        for i in range(len(T_N)):
            if np.array_equal(T_N.values[i], img):
                found.add(i)
                break
        else:
            raise InternalError("conjugate of an irreducible character is not in the table")
    return sorted(found)
