"""Normal subgroups, quotients, series and the structural tests built on them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np
from sympy import factorint

from . import kernels
from .errors import ComplementSearchFailed, NotNormal
from .group import ElementSet, Group, as_group

TRIVIAL: Literal["trivial"] = "trivial"


@dataclass(frozen=True)
class QuotientGroup:
    group: Group
    projection: np.ndarray
    kernel: ElementSet


@dataclass(frozen=True)
class SeriesReport:
    derived_series: tuple[ElementSet, ...]
    lower_central: tuple[ElementSet, ...]
    upper_central: tuple[ElementSet, ...]
    is_solvable: bool
    is_nilpotent: bool


@dataclass(frozen=True)
class FrobeniusStructure:
    kernel: ElementSet
    complement: ElementSet
    complement_is_abelian: bool
    complement_is_elementary_abelian_p: int | str | None
    kernel_is_elementary_abelian_p: int | str | None


def prime_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def primes_dividing(n: int) -> list[int]:
    return sorted(factorint(n)) if n > 1 else []


def subgroup_generated(G: Group, S: Iterable[int]) -> ElementSet:
    gens = np.array(sorted(set(int(x) for x in S)), dtype=np.int64)
    mask = kernels.closure(G.table, gens)
    return G.element_set(np.nonzero(mask)[0].tolist())


def _normal_set(G: Group, members) -> ElementSet:
    return ElementSet(tuple(sorted(int(x) for x in members)), True, True)


def product_of_normals(G: Group, A: ElementSet, B: ElementSet) -> ElementSet:
    """AB for normal A, B (itself a normal subgroup)."""
    return _normal_set(G, np.unique(G.table[np.ix_(A.array, B.array)]))


def normal_subgroups(G: Group) -> list[ElementSet]:
    """All normal subgroups, by size and then lexicographically."""
    base = {}
    for cls in G.classes.classes:
        ms = np.nonzero(kernels.closure(G.table, np.array(cls, dtype=np.int64)))[0]
        base[tuple(ms.tolist())] = None
    base_sets = [_normal_set(G, ms) for ms in base]
    found = {G.trivial.members: G.trivial}
    frontier = [G.trivial]
    while frontier:
        nxt = []
        for S in frontier:
            for B in base_sets:
                if B.issubset(S):
                    continue
                J = product_of_normals(G, S, B)
                if J.members not in found:
                    found[J.members] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda s: (len(s), s.members))


def quotient(G: Group, K: ElementSet) -> QuotientGroup:
    if not G.element_set(K.members).is_normal:
        raise NotNormal(f"subgroup of order {len(K)} is not normal in {G.name}")
    reps_of = G.table[:, K.array].min(axis=1)
    reps = np.unique(reps_of)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    projection = pos[reps_of]
    qtable = projection[G.table[np.ix_(reps, reps)]]
    projection.setflags(write=False)
    Q = Group(qtable, f"{G.name}/{len(K)}")
    return QuotientGroup(Q, projection, K)


def commutator_subgroup(G: Group, A: ElementSet, B: ElementSet) -> ElementSet:
    """[A, B], generated by all a^-1 b^-1 a b."""
    t, inv = G.table, G.inverse
    a, b = A.array, B.array
    comms = t[t[np.ix_(inv[a], inv[b])], t[np.ix_(a, b)]]
    return subgroup_generated(G, np.unique(comms).tolist())


def derived_subgroup(G: Group) -> ElementSet:
    return commutator_subgroup(G, G.whole, G.whole)


def _stabilize(first: ElementSet, step) -> tuple[ElementSet, ...]:
    terms = [first]
    while True:
        nxt = step(terms[-1])
        if nxt.members == terms[-1].members:
            return tuple(terms)
        terms.append(nxt)


def series(G: Group) -> SeriesReport:
    whole = G.whole
    derived = _stabilize(whole, lambda D: commutator_subgroup(G, D, D))
    lower = _stabilize(whole, lambda L: commutator_subgroup(G, L, whole))
    t, inv = G.table, G.inverse
    comm_all = t[t[np.ix_(inv, inv)], t]  # comm_all[x, g] = [x, g]

    def next_upper(Z: ElementSet) -> ElementSet:
        zmask = Z.mask(G.order)
        return _normal_set(G, np.nonzero(zmask[comm_all].all(axis=1))[0])

    upper = _stabilize(G.trivial, next_upper)
    return SeriesReport(
        derived_series=derived,
        lower_central=lower,
        upper_central=upper,
        is_solvable=len(derived[-1]) == 1,
        is_nilpotent=len(lower[-1]) == 1,
    )


def is_p_group(G: Group) -> int | str | None:
    """The prime p when |G| is a power of p; ``"trivial"`` for |G| = 1."""
    if G.order == 1:
        return TRIVIAL
    ps = primes_dividing(G.order)
    return ps[0] if len(ps) == 1 else None


def is_elementary_abelian(G: Group) -> int | str | None:
    if G.order == 1:
        return TRIVIAL
    if not G.is_abelian:
        return None
    orders = set(G.element_orders[1:].tolist())
    if len(orders) == 1 and primes_dividing(min(orders)) == [min(orders)]:
        return min(orders)
    return None


def normal_pi_complement(G: Group, pi: Iterable[int],
                         normals: list[ElementSet] | None = None) -> ElementSet | None:
    """Intersection of the normal p-complements for p in ``pi``, or None."""
    if normals is None:
        normals = normal_subgroups(G)
    Q = set(range(G.order))
    for p in sorted(set(pi)):
        target = G.order // prime_part(G.order, p)
        hits = [N for N in normals if len(N) == target]
        if not hits:
            return None
        Q &= hits[0].as_set
    return _normal_set(G, Q)


def has_normal_sylow(G: Group, p: int, normals: list[ElementSet] | None = None) -> bool:
    if normals is None:
        normals = normal_subgroups(G)
    size = prime_part(G.order, p)
    return any(len(N) == size for N in normals)


def frobenius_kernel(G: Group, normals: list[ElementSet] | None = None) -> ElementSet | None:
    """The normal K, 1 < K < G, holding the centralizer of each of its non-identity elements."""
    if normals is None:
        normals = normal_subgroups(G)
    commute = G.table == G.table.T
    for K in normals:
        if len(K) == 1 or len(K) == G.order:
            continue
        outside = ~K.mask(G.order)
        if not (commute[K.array[1:]] & outside).any():
            return K
    return None


def _find_complement(G: Group, K: ElementSet) -> ElementSet | None:
    h = G.order // len(K)
    kmask = K.mask(G.order)
    orders = G.element_orders
    cands = [x for x in range(G.order) if not kmask[x] and h % int(orders[x]) == 0]
    cands.sort(key=lambda x: (-int(orders[x]), x))
    visited: set[bytes] = set()

    def search(mask: np.ndarray) -> np.ndarray | None:
        size = int(mask.sum())
        if size == h:
            return mask
        for x in cands:
            if mask[x]:
                continue
            gens = np.append(np.nonzero(mask)[0], x)
            new = kernels.closure(G.table, gens)
            key = new.tobytes()
            if key in visited:
                continue
            visited.add(key)
            nsize = int(new.sum())
            if h % nsize or (new & kmask).sum() != 1:
                continue
            found = search(new)
            if found is not None:
                return found
        return None

    start = np.zeros(G.order, dtype=bool)
    start[0] = True
    found = search(start)
    if found is None:
        return None
    return G.element_set(np.nonzero(found)[0].tolist())


def frobenius_structure(G: Group, normals: list[ElementSet] | None = None) -> FrobeniusStructure | None:
    K = frobenius_kernel(G, normals)
    if K is None:
        return None
    H = _find_complement(G, K)
    if H is None:
        raise ComplementSearchFailed(f"{G.name}: kernel of order {len(K)} has no complement")
    Hg = as_group(G, H).group
    Kg = as_group(G, K).group
    return FrobeniusStructure(
        kernel=K,
        complement=H,
        complement_is_abelian=Hg.is_abelian,
        complement_is_elementary_abelian_p=is_elementary_abelian(Hg),
        kernel_is_elementary_abelian_p=is_elementary_abelian(Kg),
    )

