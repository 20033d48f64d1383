import functools
import itertools

import numpy as np
import pytest

from caminakit import camina as cm
from caminakit.catalog import make_group
from caminakit.structure import normal_subgroups, subgroup_generated


@functools.lru_cache(maxsize=None)
def group(spec: str):
    return make_group(spec)


@functools.lru_cache(maxsize=None)
def context(spec: str) -> cm.GroupContext:
    return cm.GroupContext(group(spec))


def normal_of_order(spec: str, order: int, pred=None):
    G = group(spec)
    hits = [N for N in normal_subgroups(G) if len(N) == order and (pred is None or pred(G, N))]
    assert len(hits) == 1, f"{spec}: {len(hits)} normal subgroups of order {order}"
    return hits[0]


def cyclic_normal(spec: str, order: int):
    """The unique normal subgroup of the given order that is cyclic."""
    def is_cyclic(G, N):
        return int(G.element_orders[list(N.members)].max()) == order
    return normal_of_order(spec, order, is_cyclic)


def generated(spec: str, gens):
    return subgroup_generated(group(spec), gens)


# -- brute-force oracles, built only from the raw multiplication table --------

def inverse_of(table):
    return np.argmax(table == 0, axis=1)


def brute_conjugate(table, a, b) -> bool:
    inv = inverse_of(table)
    return any(table[table[inv[x], a], x] == b for x in range(len(table)))


def brute_camina(table, N, M) -> bool:
    """Definition: every g outside N is conjugate to each element of gM."""
    n = len(table)
    Nset, Mset = set(N), set(M)
    inv = inverse_of(table)
    for g in range(n):
        if g in Nset:
            continue
        conj = {int(table[table[inv[x], g], x]) for x in range(n)}
        if any(int(table[g, m]) not in conj for m in Mset):
            return False
    return True


def brute_normal_subgroups(table):
    """All normal subgroups by closing unions of conjugacy classes (tiny groups only)."""
    n = len(table)
    inv = inverse_of(table)
    classes = []
    seen = set()
    for a in range(n):
        if a in seen:
            continue
        c = frozenset(int(table[table[inv[x], a], x]) for x in range(n))
        seen |= c
        classes.append(c)
    found = set()
    for r in range(len(classes) + 1):
        for combo in itertools.combinations(classes[1:], r):
            S = frozenset().union(classes[0], *combo)
            if all(int(table[a, b]) in S for a in S for b in S):
                found.add(S)
    return found


@pytest.fixture
def d8():
    return group("dihedral:8")
