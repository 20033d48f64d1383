"""Finite groups given by a full multiplication table.

Elements are the integers ``0..n-1`` and ``0`` is always the identity.
Permutation input uses the right-action convention: the product ``x*y``
means "apply x, then y", so ``(x*y)[k] = y[x[k]]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import MalformedInput, NotAGroup, OrderCapExceeded

DEFAULT_MAX_ORDER = 512
ASSOCIATIVITY_CHECK_LIMIT = 256


@dataclass(frozen=True)
class ElementSet:
    """A sorted set of element indices, with subgroup/normality flags."""

    members: tuple[int, ...]
    is_subgroup: bool = False
    is_normal: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.as_set

    @property
    def as_set(self) -> frozenset[int]:
        s = self.__dict__.get("_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_set", s)
        return s

    @property
    def array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def mask(self, n: int) -> np.ndarray:
        m = np.zeros(n, dtype=bool)
        m[list(self.members)] = True
        return m

    def issubset(self, other: "ElementSet") -> bool:
        return self.as_set <= other.as_set

    def __le__(self, other: "ElementSet") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "ElementSet") -> bool:
        return self.issubset(other) and len(self) < len(other)

    def __and__(self, other: "ElementSet") -> tuple[int, ...]:
        return tuple(sorted(self.as_set & other.as_set))


@dataclass(frozen=True)
class ConjugacyPartition:
    class_of: np.ndarray = field(repr=False)
    classes: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


class Group:
    """An immutable validated group. Build instances with :func:`build_group`."""

    def __init__(self, table: np.ndarray, name: str = "") -> None:
        table = np.ascontiguousarray(table, dtype=np.int64)
        table.setflags(write=False)
        n = table.shape[0]
        inverse = np.ascontiguousarray(np.argmax(table == 0, axis=1), dtype=np.int64)
        inverse.setflags(write=False)
        self.order = n
        self.table = table
        self.inverse = inverse
        self.name = name or f"group{n}"
        self.element_orders = _element_orders(table)
        self.element_orders.setflags(write=False)
        labels = np.ascontiguousarray(kernels.conjugacy_labels(table, inverse), dtype=np.int64)
        labels.setflags(write=False)
        buckets: list[list[int]] = [[] for _ in range(int(labels.max()) + 1)]
        for x, c in enumerate(labels.tolist()):
            buckets[c].append(x)
        self.classes = ConjugacyPartition(
            class_of=labels,
            classes=tuple(tuple(b) for b in buckets),
            reps=tuple(b[0] for b in buckets),
        )

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        x = 0
        for _ in range(k % int(self.element_orders[a])):
            x = int(self.table[x, a])
        return x

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @property
    def whole(self) -> ElementSet:
        return ElementSet(tuple(range(self.order)), True, True)

    @property
    def trivial(self) -> ElementSet:
        return ElementSet((0,), True, True)

    def element_set(self, members: Iterable[int]) -> ElementSet:
        """Wrap ``members`` and compute the subgroup/normality flags by brute force."""
        ms = tuple(sorted(set(int(x) for x in members)))
        return ElementSet(ms, *_subgroup_flags(self, ms))


class Permutations(NamedTuple):
    """Permutation-generator input: ``gens[i][k]`` is the image of point k."""

    degree: int
    gens: tuple[tuple[int, ...], ...]


class Embedded(NamedTuple):
    """A subgroup re-indexed as a standalone group.

    ``members[i]`` is the parent element corresponding to element ``i``.
    """

    group: Group
    members: np.ndarray

    def to_parent(self, xs) -> np.ndarray:
        return self.members[np.asarray(xs, dtype=np.int64)]

    def from_parent(self, xs) -> np.ndarray:
        back = {int(m): i for i, m in enumerate(self.members)}
        return np.array([back[int(x)] for x in np.atleast_1d(xs)], dtype=np.int64)


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    cur = idx.copy()
    k = 1
    while True:
        done = (cur == 0) & (orders == 0)
        orders[done] = k
        if orders.all():
            return orders
        cur = table[cur, idx]
        k += 1


def _subgroup_flags(G: Group, ms: tuple[int, ...]) -> tuple[bool, bool]:
    if not ms or ms[0] != 0:
        return False, False
    arr = np.array(ms, dtype=np.int64)
    mask = np.zeros(G.order, dtype=bool)
    mask[arr] = True
    if not mask[G.table[np.ix_(arr, arr)]].all():
        return False, False
    classes = G.classes.class_of
    hit = np.unique(classes[arr])
    normal = sum(len(G.classes.classes[c]) for c in hit) == len(ms)
    return True, bool(normal)


def _validate_table(table: np.ndarray) -> None:
    n = table.shape[0]
    ident = np.arange(n)
    if not np.array_equal(table[0], ident) or not np.array_equal(table[:, 0], ident):
        raise NotAGroup("element 0 is not a two-sided identity")
    s_rows = np.sort(table, axis=1)
    s_cols = np.sort(table, axis=0)
    if not (s_rows == ident).all() or not (s_cols == ident[:, None]).all():
        raise NotAGroup("table is not a Latin square")
    if n <= ASSOCIATIVITY_CHECK_LIMIT and not kernels.is_associative(table):
        raise NotAGroup("multiplication is not associative")


def from_cayley(rows: Sequence[Sequence[int]] | np.ndarray, name: str = "",
                *, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    try:
        table = np.array(rows, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"cannot read table: {exc}") from None
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise MalformedInput(f"expected a non-empty square table, got shape {table.shape}")
    n = table.shape[0]
    if n > max_order:
        raise OrderCapExceeded(f"order {n} exceeds cap {max_order}")
    if table.min() < 0 or table.max() >= n:
        raise MalformedInput(f"entries must lie in 0..{n - 1}")
    _validate_table(np.ascontiguousarray(table))
    return Group(table, name)


def from_permutations(perms: Permutations, name: str = "",
                      *, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    d = perms.degree
    ident = tuple(range(d))
    for g in perms.gens:
        if len(g) != d or sorted(g) != list(ident):
            raise MalformedInput(f"generator {g} is not a permutation of 0..{d - 1}")
    gens = [tuple(g) for g in perms.gens]
    elements = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = tuple(g[k] for k in x)
            if y not in index:
                if len(elements) >= max_order:
                    raise OrderCapExceeded(f"closure exceeds cap {max_order}")
                index[y] = len(elements)
                elements.append(y)
    P = np.array(elements, dtype=np.int64).reshape(len(elements), d)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        prods = P[:, P[i]] if d else np.zeros((n, 0), dtype=np.int64)
        table[i] = [index[tuple(row)] for row in prods.tolist()]
    return Group(table, name)


def build_group(source, name: str = "", *, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Build a validated group from a Cayley table or a :class:`Permutations`."""
    if isinstance(source, Permutations):
        return from_permutations(source, name, max_order=max_order)
    return from_cayley(source, name, max_order=max_order)


def _data_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines()
            if ln.strip() and not ln.strip().startswith("#")]


def parse_group_text(text: str, name: str = "",
                     *, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Parse either file format; a leading ``degree d`` line selects permutations."""
    lines = _data_lines(text)
    if not lines:
        raise MalformedInput("empty group file")
    head = lines[0].split()
    try:
        if head[0] == "degree":
            if len(head) != 2:
                raise MalformedInput("expected 'degree d'")
            d = int(head[1])
            gens = tuple(tuple(int(t) for t in ln.split()) for ln in lines[1:])
            return from_permutations(Permutations(d, gens), name, max_order=max_order)
        if len(head) != 1:
            raise MalformedInput("first line must be the order n")
        n = int(head[0])
        rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput(f"non-integer token: {exc}") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise MalformedInput(f"expected {n} rows of {n} integers")
    return from_cayley(rows, name, max_order=max_order)


def read_group_file(path: str | Path, *, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise MalformedInput(f"cannot read {p}: {exc}") from None
    return parse_group_text(text, name=p.stem, max_order=max_order)


def cayley_text(G: Group) -> str:
    """Serialize ``G`` in the Cayley-table file format."""
    lines = [str(G.order)] + [" ".join(map(str, row)) for row in G.table.tolist()]
    return "\n".join(lines) + "\n"


def element_order(G: Group, x: int) -> int:
    if not 0 <= x < G.order:
        raise IndexError(f"element {x} out of range")
    return int(G.element_orders[x])


def conjugacy_classes(G: Group) -> ConjugacyPartition:
    return G.classes


def centralizer(G: Group, x: int) -> ElementSet:
    return G.element_set(np.nonzero(G.table[x, :] == G.table[:, x])[0].tolist())


def center(G: Group) -> ElementSet:
    # elements commuting with everything: whole rows equal to whole columns
    members = np.nonzero((G.table == G.table.T).all(axis=1))[0]
    return ElementSet(tuple(members.tolist()), True, True)


def commutator(G: Group, g: int, y: int) -> int:
    """The commutator g^-1 y^-1 g y."""
    t = G.table
    return int(t[t[G.inverse[g], G.inverse[y]], t[g, y]])


def exponent(G: Group) -> int:
    return reduce(math.lcm, (int(o) for o in G.element_orders), 1)


def class_size(G: Group, x: int) -> int:
    return len(G.classes.classes[G.classes.class_of[x]])


def as_group(G: Group, H: ElementSet, name: str = "") -> Embedded:
    """Re-index the subgroup ``H`` (sorted order) as a standalone group."""
    members = np.array(H.members, dtype=np.int64)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[members] = np.arange(len(members))
    sub = pos[G.table[np.ix_(members, members)]]
    if (sub < 0).any():
        raise NotAGroup("element set is not closed under multiplication")
    return Embedded(Group(sub, name or f"{G.name}|sub{len(members)}"), members)
