"""Built-in group families and the ``kind:param:param`` spec-string grammar.

Spec strings::

    cyclic:n               C_n
    dihedral:N             dihedral group of order N (N even)
    quaternion:N           generalized quaternion group of order N (N divisible by 4)
    symmetric:n            S_n
    alternating:n          A_n
    extraspecial:p:x[:k]   extraspecial group of order p^(1+2k) and exponent x
    frobenius:n:k:m        C_n x| C_m with fixed-point-free action a -> k*a
    metacyclic:n:k:m       C_n x| C_m with action a -> k*a (any valid k)
    A*B                    direct product of two specs
    file:path              group read from a file (see ``group.read_group_file``)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import InvalidSpec, MalformedInput
from .group import DEFAULT_MAX_ORDER, Group, Permutations, build_group, read_group_file

KINDS = {
    "cyclic": 1, "dihedral": 1, "quaternion": 1, "symmetric": 1, "alternating": 1,
    "extraspecial": (2, 3), "frobenius": 3, "metacyclic": 3,
}


@dataclass(frozen=True)
class CatalogSpec:
    kind: str
    params: tuple[int, ...] = ()
    factors: tuple["CatalogSpec", ...] = ()
    path: str = ""

    def __str__(self) -> str:
        if self.kind == "direct":
            return "*".join(str(f) for f in self.factors)
        if self.kind == "file":
            return f"file:{self.path}"
        return ":".join([self.kind, *map(str, self.params)])


def parse_spec(text: str) -> CatalogSpec:
    text = text.strip()
    if "*" in text:
        return CatalogSpec("direct", factors=tuple(parse_spec(t) for t in text.split("*")))
    kind, _, rest = text.partition(":")
    if kind == "file":
        if not rest:
            raise InvalidSpec("file spec needs a path")
        return CatalogSpec("file", path=rest)
    if kind not in KINDS:
        raise InvalidSpec(f"unknown group kind {kind!r}")
    try:
        params = tuple(int(t) for t in rest.split(":")) if rest else ()
    except ValueError:
        raise InvalidSpec(f"non-integer parameter in {text!r}") from None
    arity = KINDS[kind]
    allowed = arity if isinstance(arity, tuple) else (arity,)
    if len(params) not in allowed:
        raise InvalidSpec(f"{kind} takes {' or '.join(map(str, allowed))} parameters")
    return CatalogSpec(kind, params)


def _table(n: int, mul) -> np.ndarray:
    t = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            t[i, j] = mul(i, j)
    return t


def cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n


def dihedral_table(order: int) -> np.ndarray:
    if order < 2 or order % 2:
        raise InvalidSpec("dihedral order must be even and positive")
    n = order // 2

    def mul(x, y):
        i, a = x % n, x // n
        j, b = y % n, y // n
        return (i + (j if a == 0 else -j)) % n + n * ((a + b) % 2)

    return _table(order, mul)


def quaternion_table(order: int) -> np.ndarray:
    if order < 4 or order % 4:
        raise InvalidSpec("quaternion order must be a positive multiple of 4")
    n2 = order // 2
    half = n2 // 2

    def mul(x, y):
        i, a = x % n2, x // n2
        j, b = y % n2, y // n2
        k = i + (j if a == 0 else -j)
        if a + b == 2:
            k += half
        return k % n2 + n2 * ((a + b) % 2)

    return _table(order, mul)


def metacyclic_table(n: int, k: int, m: int) -> np.ndarray:
    if n < 1 or m < 1 or math.gcd(k, n) != 1 or pow(k, m, n) != 1 % n:
        raise InvalidSpec(f"invalid metacyclic parameters ({n}, {k}, {m})")
    kp = [pow(k, b, n) for b in range(m)]

    def mul(x, y):
        a, b = x % n, x // n
        a2, b2 = y % n, y // n
        return (a + kp[b] * a2) % n + n * ((b + b2) % m)

    return _table(n * m, mul)


def check_fixed_point_free(n: int, k: int, m: int) -> None:
    if n < 2 or m < 2:
        raise InvalidSpec("frobenius needs n, m >= 2")
    if math.gcd(k, n) != 1 or pow(k, m, n) != 1:
        raise InvalidSpec(f"k={k} does not define an action of order dividing {m} on C_{n}")
    for j in range(1, m):
        if math.gcd(pow(k, j, n) - 1, n) != 1:
            raise InvalidSpec(f"action of k={k} on C_{n} has fixed points (j={j})")


def heisenberg_table(p: int, k: int) -> np.ndarray:
    """Pairs (v, c), v in F_p^(2k): (v, c)(w, d) = (v + w, c + d + sum v[2i] w[2i+1])."""
    dim = 2 * k
    n = p ** (dim + 1)
    digits = np.array(list(product(range(p), repeat=dim + 1)), dtype=np.int64)[:, ::-1]
    # digits[x] = (v_0, ..., v_{dim-1}, c), little-endian so 0 is the identity
    weights = p ** np.arange(dim + 1)
    v, c = digits[:, :dim], digits[:, dim]
    form = (v[:, 0::2] @ v[:, 1::2].T) % p
    vv = (v[:, None, :] + v[None, :, :]) % p
    cc = (c[:, None] + c[None, :] + form) % p
    return (vv @ weights[:dim] + cc * weights[dim]).astype(np.int64)


def extraspecial_table(p: int, exp: int, k: int = 1) -> np.ndarray:
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise InvalidSpec(f"{p} is not prime")
    if k < 1:
        raise InvalidSpec("extraspecial rank must be >= 1")
    if p == 2:
        if exp != 4:
            raise InvalidSpec("extraspecial 2-groups have exponent 4")
        return heisenberg_table(2, k)
    if exp == p:
        return heisenberg_table(p, k)
    if exp == p * p and k == 1:
        return metacyclic_table(p * p, 1 + p, p)
    raise InvalidSpec(f"unsupported extraspecial type (p={p}, exponent={exp}, k={k})")


def direct_product_table(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    na, nb = A.shape[0], B.shape[0]
    idx = np.arange(na * nb)
    xa, xb = idx % na, idx // na
    return A[np.ix_(xa, xa)] + na * B[np.ix_(xb, xb)]


def _symmetric_gens(n: int) -> Permutations:
    if n < 2:
        return Permutations(max(n, 1), ())
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return Permutations(n, (cycle, swap) if n > 2 else (swap,))


def _alternating_gens(n: int) -> Permutations:
    gens = []
    for i in range(2, n):
        g = list(range(n))
        g[0], g[1], g[i] = 1, i, 0
        gens.append(tuple(g))
    return Permutations(max(n, 1), tuple(gens))


def _build_table(spec: CatalogSpec, max_order: int):
    kind, ps = spec.kind, spec.params
    if kind == "cyclic":
        if ps[0] < 1:
            raise InvalidSpec("cyclic order must be positive")
        return cyclic_table(ps[0])
    if kind == "dihedral":
        return dihedral_table(ps[0])
    if kind == "quaternion":
        return quaternion_table(ps[0])
    if kind == "symmetric":
        return build_group(_symmetric_gens(ps[0]), max_order=max_order).table
    if kind == "alternating":
        return build_group(_alternating_gens(ps[0]), max_order=max_order).table
    if kind == "extraspecial":
        return extraspecial_table(*ps)
    if kind == "frobenius":
        check_fixed_point_free(*ps)
        return metacyclic_table(*ps)
    if kind == "metacyclic":
        return metacyclic_table(*ps)
    if kind == "direct":
        tables = [_build_table(f, max_order) for f in spec.factors]
        out = tables[0]
        for t in tables[1:]:
            out = direct_product_table(np.asarray(out), np.asarray(t))
        return out
    raise InvalidSpec(f"cannot build kind {kind!r}")


def spec_order(spec: CatalogSpec) -> int | None:
    """Order predicted from the parameters alone (None for files and S_n/A_n with n < 2)."""
    kind, ps = spec.kind, spec.params
    if kind in ("cyclic", "dihedral", "quaternion"):
        return ps[0]
    if kind == "symmetric":
        return math.factorial(ps[0])
    if kind == "alternating":
        return max(math.factorial(ps[0]) // 2, 1)
    if kind == "extraspecial":
        k = ps[2] if len(ps) == 3 else 1
        return ps[0] ** (1 + 2 * k)
    if kind in ("frobenius", "metacyclic"):
        return ps[0] * ps[2]
    if kind == "direct":
        orders = [spec_order(f) for f in spec.factors]
        return None if None in orders else math.prod(orders)
    return None


def make_group(spec: CatalogSpec | str, *, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.kind == "file":
        return read_group_file(spec.path, max_order=max_order)
    expected = spec_order(spec)
    if expected is not None and expected > max_order:
        raise InvalidSpec(f"{spec} has order {expected}, above the cap {max_order}")
    table = _build_table(spec, max_order)
    try:
        return build_group(table, str(spec), max_order=max_order)
    except MalformedInput as exc:
        raise InvalidSpec(f"{spec}: {exc}") from None


DEFAULT_CATALOG: tuple[str, ...] = (
    *(f"cyclic:{n}" for n in range(1, 33)),
    *(f"dihedral:{n}" for n in range(4, 33, 2)),
    "quaternion:8", "quaternion:16",
    "symmetric:3", "symmetric:4", "alternating:4", "alternating:5",
    "extraspecial:3:3", "extraspecial:3:9", "extraspecial:2:4:2",
    "frobenius:3:2:2", "frobenius:5:2:4", "frobenius:7:3:6",
    "frobenius:9:8:2", "frobenius:13:2:12",
    "metacyclic:9:2:6",
)


def default_catalog() -> list[CatalogSpec]:
    return [parse_spec(s) for s in DEFAULT_CATALOG]
