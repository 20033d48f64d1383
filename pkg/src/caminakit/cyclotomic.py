"""Exact arithmetic in Z[zeta_e].

A value is an integer vector ``c`` of length ``e`` meaning sum c[k] zeta_e^k.
The canonical form reduces modulo the e-th cyclotomic polynomial, so only
the first phi(e) entries can be nonzero and equal values have equal vectors.

Besides the scalar :class:`Cyclotomic` class, the array helpers below work on
stacks of coefficient vectors (last axis of length e); the character table is
stored that way.
"""
from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np
from sympy import Matrix, divisors


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # den is monic; coefficients low to high
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        q = num[i]
        out[i - dd] = q
        if q:
            for j in range(dd + 1):
                num[i - dd + j] -= q * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, lowest degree first."""
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def phi(e: int) -> int:
    return len(cyclotomic_poly(e)) - 1


@lru_cache(maxsize=None)
def reduction_matrix(e: int) -> np.ndarray:
    """Row k holds the canonical coefficients of zeta_e^k."""
    f = cyclotomic_poly(e)
    d = len(f) - 1
    R = np.zeros((e, e), dtype=np.int64)
    for k in range(min(d, e)):
        R[k, k] = 1
    for k in range(d, e):
        prev = R[k - 1]
        row = np.zeros(e, dtype=np.int64)
        row[1:d] = prev[: d - 1]
        top = prev[d - 1]
        row[:d] -= top * np.array(f[:d], dtype=np.int64)
        R[k] = row
    R.setflags(write=False)
    return R


def canonical(v: np.ndarray) -> np.ndarray:
    e = v.shape[-1]
    return v @ reduction_matrix(e)


def conj_array(v: np.ndarray) -> np.ndarray:
    """Complex conjugate: zeta^k -> zeta^(e-k), then canonical."""
    e = v.shape[-1]
    idx = (-np.arange(e)) % e
    out = np.zeros_like(v)
    out[..., idx] = v
    return canonical(out)


def cyclic_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise product of two stacks of values (broadcasting), canonical."""
    e = a.shape[-1]
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.int64)
    for s in range(e):
        col = a[..., s]
        if col.any():
            out += col[..., None] * np.roll(b, s, axis=-1)
    return canonical(out)


def gram(X: np.ndarray, Y: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """G[i, j] = sum_k weights[k] * X[i, k] * Y[j, k], exactly; shape (I, J, e)."""
    e = X.shape[-1]
    w = np.asarray(weights, dtype=np.int64)
    out = np.zeros((X.shape[0], Y.shape[0], e), dtype=np.int64)
    for s in range(e):
        A = X[:, :, s] * w
        if A.any():
            out += np.einsum("ik,jkt->ijt", A, np.roll(Y, s, axis=-1))
    return canonical(out)


def embed_array(v: np.ndarray, e_to: int) -> np.ndarray:
    """Map Q(zeta_e) into Q(zeta_{e_to}) by zeta_e -> zeta_{e_to}^(e_to/e)."""
    e = v.shape[-1]
    if e_to % e:
        raise ValueError(f"{e} does not divide {e_to}")
    out = np.zeros(v.shape[:-1] + (e_to,), dtype=np.int64)
    out[..., :: e_to // e] = v
    return canonical(out)


def integer_value(v: np.ndarray) -> int | None:
    """The rational integer a canonical vector represents, or None."""
    if v[1:].any():
        return None
    return int(v[0])


def mod_p(v: np.ndarray, p: int, root: int) -> np.ndarray:
    """Reduce values mod p under zeta_e -> ``root`` (an e-th root of unity mod p)."""
    e = v.shape[-1]
    powers = np.array([pow(root, k, p) for k in range(e)], dtype=np.int64)
    return (v % p * powers % p).sum(axis=-1) % p


class Cyclotomic:
    """A single exact element of Z[zeta_e]."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs, *, reduced: bool = False) -> None:
        v = np.zeros(e, dtype=np.int64)
        c = np.asarray(coeffs, dtype=np.int64)
        if len(c) > e:
            raise ValueError("too many coefficients")
        v[: len(c)] = c
        if not reduced:
            v = canonical(v)
        self.e = e
        self.coeffs = tuple(int(x) for x in v)

    @classmethod
    def from_int(cls, e: int, n: int) -> "Cyclotomic":
        return cls(e, [n], reduced=True)

    @classmethod
    def zeta(cls, e: int, k: int = 1) -> "Cyclotomic":
        v = np.zeros(e, dtype=np.int64)
        v[k % e] = 1
        return cls(e, v)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def _coerce(self, other) -> tuple["Cyclotomic", "Cyclotomic"] | None:
        if isinstance(other, (int, np.integer)):
            return self, Cyclotomic.from_int(self.e, int(other))
        if isinstance(other, Cyclotomic):
            if other.e == self.e:
                return self, other
            e = math.lcm(self.e, other.e)
            return self.embed(e), other.embed(e)
        return None

    def embed(self, e_to: int) -> "Cyclotomic":
        if e_to == self.e:
            return self
        return Cyclotomic(e_to, embed_array(self.array, e_to), reduced=True)

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.e, a.array + b.array, reduced=True)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.e, -self.array, reduced=True)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.e, a.array - b.array, reduced=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.e, cyclic_mul(a.array, b.array), reduced=True)

    __rmul__ = __mul__

    def conj(self) -> "Cyclotomic":
        return Cyclotomic(self.e, conj_array(self.array), reduced=True)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_int(self) -> int | None:
        return integer_value(self.array)

    def __eq__(self, other) -> bool:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # must agree across fields, since __eq__ embeds before comparing
        n = self.as_int()
        if n is not None:
            return hash(n)
        z = complex(self)
        return hash((round(z.real, 6), round(z.imag, 6)))

    def __complex__(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.e)
        return complex(sum(c * w**k for k, c in enumerate(self.coeffs) if c))

    def __repr__(self) -> str:
        return f"Cyclotomic({self.e}, {str(self)!r})"

    def smallest_field(self) -> "Cyclotomic":
        """The same value written over the smallest Q(zeta_d), d | e, containing it."""
        if self.as_int() is not None:
            return Cyclotomic.from_int(1, self.as_int())
        target = Matrix(self.coeffs)
        for d in divisors(self.e):
            if d == self.e:
                break
            basis = embed_array(np.eye(d, dtype=np.int64)[: phi(d)], self.e)
            try:
                sol, params = Matrix(basis.T.tolist()).gauss_jordan_solve(target)
            except ValueError:
                continue
            if params.shape[0] == 0 and all(x.is_integer for x in sol):
                return Cyclotomic(d, [int(x) for x in sol], reduced=True)
        return self

    def __str__(self) -> str:
        n = self.as_int()
        if n is not None:
            return str(n)
        small = self.smallest_field()
        if small.e != self.e:
            return str(small)
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            term = f"zeta_{self.e}^{k}" if k else "1"
            if k and abs(c) == 1:
                s = ("-" if c < 0 else "+") + term
            elif k:
                s = f"{c:+d}*{term}"
            else:
                s = f"{c:+d}"
            parts.append(s)
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out
