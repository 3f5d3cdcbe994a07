"""The coordinate ring R = F_{q^2}[X, Y] / (Y^q + Y - X^{q+1}) of the Hermitian curve.

Every element is stored in canonical form ``a = sum_{j<q} a_j(X) Y^j``. The
order function is ``deg_H(X^i Y^j) = i q + j (q + 1)``; it is injective on
the canonical monomials, which lets us index coefficient vectors directly by
``deg_H`` (see :meth:`HermitianRing.to_degree_vector`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .galois import DTYPE, Field, Poly, field_new, poly_degree
from .linalg import solve

NEG_INF = float("-inf")


@dataclass(frozen=True)
class CurvePoint:
    x: int
    y: int


class HermitianRing:
    def __init__(self, q: int):
        self.field: Field = field_new(q)
        self.q = q
        self.g = q * (q - 1) // 2
        self.n = q ** 3

    def __repr__(self) -> str:
        return f"HermitianRing(q={self.q})"

    def __reduce__(self):
        return (hermitian_ring, (self.q,))

    # -- constructors -------------------------------------------------------

    def element(self, comps: Sequence) -> "RingElement":
        """Build an element from ``q`` coefficient polynomials (any Y-degree < q)."""
        if len(comps) != self.q:
            raise ValueError(f"expected {self.q} components, got {len(comps)}")
        arrs = []
        for c in comps:
            if isinstance(c, Poly):
                arrs.append(c.coeffs)
            else:
                arrs.append(self.field.poly(np.asarray(c).tolist()))
        return RingElement(self, tuple(arrs))

    def zero(self) -> "RingElement":
        e = np.zeros(0, dtype=DTYPE)
        return RingElement(self, (e,) * self.q)

    def constant(self, c: int) -> "RingElement":
        return self.monomial(0, 0, c)

    def one(self) -> "RingElement":
        return self.constant(1)

    def monomial(self, i: int, j: int, c: int = 1) -> "RingElement":
        """``c X^i Y^j``; ``j >= q`` is reduced through the curve equation."""
        x_part = np.zeros(i + 1, dtype=DTYPE)
        x_part[i] = c
        x_part = self.field.poly_trim(x_part)
        comps = [np.zeros(0, dtype=DTYPE)] * self.q
        comps[0] = x_part
        a = RingElement(self, tuple(comps))
        for _ in range(j):
            a = a.mul_y()
        return a

    def univariate(self, coeffs: Iterable[int] | np.ndarray) -> "RingElement":
        """Embed a polynomial in X alone."""
        comps = [np.zeros(0, dtype=DTYPE)] * self.q
        comps[0] = self.field.poly(np.asarray(list(coeffs)).tolist())
        return RingElement(self, tuple(comps))

    # -- monomials and coordinates -----------------------------------------

    def monomial_degree(self, i: int, j: int) -> int:
        return i * self.q + j * (self.q + 1)

    def monomial_of_degree(self, d: int) -> tuple[int, int] | None:
        """Inverse of ``deg_H`` on canonical monomials; None for gaps."""
        q = self.q
        j = d % q
        rest = d - j * (q + 1)
        if rest < 0:
            return None
        return rest // q, j

    def monomials_upto(self, D: int) -> list[tuple[int, int]]:
        return monomials_upto(self.q, D)

    def to_degree_vector(self, a: "RingElement", length: int | None = None) -> np.ndarray:
        """Coefficient vector indexed by ``deg_H`` of the monomial (gaps are zero)."""
        q = self.q
        d = a.deg_h()
        if length is None:
            length = 0 if d == NEG_INF else int(d) + 1
        out = np.zeros(length, dtype=DTYPE)
        for j, c in enumerate(a.coeffs):
            if not c.size:
                continue
            pos = np.arange(c.size) * q + j * (q + 1)
            keep = pos < length
            if not np.all(keep) and np.any(c[~keep]):
                raise ValueError("element does not fit in the requested length")
            out[pos[keep]] = c[keep]
        return out

    def from_degree_vector(self, vec: np.ndarray) -> "RingElement":
        q = self.q
        vec = np.asarray(vec, dtype=DTYPE)
        comps = []
        for j in range(q):
            start = j * (q + 1)
            comps.append(self.field.poly_trim(vec[start::q].copy()) if start < vec.size else np.zeros(0, dtype=DTYPE))
        return RingElement(self, tuple(comps))

    def from_monomial_coeffs(self, basis: Sequence[tuple[int, int]], coeffs: np.ndarray) -> "RingElement":
        """``sum_k coeffs[k] * X^{i_k} Y^{j_k}`` for a canonical monomial basis."""
        if not len(basis):
            return self.zero()
        size = max(self.monomial_degree(i, j) for i, j in basis) + 1
        vec = np.zeros(size, dtype=DTYPE)
        for (i, j), c in zip(basis, coeffs):
            vec[self.monomial_degree(i, j)] = c
        return self.from_degree_vector(vec)

    # -- matrix representation----------------------------------------------

    def xi_matrix(self) -> list[list[Poly]]:
        """The (2q-1) x q reduction matrix: identity over the X^{q+1}, -1 band."""
        F, q = self.field, self.q
        zero = Poly(F, [])
        rows = [[Poly(F, [1]) if r == c else zero for c in range(q)] for r in range(q)]
        xq1 = Poly.monomial(F, q + 1)
        minus_one = Poly(F, [F.neg(1)])
        for k in range(q - 1):
            row = [zero] * q
            row[k] = xq1
            row[k + 1] = minus_one
            rows.append(row)
        return rows


@lru_cache(maxsize=None)
def hermitian_ring(q: int) -> HermitianRing:
    return HermitianRing(q)


@lru_cache(maxsize=None)
def _monomials_upto(q: int, D: int) -> tuple[tuple[int, int], ...]:
    out = []
    for j in range(q):
        base = j * (q + 1)
        if base > D:
            break
        for i in range((D - base) // q + 1):
            out.append((i, j))
    out.sort(key=lambda m: m[0] * q + m[1] * (q + 1))
    return tuple(out)


def monomials_upto(q: int, D: int) -> list[tuple[int, int]]:
    """Exponent pairs ``(i, j)`` with ``j < q`` and ``iq + j(q+1) <= D``, by ascending ``deg_H``."""
    if D < 0:
        return []
    return list(_monomials_upto(q, D))


class RingElement:
    """Element of R in canonical form ``(a_0, ..., a_{q-1})``; immutable."""

    __slots__ = ("ring", "coeffs", "_deg")

    def __init__(self, ring: HermitianRing, coeffs: tuple[np.ndarray, ...]):
        self.ring = ring
        self.coeffs = coeffs
        self._deg = None

    # -- basic queries ------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.ring.field

    def is_zero(self) -> bool:
        return all(not c.size for c in self.coeffs)

    def deg_h(self):
        """Pole order at infinity; ``-inf`` for zero."""
        if self._deg is None:
            q = self.ring.q
            best = NEG_INF
            for j, c in enumerate(self.coeffs):
                if c.size:
                    best = max(best, q * (c.size - 1) + j * (q + 1))
            self._deg = best
        return self._deg

    def leading_coefficient(self) -> int:
        d = self.deg_h()
        if d == NEG_INF:
            return 0
        i, j = self.ring.monomial_of_degree(int(d))
        return int(self.coeffs[j][i])

    def vector_rep(self) -> list[Poly]:
        return [Poly._wrap(self.field, c) for c in self.coeffs]

    def mu_matrix(self) -> list[list[Poly]]:
        """q x (2q-1) banded shift matrix of the coefficients."""
        F, q = self.field, self.ring.q
        zero = Poly(F, [])
        comps = self.vector_rep()
        rows = []
        for r in range(q):
            row = [zero] * (2 * q - 1)
            for j in range(q):
                row[r + j] = comps[j]
            rows.append(row)
        return rows

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement) or other.ring is not self.ring:
            raise TypeError("operands must be elements of the same ring")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        F = self.field
        return RingElement(self.ring, tuple(F.poly_add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        F = self.field
        return RingElement(self.ring, tuple(F.poly_sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RingElement":
        F = self.field
        return RingElement(self.ring, tuple(F.poly_neg(a) for a in self.coeffs))

    def scale(self, c: int) -> "RingElement":
        F = self.field
        return RingElement(self.ring, tuple(F.poly_scale(a, c) for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return ring_mul(self, other)

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_x(self, k: int = 1) -> "RingElement":
        F = self.field
        return RingElement(self.ring, tuple(F.poly_shift(a, k) for a in self.coeffs))

    def mul_y(self) -> "RingElement":
        """Multiply by Y using Y^q = X^{q+1} - Y."""
        F, q = self.field, self.ring.q
        comps = [np.zeros(0, dtype=DTYPE)] + list(self.coeffs[:-1])
        top = self.coeffs[-1]
        if top.size:
            comps[0] = F.poly_add(comps[0], F.poly_shift(top, q + 1))
            comps[1] = F.poly_sub(comps[1], top)
        return RingElement(self.ring, tuple(comps))

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return other.ring is self.ring and all(np.array_equal(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(c.tobytes() for c in self.coeffs))

    def __repr__(self) -> str:
        return f"RingElement({[c.tolist() for c in self.coeffs]})"

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, P: CurvePoint) -> int:
        F = self.field
        total = 0
        ypow = 1
        for c in self.coeffs:
            if c.size:
                total = F.add(total, F.mul(F.poly_eval(c, P.x), ypow))
            ypow = F.mul(ypow, P.y)
        return total

    def evaluate_many(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        F = self.field
        xs = np.asarray(xs, dtype=DTYPE)
        ys = np.asarray(ys, dtype=DTYPE)
        terms = []
        for j, c in enumerate(self.coeffs):
            if c.size:
                terms.append(F.mul_table[F.poly_eval_many(c, xs), F.vpow(ys, j)])
        if not terms:
            return np.zeros(xs.size, dtype=DTYPE)
        return F.vsum(np.stack(terms, axis=0), axis=0)


def reduce_components(ring: HermitianRing, prod: list[np.ndarray]) -> tuple[np.ndarray, ...]:
    """Canonical form of ``sum_j prod[j] Y^j`` for ``j <= 2q - 2``."""
    F, q = ring.field, ring.q
    prod = list(prod) + [np.zeros(0, dtype=DTYPE)] * max(0, 2 * q - 1 - len(prod))
    for j in range(2 * q - 2, q - 1, -1):
        c = prod[j]
        if not c.size:
            continue
        # Y^j = Y^{j-q} (X^{q+1} - Y)
        prod[j - q] = F.poly_add(prod[j - q], F.poly_shift(c, q + 1))
        prod[j - q + 1] = F.poly_sub(prod[j - q + 1], c)
        prod[j] = np.zeros(0, dtype=DTYPE)
    return tuple(prod[:q])


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    a._check(b)
    ring = a.ring
    F, q = ring.field, ring.q
    prod = [np.zeros(0, dtype=DTYPE)] * (2 * q - 1)
    for i, ai in enumerate(a.coeffs):
        if not ai.size:
            continue
        for j, bj in enumerate(b.coeffs):
            if bj.size:
                prod[i + j] = F.poly_add(prod[i + j], F.poly_mul(ai, bj))
    return RingElement(ring, reduce_components(ring, prod))


def deg_h(a: RingElement):
    return a.deg_h()


def ring_eval(a: RingElement, P: CurvePoint) -> int:
    return a.evaluate(P)


def vector_rep(a: RingElement) -> list[Poly]:
    return a.vector_rep()


def mu_matrix(b: RingElement) -> list[list[Poly]]:
    return b.mu_matrix()


def xi_matrix(q: int) -> list[list[Poly]]:
    return hermitian_ring(q).xi_matrix()


def poly_matmul(A: Sequence[Sequence[Poly]], B: Sequence[Sequence[Poly]]) -> list[list[Poly]]:
    """Product of matrices with :class:`Poly` entries."""
    if not A or not B or len(A[0]) != len(B):
        raise ValueError("incompatible polynomial matrix shapes")
    field = A[0][0].field
    out = []
    for row in A:
        new_row = []
        for c in range(len(B[0])):
            acc = Poly(field, [])
            for k, a in enumerate(row):
                if not a.is_zero() and not B[k][c].is_zero():
                    acc = acc + a * B[k][c]
            new_row.append(acc)
        out.append(new_row)
    return out


def exact_divide(num: RingElement, den: RingElement, deg_bound: int,
                 modulo: Sequence[RingElement] = ()) -> RingElement | None:
    """The ``c`` with ``den * c == num`` and ``deg_H(c) <= deg_bound``, if it exists.

    With ``modulo`` given, equality is only required up to the linear span of
    those elements. Solved as a linear system over the monomials of degree
    at most ``deg_bound``.
    """
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero ring element")
    ring = num.ring
    F, q = ring.field, ring.q
    basis = monomials_upto(q, deg_bound)
    modulo = [w for w in modulo if not w.is_zero()]
    if not basis:
        if num.is_zero():
            return ring.zero()
        if not modulo:
            return None
    dn = num.deg_h()
    dd = int(den.deg_h())
    if dn != NEG_INF and dn > dd + deg_bound and not modulo:
        return None
    top = basis[-1][0] * q + basis[-1][1] * (q + 1) if basis else 0
    length = max([dd + top, int(max(dn, 0))] + [int(w.deg_h()) for w in modulo]) + 1
    shifted = []
    dy = den
    for j in range(q):
        if j * (q + 1) > deg_bound:
            break
        shifted.append(ring.to_degree_vector(dy, length))
        dy = dy.mul_y()
    A = np.zeros((length, len(basis)), dtype=DTYPE)
    for k, (i, j) in enumerate(basis):
        col = shifted[j]
        off = i * q
        A[off:, k] = col[: length - off]
    if modulo:
        extra = np.stack([ring.to_degree_vector(w, length) for w in modulo], axis=1)
        A = np.hstack([A, extra])
    b = ring.to_degree_vector(num, length)
    x = solve(F, A, b)
    if x is None:
        return None
    return ring.from_monomial_coeffs(basis, x[: len(basis)])
