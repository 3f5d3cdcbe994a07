"""Finite fields F_{q^2} for small q, and univariate polynomials over them.

Field elements are plain integers ``0 .. q^2 - 1``. The integer encodes the
coefficient vector of the element in the power basis ``1, z, z^2, ...`` over
the prime field (base-p digits), where ``z`` is a root of a fixed primitive
polynomial. Multiplication goes through log/antilog tables; all tables are
numpy arrays so that vectors and matrices of elements can be processed
without Python loops.

Polynomials are 1-D ``uint8`` arrays, lowest degree first, with no trailing
zeros (the zero polynomial is the empty array). :class:`Poly` is a small
immutable wrapper with operator overloading for interactive use; the hot
paths in the rest of the package call the ``poly_*`` methods of
:class:`Field` directly on arrays.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

SUPPORTED_Q = (2, 3, 4, 5, 7, 8)

DTYPE = np.uint8


class ConfigurationError(ValueError):
    """Raised for unsupported or inconsistent code/decoder parameters."""


def _prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            return (p, e) if r == 1 else None
    return None


class Field:
    """Arithmetic context for F_{q^2}.

    Build instances with :func:`field_new` (cached), not directly.
    """

    def __init__(self, q: int):
        pe = _prime_power(q)
        if pe is None or q not in SUPPORTED_Q:
            raise ConfigurationError(f"unsupported q={q}; expected one of {SUPPORTED_Q}")
        self.p, r = pe
        self.q = q
        self.degree = 2 * r  # extension degree of F_{q^2} over F_p
        self.order = q * q
        self.modulus = self._find_primitive_poly()
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _mul_z(self, digits: list[int]) -> list[int]:
        p, e = self.p, self.degree
        top = digits[-1]
        out = [0] + digits[:-1]
        # z^e = -(c_0 + c_1 z + ... + c_{e-1} z^{e-1})
        return [(out[k] - top * self._mod_low[k]) % p for k in range(e)]

    def _find_primitive_poly(self) -> tuple[int, ...]:
        p, e, Q = self.p, self.degree, self.order
        for code in range(p ** e):
            low = [(code // p ** k) % p for k in range(e)]
            if low[0] == 0:
                continue
            self._mod_low = low
            x = [1] + [0] * (e - 1)
            seen = set()
            for _ in range(Q - 1):
                x = self._mul_z(x)
                key = tuple(x)
                if key in seen:
                    break
                seen.add(key)
            if len(seen) == Q - 1:
                return tuple(low) + (1,)
        raise RuntimeError("no primitive polynomial found")  # pragma: no cover

    def _build_tables(self) -> None:
        p, e, Q = self.p, self.degree, self.order
        weights = np.array([p ** k for k in range(e)], dtype=np.int64)
        self.weights = weights
        self.digits = np.array([[(a // p ** k) % p for k in range(e)] for a in range(Q)], dtype=np.int64)

        exp = np.zeros(2 * (Q - 1), dtype=np.int64)
        log = np.full(Q, -1, dtype=np.int64)
        x = [1] + [0] * (e - 1)
        for i in range(Q - 1):
            a = int(np.dot(x, weights))
            exp[i] = a
            log[a] = i
            x = self._mul_z(x)
        exp[Q - 1:] = exp[: Q - 1]
        self.exp = exp
        self.log = log

        d = self.digits
        add = ((d[:, None, :] + d[None, :, :]) % p) @ weights
        sub = ((d[:, None, :] - d[None, :, :]) % p) @ weights
        self.add_table = add.astype(DTYPE)
        self.sub_table = sub.astype(DTYPE)
        self.neg_table = ((-d) % p @ weights).astype(DTYPE)

        mul = np.zeros((Q, Q), dtype=np.int64)
        nz = np.arange(1, Q)
        mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (Q - 1)]
        self.mul_table = mul.astype(DTYPE)
        inv = np.zeros(Q, dtype=np.int64)
        inv[1:] = exp[(-log[nz]) % (Q - 1)]
        self.inv_table = inv.astype(DTYPE)
        self.frob_table = np.array([self.pow(a, self.q) for a in range(Q)], dtype=DTYPE)

    def __repr__(self) -> str:
        return f"Field(q={self.q}, order={self.order})"

    def __reduce__(self):
        return (field_new, (self.q,))

    # -- scalar arithmetic --------------------------------------------------

    @property
    def primitive_element(self) -> int:
        return int(self.exp[1])

    def elements(self) -> list[int]:
        """All field elements in the canonical enumeration order."""
        return list(range(self.order))

    def subfield(self) -> list[int]:
        """The q elements of F_q, i.e. the fixed points of ``x -> x^q``."""
        return [a for a in range(self.order) if self.frob_table[a] == a]

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return int(self.exp[(int(self.log[a]) * k) % (self.order - 1)])

    def frobenius(self, a: int) -> int:
        return int(self.frob_table[a])

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under the canonical map Z -> F_p."""
        return n % self.p

    # -- vectorised helpers -------------------------------------------------

    def vsum(self, arr: np.ndarray, axis: int = -1) -> np.ndarray:
        """Field sum of ``arr`` along ``axis``."""
        arr = np.asarray(arr)
        s = self.digits[arr].sum(axis=axis if axis >= 0 else axis - 1) % self.p
        return (s @ self.weights).astype(DTYPE)

    def vpow(self, a: np.ndarray, k: int | np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        k = np.asarray(k, dtype=np.int64)
        out = self.exp[(np.maximum(self.log[a], 0) * k) % (self.order - 1)]
        out = np.where(a == 0, np.where(k == 0, 1, 0), out)
        return out.astype(DTYPE)

    def matvec(self, M: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.vsum(self.mul_table[M, np.asarray(v, dtype=DTYPE)[None, :]], axis=1)

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        prods = self.mul_table[A[:, :, None], B[None, :, :]]
        return self.vsum(prods, axis=1)

    # -- polynomials over F_{q^2} ------------------------------------------

    @staticmethod
    def poly_trim(a: np.ndarray) -> np.ndarray:
        nz = np.flatnonzero(a)
        return a[: nz[-1] + 1] if nz.size else a[:0]

    def poly(self, coeffs: Iterable[int]) -> np.ndarray:
        arr = np.asarray(list(coeffs), dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.order):
            raise ValueError("coefficient outside the field")
        return self.poly_trim(arr.astype(DTYPE))

    def poly_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.size < b.size:
            a, b = b, a
        if not b.size:
            return a
        out = a.copy()
        out[: b.size] = self.add_table[a[: b.size], b]
        return self.poly_trim(out)

    def poly_neg(self, a: np.ndarray) -> np.ndarray:
        return self.neg_table[a]

    def poly_sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.poly_add(a, self.neg_table[b])

    def poly_scale(self, a: np.ndarray, c: int) -> np.ndarray:
        if c == 0:
            return a[:0]
        return self.mul_table[a, c]

    def poly_shift(self, a: np.ndarray, k: int) -> np.ndarray:
        """Multiply by X^k."""
        if not a.size or k == 0:
            return a
        return np.concatenate([np.zeros(k, dtype=DTYPE), a])

    def poly_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if not a.size or not b.size:
            return a[:0]
        if a.size == 1:
            return self.poly_scale(b, int(a[0]))
        if b.size == 1:
            return self.poly_scale(a, int(b[0]))
        prods = self.mul_table[a[:, None], b[None, :]]
        idx = np.add.outer(np.arange(a.size), np.arange(b.size)).ravel()
        n = a.size + b.size - 1
        dig = self.digits[prods.ravel()]
        acc = np.zeros(n, dtype=np.int64)
        for k in range(self.degree):
            col = np.bincount(idx, weights=dig[:, k], minlength=n).astype(np.int64) % self.p
            acc += col * self.weights[k]
        return self.poly_trim(acc.astype(DTYPE))

    def poly_divmod(self, a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if not b.size:
            raise ZeroDivisionError("polynomial division by zero")
        if a.size < b.size:
            return a[:0], a
        r = a.copy()
        db = b.size - 1
        lead_inv = self.inv_table[b[-1]]
        quot = np.zeros(a.size - db, dtype=DTYPE)
        for k in range(a.size - 1, db - 1, -1):
            c = r[k]
            if c == 0:
                continue
            c = self.mul_table[c, lead_inv]
            quot[k - db] = c
            r[k - db: k + 1] = self.sub_table[r[k - db: k + 1], self.mul_table[b, c]]
        return self.poly_trim(quot), self.poly_trim(r[:db])

    def poly_rem(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Remainder of ``a`` modulo ``b``. A pure power X^N simply truncates."""
        if b.size and not np.any(b[:-1]):
            return self.poly_trim(a[: b.size - 1])
        return self.poly_divmod(a, b)[1]

    def poly_eval(self, a: np.ndarray, x: int) -> int:
        if not a.size:
            return 0
        pw = self.vpow(np.full(a.size, x), np.arange(a.size))
        return int(self.vsum(self.mul_table[a, pw]))

    def poly_eval_many(self, a: np.ndarray, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs)
        if not a.size:
            return np.zeros(xs.size, dtype=DTYPE)
        pw = self.vpow(xs[:, None], np.arange(a.size)[None, :])
        return self.vsum(self.mul_table[a[None, :], pw], axis=1)


@lru_cache(maxsize=None)
def field_new(q: int) -> Field:
    """Return the (shared, immutable) arithmetic context for F_{q^2}."""
    return Field(q)


def poly_degree(a: np.ndarray) -> float | int:
    return a.size - 1 if a.size else float("-inf")


class Poly:
    """Immutable univariate polynomial over a :class:`Field`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence[int] | np.ndarray):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", field.poly(np.asarray(coeffs).tolist()))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _wrap(cls, field: Field, arr: np.ndarray) -> "Poly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", arr)
        return obj

    @classmethod
    def monomial(cls, field: Field, k: int, c: int = 1) -> "Poly":
        return cls(field, [0] * k + [c])

    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return poly_degree(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs.size

    def _other(self, other) -> np.ndarray:
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError("polynomials over different fields")
            return other.coeffs
        if isinstance(other, (int, np.integer)):
            return self.field.poly([int(other)])
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return Poly._wrap(self.field, self.field.poly_add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return Poly._wrap(self.field, self.field.poly_sub(self.coeffs, b))

    def __rsub__(self, other):
        b = self._other(other)
        return Poly._wrap(self.field, self.field.poly_sub(b, self.coeffs))

    def __neg__(self):
        return Poly._wrap(self.field, self.field.poly_neg(self.coeffs))

    def __mul__(self, other):
        b = self._other(other)
        return Poly._wrap(self.field, self.field.poly_mul(self.coeffs, b))

    __rmul__ = __mul__

    def __divmod__(self, other):
        b = self._other(other)
        quo, rem = self.field.poly_divmod(self.coeffs, b)
        return Poly._wrap(self.field, quo), Poly._wrap(self.field, rem)

    def __mod__(self, other):
        b = self._other(other)
        return Poly._wrap(self.field, self.field.poly_rem(self.coeffs, b))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __call__(self, x: int) -> int:
        return self.field.poly_eval(self.coeffs, x)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and np.array_equal(self.coeffs, other.coeffs)
        if isinstance(other, (int, np.integer)):
            return np.array_equal(self.coeffs, self.field.poly([int(other)]))
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"Poly({self.coeffs.tolist()})"
