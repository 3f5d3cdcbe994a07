"""One-point Hermitian codes: rational points, message space L(m P_inf), encoding."""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .galois import DTYPE, ConfigurationError, Field
from .hermitian_ring import CurvePoint, HermitianRing, RingElement, hermitian_ring, monomials_upto
from .linalg import LinearSolver


def curve_points(field: Field) -> list[CurvePoint]:
    """The q^3 affine rational points of Y^q + Y = X^{q+1}, sorted by (x, y)."""
    q = field.q
    pts = []
    for x in field.elements():
        rhs = field.pow(x, q + 1)
        for y in field.elements():
            if field.add(field.pow(y, q), y) == rhs:
                pts.append(CurvePoint(x, y))
    return pts


def evaluation_matrix(ring: HermitianRing, points: Sequence[CurvePoint], basis: Sequence[tuple[int, int]]) -> np.ndarray:
    """``M[p, k] = X^{i_k} Y^{j_k}`` evaluated at ``points[p]``."""
    F = ring.field
    xs = np.array([P.x for P in points])
    ys = np.array([P.y for P in points])
    ii = np.array([i for i, _ in basis])
    jj = np.array([j for _, j in basis])
    return F.mul_table[F.vpow(xs[:, None], ii[None, :]), F.vpow(ys[:, None], jj[None, :])]


class HermitianCode:
    """The one-point Hermitian code C(q, m) of length n = q^3 over F_{q^2}.

    Parameters must satisfy ``2(g - 1) < m < n``. The evaluation matrices used
    for membership tests and interpolation are built lazily and cached.
    """

    def __init__(self, q: int, m: int):
        ring = hermitian_ring(q)
        g, n = ring.g, ring.n
        if not 2 * (g - 1) < m < n:
            raise ConfigurationError(f"m={m} outside ({2 * (g - 1)}, {n}) for q={q}")
        self.ring = ring
        self.field = ring.field
        self.q, self.m, self.n, self.g = q, m, n, g
        self.k = m - g + 1
        self.d_star = n - m
        self.points = curve_points(self.field)
        self.xs = np.array([P.x for P in self.points], dtype=DTYPE)
        self.ys = np.array([P.y for P in self.points], dtype=DTYPE)
        self.message_basis = monomials_upto(q, m)
        assert len(self.message_basis) == self.k

    def __repr__(self) -> str:
        return f"HermitianCode(q={self.q}, m={self.m}, n={self.n}, k={self.k}, d*={self.d_star})"

    def __reduce__(self):
        return (code_new, (self.q, self.m))

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        """n x k evaluation matrix of the message basis."""
        return evaluation_matrix(self.ring, self.points, self.message_basis)

    @cached_property
    def _message_solver(self) -> LinearSolver:
        return LinearSolver(self.field, self.generator_matrix)

    @cached_property
    def interpolation_basis(self) -> list[tuple[int, int]]:
        return monomials_upto(self.q, self.n + 2 * self.g - 1)

    @cached_property
    def interpolation_solver(self) -> LinearSolver:
        A = evaluation_matrix(self.ring, self.points, self.interpolation_basis)
        return LinearSolver(self.field, A)

    # -- encoding -----------------------------------------------------------

    def message_polynomial(self, message: Sequence[int]) -> RingElement:
        msg = np.asarray(message, dtype=np.int64)
        if msg.shape != (self.k,):
            raise ValueError(f"message must have length k={self.k}")
        return self.ring.from_monomial_coeffs(self.message_basis, msg.astype(DTYPE))

    def evaluate(self, f: RingElement) -> np.ndarray:
        """``(f(P_1), ..., f(P_n))``."""
        return f.evaluate_many(self.xs, self.ys)

    def encode(self, message: Sequence[int]) -> np.ndarray:
        msg = np.asarray(message, dtype=np.int64)
        if msg.shape != (self.k,):
            raise ValueError(f"message must have length k={self.k}")
        return self.field.matvec(self.generator_matrix, msg.astype(DTYPE))

    def message_of_codeword(self, c: Sequence[int]) -> np.ndarray | None:
        """The message encoding to ``c``, or None when ``c`` is not a codeword."""
        c = np.asarray(c, dtype=DTYPE)
        if c.shape != (self.n,):
            raise ValueError(f"word must have length n={self.n}")
        return self._message_solver.solve(c)

    def is_codeword(self, c: Sequence[int]) -> bool:
        return self.message_of_codeword(c) is not None

    def random_message(self, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.field.order, size=self.k).astype(DTYPE)


@lru_cache(maxsize=16)
def code_new(q: int, m: int) -> HermitianCode:
    """Shared, cached :class:`HermitianCode` instance for ``(q, m)``."""
    return HermitianCode(q, m)


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    return int(np.count_nonzero(np.asarray(a) != np.asarray(b)))
