"""The linearized Padé approximation problem over R, as a linear system over F_{q^2}.

Given the context ``(A_{t,i}, G_t)`` and a degree parameter ``tau`` we look for
``lambda_0, ..., lambda_{s-1}`` with ``deg_H(lambda_i) <= s*tau + i(2g-1)``
such that every ``psi_t := sum_i lambda_i A_{t,i} mod G_t`` has
``deg_H(psi_t) <= s*tau + t*m``. (``s*tau`` is really ``ctx.base_degree``,
which callers may set to any integer.) The unknowns are the coefficients of the
lambdas; every monomial of the reduced products above the psi bound gives
one homogeneous equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .galois import DTYPE
from .hermitian_ring import NEG_INF, RingElement, monomials_upto
from .key_equations import KeyEqContext, Modulus
from .linalg import _eliminate, kernel_vector, rref


# -- decoding radii and counting -------------------------------------------

def _params(q: int, m: int):
    return q ** 3, q * (q - 1) // 2


def radius_guaranteed(q: int, m: int, s: int, ell: int) -> Fraction:
    """Exact ``tau_new``: above it the linear system always has a nonzero solution."""
    n, g = _params(q, m)
    return (n * (1 - Fraction(s + 1, 2 * (ell + 1)))
            - Fraction(ell, 2 * s) * m
            - Fraction(ell - s + 1, s * (ell + 1))
            + Fraction(g - 1, ell + 1))


def radius_practical_exact(q: int, m: int, s: int, ell: int) -> Fraction:
    """``tau_new - (g - 1)/(ell + 1)``, the empirically achieved radius."""
    n, g = _params(q, m)
    return radius_guaranteed(q, m, s, ell) - Fraction(g - 1, ell + 1)


def radius_practical(q: int, m: int, s: int, ell: int) -> int:
    return math.floor(radius_practical_exact(q, m, s, ell))


def unknown_count_formula(q: int, s: int, tau) -> Fraction:
    """``V = s^2 tau + s(s-1)(2g-1)/2 - s g + s`` (exact when all bounds >= 2g - 1)."""
    g = q * (q - 1) // 2
    return s * s * Fraction(tau) + Fraction(s * (s - 1) * (2 * g - 1), 2) - s * g + s


def equation_count_formula(q: int, m: int, s: int, ell: int, tau) -> Fraction:
    """The closed-form bound on the number of equations ``E``."""
    n, g = _params(q, m)
    return (n * s * (ell + 1 - Fraction(s + 1, 2))
            - Fraction(ell * (ell + 1), 2) * m
            + Fraction(s * (s - 1), 2) * (2 * g - 1)
            + Fraction(tau) * s * (s - 1 - ell)
            - (ell - s + 1))


def equation_count_sum(q: int, m: int, s: int, ell: int, tau) -> Fraction:
    """``E`` as the sum over t of ``T_t - (s tau + t m) - 1``."""
    n, g = _params(q, m)
    total = Fraction(0)
    for t in range(1, ell + 1):
        T = t * (n + 2 * g - 1) + s * Fraction(tau) + 1 if t < s else s * n
        total += T - (s * Fraction(tau) + t * m) - 1
    return total


def unknown_count_exact(q: int, s: int, tau: int) -> int:
    """Actual number of monomials available for the lambdas."""
    g = q * (q - 1) // 2
    return sum(len(monomials_upto(q, s * tau + i * (2 * g - 1))) for i in range(s))


# -- assembly -----------------------------------------------------------------

@dataclass
class PadeInstance:
    ctx: KeyEqContext
    unknown_basis: list[list[tuple[int, int]]]
    columns: list[tuple[int, int]] = field(repr=False)
    """``(i, k)``: coefficient of the k-th basis monomial of lambda_i."""
    rows: list[tuple[int, int]] = field(repr=False)
    """``(t, d)``: coefficient at the monomial of deg_H ``d`` in the t-th product."""
    matrix: np.ndarray = field(repr=False)

    @property
    def lambda_bounds(self) -> list[int]:
        ctx = self.ctx
        return [ctx.base_degree + i * (2 * ctx.code.g - 1) for i in range(ctx.s)]

    @property
    def psi_bounds(self) -> list[int]:
        ctx = self.ctx
        return [ctx.base_degree + t * ctx.code.m for t in range(1, ctx.ell + 1)]

    def coefficient_vector(self, lambdas: list[RingElement]) -> np.ndarray:
        """Stack the coefficients of the given lambdas in column order."""
        ring = self.ctx.code.ring
        vec = np.zeros(len(self.columns), dtype=DTYPE)
        pos = 0
        for i, basis in enumerate(self.unknown_basis):
            bound = self.lambda_bounds[i]
            lam = lambdas[i]
            if not lam.is_zero() and lam.deg_h() > bound:
                raise ValueError(f"lambda_{i} exceeds its degree bound")
            dv = ring.to_degree_vector(lam, bound + 1)
            for k, (a, j) in enumerate(basis):
                vec[pos + k] = dv[ring.monomial_degree(a, j)]
            pos += len(basis)
        return vec

    def lambdas_from_vector(self, vec: np.ndarray) -> list[RingElement]:
        ring = self.ctx.code.ring
        out, pos = [], 0
        for basis in self.unknown_basis:
            out.append(ring.from_monomial_coeffs(basis, vec[pos: pos + len(basis)]))
            pos += len(basis)
        return out

    def residual(self, vec: np.ndarray) -> np.ndarray:
        F = self.ctx.code.field
        return F.matvec(self.matrix, vec)


def _row_monomials(ctx: KeyEqContext, modulus: Modulus, lower: int) -> tuple[np.ndarray, np.ndarray]:
    """(x-exponent, y-exponent) of reduced monomials with deg_H > lower, by ascending deg_H."""
    q = ctx.code.q
    L = modulus.x_length
    e = np.repeat(np.arange(L), q)
    r = np.tile(np.arange(q), L)
    deg = e * q + r * (q + 1)
    keep = deg > lower
    e, r, deg = e[keep], r[keep], deg[keep]
    order = np.argsort(deg, kind="stable")
    return e[order], r[order]


def _padded(comps, length: int) -> np.ndarray:
    out = np.zeros((len(comps), length), dtype=DTYPE)
    for j, c in enumerate(comps):
        n = min(c.size, length)
        out[j, :n] = c[:n]
    return out


def _block(ctx: KeyEqContext, t: int, i: int, basis, row_e: np.ndarray, row_r: np.ndarray) -> np.ndarray:
    """Rows for equation t, columns for the basis monomials of lambda_i."""
    F = ctx.code.field
    q = ctx.code.q
    modulus = ctx.moduli[t]
    out = np.zeros((row_e.size, len(basis)), dtype=DTYPE)
    A = ctx.A[(t, i)]
    if A.is_zero() or not basis or not row_e.size:
        return out
    by_j: dict[int, list[tuple[int, int]]] = {}
    for k, (a, j) in enumerate(basis):
        by_j.setdefault(j, []).append((k, a))
    prod = A
    for j in range(q):
        if j > 0:
            prod = prod.mul_y()
        if j not in by_j:
            continue
        cols = np.array([k for k, _ in by_j[j]])
        shifts = np.array([a for _, a in by_j[j]])
        if modulus.kind == "xpow":
            L = modulus.x_length
            P = _padded(prod.coeffs, L)
            idx = row_e[:, None] - shifts[None, :]
            valid = idx >= 0
            vals = P[row_r[:, None], np.where(valid, idx, 0)]
            out[:, cols] = np.where(valid, vals, 0)
        else:
            gpoly = modulus.poly
            L = gpoly.size - 1
            low = F.neg_table[gpoly[:-1]]  # X^L = -(lower terms) mod G^s
            P = _padded([F.poly_rem(c, gpoly) for c in prod.coeffs], L)
            order = np.argsort(shifts, kind="stable")
            a_cur = 0
            for idx_k in order:
                target = shifts[idx_k]
                while a_cur < target:
                    top = P[:, -1].copy()
                    P[:, 1:] = P[:, :-1]
                    P[:, 0] = 0
                    P = F.add_table[P, F.mul_table[top[:, None], low[None, :]]]
                    a_cur += 1
                out[:, cols[idx_k]] = P[row_r, row_e]
    return out


def assemble(ctx: KeyEqContext, drop_zero_rows: bool = True) -> PadeInstance:
    """Build the homogeneous system in the coefficients of the lambdas."""
    code, s, base = ctx.code, ctx.s, ctx.base_degree
    bases = [monomials_upto(code.q, base + i * (2 * code.g - 1)) for i in range(s)]
    columns = [(i, k) for i, b in enumerate(bases) for k in range(len(b))]
    blocks, rows = [], []
    for t in range(1, ctx.ell + 1):
        lower = base + t * code.m
        row_e, row_r = _row_monomials(ctx, ctx.moduli[t], lower)
        blocks.append(np.hstack([_block(ctx, t, i, bases[i], row_e, row_r) for i in range(s)]))
        rows.extend((t, int(d)) for d in row_e * code.q + row_r * (code.q + 1))
    matrix = np.vstack(blocks) if blocks else np.zeros((0, len(columns)), dtype=DTYPE)
    if drop_zero_rows and matrix.size:
        keep = np.flatnonzero(matrix.any(axis=1))
        matrix = matrix[keep]
        rows = [rows[k] for k in keep]
    return PadeInstance(ctx=ctx, unknown_basis=bases, columns=columns, rows=rows,
                        matrix=np.ascontiguousarray(matrix))


# -- solving ------------------------------------------------------------------

@dataclass
class CandidateSolution:
    lambdas: list[RingElement]
    psis: list[RingElement]
    nullspace_dim: int | None
    zero_lambda0: list[list[RingElement]] = field(default_factory=list, repr=False)
    """Basis of the kernel part with lambda_0 = 0, as lambda-tuples.

    Adding any of these to ``lambdas`` gives another solution with the same
    lambda_0, so the minimal solution is unique only modulo their span.
    """

    @property
    def lambda0_degree(self):
        return self.lambdas[0].deg_h()


def psi_from_lambdas(ctx: KeyEqContext, lambdas: list[RingElement], upto: int | None = None) -> list[RingElement]:
    """``psi_t`` for ``t = 1..upto`` (default ell) from the lambdas."""
    ring = ctx.code.ring
    psis = []
    for t in range(1, (ctx.ell if upto is None else upto) + 1):
        acc = ring.zero()
        for i, lam in enumerate(lambdas):
            A = ctx.A[(t, i)]
            if lam.is_zero() or A.is_zero():
                continue
            acc = acc + ctx.moduli[t].reduce(lam * A)
        psis.append(ctx.moduli[t].reduce(acc))
    return psis


def check_candidate(ctx: KeyEqContext, cand: CandidateSolution) -> bool:
    """Re-verify the congruences and both degree constraints by ring arithmetic."""
    base, g, m = ctx.base_degree, ctx.code.g, ctx.code.m
    if cand.lambdas[0].is_zero():
        return False
    for i, lam in enumerate(cand.lambdas):
        if lam.deg_h() > base + i * (2 * g - 1):
            return False
    recomputed = psi_from_lambdas(ctx, cand.lambdas)
    for t, (psi, ref) in enumerate(zip(cand.psis, recomputed), start=1):
        if psi != ref or psi.deg_h() > base + t * m:
            return False
    return True


def _solver_order(instance: PadeInstance) -> np.ndarray:
    """Columns of lambda_1..lambda_{s-1} first, then lambda_0 by ascending deg_H."""
    lam0 = [c for c, (i, _) in enumerate(instance.columns) if i == 0]
    rest = [c for c, (i, _) in enumerate(instance.columns) if i != 0]
    return np.array(rest + lam0, dtype=np.int64)


def minimal_solution(instance: PadeInstance) -> tuple[CandidateSolution | None, int]:
    """Minimal candidate (or None) together with the kernel dimension."""
    ctx = instance.ctx
    F = ctx.code.field
    order = _solver_order(instance)
    n_rest = len(order) - len(instance.unknown_basis[0])
    A = np.ascontiguousarray(instance.matrix[:, order])
    found: list[int] = []

    def stop(c, is_pivot):
        if not is_pivot and c >= n_rest and not found:
            found.append(c)
        return False

    pivots = _eliminate(F, A, A.shape[1], stop=stop)
    dim = A.shape[1] - len(pivots)
    if not found:
        return None, dim

    def unpermute(v_perm):
        vec = np.zeros_like(v_perm)
        vec[order] = v_perm
        return instance.lambdas_from_vector(vec)

    lambdas = unpermute(kernel_vector(F, A, pivots, found[0]))
    pivset = set(pivots)
    zero_l0 = [unpermute(kernel_vector(F, A, pivots, c)) for c in range(n_rest) if c not in pivset]
    psis = psi_from_lambdas(ctx, lambdas)
    return CandidateSolution(lambdas=lambdas, psis=psis, nullspace_dim=dim, zero_lambda0=zero_l0), dim


def solve_minimal(instance: PadeInstance) -> CandidateSolution | None:
    """Nonzero solution whose lambda_0 has the smallest leading monomial.

    With the lambda_0 columns placed last in ascending degree, the kernel
    vector attached to the first free lambda_0 column has exactly that
    leading monomial, and every kernel vector with a smaller one has
    lambda_0 = 0. The returned lambda_0 is monic. None if the kernel is
    trivial or contains only solutions with lambda_0 = 0.
    """
    return minimal_solution(instance)[0]


def solution_space_dim(ctx: KeyEqContext) -> int:
    """Dimension of the space of lambda-tuples (psi follows) solving the system."""
    inst = assemble(ctx)
    if not inst.matrix.shape[0]:
        return inst.matrix.shape[1]
    return inst.matrix.shape[1] - len(rref(ctx.code.field, inst.matrix)[1])
