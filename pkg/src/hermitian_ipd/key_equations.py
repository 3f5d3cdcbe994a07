"""Key-equation ingredients: the products A_{t,i}, the moduli G_t, and error oracles.

The locator/evaluator oracles need the true error support and message, so
they are only used for testing and diagnostics, never by the decoder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .code import HermitianCode, evaluation_matrix
from .galois import DTYPE, ConfigurationError
from .hermitian_ring import HermitianRing, RingElement
from .linalg import kernel_vector, rref

ModulusMode = Literal["tau", "base"]


def binom_mod_char(t: int, i: int, p: int) -> int:
    """``binom(t, i)`` reduced modulo the characteristic ``p``."""
    if i < 0 or i > t:
        return 0
    return math.comb(t, i) % p


def g_poly(ring: HermitianRing, power: int = 1) -> np.ndarray:
    """Coefficients of ``(X^{q^2} - X)^power`` as a polynomial in X."""
    F = ring.field
    base = np.zeros(ring.q ** 2 + 1, dtype=DTYPE)
    base[-1] = 1
    base[1] = F.neg(1)
    out = np.array([1], dtype=DTYPE)
    for _ in range(power):
        out = F.poly_mul(out, base)
    return out


def mul_univariate(a: RingElement, u: np.ndarray) -> RingElement:
    """Product of a ring element with a polynomial in X alone (componentwise)."""
    F = a.field
    return RingElement(a.ring, tuple(F.poly_mul(c, u) for c in a.coeffs))


@dataclass(frozen=True)
class Modulus:
    """A univariate modulus acting componentwise on ``nu(a)``.

    ``kind == "xpow"``: the pure power X^exponent (reduction is truncation).
    ``kind == "poly"``: a monic polynomial ``poly`` in X, here G^s.
    """

    kind: Literal["xpow", "poly"]
    exponent: int = 0
    poly: np.ndarray | None = None

    @property
    def x_length(self) -> int:
        """Number of X-coefficients kept per component after reduction."""
        return self.exponent if self.kind == "xpow" else self.poly.size - 1

    def reduce(self, a: RingElement) -> RingElement:
        F = a.field
        if self.kind == "xpow":
            comps = tuple(F.poly_trim(c[: self.exponent]) for c in a.coeffs)
        else:
            comps = tuple(F.poly_rem(c, self.poly) for c in a.coeffs)
        return RingElement(a.ring, comps)

    def as_element(self, ring: HermitianRing) -> RingElement:
        if self.kind == "xpow":
            return ring.monomial(self.exponent, 0)
        return ring.univariate(self.poly)


def congruent(a: RingElement, b: RingElement, modulus: Modulus) -> bool:
    return modulus.reduce(a - b).is_zero()


def modulus_exponent(code: HermitianCode, t: int, s: int, tau: int, mode: ModulusMode = "base",
                     base_degree: int | None = None) -> int:
    """Exponent N of the X-power modulus used for the equalities ``t < s``.

    ``"tau"`` uses ``floor((t(n+2g-1) + tau)/q) + 1``; ``"base"`` replaces
    tau by the lambda_0 degree bound (``s*tau`` unless given), so the modulus
    covers the full degree of the left-hand side and the congruence is an
    equality.
    """
    if mode == "tau":
        shift = tau
    else:
        shift = s * tau if base_degree is None else base_degree
    return (t * (code.n + 2 * code.g - 1) + shift) // code.q + 1


@dataclass
class KeyEqContext:
    code: HermitianCode
    R: RingElement
    s: int
    ell: int
    tau: int
    modulus_mode: ModulusMode
    base_degree: int
    """Degree bound of lambda_0; ``s*tau`` in the textbook setting."""
    G: RingElement
    A: dict[tuple[int, int], RingElement] = field(repr=False)
    moduli: dict[int, Modulus] = field(repr=False)
    g_power_s: np.ndarray = field(repr=False)

    def a_degree_bound(self, t: int, i: int) -> int:
        """Upper bound on deg_H(A_{t,i}) from deg_H(R) <= n + 2g - 1."""
        n, g = self.code.n, self.code.g
        return (t - i) * (n + 2 * g - 1) + i * n


def validate_decoder_params(s: int, ell: int, tau: int | None = None) -> None:
    if not (isinstance(s, int) and isinstance(ell, int)) or not 1 <= s <= ell:
        raise ConfigurationError(f"need 1 <= s <= ell, got s={s}, ell={ell}")
    if tau is not None and tau < 0:
        raise ConfigurationError(f"tau must be non-negative, got {tau}")


def build_context(code: HermitianCode, R: RingElement, s: int, ell: int, tau: int,
                  modulus_mode: ModulusMode = "base", base_degree: int | None = None) -> KeyEqContext:
    """Collect ``A_{t,i} = binom(t,i) R^{t-i} G^i`` and the moduli ``G_t``.

    ``base_degree`` overrides the lambda_0 degree bound ``s*tau``; all other
    bounds shift with it (``base + i(2g-1)`` for lambda_i, ``base + t m`` for psi_t).
    """
    validate_decoder_params(s, ell, tau)
    if base_degree is None:
        base_degree = s * tau
    if base_degree < 0:
        raise ConfigurationError("base degree must be non-negative")
    if modulus_mode not in ("tau", "base"):
        raise ConfigurationError(f"unknown modulus mode {modulus_mode!r}")
    ring = code.ring
    p = code.field.p
    g_pows = [g_poly(ring, i) for i in range(s + 1)]
    r_pows = [ring.one(), R]
    for _ in range(2, ell + 1):
        r_pows.append(r_pows[-1] * R)
    A = {}
    for t in range(1, ell + 1):
        for i in range(s):
            c = binom_mod_char(t, i, p)
            if c == 0:
                A[(t, i)] = ring.zero()
            else:
                A[(t, i)] = mul_univariate(r_pows[t - i], g_pows[i]).scale(c)
    moduli = {}
    for t in range(1, ell + 1):
        if t < s:
            moduli[t] = Modulus("xpow", exponent=modulus_exponent(code, t, s, tau, modulus_mode, base_degree))
        else:
            moduli[t] = Modulus("poly", poly=g_pows[s])
    return KeyEqContext(code=code, R=R, s=s, ell=ell, tau=tau, modulus_mode=modulus_mode,
                        base_degree=base_degree, G=ring.univariate(g_pows[1]), A=A, moduli=moduli, g_power_s=g_pows[s])


# -- oracles ------------------------------------------------------------------

def error_locator(code: HermitianCode, support: Iterable[int]) -> RingElement:
    """A nonzero element vanishing on the given positions, of minimal deg_H.

    Among all such elements of minimal degree, the one returned is the kernel
    vector of the echelonized evaluation system (monomials ascending by
    deg_H) whose leading monomial is smallest, normalized to be monic.
    """
    support = sorted(set(int(i) for i in support))
    ring = code.ring
    if not support:
        return ring.one()
    if support[0] < 0 or support[-1] >= code.n:
        raise ValueError("support position out of range")
    basis = ring.monomials_upto(len(support) + code.g)
    pts = [code.points[i] for i in support]
    M = evaluation_matrix(ring, pts, basis)
    R, pivots = rref(code.field, M)
    pivset = set(pivots)
    free = next(c for c in range(len(basis)) if c not in pivset)
    v = kernel_vector(code.field, R, pivots, free)
    return ring.from_monomial_coeffs(basis, v)


def error_evaluator(ctx: KeyEqContext, locator: RingElement, f: RingElement) -> RingElement:
    """The Omega with ``Omega * G = Lambda * (f - R)``.

    G is univariate, so the division is componentwise in ``nu``. Raises
    ValueError when Lambda does not vanish on the error positions.
    """
    F = ctx.code.field
    num = locator * (f - ctx.R)
    g1 = g_poly(ctx.code.ring, 1)
    comps = []
    for c in num.coeffs:
        quo, rem = F.poly_divmod(c, g1)
        if rem.size:
            raise ValueError("locator does not vanish on the error positions")
        comps.append(quo)
    omega = RingElement(ctx.code.ring, tuple(comps))
    if not omega.is_zero() and omega.deg_h() > locator.deg_h() + 2 * ctx.code.g - 1:
        raise ValueError("evaluator exceeds its degree bound")
    return omega


def key_equation_sides(ctx: KeyEqContext, locator: RingElement, omega: RingElement,
                       f: RingElement, t: int) -> tuple[RingElement, RingElement]:
    """Left side ``Lambda^s f^t`` and right side ``sum_i Lambda^{s-i} Omega^i A_{t,i}``."""
    s = ctx.s
    lhs = (locator ** s) * (f ** t)
    rhs = ctx.code.ring.zero()
    for i in range(min(t, s - 1) + 1):
        term = ctx.A[(t, i)]
        if term.is_zero():
            continue
        rhs = rhs + (locator ** (s - i)) * (omega ** i) * term
    return lhs, rhs


def verify_key_equations(ctx: KeyEqContext, locator: RingElement, omega: RingElement,
                         f: RingElement) -> bool:
    """Check the exact equalities for ``t < s`` and the congruences mod G^s for ``t >= s``."""
    gs = Modulus("poly", poly=ctx.g_power_s)
    for t in range(1, ctx.ell + 1):
        lhs, rhs = key_equation_sides(ctx, locator, omega, f, t)
        if t < ctx.s:
            if lhs != rhs:
                return False
        elif not congruent(lhs, rhs, gs):
            return False
    return True


def true_solution(ctx: KeyEqContext, locator: RingElement, omega: RingElement,
                  f: RingElement) -> tuple[list[RingElement], list[RingElement]]:
    """``(Lambda^{s-i} Omega^i)_i`` and ``(Lambda^s f^t)_t``."""
    s = ctx.s
    lambdas = [(locator ** (s - i)) * (omega ** i) for i in range(s)]
    psis = [(locator ** s) * (f ** t) for t in range(1, ctx.ell + 1)]
    return lambdas, psis
