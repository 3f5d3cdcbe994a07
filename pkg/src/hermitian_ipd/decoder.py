"""Improved power decoding of one-point Hermitian codes.

Pipeline: interpolate the received word, build the key-equation context,
assemble and solve the linear Padé system for the solution with minimal
``deg_H(lambda_0)``, divide ``psi_1`` by ``lambda_0``, and accept the result
only if it re-encodes to a codeword within the decoding radius.

The decoding radius ``tau`` bounds the number of errors. The Padé system is
set up with ``deg_H(lambda_0) <= s*tau + g`` (and every other bound shifted
by the same g): for ``e`` random errors the minimal ``lambda_0``, an element
vanishing to order ``s`` on the error positions, generically has
``deg_H = s*e + g``, so the system has to admit that degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .code import HermitianCode, hamming_distance
from .galois import DTYPE, ConfigurationError
from .hermitian_ring import exact_divide
from .interpolation import interpolate
from .key_equations import ModulusMode, build_context, validate_decoder_params
from .pade_solver import assemble, minimal_solution, psi_from_lambdas, radius_practical

FailureReason = Literal["no_solution", "lambda_zero_only", "division_failed",
                        "message_degree_exceeded", "distance_exceeded"]


@dataclass
class DecodeOutcome:
    success: bool
    codeword: np.ndarray | None = None
    message: np.ndarray | None = None
    errors_corrected: int | None = None
    reason: FailureReason | None = None
    tau: int = 0
    base_degree: int = 0
    nullspace_dim: int | None = None
    lambda0_degree: float | int | None = None
    attempts: list[int] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "success" if self.success else "failure"

    def to_dict(self) -> dict:
        d = {
            "status": self.status,
            "tau": self.tau,
            "base_degree": self.base_degree,
            "nullspace_dim": self.nullspace_dim,
            "lambda0_degree": None if self.lambda0_degree in (None, float("-inf")) else int(self.lambda0_degree),
        }
        if self.success:
            d.update(codeword=self.codeword.tolist(), message=self.message.tolist(),
                     errors_corrected=self.errors_corrected)
        else:
            d["reason"] = self.reason
        return d


def decode(code: HermitianCode, r: Sequence[int], s: int, ell: int, tau: int | None = None, *,
           degree_slack: int | None = None, modulus_mode: ModulusMode = "base") -> DecodeOutcome:
    """Decode ``r`` with up to ``tau`` errors (default: the practical radius).

    Decoding failures are reported in the outcome, never raised; only invalid
    parameters raise :class:`ConfigurationError`.
    """
    validate_decoder_params(s, ell)
    if tau is None:
        tau = radius_practical(code.q, code.m, s, ell)
    if tau < 0:
        raise ConfigurationError(f"decoding radius must be non-negative, got {tau}")
    if degree_slack is None:
        degree_slack = code.g
    r = np.asarray(r, dtype=DTYPE)
    if r.shape != (code.n,):
        raise ConfigurationError(f"received word must have length n={code.n}")

    base_degree = s * tau + degree_slack
    out = DecodeOutcome(success=False, tau=tau, base_degree=base_degree, attempts=[tau])
    R = interpolate(code, r)
    ctx = build_context(code, R, s, ell, tau, modulus_mode, base_degree=base_degree)
    instance = assemble(ctx)
    cand, dim = minimal_solution(instance)
    out.nullspace_dim = dim
    if cand is None:
        out.reason = "lambda_zero_only" if dim else "no_solution"
        return out
    out.lambda0_degree = cand.lambda0_degree

    # psi_1 is only determined up to the psi_1 of kernel vectors with lambda_0 = 0
    ambiguity = [psi_from_lambdas(ctx, lam, upto=1)[0] for lam in cand.zero_lambda0]
    f = exact_divide(cand.psis[0], cand.lambdas[0], code.m, modulo=ambiguity)
    if f is None:
        out.reason = "division_failed"
        return out
    if f.deg_h() > code.m:
        out.reason = "message_degree_exceeded"
        return out
    vec = code.ring.to_degree_vector(f, code.m + 1)
    message = np.array([vec[code.ring.monomial_degree(i, j)] for i, j in code.message_basis], dtype=DTYPE)
    codeword = code.encode(message)
    dist = hamming_distance(r, codeword)
    if dist > tau:
        out.reason = "distance_exceeded"
        return out
    out.success = True
    out.codeword, out.message, out.errors_corrected = codeword, message, dist
    return out


def decode_with_sweep(code: HermitianCode, r: Sequence[int], s: int, ell: int,
                      tau: int | None = None, tau_min: int | None = None, **kwargs) -> DecodeOutcome:
    """Try ``tau`` first, then smaller radii down to ``tau_min``.

    ``tau_min`` defaults to ``ceil((d* - 1)/2)``. Returns the first success;
    if every radius fails, the outcome of the first (largest) attempt.
    """
    if tau is None:
        tau = radius_practical(code.q, code.m, s, ell)
    if tau_min is None:
        tau_min = math.ceil((code.d_star - 1) / 2)
    first = decode(code, r, s, ell, tau, **kwargs)
    if first.success:
        return first
    tried = [tau]
    for t in range(tau - 1, max(tau_min, 0) - 1, -1):
        tried.append(t)
        res = decode(code, r, s, ell, t, **kwargs)
        if res.success:
            res.attempts = tried
            return res
    first.attempts = tried
    return first
