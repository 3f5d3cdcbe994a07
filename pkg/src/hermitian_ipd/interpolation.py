"""Interpolation of a received word by an element of R."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .code import HermitianCode
from .galois import DTYPE
from .hermitian_ring import RingElement


def interpolate(code: HermitianCode, r: Sequence[int]) -> RingElement:
    """Return R with ``R(P_i) = r_i`` for every point and ``deg_H(R) <= n + 2g - 1``.

    The basis is every monomial of ``deg_H <= n + 2g - 1`` (n + g of them), in
    ascending degree. The system is underdetermined by g; we take the pivot
    solution of the cached echelon form, which makes the map linear in ``r``.
    """
    r = np.asarray(r, dtype=DTYPE)
    if r.shape != (code.n,):
        raise ValueError(f"received word must have length n={code.n}")
    x = code.interpolation_solver.solve(r)
    if x is None:  # pragma: no cover - the evaluation map is surjective
        raise RuntimeError("interpolation system inconsistent")
    return code.ring.from_monomial_coeffs(code.interpolation_basis, x)
