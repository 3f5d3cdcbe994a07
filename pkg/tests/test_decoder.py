import itertools

import numpy as np
import pytest

from conftest import corrupt
from hermitian_ipd.code import code_new, hamming_distance
from hermitian_ipd.decoder import decode, decode_with_sweep
from hermitian_ipd.galois import ConfigurationError
from hermitian_ipd.hermitian_ring import exact_divide
from hermitian_ipd.key_equations import g_poly
from hermitian_ipd.linalg import nullspace
from hermitian_ipd.pade_solver import radius_practical


def test_error_free(rng):
    C = code_new(4, 15)
    msg = C.random_message(rng)
    out = decode(C, C.encode(msg), 2, 4)
    assert out.success and out.errors_corrected == 0
    assert np.array_equal(out.message, msg)
    assert out.tau == 29 and out.status == "success"


@pytest.mark.parametrize("e,expect", [(28, True), (29, True), (30, False)])
def test_q4_threshold(e, expect, rng):
    C = code_new(4, 15)
    for _ in range(5):
        c = C.encode(C.random_message(rng))
        r = corrupt(C, c, rng.choice(C.n, e, replace=False), rng)
        out = decode(C, r, 2, 4, 29 if e < 30 else 30)
        assert out.success == expect
        if expect:
            assert np.array_equal(out.codeword, c) and out.errors_corrected == e
        else:
            assert out.reason in ("division_failed", "no_solution", "lambda_zero_only",
                                  "message_degree_exceeded", "distance_exceeded")


def test_exhaustive_weight_two_q2(rng):
    C = code_new(2, 3)
    for _ in range(2):
        c = C.encode(C.random_message(rng))
        for e in (0, 1, 2):
            for pos in itertools.combinations(range(C.n), e):
                for vals in itertools.product(range(1, 4), repeat=e):
                    r = c.copy()
                    for p, v in zip(pos, vals):
                        r[p] = C.field.add(int(r[p]), v)
                    out = decode(C, r, 2, 2, 2)
                    assert out.success and np.array_equal(out.codeword, c)


@pytest.mark.parametrize("q,m,ell", [(2, 2, 3), (3, 9, 3), (4, 15, 4)])
def test_success_contract(q, m, ell, rng):
    C = code_new(q, m)
    tau = radius_practical(q, m, 2, ell)
    half = (C.d_star - 1) // 2
    for _ in range(30):
        c = C.encode(C.random_message(rng))
        e = int(rng.integers(0, tau + 2))
        r = corrupt(C, c, rng.choice(C.n, e, replace=False), rng)
        out = decode(C, r, 2, ell, tau)
        if out.success:
            assert C.is_codeword(out.codeword)
            assert np.array_equal(C.encode(out.message), out.codeword)
            assert hamming_distance(r, out.codeword) <= tau
            if e <= half:
                assert np.array_equal(out.codeword, c)
        else:
            assert out.reason is not None and out.codeword is None


def test_parameter_errors():
    C = code_new(2, 3)
    with pytest.raises(ConfigurationError):
        decode(C, np.zeros(8, dtype=int), 3, 2)
    with pytest.raises(ConfigurationError):
        decode(C, np.zeros(7, dtype=int), 1, 2)
    with pytest.raises(ConfigurationError):
        decode(C, np.zeros(8, dtype=int), 1, 1, -1)
    with pytest.raises(ConfigurationError):
        decode(code_new(2, 7), np.zeros(8, dtype=int), 2, 3)  # negative practical radius


def test_outcome_dict(rng):
    C = code_new(2, 3)
    d = decode(C, np.zeros(8, dtype=int), 2, 2).to_dict()
    assert d["status"] == "success" and d["codeword"] == [0] * 8
    C4 = code_new(4, 15)
    r = corrupt(C4, np.zeros(64, dtype=np.uint8), range(40), rng)
    d = decode(C4, r, 2, 4).to_dict()
    assert d["status"] == "failure" and "reason" in d


def _classical_reference(C, r, ell, tau):
    """Independent s = 1 power decoder: minimal lambda with lambda R^t = psi_t mod G."""
    from hermitian_ipd.interpolation import interpolate
    F, ring = C.field, C.ring
    R = interpolate(C, r)
    G = g_poly(ring)
    D = tau + C.g
    basis = ring.monomials_upto(D)
    powers = [R ** t for t in range(1, ell + 1)]
    cols = []
    for i, j in basis:
        mono = ring.monomial(i, j)
        col = []
        for t, Rt in enumerate(powers, start=1):
            prod = mono * Rt
            red = type(prod)(ring, tuple(F.poly_rem(c, G) for c in prod.coeffs))
            vec = ring.to_degree_vector(red, C.q * C.q * C.q + C.q * C.q)
            col.append(vec[D + t * C.m + 1:])
        cols.append(np.concatenate(col))
    M = np.array(cols, dtype=np.uint8).T
    for k in range(1, len(basis) + 1):
        N = nullspace(F, M[:, :k])
        if N.shape[0]:
            lam = ring.from_monomial_coeffs(basis[:k], N[-1])
            break
    else:
        return None
    prod = lam * R
    psi = type(prod)(ring, tuple(F.poly_rem(c, G) for c in prod.coeffs))
    f = exact_divide(psi, lam, C.m)
    if f is None:
        return None
    cw = C.evaluate(f)
    return cw if hamming_distance(cw, r) <= tau else None


def test_s1_matches_classical_reference(rng):
    C = code_new(3, 5)
    ell = 2
    tau = radius_practical(3, 5, 1, ell)
    for _ in range(100):
        c = C.encode(C.random_message(rng))
        e = int(rng.integers(tau - 2, tau + 3))
        r = corrupt(C, c, rng.choice(C.n, e, replace=False), rng)
        ref = _classical_reference(C, r, ell, tau)
        out = decode(C, r, 1, ell, tau)
        assert out.success == (ref is not None)
        if out.success:
            assert np.array_equal(out.codeword, ref)


def test_sweep_first_try(rng):
    C = code_new(4, 15)
    c = C.encode(C.random_message(rng))
    r = corrupt(C, c, range(3), rng)
    out = decode_with_sweep(C, r, 2, 4)
    assert out.success and out.attempts == [29]


def test_sweep_all_fail_reports_largest_radius(rng):
    C = code_new(4, 15)
    r = corrupt(C, np.zeros(64, dtype=np.uint8), rng.choice(64, 45, replace=False), rng)
    first = decode(C, r, 2, 4)
    out = decode_with_sweep(C, r, 2, 4)
    assert not out.success
    assert out.tau == 29 and out.reason == first.reason
    assert out.attempts == list(range(29, 24 - 1, -1))


def test_sweep_recovers_smaller_radius():
    C = code_new(2, 1)
    tau = radius_practical(2, 1, 2, 3)
    rng = np.random.default_rng(1)
    recovered = 0
    for _ in range(400):
        c = C.encode(C.random_message(rng))
        r = corrupt(C, c, rng.choice(C.n, 3, replace=False), rng)
        if decode(C, r, 2, 3, tau).success:
            continue
        out = decode_with_sweep(C, r, 2, 3, tau)
        if out.success:
            recovered += 1
            assert out.tau < tau and out.attempts[0] == tau
            assert np.array_equal(out.codeword, c)
    assert recovered > 0
