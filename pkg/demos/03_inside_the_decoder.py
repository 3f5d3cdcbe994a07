"""Step through one decoding and compare with the true error locator."""

import numpy as np

from hermitian_ipd import code_new, interpolate
from hermitian_ipd.hermitian_ring import exact_divide
from hermitian_ipd.key_equations import build_context, error_evaluator, error_locator, verify_key_equations
from hermitian_ipd.pade_solver import assemble, minimal_solution, psi_from_lambdas

C = code_new(3, 9)
s, ell, tau = 2, 3, 9
rng = np.random.default_rng(3)
msg = C.random_message(rng)
c = C.encode(msg)
support = rng.choice(C.n, tau, replace=False)
r = c.copy()
r[support] = C.field.add_table[c[support], rng.integers(1, 9, tau)]

R = interpolate(C, r)
print("interpolation R has degree", R.deg_h())

# with the true error positions the key equations can be checked directly
f = C.message_polynomial(msg)
lam = error_locator(C, support)
ctx = build_context(C, R, s, ell, tau)
omega = error_evaluator(ctx, lam, f)
print("true locator degree", lam.deg_h(), "evaluator degree", omega.deg_h())
print("key equations hold:", verify_key_equations(ctx, lam, omega, f))

# the decoder only sees r; it leaves room for g extra degrees in lambda_0
ctx = build_context(C, R, s, ell, tau, base_degree=s * tau + C.g)
inst = assemble(ctx)
print("linear system:", inst.matrix.shape[0], "equations,", inst.matrix.shape[1], "unknowns")
cand, dim = minimal_solution(inst)
print("kernel dimension", dim, "; minimal lambda_0 has degree", cand.lambda0_degree)
print("lambda_0 vanishes at the error positions:", all(cand.lambdas[0].evaluate(C.points[i]) == 0 for i in support))

extra = [psi_from_lambdas(ctx, lam_, upto=1)[0] for lam_ in cand.zero_lambda0]
f_hat = exact_divide(cand.psis[0], cand.lambdas[0], C.m, modulo=extra)
print("recovered message polynomial matches:", f_hat == f)
