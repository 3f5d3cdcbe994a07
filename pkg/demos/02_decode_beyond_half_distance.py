"""Decode the [64, 10] Hermitian code over F_16 well past half its distance.

Half the designed distance is 24; the decoder with s=2, ell=4 handles 29
random errors and breaks down at 30.
"""

import numpy as np

from hermitian_ipd import code_new, decode, radius_guaranteed, radius_practical
from hermitian_ipd.simulator import random_error

C = code_new(4, 15)
s, ell = 2, 4
print(f"n={C.n} k={C.k} d*={C.d_star}, half distance {(C.d_star - 1) // 2}")
print(f"guaranteed radius {radius_guaranteed(4, 15, s, ell)}, practical radius {radius_practical(4, 15, s, ell)}")

rng = np.random.default_rng(1)
for tau in (24, 28, 29, 30):
    ok = 0
    for _ in range(20):
        c = C.encode(C.random_message(rng))
        r = C.field.add_table[c, random_error(C, tau, rng)]
        out = decode(C, r, s, ell, tau)
        ok += out.success and np.array_equal(out.codeword, c)
    print(f"{tau} errors: {ok}/20 decoded" + ("" if ok == 20 else f", last failure: {out.reason}"))
