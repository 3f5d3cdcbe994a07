"""A tour of the Hermitian curve over F_16 and its coordinate ring."""

from hermitian_ipd import code_new, field_new, hermitian_ring
from hermitian_ipd.hermitian_ring import monomials_upto

q = 4
F = field_new(q)
print(f"F_{F.order}: characteristic {F.p}, primitive element {F.primitive_element}")
print("subfield F_4 inside it:", F.subfield())

C = code_new(q, 15)
print(f"\n{len(C.points)} affine points on Y^4 + Y = X^5, e.g. {C.points[:3]}")

ring = hermitian_ring(q)
x, y = ring.monomial(1, 0), ring.monomial(0, 1)
print(f"\nY^4 reduces to {y ** 4} (degree {(y ** 4).deg_h()})")
a = x * x * y + ring.constant(3)
print("a = X^2 Y + 3 has degree", a.deg_h())
print("deg(a * Y^3) =", (a * y ** 3).deg_h(), "= 13 + 15")

# the pole orders that occur form the semigroup generated by 4 and 5
degs = [i * q + j * (q + 1) for i, j in monomials_upto(q, 20)]
print("\npole orders up to 20:", degs)
print("gaps:", sorted(set(range(20)) - set(degs)), f"({ring.g} of them, the genus)")
