"""Line bundles on the device and the resultant toolkit.

The degree-n bundle is spanned inside R^2 by [x^n; z^n] and [y^n; w^n];
mixed columns reduce to that span by multiplying with (x+w)^n = 1.  The
idempotent presentation, the substitution sigma from homogeneous pairs,
and Sylvester resultants with Bezout extraction all live here.
"""

from jouanolou import (
    Fp,
    HomogPair,
    QQ,
    bezout_from_unit_resultant,
    mn_matrices,
    mu_product,
    normalize_section,
    resultant,
    resultant_identities,
    sigma,
)
from jouanolou.bundle import Section
from jouanolou.jring import RingElement
from jouanolou.textio import ring_str

print(__doc__)

ONE, ZERO = RingElement.one(QQ), RingElement.zero(QQ)

print("Reducing the mixed column [xy; zw] to the two spanning columns:")
s = normalize_section(2, [ZERO, ONE, ZERO], "P", QQ)
print(f"  coefficients ({ring_str(s.coeffs[0])}, {ring_str(s.coeffs[1])})")
print(f"  expanded pair ({ring_str(s.expanded[0])}, {ring_str(s.expanded[1])})")

print()
print("Componentwise products multiply degrees:")
x_col = Section("P", 1, (ONE, ZERO))
y_col = Section("P", 1, (ZERO, ONE))
prod = mu_product(x_col, y_col)
print(f"  [x;z] * [y;w] -> degree {prod.n}, coefficients "
      f"({ring_str(prod.coeffs[0])}, {ring_str(prod.coeffs[1])})")

print()
print("Idempotent presentations for n = 1, 2, 3 (x^n A + w^n B = 1):")
for n in (1, 2, 3):
    pair = mn_matrices(QQ, n)
    x, w = RingElement.gen_x(QQ), RingElement.gen_w(QQ)
    check = x**n * pair.A + w**n * pair.B
    print(f"  n={n}: A = {ring_str(pair.A)},  B = {ring_str(pair.B)},  "
          f"x^n A + w^n B = {ring_str(check)}")

print()
print("sigma can collapse different homogeneous pairs to one section pair")
print("while their resultants stay different:")
h1 = HomogPair(1, [ZERO, ONE], [ONE, ZERO])                      # (alpha, beta)
h2 = HomogPair(1, [RingElement.gen_z(QQ), RingElement.gen_x(QQ)], [ONE, ZERO])
s1, s2 = sigma(h1), sigma(h2)
print(f"  same sections: {s1 == s2}")
print(f"  res(alpha, beta) = {ring_str(resultant(h1))},  "
      f"res(x alpha + z beta, beta) = {ring_str(resultant(h2))}")

print()
print("Bezout extraction from a unit resultant: (X - 1) U + (X + 1) V = 1")
U, V = bezout_from_unit_resultant([-ONE, ONE], [ONE, ONE])
print(f"  U = {ring_str(U[0])},  V = {ring_str(V[0])}")

print()
print("The four resultant facts on a concrete monic pair over F_101:")
F = Fp(101)
one_f = RingElement.one(F)
A = [RingElement.from_scalar(F.elem(7)), RingElement.from_scalar(F.elem(3)), one_f]
B = [RingElement.from_scalar(F.elem(2)), RingElement.from_scalar(F.elem(5))]
report = resultant_identities(A, B, [one_f], F.elem(4))
print(f"  Bezout re-verifies: {report.bezout_ok}")
print(f"  reversal:     {report.reversal_lhs} == {report.reversal_rhs}")
print(f"  shift:        {report.shift_lhs} == {report.shift_rhs}")
print(f"  conservation: {report.conservation_lhs} == {report.conservation_rhs}")
print(f"  all hold: {report.all_hold}")
