"""A tour of the coordinate ring of the Jouanolou device.

The device is the affine surface of 2x2 matrices ((x, y), (z, w)) with
trace 1 and determinant 0: its coordinate ring is
R = k[x,y,z,w]/(x+w-1, xw-yz).  Every element has a unique normal form
a(y,z) + x*b(y,z) once w is eliminated and x^2 is rewritten as x - yz,
so equality is immediate and certificates can be checked exactly.
"""

from jouanolou import QQ, chart_pullback, normal_form
from jouanolou.textio import mpoly_str, ring_str

print(__doc__)

print("Defining relations collapse to canonical forms:")
for expr in ("x + w", "x*w", "x^2", "w^2"):
    print(f"  {expr:6s} -> {ring_str(normal_form(expr, QQ))}")

print()
print("The determinant-style identity behind the simplest degree-0 matrix:")
e = normal_form("2*x - 1", QQ)
print("  (2x - 1)^2 + 4yz =", ring_str(e * e + normal_form("4*y*z", QQ)))

print()
print("Evaluation at the basepoint (x, y, z, w) = (1, 0, 0, 0):")
for expr in ("x", "2*x - 1", "y*z + w"):
    print(f"  {expr:9s} -> {normal_form(expr, QQ).eval_basepoint()}")

print()
print("The involution swapping y and z fixes x, w and the basepoint:")
r = normal_form("x + y*w", QQ)
print(f"  tau(x + y*w) = {ring_str(r.tau())}")
print(f"  tau twice returns the element: {r.tau().tau() == r}")

print()
print("Two affine charts cover the device; both defining relations map to 0:")
for chart in ("phi0", "phi1"):
    rel1 = chart_pullback(normal_form("x + w", QQ), chart)
    rel2 = chart_pullback(normal_form("x", QQ) * normal_form("w", QQ), chart) - chart_pullback(
        normal_form("y*z", QQ), chart
    )
    print(f"  {chart}: x+w -> {mpoly_str(rel1)},  xw - yz -> {mpoly_str(rel2)}")
print("  phi1 sends y to the chart coordinate t:",
      mpoly_str(chart_pullback(normal_form("y", QQ), "phi1")))
