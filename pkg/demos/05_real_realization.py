"""Winding numbers along the real circle inside the device.

The real points of the device form a surface in R^3; slicing with y = z
gives a circle through the basepoint.  A map over Q then realizes to a
map from that circle to the real projective line, and its winding number
(in half-turns) is the topological degree.  These numbers pin down which
matrix action can be compatible with the group operation: the chosen one
adds degrees, the transpose variant does not.
"""

from jouanolou import (
    QQ,
    ReferenceFamily,
    act,
    boxplus_act,
    complete_pointed,
    g_uv,
    make_map,
    make_row,
    n_pi,
    oplus,
    winding_degree,
    winding_profile,
)
from jouanolou.jring import RingElement
from jouanolou.textio import parse_ring

print(__doc__)

ONE, ZERO = RingElement.one(QQ), RingElement.zero(QQ)
pi = n_pi(1, QQ)
g = g_uv(QQ.one, QQ.elem(-1))
F = act(complete_pointed(g), pi)
tilde = make_map(-1, ONE, ZERO, ZERO, -ONE)
row2 = make_row(parse_ring("2*x - 1", QQ), parse_ring("2*z", QQ))
L = act(complete_pointed(row2), tilde)
H = boxplus_act(complete_pointed(row2), pi)

table = [
    ("g(1,-1), the double cover", g, 2),
    ("the reference map", pi, 1),
    ("g(1,-1) + reference", F, 3),
    ("the degree minus-one candidate", tilde, -1),
    ("(2x-1, 2z) + candidate", L, 1),
    ("(2x-1, 2z) transpose-acting on the reference", H, -1),
]
print("The six landmark degrees:")
for label, f, want in table:
    deg, raw, residual = winding_profile(f)
    mark = "ok" if deg == want else "MISMATCH"
    print(f"  {label:46s} degree {deg:+d} (residual {residual:.1e}) {mark}")

print()
print("Degrees add along the group operation (negative references use the")
print("transported family, which realizes its degree):")
refs = ReferenceFamily(QQ, "naive")
pairs = [(g, pi), (F, tilde), (pi, tilde), (g, g)]
for f1, f2 in pairs:
    s = oplus(f1, f2, refs)
    w1, w2, ws = winding_degree(f1), winding_degree(f2), winding_degree(s)
    print(f"  {w1:+d} and {w2:+d} combine to {ws:+d}: {'ok' if ws == w1 + w2 else 'MISMATCH'}")

print()
print("The transpose action fails additivity, which is why it is excluded:")
wrong = winding_degree(H)
print(f"  transpose action on the reference: {wrong:+d}, "
      f"but the summands realize {winding_degree(row2):+d} and {winding_degree(pi):+d}")
