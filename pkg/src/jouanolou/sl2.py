"""The degree-0 group: pointed determinant-1 completions and their action.

A unimodular row completes to a 2x2 matrix over R of determinant 1 that is
the identity at the basepoint; the group operation on degree-0 maps is
matrix multiplication of completions followed by extracting the first
column.  Such a matrix also acts on higher-degree maps through its action
on section pairs, and that action transports generation certificates
exactly (no new ideal membership runs are needed).
"""

from __future__ import annotations

from .errors import NoCertificate, ZeroParameter
from .field import FieldElem
from .jring import RingElement
from .morphism import JMap

Entries = tuple[tuple, tuple]


class PointedSL2:
    """A matrix ((A, -V), (B, U)) over R with AU + BV = 1 that evaluates to
    the identity at the basepoint."""

    __slots__ = ("entries",)

    def __init__(self, entries: Entries):
        (e00, e01), (e10, e11) = entries
        ctx = e00.ctx
        det = e00 * e11 - e01 * e10
        if det != RingElement.one(ctx):
            raise ValueError("matrix determinant is not 1")
        bp = [e.eval_basepoint() for e in (e00, e01, e10, e11)]
        if not (bp[0] == ctx.one and bp[1].is_zero and bp[2].is_zero and bp[3] == ctx.one):
            raise ValueError("matrix is not the identity at the basepoint")
        self.entries = entries

    @property
    def ctx(self):
        return self.entries[0][0].ctx

    @property
    def row_A(self) -> RingElement:
        return self.entries[0][0]

    @property
    def row_B(self) -> RingElement:
        return self.entries[1][0]

    @property
    def U(self) -> RingElement:
        return self.entries[1][1]

    @property
    def V(self) -> RingElement:
        return -self.entries[0][1]

    def first_column(self) -> tuple[RingElement, RingElement]:
        return (self.entries[0][0], self.entries[1][0])

    def row_map(self) -> JMap:
        """The degree-0 map of the first column, certified by this matrix."""
        return JMap.from_row(self.row_A, self.row_B, (self.U, self.V))

    def __matmul__(self, other: "PointedSL2") -> "PointedSL2":
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        return PointedSL2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def inverse(self) -> "PointedSL2":
        (a, b), (c, d) = self.entries
        return PointedSL2(((d, -b), (-c, a)))

    def transpose(self) -> "PointedSL2":
        (a, b), (c, d) = self.entries
        return PointedSL2(((a, c), (b, d)))

    def __eq__(self, other):
        return isinstance(other, PointedSL2) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        from .textio import sl2_str

        return sl2_str(self)


def identity_matrix(ctx) -> PointedSL2:
    one, zero = RingElement.one(ctx), RingElement.zero(ctx)
    return PointedSL2(((one, zero), (zero, one)))


def m_uv(u: FieldElem, v: FieldElem) -> PointedSL2:
    """The printed completion of g_uv:
    ((x + (v/u)w, ((u-v)/(uv)) z), ((u-v) y, x + (u/v) w))."""
    if u.is_zero or v.is_zero:
        raise ZeroParameter("matrix parameters must be units")
    ctx = u.ctx
    x, y, z, w = (
        RingElement.gen_x(ctx),
        RingElement.gen_y(ctx),
        RingElement.gen_z(ctx),
        RingElement.gen_w(ctx),
    )
    return PointedSL2(
        (
            (x + w.scale(v / u), z.scale((u - v) / (u * v))),
            (y.scale(u - v), x + w.scale(u / v)),
        )
    )


def complete_pointed(row: JMap) -> PointedSL2:
    """Pointed completion of a pointed unimodular row.

    Starting from any Bezout lift ((A, -V1), (B, U1)), replacing
    U2 = U1 + B*d and V2 = V1 - A*d with d = V1(basepoint) makes the lift
    the identity at the basepoint.
    """
    if row.degree != 0:
        raise ValueError("only degree-0 maps complete to matrices")
    if row.cert is None:
        raise NoCertificate("row carries no Bezout certificate")
    A, B = row.row
    U1, V1 = row.cert
    d = V1.eval_basepoint()
    U2 = U1 + B.scale(d)
    V2 = V1 - A.scale(d)
    return PointedSL2(((A, -V2), (B, U2)))


def row_sum(r1: JMap, r2: JMap) -> JMap:
    """The group operation on degree-0 maps: multiply pointed completions and
    take the first column (the product matrix certifies the result)."""
    return (complete_pointed(r1) @ complete_pointed(r2)).row_map()


def row_inverse(r: JMap) -> JMap:
    """The inverse class: first column (U, -B) of the inverted completion."""
    return complete_pointed(r).inverse().row_map()


def transform_quadruple(entries: Entries, quad):
    """Left matrix action on a coefficient quadruple (generic over R, R[T])."""
    (e00, e01), (e10, e11) = entries
    a0, a1, b0, b1 = quad
    return (
        e00 * a0 + e01 * b0,
        e00 * a1 + e01 * b1,
        e10 * a0 + e11 * b0,
        e10 * a1 + e11 * b1,
    )


def transform_cert(entries: Entries, cert):
    """Transport a four-cofactor generation certificate through the action.

    The generation columns transform by the same matrix, so the inverse
    (adjugate, det = 1) pulls the old certificate to the new columns.
    """
    (e00, e01), (e10, e11) = entries
    Ux, Vx, Uw, Vw = cert
    return (
        Ux * e11 - Vx * e10,
        Vx * e00 - Ux * e01,
        Uw * e11 - Vw * e10,
        Vw * e00 - Uw * e01,
    )


def _transform_homog(entries: Entries, homog):
    if homog is None:
        return None
    (e00, e01), (e10, e11) = entries
    F0, F1 = homog
    new0 = [e00 * a + e01 * b for a, b in zip(F0, F1)]
    new1 = [e10 * a + e11 * b for a, b in zip(F0, F1)]
    return (new0, new1)


def act(M: PointedSL2, f: JMap) -> JMap:
    """The left action on a nonzero-degree map: sections become
    (A s0 - V s1, B s0 + U s1).  Degree, generation, and pointedness are
    preserved; the certificate and homogeneous lift transport exactly."""
    if f.degree == 0:
        raise ValueError("degree-0 maps combine by row_sum, not the action")
    quad = transform_quadruple(M.entries, f.coeffs)
    cert = transform_cert(M.entries, f.cert)
    return JMap.from_sections(f.degree, quad, cert, homog=_transform_homog(M.entries, f.homog))


def boxplus_act(M: PointedSL2, f: JMap) -> JMap:
    """The transpose variant of the action (kept only as the documented
    counterexample: it is not additive on realized degrees)."""
    if f.degree == 0:
        raise ValueError("degree-0 maps combine by row_sum, not the action")
    Mt = M.transpose()
    quad = transform_quadruple(Mt.entries, f.coeffs)
    cert = transform_cert(Mt.entries, f.cert)
    return JMap.from_sections(f.degree, quad, cert, homog=_transform_homog(Mt.entries, f.homog))
