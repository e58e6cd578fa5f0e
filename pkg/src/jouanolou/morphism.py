"""Pointed morphisms from the device to the projective line, as exact data.

A map of degree n > 0 is a pair of generating sections of P_n recorded by
the coefficient quadruple (a0, a1; b0, b1) against the two spanning
columns; degree n < 0 uses Q_|n| the same way.  A map of degree 0 is a
unimodular row (A, B).  Construction validates everything:

* generation: 1 lies in the four-column ideal (decided by the groebner
  engine, which returns cofactors that are kept as a certificate),
* pointedness: the second section vanishes at the basepoint,
* normalization: data is rescaled so the first section is 1 there.

Equality of maps is equality of degree and of normalized expanded
sections (coefficient pairs are non-unique, expanded pairs are not).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import groebner
from .bundle import HomogPair, Section, generation_cofactors, mu_product, sigma
from .errors import (
    NotGenerating,
    NotNormalizable,
    NotPointed,
    NotUnimodular,
    ResultantZero,
    ZeroParameter,
)
from .field import FieldCtx, FieldElem
from .jring import RingElement
from .polys import MPoly

GB_VARS = ("x", "y", "z")
GB_VARS_T = ("x", "y", "z", "T")


def generation_columns(kind: str, n: int, a0, a1, b0, b1):
    """The four ring elements whose ideal must be all of R for the section
    pair to generate.  Generic over R and R[T] coefficients."""
    ctx = a0.ctx
    xn = RingElement.gen_x(ctx) ** n
    yn = RingElement.gen_y(ctx) ** n
    zn = RingElement.gen_z(ctx) ** n
    wn = RingElement.gen_w(ctx) ** n
    if kind == "P":
        return (a0 * xn + a1 * yn, b0 * xn + b1 * yn, a0 * zn + a1 * wn, b0 * zn + b1 * wn)
    return (a0 * xn + a1 * zn, b0 * xn + b1 * zn, a0 * yn + a1 * wn, b0 * yn + b1 * wn)


def cert_expands_to_one(cert, columns) -> bool:
    acc = None
    for c, g in zip(cert, columns):
        term = c * g
        acc = term if acc is None else acc + term
    one = RingElement.one(columns[0].ctx)
    if hasattr(acc, "coeffs"):  # R[T]
        return len(acc.coeffs) == 1 and acc.coeffs[0] == one
    return acc == one


def _groebner_membership(elements, ctx, budget=None):
    """1 in the ideal spanned by the given ring elements (relation adjoined)?
    Returns RingElement cofactors or None."""
    from .jring import mpoly_to_ring

    gens = [e.to_mpoly(GB_VARS) for e in elements]
    target = MPoly.const(ctx, GB_VARS, ctx.rone)
    cert = groebner.express_in_ideal(
        groebner.IdealProblem(gens, target, include_relation=True), budget
    )
    if cert is None:
        return None
    return [mpoly_to_ring(c) for c in cert.generator_cofactors]


class JMap:
    """A pointed morphism to the projective line.

    Nonzero degree: bundle kind P/Q, normalized coefficient quadruple, and a
    four-cofactor generation certificate.  Degree zero: a normalized
    unimodular row with a Bezout certificate.
    """

    __slots__ = ("degree", "kind", "coeffs", "row", "cert", "homog", "_expanded")

    def __init__(self, degree, kind, coeffs, row, cert, homog=None):
        self.degree = degree
        self.kind = kind
        self.coeffs = coeffs
        self.row = row
        self.cert = cert
        self.homog = homog
        self._expanded = None

    # constructors -----------------------------------------------------------
    @classmethod
    def from_sections(cls, degree: int, coeffs, cert, homog=None) -> "JMap":
        """Internal: build a nonzero-degree map from already-normalized data
        plus a generation certificate; re-verifies cheap invariants only."""
        if degree == 0:
            raise ValueError("degree 0 maps are rows; use from_row")
        kind = "P" if degree > 0 else "Q"
        a0, a1, b0, b1 = coeffs
        if not b0.eval_basepoint().is_zero:
            raise NotPointed("second section does not vanish at the basepoint")
        alpha = a0.eval_basepoint()
        if alpha.is_zero:
            raise NotNormalizable("first section vanishes at the basepoint")
        if alpha != alpha.ctx.one:
            inv = alpha.inverse()
            a0, a1, b0, b1 = (c.scale(inv) for c in coeffs)
            cert = tuple(c.scale(alpha) for c in cert)
            if homog is not None:
                homog = tuple([e.scale(inv) for e in lst] for lst in homog)
        cols = generation_columns(kind, abs(degree), a0, a1, b0, b1)
        if not cert_expands_to_one(cert, cols):
            raise NotGenerating("generation certificate does not expand to 1")
        out = cls(degree, kind, (a0, a1, b0, b1), None, tuple(cert), homog)
        if homog is not None and not out.homog_matches():
            raise ValueError("homogeneous lift does not expand to the sections")
        return out

    def homog_matches(self) -> bool:
        """Does the carried homogeneous lift expand to the stored sections?"""
        if self.homog is None or self.kind != "P":
            return self.homog is None
        from .homotopy import homog_eval  # local: avoids a module cycle

        ctx = self.ctx
        n = self.degree
        x, y = RingElement.gen_x(ctx), RingElement.gen_y(ctx)
        z, w = RingElement.gen_z(ctx), RingElement.gen_w(ctx)
        F0, F1 = self.homog
        got = (
            homog_eval(F0, n, x, y),
            homog_eval(F1, n, x, y),
            homog_eval(F0, n, z, w),
            homog_eval(F1, n, z, w),
        )
        return got == self.expanded

    def canonical_lift(self):
        """A homogeneous lift of the sections: the carried one if present,
        else a0*alpha^n + a1*beta^n per section."""
        if self.homog is not None:
            return self.homog
        zero = RingElement.zero(self.ctx)
        n = abs(self.degree)
        a0, a1, b0, b1 = self.coeffs
        return ([a1] + [zero] * (n - 1) + [a0], [b1] + [zero] * (n - 1) + [b0])

    @classmethod
    def from_row(cls, A: RingElement, B: RingElement, cert) -> "JMap":
        """Internal: build a degree-0 map from a pointed row plus a Bezout
        certificate (A*U + B*V = 1 after normalization)."""
        if not B.eval_basepoint().is_zero:
            raise NotPointed("row is not pointed")
        alpha = A.eval_basepoint()
        if alpha.is_zero:
            raise NotPointed("row evaluates to (0, 0) at the basepoint")
        U, V = cert
        if alpha != alpha.ctx.one:
            inv = alpha.inverse()
            A, B = A.scale(inv), B.scale(inv)
            U, V = U.scale(alpha), V.scale(alpha)
        if A * U + B * V != RingElement.one(A.ctx):
            raise NotUnimodular("Bezout certificate does not expand to 1")
        return cls(0, None, None, (A, B), (U, V))

    # data views -------------------------------------------------------------
    @property
    def ctx(self) -> FieldCtx:
        return (self.row or self.coeffs)[0].ctx

    @property
    def expanded(self):
        """(s0_x, s1_x, s0_w, s1_w): the sections as elements of R^2, ordered
        like the generation columns (first chart components first)."""
        if self.degree == 0:
            return self.row
        if self._expanded is None:
            self._expanded = generation_columns(self.kind, abs(self.degree), *self.coeffs)
        return self._expanded

    def sections(self) -> tuple[Section, Section]:
        if self.degree == 0:
            raise ValueError("degree-0 maps are rows, not section pairs")
        n = abs(self.degree)
        a0, a1, b0, b1 = self.coeffs
        return Section(self.kind, n, (a0, a1)), Section(self.kind, n, (b0, b1))

    def generation_cols(self):
        if self.degree == 0:
            return self.row
        return generation_columns(self.kind, abs(self.degree), *self.coeffs)

    def tau_transport(self) -> "JMap":
        """The same map composed with the y-z swap: degree flips sign."""
        if self.degree == 0:
            A, B = (r.tau() for r in self.row)
            return JMap.from_row(A, B, tuple(c.tau() for c in self.cert))
        coeffs = tuple(c.tau() for c in self.coeffs)
        cert = tuple(c.tau() for c in self.cert)
        return JMap.from_sections(-self.degree, coeffs, cert)

    def __eq__(self, other):
        if not isinstance(other, JMap):
            return NotImplemented
        return map_equal(self, other)

    def __hash__(self):
        return hash((self.degree, self.expanded))

    def __repr__(self):
        from .textio import map_str

        return map_str(self)


def degree(f: JMap) -> int:
    return f.degree


def map_equal(f: JMap, g: JMap) -> bool:
    """Equality of pointed morphisms: same degree, same normalized sections."""
    if f.degree != g.degree:
        return False
    return f.expanded == g.expanded


def make_map(n: int, a0: RingElement, a1, b0, b1, cert=None, homog=None) -> JMap:
    """Validate and normalize a section-pair map of nonzero degree n.

    Raises NotPointed / NotNormalizable / NotGenerating.  With no provided
    certificate the generation test runs the groebner engine and keeps its
    cofactors; a provided certificate is checked by exact expansion instead.
    """
    if n == 0:
        raise ValueError("degree 0 maps are built by make_row")
    if cert is not None:
        return JMap.from_sections(n, (a0, a1, b0, b1), cert, homog)
    kind = "P" if n > 0 else "Q"
    ctx = a0.ctx
    if not b0.eval_basepoint().is_zero:
        raise NotPointed("second section does not vanish at the basepoint")
    alpha = a0.eval_basepoint()
    if alpha.is_zero:
        raise NotNormalizable("first section vanishes at the basepoint")
    if alpha != ctx.one:
        inv = alpha.inverse()
        a0, a1, b0, b1 = (c.scale(inv) for c in (a0, a1, b0, b1))
        if homog is not None:
            homog = tuple([e.scale(inv) for e in lst] for lst in homog)
    cols = generation_columns(kind, abs(n), a0, a1, b0, b1)
    cofactors = _groebner_membership(cols, ctx)
    if cofactors is None:
        raise NotGenerating("sections do not generate the bundle")
    out = JMap(n, kind, (a0, a1, b0, b1), None, tuple(cofactors), homog)
    if homog is not None and not out.homog_matches():
        raise ValueError("homogeneous lift does not expand to the sections")
    return out


def make_row(A: RingElement, B: RingElement, cert=None) -> JMap:
    """Validate and normalize a degree-0 map given as a unimodular row."""
    ctx = A.ctx
    if not B.eval_basepoint().is_zero:
        raise NotPointed("row is not pointed")
    if cert is not None:
        return JMap.from_row(A, B, cert)
    cofactors = _groebner_membership([A, B], ctx)
    if cofactors is None:
        raise NotUnimodular("row does not generate the unit ideal")
    return JMap.from_row(A, B, tuple(cofactors))


def g_uv(u: FieldElem, v: FieldElem) -> JMap:
    """The degree-0 map with row (x + (v/u) w, (u - v) y), carrying the
    explicit determinant-1 completion as its certificate."""
    if u.is_zero or v.is_zero:
        raise ZeroParameter("g parameters must be units")
    ctx = u.ctx
    x, y, z, w = (
        RingElement.gen_x(ctx),
        RingElement.gen_y(ctx),
        RingElement.gen_z(ctx),
        RingElement.gen_w(ctx),
    )
    A = x + w.scale(v / u)
    B = y.scale(u - v)
    U = x + w.scale(u / v)
    V = z.scale((v - u) / (u * v))
    return make_row(A, B, cert=(U, V))


_NPI_CACHE: dict = {}


def n_pi(n: int, ctx: FieldCtx) -> JMap:
    """The reference map of degree n >= 1 built by the two-term recursion
    F_(k+1) = [x;z]*F_k - [y^2;w^2]*F_(k-1), with second section [y;w]*F_(k-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    key = (ctx.p, n)
    if key in _NPI_CACHE:
        return _NPI_CACHE[key]
    one = RingElement.one(ctx)
    zero = RingElement.zero(ctx)
    p1_x = Section("P", 1, (one, zero))  # [x; z]
    p1_y = Section("P", 1, (zero, one))  # [y; w]
    p2_y2 = Section("P", 2, (zero, one))  # [y^2; w^2]
    F_prev: Section = Section("O", 0, (one,))
    F_cur: Section = p1_x
    # homogeneous lift follows the same recursion: L0 -> X*L0 - L1, L1 -> beta*L0
    L0, L1 = [zero, one], [one, zero]
    for _ in range(n - 1):
        F_next = mu_product(p1_x, F_cur) - mu_product(p2_y2, F_prev)
        F_prev, F_cur = F_cur, F_next
        new0 = [-q for q in L1 + [zero]]
        for i, p in enumerate(L0):
            new0[i + 1] = new0[i + 1] + p
        L0, L1 = new0, list(L0) + [zero]
    s1 = mu_product(p1_y, F_prev) if n > 1 else p1_y
    cert = generation_cofactors(n, L0, L1)
    result = make_map(
        n, F_cur.coeffs[0], F_cur.coeffs[1], s1.coeffs[0], s1.coeffs[1],
        cert=cert, homog=(L0, L1),
    )
    _NPI_CACHE[key] = result
    return result


@dataclass
class RationalMapP1:
    """A pointed self-map of the projective line: monic numerator A of degree
    n and denominator B of degree < n, with nonzero resultant."""

    ctx: FieldCtx
    n: int
    a: list[FieldElem]  # a[0..n], a[n] == 1
    b: list[FieldElem]  # b[0..n-1]

    def __post_init__(self):
        if self.n < 1 or len(self.a) != self.n + 1 or len(self.b) != self.n:
            raise ValueError("need deg A = n >= 1 and deg B < n")
        if self.a[-1] != self.ctx.one:
            raise ValueError("numerator must be monic")
        if self.resultant().is_zero:
            raise ResultantZero("res(A, B) vanishes; the pair is not a morphism")

    def resultant(self) -> FieldElem:
        from .bundle import resultant_univ

        A = [RingElement.from_scalar(c) for c in self.a]
        B = [RingElement.from_scalar(c) for c in self.b]
        r = resultant_univ(A, B, self.n, self.n)
        return r.constant_value()


def pullback_rational(f: RationalMapP1) -> JMap:
    """Compose a rational self-map with the torsor projection: the degree-n
    map with sections sigma(A), sigma(B)."""
    ctx = f.ctx
    zero = RingElement.zero(ctx)
    c0 = [RingElement.from_scalar(c) for c in f.a]
    c1 = [RingElement.from_scalar(c) for c in f.b] + [zero]
    s0, s1 = sigma(HomogPair(f.n, c0, c1))
    cert = generation_cofactors(f.n, c0, c1)
    return make_map(
        f.n, s0.coeffs[0], s0.coeffs[1], s1.coeffs[0], s1.coeffs[1], cert=cert, homog=(c0, c1)
    )


def rational_xu(u: FieldElem) -> RationalMapP1:
    """The degree-1 rational map X/u."""
    if u.is_zero:
        raise ZeroParameter("u must be a unit")
    ctx = u.ctx
    return RationalMapP1(ctx, 1, [ctx.zero, ctx.one], [u])


def m_uv(u: FieldElem, v: FieldElem):
    """The explicit pointed determinant-1 completion of g_uv."""
    from .sl2 import m_uv as _m

    return _m(u, v)
