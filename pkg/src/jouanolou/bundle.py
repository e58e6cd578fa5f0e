"""Rank-one bundles on the device: sections, idempotent presentations, and
the Sylvester-resultant toolkit.

The degree-n bundle P_n is spanned inside R^2 by the columns [x^n; z^n] and
[y^n; w^n]; its negative twin Q_n by [x^n; y^n] and [z^n; w^n].  A section
is canonically a coefficient pair against those two spanning columns,
while the "expanded" pair of ring elements is the actual element of R^2,
which is the canonical identity of a section (coefficient pairs are not
unique, e.g. y*[x; z] = x*[y; w]).

Mixed spanning columns [x^(n-i) y^i; z^(n-i) w^i] reduce to the two
canonical ones by multiplying with (x+w)^n = 1 and splitting the binomial
expansion; ``normalize_section`` applies that rewrite.

The resultant machinery works with univariate polynomials over R given as
ascending coefficient lists and is generic enough to run over R[T] as
well; determinants use subset dynamic programming, avoiding any division.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import PreconditionViolated, ResultantNotUnit
from .field import FieldCtx, FieldElem
from .jring import RingElement

_REWRITE_CACHE: dict = {}


def _monomial(ctx, xe: int, ye: int, ze: int, we: int, coeff: int) -> RingElement:
    m = RingElement.from_raw(ctx, ctx.rfrom_int(coeff))
    if xe:
        m = m * RingElement.gen_x(ctx) ** xe
    if ye:
        m = m * RingElement.gen_y(ctx) ** ye
    if ze:
        m = m * RingElement.gen_z(ctx) ** ze
    if we:
        m = m * RingElement.gen_w(ctx) ** we
    return m


def rewrite_constants(ctx: FieldCtx, n: int, kind: str = "P") -> list[tuple[RingElement, RingElement]]:
    """For each mixed column index i, the pair (p_i, q_i) in R with
    mixed_i = p_i*[x^n; z^n] + q_i*[y^n; w^n] (Q-case transported by tau).

    The boundary i+d = n is split so that the pure top column normalizes
    to the coefficient pair (0, 1).
    """
    key = (ctx.p, n, kind)
    if key in _REWRITE_CACHE:
        return _REWRITE_CACHE[key]
    out = []
    for i in range(n + 1):
        if i == n:
            p = RingElement.zero(ctx)
            q = RingElement.one(ctx)
        else:
            p = RingElement.zero(ctx)
            for d in range(0, n - i + 1):
                p = p + _monomial(ctx, n - i - d, i, 0, d, comb(n, d))
            q = RingElement.zero(ctx)
            for d in range(n - i + 1, n + 1):
                q = q + _monomial(ctx, n - d, 0, n - i, d + i - n, comb(n, d))
        if kind == "Q":
            p, q = p.tau(), q.tau()
        out.append((p, q))
    _REWRITE_CACHE[key] = out
    return out


def normalize_pair(n: int, vector, kind: str, ctx: FieldCtx):
    """Reduce a mixed-column coefficient vector (length n+1) to the canonical
    coefficient pair.  Generic over the coefficient ring: entries may be
    RingElement or RingPolyT."""
    if len(vector) != n + 1:
        raise ValueError(f"coefficient vector must have length {n + 1}")
    consts = rewrite_constants(ctx, n, kind)
    zero = vector[0] - vector[0]
    c0, c1 = zero, zero
    for ci, (p, q) in zip(vector, consts):
        c0 = c0 + ci * p
        c1 = c1 + ci * q
    return c0, c1


class Section:
    """A global section of P_n, Q_n, or the free rank-one module O."""

    __slots__ = ("kind", "n", "coeffs")

    def __init__(self, kind: str, n: int, coeffs: tuple[RingElement, ...]):
        if kind not in ("P", "Q", "O"):
            raise ValueError(f"unknown bundle kind {kind!r}")
        if kind == "O":
            if n != 0 or len(coeffs) != 1:
                raise ValueError("O sections carry a single ring element")
        else:
            if n < 1 or len(coeffs) != 2:
                raise ValueError("P/Q sections need n >= 1 and a coefficient pair")
        self.kind = kind
        self.n = n
        self.coeffs = coeffs

    @property
    def ctx(self) -> FieldCtx:
        return self.coeffs[0].ctx

    @property
    def expanded(self) -> tuple[RingElement, RingElement]:
        """The element of R^2 the section denotes; this is its identity."""
        ctx = self.ctx
        if self.kind == "O":
            return (self.coeffs[0], self.coeffs[0])
        c0, c1 = self.coeffs
        xn = RingElement.gen_x(ctx) ** self.n
        yn = RingElement.gen_y(ctx) ** self.n
        zn = RingElement.gen_z(ctx) ** self.n
        wn = RingElement.gen_w(ctx) ** self.n
        if self.kind == "P":
            return (c0 * xn + c1 * yn, c0 * zn + c1 * wn)
        return (c0 * xn + c1 * zn, c0 * yn + c1 * wn)

    def __eq__(self, other):
        return (
            isinstance(other, Section)
            and self.kind == other.kind
            and self.n == other.n
            and self.expanded == other.expanded
        )

    def __hash__(self):
        return hash((self.kind, self.n, self.expanded))

    def __add__(self, other: "Section") -> "Section":
        self._compat(other)
        return Section(self.kind, self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Section") -> "Section":
        self._compat(other)
        return Section(self.kind, self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Section(self.kind, self.n, tuple(-c for c in self.coeffs))

    def scale(self, c) -> "Section":
        if isinstance(c, (FieldElem, int)):
            cf = self.ctx.elem(c) if isinstance(c, int) else c
            return Section(self.kind, self.n, tuple(r.scale(cf) for r in self.coeffs))
        return Section(self.kind, self.n, tuple(r * c for r in self.coeffs))

    def _compat(self, other):
        if self.kind != other.kind or self.n != other.n:
            raise ValueError("sections live in different bundles")

    def tau_transport(self) -> "Section":
        """Entrywise tau turns a P_n section into a Q_n section and back."""
        if self.kind == "O":
            return Section("O", 0, (self.coeffs[0].tau(),))
        other = "Q" if self.kind == "P" else "P"
        return Section(other, self.n, tuple(c.tau() for c in self.coeffs))

    def __repr__(self):
        from .textio import ring_str

        inner = ", ".join(ring_str(c) for c in self.coeffs)
        return f"Section({self.kind}{self.n}; {inner})"


def normalize_section(n: int, vector, kind: str = "P", ctx: FieldCtx | None = None) -> Section:
    """Canonical Section for sum(vector[i] * mixed column i) in P_n or Q_n."""
    if ctx is None:
        ctx = vector[0].ctx
    c0, c1 = normalize_pair(n, vector, kind, ctx)
    return Section(kind, n, (c0, c1))


def expand_mixed(n: int, vector, kind: str, ctx: FieldCtx):
    """Brute-force expansion of a mixed-column combination in R^2 (oracle)."""
    x, y = RingElement.gen_x(ctx), RingElement.gen_y(ctx)
    z, w = RingElement.gen_z(ctx), RingElement.gen_w(ctx)
    first = vector[0] - vector[0]
    second = first
    for i, c in enumerate(vector):
        if kind == "P":
            first = first + c * (x ** (n - i) * y**i)
            second = second + c * (z ** (n - i) * w**i)
        else:
            first = first + c * (x ** (n - i) * z**i)
            second = second + c * (y ** (n - i) * w**i)
    return first, second


def mu_product(s: Section, t: Section) -> Section:
    """Componentwise product of sections; lands in degree m+n, renormalized."""
    if s.kind == "O":
        return t.scale(s.coeffs[0])
    if t.kind == "O":
        return s.scale(t.coeffs[0])
    if s.kind != t.kind:
        raise ValueError("componentwise products stay within one bundle family")
    return normalize_section(
        s.n + t.n,
        mu_vector(s.coeffs, s.n, t.coeffs, t.n, RingElement.zero(s.ctx)),
        s.kind,
        s.ctx,
    )


def mu_vector(c: tuple, m: int, d: tuple, n: int, zero):
    """Mixed-column vector of the product of two coefficient pairs (generic)."""
    out = [zero] * (m + n + 1)
    out[0] = out[0] + c[0] * d[0]
    out[n] = out[n] + c[0] * d[1]
    out[m] = out[m] + c[1] * d[0]
    out[m + n] = out[m + n] + c[1] * d[1]
    return out


@dataclass
class IdempotentPair:
    """The degree-n idempotent presentation: x^n*A + w^n*B = 1 and the two
    rank-one idempotent matrices with images P_n and Q_n."""

    n: int
    A: RingElement
    B: RingElement
    Mn: tuple
    Mn_prime: tuple


def unit_split(ctx: FieldCtx, m: int) -> tuple[RingElement, RingElement]:
    """A, B in R with x^m*A + w^m*B = 1 (split of (x+w)^(2m-1) = 1)."""
    A = RingElement.zero(ctx)
    for k in range(0, m):
        A = A + _monomial(ctx, m - 1 - k, 0, 0, k, comb(2 * m - 1, k))
    B = RingElement.zero(ctx)
    for k in range(m, 2 * m):
        B = B + _monomial(ctx, 2 * m - 1 - k, 0, 0, k - m, comb(2 * m - 1, k))
    return A, B


def mn_matrices(ctx: FieldCtx, n: int) -> IdempotentPair:
    if n < 1:
        raise ValueError("n must be >= 1")
    A, B = unit_split(ctx, n)
    xn = RingElement.gen_x(ctx) ** n
    yn = RingElement.gen_y(ctx) ** n
    zn = RingElement.gen_z(ctx) ** n
    wn = RingElement.gen_w(ctx) ** n
    Mn = ((xn * A, yn * B), (zn * A, wn * B))
    Mn_prime = ((xn * A, zn * B), (yn * A, wn * B))
    return IdempotentPair(n, A, B, Mn, Mn_prime)


# ---------------------------------------------------------------------------
# homogeneous pairs, sigma, resultants


@dataclass
class HomogPair:
    """A pair of degree-n homogeneous polynomials over R in two variables,
    stored as ascending coefficient lists against (alpha^i * beta^(n-i))."""

    n: int
    coeffs0: list[RingElement]
    coeffs1: list[RingElement]

    def __post_init__(self):
        if len(self.coeffs0) != self.n + 1 or len(self.coeffs1) != self.n + 1:
            raise ValueError("homogeneous coefficient lists must have length n+1")


def sigma(h: HomogPair) -> tuple[Section, Section]:
    """Substitute alpha^i beta^(n-i) -> [x^i y^(n-i); z^i w^(n-i)] and normalize."""
    ctx = h.coeffs0[0].ctx
    v0 = list(reversed(h.coeffs0))  # mixed index = y-exponent = n - i
    v1 = list(reversed(h.coeffs1))
    return normalize_section(h.n, v0, "P", ctx), normalize_section(h.n, v1, "P", ctx)


def resultant(h: HomogPair) -> RingElement:
    """det of the 2n x 2n Sylvester matrix of the dehomogenized pair."""
    return resultant_univ(h.coeffs0, h.coeffs1, h.n, h.n)


def sylvester_matrix(A: list, B: list, m: int, n: int, zero):
    """Sylvester matrix for ascending coefficient lists with degree bounds
    (m, n); columns are X^(m+n-1) .. X^0, first n rows shift A, last m shift B."""

    def coef(lst, i):
        return lst[i] if 0 <= i < len(lst) else zero

    size = m + n
    rows = []
    for r in range(n):
        rows.append([coef(A, m - c + r) for c in range(size)])
    for r in range(m):
        rows.append([coef(B, n - c + r) for c in range(size)])
    return rows


def det_subset(rows, zero):
    """Exact determinant by expansion along rows with subset memoization.

    Needs only +, -, * of the entries, so it runs over R, R[T], or k.
    """
    size = len(rows)
    if size == 0:
        raise ValueError("empty matrix has no well-defined determinant here")
    full = (1 << size) - 1
    minors: dict[int, object] = {}
    for mask in sorted(range(1, full + 1), key=lambda m: m.bit_count()):
        k = mask.bit_count()
        row = rows[size - k]
        acc = None
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            entry = row[low.bit_length() - 1]
            if not entry.is_zero:
                term = entry if k == 1 else entry * minors[mask ^ low]
                if sign < 0:
                    term = -term
                acc = term if acc is None else acc + term
            sign = -sign
        minors[mask] = zero if acc is None else acc
    return minors[full]


def _trim(coeffs: list) -> list:
    out = list(coeffs)
    while out and _is_zero(out[-1]):
        out.pop()
    return out


def _is_zero(e) -> bool:
    z = e - e
    return e == z


def resultant_univ(A: list, B: list, m: int | None = None, n: int | None = None):
    """Resultant of univariate polynomials with explicit degree bounds.

    Default bounds are the actual degrees.  The empty 0x0 case returns 1.
    """
    At, Bt = _trim(A), _trim(B)
    if m is None:
        m = len(At) - 1 if At else 0
    if n is None:
        n = len(Bt) - 1 if Bt else 0
    probe = next(iter(At or Bt or A or B), None)
    if probe is None:
        raise ValueError("resultant of two empty coefficient lists")
    zero = probe - probe
    if m + n == 0:
        return _one_like(probe)
    rows = sylvester_matrix(A, B, m, n, zero)
    return det_subset(rows, zero)


def _one_like(e):
    from .jring import RingElement as RE, RingPolyT as RPT

    if isinstance(e, RE):
        return RE.one(e.ctx)
    if isinstance(e, RPT):
        return RPT.one(e.ctx)
    if isinstance(e, FieldElem):
        return e.ctx.one
    raise TypeError(f"no unit for {type(e)}")


def unit_scalar(e) -> FieldElem | None:
    """The field constant an element equals, if it is a nonzero constant."""
    from .jring import RingElement as RE, RingPolyT as RPT

    if isinstance(e, RPT):
        if len(e.coeffs) > 1:
            return None
        e = e.at0()
    if isinstance(e, RE):
        if not e.is_constant():
            return None
        v = e.constant_value()
        return v if not v.is_zero else None
    if isinstance(e, FieldElem):
        return e if not e.is_zero else None
    return None


def bezout_from_unit_resultant(A: list, B: list, m: int | None = None, n: int | None = None):
    """Solve A*U + B*V = 1 given that res(A, B) at the chosen degree bounds
    is a unit of R.

    Works over R or R[T].  The Sylvester system is solved by Cramer's rule;
    every determinant is exact, and the unit resultant is the only division.
    Returns (U, V) as ascending coefficient lists with deg U < n and
    deg V < m (bounds default to the actual degrees).
    """
    At, Bt = _trim(A), _trim(B)
    if not At and not Bt:
        raise ResultantNotUnit("both polynomials are zero")
    if m is None:
        m = len(At) - 1 if At else 0
    if n is None:
        n = len(Bt) - 1 if Bt else 0
    if m == 0 and n == 0:
        u = unit_scalar(At[0]) if At else None
        if u is not None:
            return [_one_like(At[0]).scale(u.inverse())], []
        u = unit_scalar(Bt[0]) if Bt else None
        if u is None:
            raise ResultantNotUnit("resultant is not a unit")
        return [], [_one_like(Bt[0]).scale(u.inverse())]
    if m == 0:
        u = unit_scalar(At[0]) if At else None
        if u is None:
            raise ResultantNotUnit("resultant is not a unit")
        return [_one_like(At[0]).scale(u.inverse())], []
    if n == 0:
        u = unit_scalar(Bt[0]) if Bt else None
        if u is None:
            raise ResultantNotUnit("resultant is not a unit")
        return [], [_one_like(Bt[0]).scale(u.inverse())]
    zero = (At or Bt)[0] - (At or Bt)[0]
    rows = sylvester_matrix(A, B, m, n, zero)
    res = det_subset(rows, zero)
    u = unit_scalar(res)
    if u is None:
        raise ResultantNotUnit("resultant is not a unit of R")
    size = m + n
    inv = u.inverse()
    lam = []
    for i in range(size):
        replaced = [rows[r] if r != i else _unit_row(size, size - 1, zero, _one_like(res)) for r in range(size)]
        lam.append(det_subset(replaced, zero).scale(inv))
    # lam[r] (r < n) multiplies X^(n-1-r) * A; lam[n + r'] multiplies X^(m-1-r') * B
    U = [lam[n - 1 - e] for e in range(n)]
    V = [lam[n + m - 1 - e] for e in range(m)]
    return U, V


def _unit_row(size, pos, zero, one):
    return [one if c == pos else zero for c in range(size)]


def poly_mul(A: list, B: list, zero):
    if not A or not B:
        return []
    out = [zero] * (len(A) + len(B) - 1)
    for i, a in enumerate(A):
        for j, b in enumerate(B):
            out[i + j] = out[i + j] + a * b
    return out


def poly_add(A: list, B: list, zero):
    n = max(len(A), len(B))
    return [(A[i] if i < len(A) else zero) + (B[i] if i < len(B) else zero) for i in range(n)]


def poly_scale(A: list, c):
    return [a.scale(c) if hasattr(a, "scale") else a * c for a in A]


def generation_cofactors(n: int, L0: list, L1: list):
    """Four global cofactors certifying that the sections sigma(S0), sigma(S1)
    of a degree-n homogeneous pair with unit resultant generate.

    Bezout for the dehomogenized pair gives S0*U + S1*V = beta^(2n-1) after
    homogenizing; the reversed pair (unit resultant by the reversal fact)
    gives the alpha power; the x^m/w^m unit split recombines them.  Returns
    (Ux, Vx, Uw, Vw) against the columns (S0(x,y), S1(x,y), S0(z,w), S1(z,w)).
    Generic over R and R[T] coefficient lists.
    """
    from .jring import RingElement

    if len(L0) != n + 1 or len(L1) != n + 1:
        raise ValueError("homogeneous coefficient lists must have length n+1")
    probe = L0[0]
    zero = probe - probe
    res = resultant_univ(L0, L1, n, n)
    if unit_scalar(res) is None:
        raise ResultantNotUnit("pair does not have unit resultant")
    U, V = bezout_from_unit_resultant(L0, L1, n, n)
    L0r, L1r = list(reversed(L0)), list(reversed(L1))
    res_r = resultant_univ(L0r, L1r, n, n)
    if unit_scalar(res_r) is None:
        raise ResultantNotUnit("reversed pair does not have unit resultant")
    Ur, Vr = bezout_from_unit_resultant(L0r, L1r, n, n)

    def pad(lst):
        return list(lst) + [zero] * (n - len(lst))

    def homog(coeffs, first, second):
        acc = None
        for i, c in enumerate(coeffs):
            term = c * (first**i * second ** (n - 1 - i))
            acc = term if acc is None else acc + term
        return acc

    ctx = probe.ctx
    xg, yg = RingElement.gen_x(ctx), RingElement.gen_y(ctx)
    zg, wg = RingElement.gen_z(ctx), RingElement.gen_w(ctx)
    E, F = unit_split(ctx, 2 * n - 1)
    return (
        homog(pad(Ur), yg, xg) * E,
        homog(pad(Vr), yg, xg) * E,
        homog(pad(U), zg, wg) * F,
        homog(pad(V), zg, wg) * F,
    )


@dataclass
class ResultantReport:
    """Exact evaluation of both sides of each resultant identity."""

    bezout_ok: bool
    reversal_lhs: RingElement
    reversal_rhs: RingElement
    shift_lhs: RingElement
    shift_rhs: RingElement
    conservation_lhs: RingElement
    conservation_rhs: RingElement

    @property
    def all_hold(self) -> bool:
        return (
            self.bezout_ok
            and self.reversal_lhs == self.reversal_rhs
            and self.shift_lhs == self.shift_rhs
            and self.conservation_lhs == self.conservation_rhs
        )


def resultant_identities(A: list, B: list, C: list, u: FieldElem) -> ResultantReport:
    """Check the four resultant facts on a concrete triple (A, B, C) and unit u.

    Preconditions (PreconditionViolated otherwise): res(A, B) at the shared
    bound is a unit; deg(BC) <= deg(A) for the shift identity; A monic and
    u != 0 for the conservation identity.
    """
    ctx = u.ctx
    if u.is_zero:
        raise PreconditionViolated("u must be a unit")
    At, Bt = _trim(A), _trim(B)
    if not At:
        raise PreconditionViolated("A must be nonzero")
    zero = At[0] - At[0]
    one = _one_like(At[0])
    n_bound = max(len(At) - 1, len(Bt) - 1 if Bt else 0)
    res_nn = resultant_univ(A, B, n_bound, n_bound)
    if unit_scalar(res_nn) is None:
        raise PreconditionViolated("res(A, B) must be a unit")

    # Bezout extraction re-verifies A*U + B*V = 1
    U, V = bezout_from_unit_resultant(A, B)
    combo = poly_add(poly_mul(A, U, zero), poly_mul(B, V, zero), zero)
    bezout_ok = _trim(combo) == [one]

    # reversal at the shared bound (trim first: reversal is bound-sensitive)
    def pad(lst, k):
        return list(lst) + [zero] * (k - len(lst))

    Ar = list(reversed(pad(At, n_bound + 1)))
    Br = list(reversed(pad(Bt, n_bound + 1)))
    reversal_lhs = resultant_univ(Ar, Br, n_bound, n_bound)
    reversal_rhs = res_nn if n_bound % 2 == 0 else -res_nn

    # shift: res(A + BC, B) = res(A, B) at bounds (deg A, deg B)
    m = len(At) - 1
    nb = len(Bt) - 1 if Bt else 0
    BC = poly_mul(B, C, zero)
    if len(_trim(BC)) - 1 > m:
        raise PreconditionViolated("shift identity needs deg(BC) <= deg(A)")
    shift_lhs = resultant_univ(poly_add(A, BC, zero), B, m, nb)
    shift_rhs = resultant_univ(A, B, m, nb)

    # conservation: res(A*X - (1/u)B, u*A) = (-1)^deg(A) * u * res(A, B) at
    # bounds (deg(A)+1, deg(A)); for odd deg(A) this is the -u*res(A, B) form
    lead = unit_scalar(At[-1])
    if lead is None or lead != ctx.one:
        raise PreconditionViolated("conservation identity needs monic A")
    if Bt and len(Bt) - 1 > m:
        raise PreconditionViolated("conservation identity needs deg(B) <= deg(A)")
    AX = [zero] + list(A)  # A * X
    left_first = poly_add(AX, poly_scale(B, -(u.inverse())), zero)
    conservation_lhs = resultant_univ(left_first, poly_scale(A, u), m + 1, m)
    signed = resultant_univ(A, B, m, m)
    if m % 2 == 1:
        signed = -signed
    conservation_rhs = signed.scale(u)
    return ResultantReport(
        bezout_ok,
        reversal_lhs,
        reversal_rhs,
        shift_lhs,
        shift_rhs,
        conservation_lhs,
        conservation_rhs,
    )
