"""Sparse multivariate polynomials over a field context.

Internal substrate for the Buchberger engine and for parsing: polynomials
live in a free commutative polynomial ring with a fixed ordered variable
tuple.  Coefficients are stored raw (Fraction or int) for speed; monomials
are exponent tuples.  The monomial order everywhere is degrevlex with the
variable tuple ordered from greatest to least.
"""

from __future__ import annotations

from .field import FieldCtx


def drl_key(exp: tuple[int, ...]):
    """Sort key realizing degrevlex: larger key = larger monomial."""
    return (sum(exp),) + tuple(-e for e in reversed(exp))


class MPoly:
    """A polynomial in the ring k[vars], vars a fixed name tuple."""

    __slots__ = ("ctx", "vars", "terms")

    def __init__(self, ctx: FieldCtx, vars: tuple[str, ...], terms: dict | None = None):
        self.ctx = ctx
        self.vars = vars
        self.terms = terms if terms is not None else {}

    # constructors ----------------------------------------------------------
    @classmethod
    def zero(cls, ctx, vars):
        return cls(ctx, vars)

    @classmethod
    def const(cls, ctx, vars, raw):
        p = cls(ctx, vars)
        if raw:
            p.terms[(0,) * len(vars)] = raw
        return p

    @classmethod
    def var(cls, ctx, vars, name, power: int = 1):
        i = vars.index(name)
        exp = tuple(power if j == i else 0 for j in range(len(vars)))
        return cls(ctx, vars, {exp: ctx.rone})

    def _check(self, other: "MPoly"):
        if self.ctx != other.ctx or self.vars != other.vars:
            raise ValueError("polynomials from different rings")

    # arithmetic -------------------------------------------------------------
    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        ctx = self.ctx
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = ctx.radd(terms.get(m, ctx.rzero), c)
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MPoly(ctx, self.vars, terms)

    def __sub__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        ctx = self.ctx
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = ctx.rsub(terms.get(m, ctx.rzero), c)
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MPoly(ctx, self.vars, terms)

    def __neg__(self) -> "MPoly":
        ctx = self.ctx
        return MPoly(ctx, self.vars, {m: ctx.rneg(c) for m, c in self.terms.items()})

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        ctx = self.ctx
        out: dict = {}
        mul, add = ctx.rmul, ctx.radd
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = mul(c1, c2)
                if m in out:
                    s = add(out[m], prod)
                    if s:
                        out[m] = s
                    else:
                        del out[m]
                elif prod:
                    out[m] = prod
        return MPoly(ctx, self.vars, out)

    def scale(self, raw) -> "MPoly":
        ctx = self.ctx
        if not raw:
            return MPoly(ctx, self.vars)
        return MPoly(ctx, self.vars, {m: ctx.rmul(c, raw) for m, c in self.terms.items()})

    def mul_term(self, mon: tuple[int, ...], raw) -> "MPoly":
        ctx = self.ctx
        if not raw:
            return MPoly(ctx, self.vars)
        return MPoly(
            ctx,
            self.vars,
            {tuple(a + b for a, b in zip(m, mon)): ctx.rmul(c, raw) for m, c in self.terms.items()},
        )

    def __pow__(self, e: int) -> "MPoly":
        out = MPoly.const(self.ctx, self.vars, self.ctx.rone)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # queries ---------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        zero_mon = (0,) * len(self.vars)
        return self.terms.get(zero_mon, self.ctx.rzero)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def leading(self) -> tuple[tuple[int, ...], object]:
        """Leading (monomial, raw coefficient) in degrevlex."""
        m = max(self.terms, key=drl_key)
        return m, self.terms[m]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: drl_key(mc[0]), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.ctx == other.ctx
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, self.vars, tuple(sorted(self.terms.items()))))

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((m[i] for m in self.terms), default=0)

    def coefficients_in(self, name: str) -> list["MPoly"]:
        """Split into coefficients of powers of one variable (that slot zeroed)."""
        i = self.vars.index(name)
        buckets: list[dict] = [dict() for _ in range(self.degree_in(name) + 1)]
        for m, c in self.terms.items():
            stripped = m[:i] + (0,) + m[i + 1 :]
            buckets[m[i]][stripped] = c
        return [MPoly(self.ctx, self.vars, b) for b in buckets]

    def substitute(self, values: dict[str, "MPoly"]) -> "MPoly":
        """Ring-homomorphic substitution; unnamed variables map to themselves."""
        ctx = self.ctx
        some = next(iter(values.values()))
        tvars = some.vars
        images = [
            values.get(name, MPoly.var(ctx, tvars, name) if name in tvars else None)
            for name in self.vars
        ]
        if any(im is None for im in images):
            raise ValueError("substitution must cover variables absent from the target ring")
        out = MPoly.zero(ctx, tvars)
        pow_cache: dict[tuple[int, int], MPoly] = {}
        for m, c in self.terms.items():
            term = MPoly.const(ctx, tvars, c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in pow_cache:
                        pow_cache[key] = images[i] ** e
                    term = term * pow_cache[key]
            out = out + term
        return out

    def __repr__(self):
        from .textio import mpoly_str

        return mpoly_str(self)
