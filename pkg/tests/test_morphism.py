import random
from fractions import Fraction

import pytest

from jouanolou.errors import (
    NotGenerating,
    NotPointed,
    NotUnimodular,
    ResultantZero,
    ZeroParameter,
)
from jouanolou.field import Fp, QQ
from jouanolou.jring import RingElement
from jouanolou.morphism import (
    RationalMapP1,
    degree,
    g_uv,
    make_map,
    make_row,
    map_equal,
    n_pi,
    pullback_rational,
    rational_xu,
)
from jouanolou.textio import parse_ring


def R(s, ctx=QQ):
    return parse_ring(s, ctx)


ONE = RingElement.one(QQ)
ZERO = RingElement.zero(QQ)


def test_pi_is_valid():
    pi = make_map(1, ONE, ZERO, ZERO, ONE)
    assert pi.degree == 1 and pi.kind == "P"
    assert map_equal(pi, n_pi(1, QQ))


def test_pi_tilde_is_valid():
    tilde = make_map(-1, ONE, ZERO, ZERO, -ONE)
    assert tilde.degree == -1 and tilde.kind == "Q"
    assert tilde.expanded == (R("x"), R("-z"), R("y"), R("-w"))


def test_zero_second_section_rejected():
    with pytest.raises(NotGenerating):
        make_map(1, ONE, ZERO, ZERO, ZERO)


def test_unpointed_rejected():
    with pytest.raises(NotPointed):
        make_map(1, ONE, ZERO, ONE, ZERO)  # b0 = 1 at the basepoint


def test_make_row_examples():
    row = make_row(R("2*x - 1"), R("2*y"))
    assert row.degree == 0
    assert row.row == (R("2*x - 1"), R("2*y"))
    identity = make_row(ONE, ZERO)
    assert identity.row == (ONE, ZERO)
    with pytest.raises(NotUnimodular):
        make_row(R("y"), R("z"))


def test_row_normalization():
    # (2, 2y) rescales to (1, y)
    row = make_row(R("2"), R("2*y"))
    assert row.row == (ONE, R("y"))


def test_g_uv_examples():
    g = g_uv(QQ.one, QQ.elem(-1))
    assert g.row == (R("2*x - 1"), R("2*y"))
    assert g_uv(QQ.elem(3), QQ.elem(3)).row == (ONE, ZERO)
    with pytest.raises(ZeroParameter):
        g_uv(QQ.zero, QQ.one)


def test_g_uv_carries_unit_determinant_certificate():
    g = g_uv(QQ.elem(3), QQ.elem(2))
    A, B = g.row
    U, V = g.cert
    assert A * U + B * V == ONE


def test_g_u1_rows_distinct_as_data():
    units = [QQ.elem(v) for v in (2, 3, -1, Fraction(1, 2))]
    for i, u in enumerate(units):
        for v in units[i + 1 :]:
            assert not map_equal(g_uv(u, QQ.one), g_uv(v, QQ.one))


def test_n_pi_small_cases():
    pi2 = n_pi(2, QQ)
    assert pi2.expanded[0] == R("x^2 - y^2")
    assert pi2.expanded[2] == R("z^2 - w^2")
    assert pi2.expanded[1] == R("x*y")
    assert pi2.expanded[3] == R("z*w")
    pi3 = n_pi(3, QQ)  # construction validates generation
    assert pi3.degree == 3


def test_pullback_examples():
    for u in (QQ.elem(2), QQ.elem(Fraction(1, 2))):
        f = pullback_rational(rational_xu(u))
        expect = make_map(1, ONE, ZERO, ZERO, RingElement.from_scalar(u))
        assert map_equal(f, expect)
    assert map_equal(pullback_rational(rational_xu(QQ.one)), n_pi(1, QQ))
    f2 = pullback_rational(RationalMapP1(QQ, 2, [QQ.one, QQ.zero, QQ.one], [QQ.zero, QQ.one]))
    assert f2.degree == 2  # construction proves generation


def test_pullback_degree_matches():
    rng = random.Random(6)
    for _ in range(10):
        n = rng.randint(1, 3)
        a = [QQ.elem(rng.randint(-2, 2)) for _ in range(n)] + [QQ.one]
        b = [QQ.elem(rng.randint(-2, 2)) for _ in range(n)]
        if all(v.is_zero for v in b):
            b[0] = QQ.one
        try:
            f = RationalMapP1(QQ, n, a, b)
        except ResultantZero:
            continue
        assert degree(pullback_rational(f)) == n


def test_zero_resultant_rejected():
    with pytest.raises(ResultantZero):
        RationalMapP1(QQ, 1, [QQ.zero, QQ.one], [QQ.zero])  # X / 0


def test_map_equal_examples():
    pi = n_pi(1, QQ)
    assert map_equal(pi, make_map(1, ONE, ZERO, ZERO, ONE))
    tilde = make_map(-1, ONE, ZERO, ZERO, -ONE)
    assert not map_equal(pi, tilde)


def test_tau_transport_flips_degree():
    f = pullback_rational(rational_xu(QQ.elem(2)))
    t = f.tau_transport()
    assert t.degree == -1 and t.kind == "Q"
    assert t.tau_transport() == f


def test_scaled_data_is_same_map():
    two = QQ.elem(2)
    f = make_map(1, ONE.scale(two), ZERO, ZERO, ONE.scale(two))
    assert map_equal(f, n_pi(1, QQ))


@pytest.mark.parametrize("ctx", [QQ, Fp(7)])
def test_constructed_maps_are_normalized(ctx):
    rng = random.Random(8)
    for _ in range(8):
        n = rng.randint(1, 2)
        a = [ctx.elem(rng.randint(-2, 2)) for _ in range(n)] + [ctx.one]
        b = [ctx.elem(rng.randint(-2, 2)) for _ in range(n)]
        if all(v.is_zero for v in b):
            b[0] = ctx.one
        try:
            f = pullback_rational(RationalMapP1(ctx, n, a, b))
        except ResultantZero:
            continue
        assert f.coeffs[0].eval_basepoint() == ctx.one
        assert f.coeffs[2].eval_basepoint().is_zero
