from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnorclass.chow import (
    BlowupSeries,
    ChowClass,
    NonUnitError,
    SegreData,
    csm_of_linear_subspace,
    pushforward_series,
)


def classes(n):
    return st.lists(st.integers(-20, 20), min_size=n + 1, max_size=n + 1).map(lambda c: ChowClass(n, c))


def series(n):
    keys = st.tuples(st.integers(0, n), st.integers(0, n))
    return st.dictionaries(keys, st.integers(-9, 9), max_size=6).map(lambda t: BlowupSeries(n, t))


def test_hyperplane_powers():
    H = ChowClass.H(3)
    assert H**2 == ChowClass.linear(1, 3)
    assert H**3 == ChowClass.point(3)
    assert (H**4).is_zero
    assert H**0 == ChowClass.one(3)


def test_chern_class_of_projective_plane():
    c = (1 + ChowClass.H(2)) ** 3
    assert str(c) == "[P2] + 3[P1] + 3[P0]"
    assert c.integral() == 3


def test_inverse():
    n = 4
    u = 1 + ChowClass.H(n) * 3
    assert u * u.inverse() == ChowClass.one(n)
    assert u.inverse().codim_coeffs() == [1, -3, 9, -27, 81]
    assert (u**-2) * u**2 == ChowClass.one(n)
    assert (ChowClass.one(n) * 2).inverse().codim(0) == Fraction(1, 2)
    with pytest.raises(NonUnitError):
        ChowClass.H(n).inverse()


@given(classes(3), classes(3), classes(3))
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a * 1 == a


@given(classes(4))
def test_dual_is_involution(a):
    assert a.dual().dual() == a


@given(classes(3), classes(3))
def test_dual_is_multiplicative(a, b):
    # dual flips H to -H: a ring automorphism once rescaled by the ambient sign
    sign = ChowClass.one(3) * (-1) ** 3
    assert (a * b).dual() * sign == a.dual() * b.dual()


@given(classes(4))
def test_top_dimension_and_truncation(a):
    top = a.top_dimension()
    if top is None:
        assert a.is_zero
    else:
        assert a[top] != 0 and a.truncate_above(top) == a
        assert all(v == 0 for v in a.truncate_above(top - 1).coeffs[top:])


def test_multiplication_lowers_top_dimension():
    a = ChowClass(3, [1, 2, 3, 0])
    assert (a * ChowClass.H(3)).top_dimension() == 1


def test_printing():
    assert str(ChowClass(2, [-9, 3, 0])) == "3[P1] - 9[P0]"
    assert str(ChowClass(2, [0, 0, -1])) == "-[P2]"
    assert str(ChowClass.zero(2)) == "0"
    assert str(ChowClass(1, [Fraction(1, 2), 0])) == "1/2[P0]"


def test_json_round_trip():
    a = ChowClass(3, [4, 5, Fraction(-2, 3), 0])
    assert a.to_dict() == {"2": "-2/3", "1": "5", "0": "4"}
    assert ChowClass.from_json(3, a.to_json()) == a
    with pytest.raises(ValueError):
        ChowClass.from_dict(3, {"0": 1.5})
    with pytest.raises(ValueError):
        ChowClass.from_dict(2, {"3": 1})


def test_mismatched_ambient():
    with pytest.raises(ValueError):
        ChowClass.H(2) + ChowClass.H(3)


def test_immutable():
    with pytest.raises(AttributeError):
        ChowClass.H(2).n = 5


@pytest.mark.parametrize("k,n", [(0, 3), (1, 3), (2, 4), (3, 3)])
def test_csm_of_linear_subspace(k, n):
    c = csm_of_linear_subspace(k, n)
    assert c.integral() == k + 1
    assert c == (1 + ChowClass.H(n)) ** (k + 1) * ChowClass.linear(k, n)


def test_blowup_series_inverse():
    n = 3
    Y, Z = BlowupSeries.Y(n), BlowupSeries.Z(n)
    u = 1 + Z - Y
    assert u * u.inverse() == BlowupSeries.one(n)
    assert (Y / u).degree_part(2) == -Y * Z + Y * Y


@given(series(3), series(3))
def test_pushforward_is_linear(a, b):
    seg = SegreData.from_codim(3, [0, 1, -2, 5])
    assert pushforward_series(a + b, seg, 2) == pushforward_series(a, seg, 2) + pushforward_series(b, seg, 2)


@given(series(3))
def test_projection_formula(a):
    # Z is the pullback of dH, so multiplying by Z upstairs is multiplying by dH downstairs
    seg = SegreData.from_codim(3, [0, 1, -2, 5])
    d = 4
    up = pushforward_series(a * BlowupSeries.Z(3), seg, d)
    assert up == pushforward_series(a, seg, d) * ChowClass.H(3) * d


def test_pushforward_of_Y_powers():
    seg = SegreData.from_codim(2, [0, 0, 3])
    assert seg.pushforward_Y_power(1) == ChowClass.zero(2)
    assert seg.pushforward_Y_power(2) == ChowClass.point(2) * -3
    assert SegreData.empty(2).pushforward_Y_power(2).is_zero


def test_series_examples():
    H2 = ChowClass.H(2)
    assert (1 + H2).inverse() == ChowClass.from_codim(2, [1, -1, 1])
    assert (1 + H2) ** 3 * H2 * 3 == ChowClass.from_codim(2, [0, 3, 9])
    Y, Z = BlowupSeries.Y(2), BlowupSeries.Z(2)
    assert (1 + Z - Y).inverse() == BlowupSeries(2, {(0, 0): 1, (0, 1): -1, (1, 0): 1,
                                                     (0, 2): 1, (1, 1): -2, (2, 0): 1})


def test_integral_examples():
    from milnorclass.chow import cap_and_integral

    assert cap_and_integral(ChowClass.point(2)) == 1
    assert cap_and_integral(ChowClass(2, [0, 3, 0])) == 0
    assert cap_and_integral(csm_of_linear_subspace(1, 2)) == 2


def test_dual_examples():
    from milnorclass.chow import dual

    assert dual(ChowClass(2, [1, 1, 0])) == ChowClass(2, [1, -1, 0])
    assert dual(ChowClass.point(3)) == ChowClass.point(3)


def test_pushforward_examples():
    Y, Z, one = BlowupSeries.Y(2), BlowupSeries.Z(2), BlowupSeries.one(2)
    assert pushforward_series(Z / (one + Z), SegreData.empty(2), 3) == ChowClass(2, [-9, 3, 0])
    # a line in P^3 has Segre class H^2 - 2H^3
    Y3, Z3, one3 = BlowupSeries.Y(3), BlowupSeries.Z(3), BlowupSeries.one(3)
    seg = SegreData.from_codim(3, [0, 0, 1, -2])
    expr = Y3 / ((one3 + Z3) * (one3 + Z3 - Y3))
    assert pushforward_series(expr, seg, 2) == ChowClass(3, [4, -1, 0, 0])
    assert pushforward_series(Y, SegreData.from_codim(2, [0, 0, 5]), 3).is_zero


def test_pushforward_of_pure_Z_powers():
    seg = SegreData.from_codim(3, [0, 0, 1, -2])
    assert pushforward_series(BlowupSeries.one(3), seg, 2) == ChowClass.one(3)
    for k in range(4):
        assert pushforward_series(BlowupSeries.Z(3) ** k, seg, 2) == (ChowClass.H(3) * 2) ** k


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=3), st.integers(1, 6))
def test_top_component_of_the_hypersurface_class(tail, d):
    # whenever s_1 = 0, pi_*(Z/(1+Z-Y)) starts with d[P^(n-1)]
    n = 3
    seg = SegreData.from_codim(n, [0, 0] + tail[:2])
    Y, Z, one = BlowupSeries.Y(n), BlowupSeries.Z(n), BlowupSeries.one(n)
    c = pushforward_series(Z / (one + Z - Y), seg, d)
    assert c[n] == 0 and c[n - 1] == d


def test_csm_of_linear_subspace_examples():
    assert csm_of_linear_subspace(0, 2) == ChowClass.point(2)
    assert csm_of_linear_subspace(1, 2) == ChowClass(2, [2, 1, 0])
    assert csm_of_linear_subspace(2, 2) == ChowClass(2, [3, 3, 1])
    with pytest.raises(ValueError):
        csm_of_linear_subspace(3, 2)
