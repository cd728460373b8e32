from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorclass.groebner import (
    GREVLEX,
    MonomialOrder,
    NotZeroDimensionalError,
    buchberger,
    hilbert_dimension_degree,
    hilbert_numerator,
    ideal_membership,
    normal_form,
    quotient_dimension,
    radical_membership,
    s_polynomial,
    saturate_by_poly,
    standard_monomials,
)
from milnorclass.polyring import Polynomial, SplitMix64

from conftest import random_poly, small_polys

x, y = Polynomial.variables(2)
X, Y, Z = Polynomial.variables(3)


def assert_is_groebner(gb):
    for f, g in combinations(gb.generators, 2):
        assert normal_form(s_polynomial(f, g, gb.order), gb).is_zero


def test_grevlex_order():
    key = GREVLEX.key
    assert key((1, 0, 0)) > key((0, 1, 0)) > key((0, 0, 1))
    # x*z < y^2 in grevlex
    assert key((0, 2, 0)) > key((1, 0, 1))
    assert key((2, 0, 0)) > key((0, 0, 1))


def test_elimination_order():
    order = MonomialOrder(block=1)
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))
    assert order.kind == "elimination" and GREVLEX.kind == "grevlex"


def test_small_example_basis():
    gb = buchberger([x**2 - y, y**2 - x])
    assert set(gb.leading_monomials) == {(2, 0), (0, 2)}
    assert_is_groebner(gb)
    assert quotient_dimension(gb) == 4
    assert sorted(standard_monomials(gb)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_affine_hilbert_function_oracle():
    # frozen values of dim Q[x,y]_{<=s} / (I)_{<=s}, obtained independently by
    # ranking the span of monomial multiples of the generators in each degree
    expected = [1, 3, 4, 4, 4, 4, 4]
    gb = buchberger([x**2 - y, y**2 - x])
    std = standard_monomials(gb)
    assert [sum(1 for m in std if sum(m) <= s) for s in range(7)] == expected


def test_reduced_basis_is_monic_and_interreduced():
    gb = buchberger([X**2 - Y * Z, X * Y - Z**2, 3 * Y**2 - X * Z])
    for i, g in enumerate(gb.generators):
        lm = max((e for e, _ in g.items()), key=GREVLEX.key)
        assert g.coefficient(lm) == 1
        for j, h in enumerate(gb.generators):
            if i != j:
                assert all(not all(a >= b for a, b in zip(e, lm)) for e, _ in h.items())
    assert_is_groebner(gb)


def test_unit_and_zero_ideals():
    assert buchberger([x, x - 1]).is_unit
    assert buchberger([Polynomial.zero(2)]).is_zero_ideal
    assert quotient_dimension([x, y - 1, x + 3]) == 0


def test_membership():
    gb = buchberger([x**2 - y, y**2 - x])
    assert ideal_membership(x**4 - x, gb)
    assert not ideal_membership(x - y, gb)
    assert gb.contains(x * (x**2 - y) + 7 * (y**2 - x))


def test_normal_form_rational_coefficients():
    gb = buchberger([2 * x - 1])
    assert normal_form(x**2, gb) == Polynomial.constant(Fraction(1, 4), 2)
    assert normal_form(Fraction(1, 3) * x, gb) == Polynomial.constant(Fraction(1, 6), 2)


@settings(max_examples=25, deadline=None)
@given(small_polys(2, max_degree=3), small_polys(2, max_degree=3), small_polys(2, max_degree=2))
def test_normal_form_properties(p, q, a):
    gb = buchberger([x**2 - y + 1, x * y - 2])
    nf = normal_form(p, gb)
    assert normal_form(nf, gb) == nf
    assert ideal_membership(p - nf, gb)
    assert normal_form(p + q, gb) == nf + normal_form(q, gb)
    assert normal_form(p * 3, gb) == nf * 3
    assert normal_form(a * (x**2 - y + 1), gb).is_zero


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**64 - 1))
def test_random_ideals_satisfy_s_pair_criterion(seed):
    rng = SplitMix64(seed)
    gens = [random_poly(3, 2, rng, bound=3) for _ in range(2)]
    gb = buchberger(gens)
    assert_is_groebner(gb)
    for g in gens:
        assert gb.contains(g)


@pytest.mark.parametrize("degrees", [(1, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2), (3, 3, 3)])
def test_bezout_generic_complete_intersections(degrees):
    rng = SplitMix64(sum(degrees) * 1000 + degrees[0])
    gens = [random_poly(3, d, rng, bound=20) for d in degrees]
    assert quotient_dimension(gens) == degrees[0] * degrees[1] * degrees[2]


def test_quotient_dimension_monomial_complete_intersection():
    assert quotient_dimension([X**2, Y**3, Z**4]) == 24
    assert quotient_dimension([x, y**2]) == 2


def test_not_zero_dimensional():
    with pytest.raises(NotZeroDimensionalError):
        quotient_dimension([x * y])


def test_hilbert_numerator():
    # S/(x^2) in two variables: (1 - t^2)
    assert hilbert_numerator([(2, 0)], 2) == [1, 0, -1]
    assert hilbert_numerator([], 2) == [1]
    # S/(xy, xz)
    assert hilbert_numerator([(1, 1, 0), (1, 0, 1)], 3) == [1, 0, -2, 1]


@pytest.mark.parametrize("gens,expected", [
    ([X], (1, 1)),
    ([X**2 * Z - Y**3], (1, 3)),
    ([X * Y], (1, 2)),
    ([X, Y], (0, 1)),
    ([X**2 - Y * Z, X * Y - Z**2, Y**2 - X * Z], (0, 3)),
    ([X, Y, Z], (-1, 0)),
    ([Polynomial.constant(1, 3)], (-1, 0)),
    ([Polynomial.zero(3)], (2, 1)),
])
def test_hilbert_dimension_degree(gens, expected):
    assert hilbert_dimension_degree(buchberger(gens, nvars=3)) == expected


def test_hilbert_twisted_cubic():
    a, b, c, d = Polynomial.variables(4)
    gb = buchberger([a * c - b**2, b * d - c**2, a * d - b * c])
    assert hilbert_dimension_degree(gb) == (1, 3)


def test_hilbert_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        hilbert_dimension_degree(buchberger([X**2 - Y]))


def test_saturation():
    sat = saturate_by_poly([x**2, x * y], y)
    assert buchberger(sat).generators == buchberger([x]).generators
    # x^2 lies in the ideal, so saturating by x gives the whole ring
    assert buchberger(saturate_by_poly([x**2, x * y], x)).is_unit


def test_saturation_removes_embedded_component():
    # (x*z, y*z) : z^inf = (x, y)
    sat = saturate_by_poly([X * Z, Y * Z], Z)
    assert buchberger(sat).generators == buchberger([X, Y]).generators


def test_radical_membership():
    assert radical_membership(x, [x**3])
    assert radical_membership(x + y, [x**2, y**2])
    assert not radical_membership(y, [x**2])


def test_already_reduced_bases():
    assert set(buchberger([x, y]).generators) == {x, y}
    assert set(buchberger([x**2, x * y]).generators) == {x**2, x * y}


def test_normal_form_examples():
    gb = buchberger([x, y])
    assert normal_form(x**2 + y, gb).is_zero
    assert normal_form(Polynomial.constant(1, 2), gb) == Polynomial.constant(1, 2)


@pytest.mark.parametrize("text", ["y^2*z - x^3", "x^4 + y^4 + z^4", "x*y*z + x^3"])
def test_homogeneous_f_lies_in_its_jacobian_ideal(text):
    from milnorclass.polyring import gradient, parse_polynomial

    f = parse_polynomial(text, 3)
    assert normal_form(f, buchberger(gradient(f))).is_zero


def test_two_generic_conics_meet_in_four_points():
    rng = SplitMix64(4)
    conics = [random_poly(3, 2, rng, bound=50, homogeneous=True) for _ in range(2)]
    assert hilbert_dimension_degree(buchberger(conics)) == (0, 4)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**64 - 1), st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_homogeneous_bezout(seed, degrees):
    rng = SplitMix64(seed)
    n = 3
    forms = [random_poly(n + 1, d, rng, bound=30, homogeneous=True) for d in degrees]
    expected_degree = 1
    for d in degrees:
        expected_degree *= d
    assert hilbert_dimension_degree(buchberger(forms)) == (n - len(degrees), expected_degree)


def test_saturation_examples():
    sat = saturate_by_poly([X * Y, X * Z], X)
    assert buchberger(sat).generators == buchberger([Y, Z]).generators
    assert hilbert_dimension_degree(buchberger(sat)) == (0, 1)
    assert buchberger(saturate_by_poly([x], y)).generators == (x,)


def test_saturation_contains_input_and_is_idempotent():
    gens = [X**2 * Y, X * Y * Z, Y**3 - X * Z**2]
    once = saturate_by_poly(gens, Y)
    gb_once = buchberger(once)
    assert all(gb_once.contains(g) for g in gens)
    assert buchberger(saturate_by_poly(once, Y)).generators == gb_once.generators


def test_saturation_by_zero_rejected():
    with pytest.raises(ValueError):
        saturate_by_poly([x], Polynomial.zero(2))
