from fractions import Fraction
from itertools import product

import pytest
from hypothesis import strategies as st

from milnorclass.polyring import Polynomial, SplitMix64
from milnorclass.strata import Stratum, StratPoset


def random_poly(nvars, degree, rng, bound=5, homogeneous=False):
    """Dense polynomial with small nonzero integer coefficients."""
    terms = {}
    for e in product(range(degree + 1), repeat=nvars):
        s = sum(e)
        if (s == degree) if homogeneous else (s <= degree):
            terms[e] = rng.nonzero_int(bound)
    return Polynomial(nvars, terms)


def small_polys(nvars, max_degree=2, max_terms=4, coeff=4):
    exps = st.tuples(*[st.integers(0, max_degree)] * nvars)
    coeffs = st.integers(-coeff, coeff)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda t: Polynomial(nvars, t))


def solve(matrix, rhs):
    """Gauss-Jordan over Q, independent of the recursion under test."""
    size = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(size):
        piv = next(r for r in range(col, size) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[-1] for row in a]


def random_poset(seed, size):
    rng = SplitMix64(seed)
    n = 4
    dims = [int(rng.next_u64() % n) for _ in range(size)]
    strata = tuple(Stratum(f"s{i}", dims[i], rng.nonzero_int(9)) for i in range(size))
    contains = tuple((f"s{i}", f"s{j}") for i in range(size) for j in range(size)
                     if dims[i] > dims[j] and rng.next_u64() % 3 == 0)
    return StratPoset(n, 3, strata, contains)


@pytest.fixture
def rng():
    return SplitMix64(20240611)


@pytest.fixture
def xyz():
    return Polynomial.variables(3)


_ACCEPTANCE_ERRORS = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rpartition("::")[2]
    if report.failed and "test_acceptance" in report.nodeid and name.startswith("test_criterion_"):
        _ACCEPTANCE_ERRORS[int(name.split("_")[2])] = name


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    results = test_acceptance.RESULTS
    if results or _ACCEPTANCE_ERRORS:
        terminalreporter.section("acceptance criteria")
        for number in range(1, 10):
            if number in results:
                terminalreporter.write_line(results[number])
            elif number in _ACCEPTANCE_ERRORS:
                terminalreporter.write_line(f"FAIL criterion {number}: {_ACCEPTANCE_ERRORS[number]} raised an error")
            else:
                terminalreporter.write_line(f"---- criterion {number}: not run")
