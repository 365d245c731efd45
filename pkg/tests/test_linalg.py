import pytest
import sympy
from hypothesis import assume, given, strategies as st

from conftest import polys
from hlnabla.exact import LaurentPoly, Q, RatFunc, T
from hlnabla.linalg import SingularMatrixError, bareiss_solve, common_denominator
from test_exact import from_sympy_poly, to_sympy


@st.composite
def systems(draw, n_max=3):
    n = draw(st.integers(1, n_max))
    a = [[draw(polys(max_exp=2, max_terms=3, coeff=5)) for _ in range(n)] for _ in range(n)]
    b = [draw(polys(max_exp=2, max_terms=3, coeff=5)) for _ in range(n)]
    return a, b


@given(systems())
def test_bareiss_against_sympy(system):
    a, b = system
    m = sympy.Matrix([[to_sympy(x) for x in row] for row in a])
    det = sympy.expand(m.det())
    assume(det != 0)
    x, d = bareiss_solve(a, b)
    assert d == from_sympy_poly(det) or d == -from_sympy_poly(det)
    sol = m.LUsolve(sympy.Matrix([to_sympy(v) for v in b]))
    for xi, si in zip(x, sol):
        assert sympy.simplify(to_sympy(xi) / to_sympy(d) - si) == 0


def test_bareiss_small():
    a = [[Q, LaurentPoly()], [T, T]]
    x, d = bareiss_solve(a, [Q, Q + T])
    assert [RatFunc(xi, d) for xi in x] == [RatFunc.one(), RatFunc(Q, T)]


def test_singular():
    with pytest.raises(SingularMatrixError):
        bareiss_solve([[Q, Q], [T, T]], [Q, T])


def test_common_denominator():
    d = common_denominator([RatFunc(1, 1 - Q), RatFunc(Q, (1 - Q) * (1 - T)), RatFunc.from_lp(Q)])
    assert RatFunc.from_lp(d) == RatFunc.from_lp((1 - Q) * (1 - T)) or \
        RatFunc.from_lp(d) == RatFunc.from_lp((Q - 1) * (T - 1))
