import pytest
from hypothesis import given, strategies as st

from hlnabla.exact import LaurentPoly, Q, RatFunc, T
from hlnabla.partitions import enumerate_partitions, two_col
from hlnabla.symfunc import (SchurVector, b_equal_pairs, check_b_determines_h, check_cd_inverse,
                             check_hl_reconstruction, check_symmetry_relation, hall_inner,
                             hl_in_macdonald_coeffs, is_schur_positive, macdonald,
                             macdonald_column, macdonald_two_col, modified_hl,
                             modified_hl_inverted, omega, reconstruct_hl_from_macdonald,
                             schur_sum)
from hlnabla.tableaux import kostka_number

s = SchurVector.schur


def vec(degree, **kw):
    return SchurVector(degree, kw)


def test_omega_examples():
    assert omega(s((2,))) == s((1, 1))
    assert omega(s((2, 1), Q + T)) == s((2, 1), Q + T)


def test_hall_inner_examples():
    assert hall_inner(s((2, 1)), s((2, 1))).is_one()
    assert hall_inner(s((3,)), s((2, 1))).is_zero()
    assert hall_inner(modified_hl((1, 1)), s((1, 1))) == RatFunc.from_lp(T)


def test_positivity_examples():
    f = s((2,), Q ** 2 * T ** 2) - s((1, 1), Q ** 3 * T ** 3)
    pos = is_schur_positive(f)
    assert not pos and pos.witness == ((1, 1), RatFunc.from_lp(-(Q ** 3 * T ** 3)))
    assert is_schur_positive(SchurVector.zero(3))
    assert is_schur_positive(modified_hl((2, 1)))


def test_modified_hl_examples():
    assert modified_hl((2,)) == s((2,))
    assert modified_hl((1, 1)) == s((2,)) + s((1, 1), T)
    assert modified_hl((1, 1, 1)) == s((3,)) + s((2, 1), T + T ** 2) + s((1, 1, 1), T ** 3)
    assert modified_hl_inverted((2,)) == s((1, 1))
    assert modified_hl_inverted((1, 1)) == s((1, 1)) + s((2,), T ** -1)


def test_macdonald_examples():
    assert macdonald_two_col(1, 0) == s((2,)) + s((1, 1), Q)
    # the (2,1) coefficient is q + t: B-symmetric and specializes to 2 = f^{(2,1)} at q = t = 1
    assert macdonald_two_col(1, 1) == s((3,)) + s((2, 1), Q + T) + s((1, 1, 1), Q * T)
    assert macdonald_two_col(2, 0) == (s((4,)) + s((3, 1), Q + T + Q * T)
                                       + s((2, 2), Q ** 2 + T ** 2)
                                       + s((2, 1, 1), Q * T + Q ** 2 * T + Q * T ** 2)
                                       + s((1, 1, 1, 1), Q ** 2 * T ** 2))
    for n in range(1, 6):
        assert macdonald_two_col(0, n) == modified_hl((1,) * n)
    with pytest.raises(ValueError):
        macdonald((3,))


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_macdonald_at_q1_t1_is_hook_dimensions(a, b):
    n = 2 * a + b
    v = macdonald_two_col(a, b).evaluate(q=1, t=1)
    for lam in enumerate_partitions(n):
        assert v.coeff(lam).as_laurent().constant_value() == kostka_number(lam, (1,) * n)


def test_hl_in_macdonald_examples():
    assert [c for c in hl_in_macdonald_coeffs(0, 4)] == [RatFunc.one()]
    assert reconstruct_hl_from_macdonald(1, 0) == s((2,))
    assert reconstruct_hl_from_macdonald(2, 1) == modified_hl((2, 2, 1))


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("b", range(5))
def test_macdonald_at_q_zero(a, b):
    assert macdonald_two_col(a, b).evaluate(q=0) == modified_hl(two_col(a, b))


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("b", range(4))
def test_reconstruction_and_inverse(a, b):
    assert check_hl_reconstruction(a, b)
    assert check_cd_inverse(a, b)


def test_cd_inverse_larger():
    assert check_cd_inverse(4, 2)
    assert all(check_cd_inverse(5, b) for b in range(4))


def test_macdonald_column():
    assert macdonald_column(1) == s((1,))
    assert macdonald_column(2) == s((2,)) + s((1, 1), T)
    for n in range(1, 9):
        assert macdonald_column(n) == modified_hl((1,) * n) == macdonald_two_col(0, n)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_symmetry_relation(a, b):
    assert check_symmetry_relation(a, b)


def test_b_determines_h():
    assert check_b_determines_h(4, -3, -1)
    assert check_b_determines_h(6, -4, -1)
    pairs = {frozenset(p) for p in b_equal_pairs(4, -2, -1)}
    assert frozenset({(2, 2), (1, 1, 1, 1)}) in pairs


def _vectors(max_n=5):
    coeff = st.integers(-3, 3).map(lambda c: RatFunc.from_lp(LaurentPoly.monomial(c % 3, c, c)))
    return st.integers(1, max_n).flatmap(
        lambda n: st.dictionaries(st.sampled_from(enumerate_partitions(n)), coeff, max_size=4)
        .map(lambda d: SchurVector(n, d)))


@given(_vectors(), st.data())
def test_omega_involution_and_isometry(f, data):
    g = data.draw(_vectors().filter(lambda v: v.degree == f.degree) | st.just(f))
    assert omega(omega(f)) == f
    assert hall_inner(omega(f), omega(g)) == hall_inner(f, g)


def test_json_round_trip():
    v = macdonald_two_col(1, 1).scale(RatFunc(Q, 1 - Q * T))
    assert SchurVector.from_json(v.to_json()) == v


def test_schur_sum():
    v = schur_sum([(Q, s((2,))), (T, s((2,))), (1, s((1, 1)))], 2)
    assert v == s((2,), Q + T) + s((1, 1))
