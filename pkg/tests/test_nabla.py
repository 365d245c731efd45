import pytest
from hypothesis import given, strategies as st

from hlnabla.exact import LaurentPoly, Q, RatFunc, T, binom2, tbinomial
from hlnabla.nabla import (NotInSpanError, coeffs_in_N_qt, nabla_power_counterexample,
                           entries_in_N_qt, expand_in_two_col_macdonald, m_entry, matrix_power,
                           matrix_power_entry, matrix_power_entry_paths, nabla_pow,
                           nabla_pow_hl_formula, residue_indices, residue_pair_check,
                           s_a_target, s_a_value, sa_poles, transition_matrix, verify_dominance_difference,
                           verify_main_i, verify_main_ii, verify_thm_4_1, verify_thm_5_1)
from hlnabla.partitions import t_mu, two_col
from hlnabla.symfunc import (SchurVector, hl_in_macdonald_coeffs, is_schur_positive,
                             macdonald_two_col, modified_hl, modified_hl_inverted)

s = SchurVector.schur


def _two_by_two(c2, c11):
    """Oracle in degree 2: write f = x H~_2 + y H~_11 by hand and scale by q, t."""
    # H~_2 = s2 + q s11, H~_11 = s2 + t s11
    det = RatFunc.from_lp(T - Q)
    x = (RatFunc.from_lp(T) * c2 - c11) / det
    y = (c11 - RatFunc.from_lp(Q) * c2) / det
    return x, y


def test_nabla_degree_two_oracle():
    for c2, c11 in [(1, 0), (0, 1), (Q, T), (1, Q * T)]:
        c2, c11 = RatFunc.coerce(c2), RatFunc.coerce(c11)
        f = SchurVector(2, {(2,): c2, (1, 1): c11})
        x, y = _two_by_two(c2, c11)
        want = macdonald_two_col(1, 0).scale(x * Q) + macdonald_two_col(0, 2).scale(y * T)
        assert nabla_pow(f) == want


def test_nabla_examples():
    assert nabla_pow(modified_hl((2,))) == s((1, 1), -(Q * T))
    assert nabla_pow(macdonald_two_col(1, 1)) == macdonald_two_col(1, 1).scale(Q * T)
    assert nabla_pow(s((1, 1))) == s((2,)) + s((1, 1), Q + T)
    want = (macdonald_two_col(0, 2).scale(T ** 2) - macdonald_two_col(1, 0).scale(Q ** 2)) \
        .scale(RatFunc(1, T - Q))
    assert nabla_pow(s((1, 1)), 2) == want
    assert nabla_pow(s((1, 1)), 0) == s((1, 1))


def test_not_in_span():
    with pytest.raises(NotInSpanError):
        nabla_pow(s((3,)))
    with pytest.raises(NotInSpanError):
        expand_in_two_col_macdonald(s((3,)))


def test_expansion_unit_vectors():
    for n in range(1, 7):
        for r in range(n // 2 + 1):
            e = expand_in_two_col_macdonald(macdonald_two_col(r, n - 2 * r))
            assert [c.is_one() if i == r else c.is_zero() for i, c in enumerate(e.coeffs)] == \
                [True] * (n // 2 + 1)


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("b", range(4))
def test_expansion_matches_formula(a, b):
    e = expand_in_two_col_macdonald(modified_hl(two_col(a, b)))
    d = hl_in_macdonald_coeffs(a, b)
    assert e.coeffs[:a + 1] == d
    assert all(c.is_zero() for c in e.coeffs[a + 1:])
    assert e.reconstruct() == modified_hl(two_col(a, b))


@pytest.mark.parametrize("a", range(4))
@pytest.mark.parametrize("b", range(3))
@pytest.mark.parametrize("k", range(1, 4))
def test_two_routes_for_powers(a, b, k):
    assert nabla_pow_hl_formula(a, b, k) == nabla_pow(modified_hl(two_col(a, b)), k)


def _in_span(max_n=6):
    coeff = st.sampled_from([RatFunc.coerce(x) for x in (1, -1, Q, T, Q * T, 2 - Q)]
                            + [RatFunc(1, 1 - Q * T)])
    return st.integers(1, max_n).flatmap(lambda n: st.lists(coeff, min_size=n // 2 + 1,
                                                             max_size=n // 2 + 1).map(
        lambda cs: (n, cs)))


def _build(n, cs):
    v = SchurVector.zero(n)
    for r, c in enumerate(cs):
        v = v + macdonald_two_col(r, n - 2 * r).scale(c)
    return v


@given(_in_span(), st.integers(0, 2), st.integers(0, 2))
def test_power_composition(spec, j, k):
    f = _build(*spec)
    assert nabla_pow(f, j + k) == nabla_pow(nabla_pow(f, j), k)


@given(_in_span(5), _in_span(5), st.sampled_from([RatFunc.from_lp(Q), RatFunc(T, 1 + Q)]))
def test_linearity(s1, s2, alpha):
    if s1[0] != s2[0]:
        return
    f, g = _build(*s1), _build(*s2)
    assert nabla_pow(f.scale(alpha) + g, 2) == nabla_pow(f, 2).scale(alpha) + nabla_pow(g, 2)


def test_transition_matrix_examples():
    m = transition_matrix(1, 0)
    assert m.entries == ((Q, LaurentPoly()), (T, T))
    assert transition_matrix(0, 3).entries == ((T ** 3,),)
    assert m_entry(2, 0, 1, 0) == Q * T ** 3 * (1 + T)
    assert matrix_power_entry(1, 0, 2, 1, 0) == T * (Q + T)
    assert matrix_power(1, 0, 2).entries == ((Q ** 2, LaurentPoly()), (T * (Q + T), T ** 2))


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("k", range(1, 5))
def test_matrix_power_paths(a, k):
    for b in range(4):
        mk = matrix_power(a, b, k)
        assert entries_in_N_qt(mk)
        for i in range(a + 1):
            assert mk[i, i] == t_mu(two_col(a - i, b + 2 * i)) ** k
            for j in range(i + 1):
                assert matrix_power_entry_paths(a, b, k, i, j) == mk[i, j]
        if k == 1:
            assert mk == transition_matrix(a, b)


def test_matrix_power_entry_bounds():
    with pytest.raises(IndexError):
        matrix_power_entry(1, 0, 1, 2, 0)
    assert matrix_power_entry(2, 0, 2, 0, 1).is_zero()


def test_thm41_examples():
    assert verify_thm_4_1(1, 0)
    assert -nabla_pow(modified_hl((2,))) == modified_hl_inverted((2,)).scale(Q * T)
    for n in range(1, 6):
        # eigenvector with eigenvalue t^C(n,2); omega H~_{1^n}[X;0,1/t] = t^-C(n,2) H~_{1^n}
        hl = modified_hl((1,) * n)
        assert nabla_pow(hl) == hl.scale(T ** binom2(n))
        assert nabla_pow(hl) == modified_hl_inverted((1,) * n).scale(T ** (2 * binom2(n)))
    assert verify_thm_4_1(2, 1)


def test_thm51_and_main_examples():
    assert verify_thm_5_1(1, 0, 0)
    assert verify_thm_5_1(2, 0, 1)
    assert nabla_pow(modified_hl_inverted((2,))) == s((2,)) + s((1, 1), Q + T)
    assert verify_main_i(1, 0, 2, 0)
    assert verify_main_i(2, 1, 3, 1)
    assert verify_main_ii(1, 0, 2)
    assert verify_main_ii(2, 0, 2)
    assert -nabla_pow(modified_hl((2,)), 2) == (s((2,)) + s((1, 1), Q + T)).scale(Q * T)


@pytest.mark.parametrize("a", range(3))
@pytest.mark.parametrize("b", range(3))
def test_main_theorems_small_grid(a, b):
    assert verify_thm_4_1(a, b)
    for k in range(1, 3):
        assert verify_main_ii(a, b, k) is True
        assert verify_main_ii(a, b, 1) == verify_thm_4_1(a, b)
        v = nabla_pow(modified_hl_inverted(two_col(a, b)), k)
        assert is_schur_positive(v)
        w = nabla_pow(modified_hl(two_col(a, b)), k)
        assert is_schur_positive(w if a % 2 == 0 else -w)
        for j in range(a + 1):
            assert verify_main_i(a, b, k, j)
        for j in range(a):
            assert verify_dominance_difference(a, b, k, j)


def test_dominance_examples():
    assert verify_dominance_difference(1, 0, 1, 0)
    assert m_entry(2, 0, 1, 0) - m_entry(2, 0, 1, 1) == Q * T ** 4
    assert verify_dominance_difference(2, 1, 2, 0)
    with pytest.raises(ValueError):
        verify_dominance_difference(1, 0, 1, 1)


def test_detail_witness_shape():
    ok, witness = verify_thm_4_1(1, 1, detail=True)
    assert ok and witness is None


def test_s_a_examples():
    for n in range(1, 5):
        assert s_a_value(0, n, 3) == modified_hl_inverted((1,) * n).scale(T ** binom2(n))
    assert s_a_value(1, 0, 3) == s_a_value(1, 0, 5) == s_a_target(1, 0)
    with pytest.raises(ValueError):
        s_a_value(1, 0, min(sa_poles(1, 0)))


@pytest.mark.parametrize("a", range(4))
@pytest.mark.parametrize("b", range(3))
def test_s_a_independent_of_p(a, b):
    poles = sa_poles(a, b)
    ps = [p for p in range(0, 12) if p not in poles][:3]
    target = s_a_target(a, b)
    for p in ps:
        assert s_a_value(a, b, p) == target
    for p in range(b, 2 * a + b + 1):
        for r in residue_indices(a, b, p):
            assert residue_pair_check(a, b, p, r)


def test_residue_examples():
    assert residue_pair_check(1, 0, 1, 0)
    assert residue_pair_check(2, 0, 2, 0)
    assert residue_pair_check(2, 1, 4, 1)
    with pytest.raises(ValueError):
        residue_pair_check(1, 0, 5, 0)


def test_counterexample_displays():
    rep = nabla_power_counterexample()
    assert rep.nabla_f == s((2,), Q ** 2 * T ** 2 + Q ** 2 * T + Q * T ** 2) + s((1, 1), Q ** 2 * T ** 2)
    assert rep.nabla2_f == s((2,), Q ** 2 * T ** 2) - s((1, 1), Q ** 3 * T ** 3)
    assert rep.nabla_f_positive and not rep.nabla2_f_positive
    assert rep.nabla2_f_witness[0] == (1, 1)
    assert rep.passed
    assert coeffs_in_N_qt(rep.nabla_f)
