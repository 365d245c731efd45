import pytest

from hlnabla.exact import LaurentPoly, Q, T
from hlnabla.partitions import (PartitionError, b_mu, b_mu_specialized, cells, conjugate,
                                contains, dominates, enumerate_partitions, horizontal_strips,
                                n_stat, parse_partition, partition, t_mu, two_col,
                                two_col_params, vertical_strips)


def _parts(n):
    return enumerate_partitions(n)


def test_conjugate_examples():
    assert conjugate((3, 3, 1)) == (3, 2, 2)
    assert conjugate(()) == ()
    assert conjugate((2, 2, 1, 1)) == (4, 2)


def test_dominance_examples():
    assert dominates((3, 3, 1), (3, 2, 2))
    assert dominates((2, 2), (2, 2))
    assert not dominates((2, 2, 2), (3, 2, 1))
    with pytest.raises(PartitionError):
        dominates((2,), (1,))


def test_containment_examples():
    assert contains((3, 2), (3, 3, 1))
    assert contains((), (2, 1))
    assert not contains((4,), (3, 3))


def test_statistics_examples():
    assert n_stat((3, 3, 1)) == 5
    assert n_stat((3, 2, 2)) == 6
    assert n_stat((7,)) == 0
    assert t_mu((3, 3, 1)) == Q ** 6 * T ** 5
    assert t_mu((1,)) == LaurentPoly.const(1)
    assert t_mu((2,)) == Q
    assert b_mu((3, 3, 1)) == Q ** 2 * T + Q ** 2 + Q * T + T ** 2 + Q + T + 1
    assert b_mu((1,)) == LaurentPoly.const(1)
    assert b_mu((2, 1)) == 1 + Q + T


def test_b_mu_specialized():
    assert b_mu_specialized((1, 1), 3) == 1 + T ** -1
    assert b_mu_specialized((2,), 0) == LaurentPoly.const(2)


def test_enumeration():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [len(enumerate_partitions(n)) for n in range(11)] == counts


def test_parsing_and_validation():
    assert parse_partition("2,2,1") == (2, 2, 1)
    assert partition([3, 1, 0]) == (3, 1)
    with pytest.raises(PartitionError):
        partition([1, 2])
    assert two_col(2, 1) == (2, 2, 1)
    assert two_col_params((2, 2, 1, 1)) == (2, 2)


@pytest.mark.parametrize("n", range(11))
def test_conjugate_involution(n):
    for mu in _parts(n):
        assert conjugate(conjugate(mu)) == mu


@pytest.mark.parametrize("n", range(1, 9))
def test_dominance_is_partial_order(n):
    ps = _parts(n)
    for lam in ps:
        assert dominates(lam, lam)
        for mu in ps:
            if dominates(lam, mu) and dominates(mu, lam):
                assert lam == mu
            assert dominates(lam, mu) == dominates(conjugate(mu), conjugate(lam))
            for nu in ps:
                if dominates(lam, mu) and dominates(mu, nu):
                    assert dominates(lam, nu)


@pytest.mark.parametrize("n", range(1, 9))
def test_t_mu_cell_product(n):
    for mu in _parts(n):
        conj = conjugate(mu)
        prod = LaurentPoly.const(1)
        for row, col in cells(mu):
            # coarm: cells to the left; coleg: cells below (French)
            prod = prod * LaurentPoly.monomial(col, row)
        assert t_mu(mu) == LaurentPoly.monomial(n_stat(conj), n_stat(mu))
        assert t_mu(mu) == prod
        assert b_mu(mu).evaluate(q=1, t=1).constant_value() == n


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("b", range(4))
def test_paired_b_values_agree(a, b):
    for p in range(b, 2 * a + b + 1):
        for r in range(a + 1):
            if 2 * r + 1 <= p - b <= a + r:
                r2 = p - b - r
                assert (b_mu_specialized(two_col(a - r, b + 2 * r), p)
                        == b_mu_specialized(two_col(a - r2, b + 2 * r2), p))


def test_strips():
    assert sorted(horizontal_strips((1,), 1)) == [(1, 1), (2,)]
    assert sorted(vertical_strips((1,), 2)) == [(1, 1, 1), (2, 1)]
    assert horizontal_strips((1,), 0) == [(1,)]
