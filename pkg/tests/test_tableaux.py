from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hlnabla.exact import LaurentPoly, T
from hlnabla.partitions import (conjugate, dominates, enumerate_partitions, hook_lengths,
                                n_stat)
from hlnabla.tableaux import (Tableau, cocharge, cocharge_labels, cocharge_of_word,
                              enumerate_ssyt, kostka_foulkes, kostka_number, reading_word)

EX = Tableau.from_rows([[1, 1, 1], [2, 2, 4], [3]])


def test_example_tableau():
    assert EX in enumerate_ssyt((3, 3, 1), (3, 2, 1, 1))
    assert reading_word(EX) == (3, 2, 2, 4, 1, 1, 1)
    assert cocharge(EX) == 6
    assert cocharge_labels(reading_word(EX)).labels == (2, 1, 1, 2, 0, 0, 0)


def test_small_examples():
    assert [t.rows for t in enumerate_ssyt((2,), (2,))] == [((1, 1),)]
    assert enumerate_ssyt((1, 1), (2,)) == []
    assert reading_word(Tableau.from_rows([[1]])) == (1,)
    assert reading_word(Tableau.from_rows([[1, 2], [3]])) == (3, 1, 2)
    assert cocharge(Tableau.from_rows([[1, 1, 1, 1]])) == 0
    assert cocharge(Tableau.from_rows([[1], [2]])) == 1


def test_invalid_tableau():
    with pytest.raises(ValueError):
        Tableau.from_rows([[2, 1]])
    with pytest.raises(ValueError):
        Tableau.from_rows([[1, 2], [1]])


def test_kostka_foulkes_examples():
    assert kostka_foulkes((2,), (1, 1)) == LaurentPoly.const(1)
    assert kostka_foulkes((1, 1), (1, 1)) == T
    assert kostka_foulkes((1, 1), (2,)).is_zero()


# Charge Kostka-Foulkes table for n = 4 (rows lambda, columns mu in the order below),
# converted to cocharge via K~(t) = t^{n(mu)} K(1/t).
_N4 = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
_CHARGE4 = {
    (4,): [[0], [1], [2], [3], [6]],
    (3, 1): [[], [0], [1], [1, 2], [3, 4, 5]],
    (2, 2): [[], [], [0], [1], [2, 4]],
    (2, 1, 1): [[], [], [], [0], [1, 2, 3]],
    (1, 1, 1, 1): [[], [], [], [], [0]],
}


def test_kostka_foulkes_n4_table():
    for lam, row in _CHARGE4.items():
        for mu, exps in zip(_N4, row):
            want = LaurentPoly({(0, n_stat(mu) - e): 1 for e in exps})
            assert kostka_foulkes(lam, mu) == want, (lam, mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_kostka_foulkes_hook_formula(n):
    # K~_{lam,1^n}(t) = t^{n(lam)} (t;t)_n / prod_hooks (1 - t^h)
    from hlnabla.exact import RatFunc, poch_mono
    for lam in enumerate_partitions(n):
        den = LaurentPoly.const(1)
        for h in hook_lengths(lam):
            den = den * (1 - T ** h)
        want = RatFunc(poch_mono(0, 1, n).shift(0, n_stat(lam)), den)
        assert RatFunc.from_lp(kostka_foulkes(lam, (1,) * n)) == want


def _brute_kostka(lam, mu):
    """Count SSYT by filling cells directly (independent of the strip recursion)."""
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    count = 0
    for fill in product(range(1, len(mu) + 1), repeat=len(cells)):
        if any(fill.count(v + 1) != m for v, m in enumerate(mu)):
            continue
        grid = dict(zip(cells, fill))
        ok = all(grid[(r, c)] <= grid[(r, c + 1)] for (r, c) in cells if (r, c + 1) in grid)
        ok = ok and all(grid[(r, c)] < grid[(r + 1, c)] for (r, c) in cells if (r + 1, c) in grid)
        count += ok
    return count


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_numbers_brute_force(n):
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            assert kostka_number(lam, mu) == _brute_kostka(lam, mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_kostka_foulkes_properties(n):
    parts = enumerate_partitions(n)
    for mu in parts:
        assert kostka_foulkes(mu, mu) == LaurentPoly.monomial(0, n_stat(mu))
        assert kostka_foulkes((n,), mu) == LaurentPoly.const(1)
        for lam in parts:
            k = kostka_foulkes(lam, mu)
            if not dominates(lam, mu):
                assert k.is_zero()
            assert k.evaluate(t=1).constant_value() == kostka_number(lam, mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_standard_tableaux_count(n):
    total = sum(kostka_foulkes(lam, (1,) * n).evaluate(t=1).constant_value()
                for lam in enumerate_partitions(n))
    hooks = 0
    for lam in enumerate_partitions(n):
        prod = 1
        for h in hook_lengths(lam):
            prod *= h
        hooks += factorial(n) // prod
    assert total == hooks


def _words(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.sampled_from(enumerate_partitions(n))).flatmap(
        lambda mu: st.permutations([v + 1 for v, m in enumerate(mu) for _ in range(m)]))


@given(_words())
def test_cocharge_labels_structure(word):
    cw = cocharge_labels(word)
    assert all(x >= 0 for x in cw.labels)
    assert cw.cocharge == cocharge_of_word(word)
    for k in set(cw.subword_index):
        vals = sorted(word[i] for i in range(len(word)) if cw.subword_index[i] == k)
        assert vals == list(range(1, len(vals) + 1))
