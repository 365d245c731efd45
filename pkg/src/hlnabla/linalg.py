"""Fraction-free linear algebra over Q[q^±, t^±]."""

from __future__ import annotations

from fractions import Fraction

from .exact import LaurentPoly
from .exact._kernel import zdivexact, zmul
from .exact.gcd import zgcd
from .exact.poly import ONE

Matrix = list[list[LaurentPoly]]


class SingularMatrixError(ArithmeticError):
    pass


def _exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    q = num.divexact(den)
    if q is None:
        raise ArithmeticError("Bareiss step produced an inexact division")
    return q


def bareiss_solve(a: Matrix, b: list[LaurentPoly]) -> tuple[list[LaurentPoly], LaurentPoly]:
    """Solve a x = b fraction-free.

    Returns (X, D) with x_i = X_i / D, where D = +-det(a).  Every
    intermediate entry is a minor of the augmented matrix, so all divisions
    are exact in the Laurent polynomial ring.
    """
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("bareiss_solve needs a square system")
    m = [list(row) + [b[i]] for i, row in enumerate(a)]
    prev = ONE
    for k in range(n):
        piv = next((i for i in range(k, n) if not m[i][k].is_zero()), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        mkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row = m[i]
            for j in range(k + 1, n + 1):
                v = mkk * row[j]
                if not mik.is_zero() and not m[k][j].is_zero():
                    v = v - mik * m[k][j]
                row[j] = v if prev.is_one() else _exact(v, prev)
            row[k] = LaurentPoly()
        prev = mkk
    d = m[n - 1][n - 1]
    x: list[LaurentPoly] = [LaurentPoly()] * n
    for i in range(n - 1, -1, -1):
        acc = d * m[i][n]
        for j in range(i + 1, n):
            if not m[i][j].is_zero() and not x[j].is_zero():
                acc = acc - m[i][j] * x[j]
        x[i] = _exact(acc, m[i][i])
    return x, d


def common_denominator(values) -> LaurentPoly:
    """Monic lcm of the denominators of a collection of RatFuncs."""
    lz = {(0, 0): 1}
    for r in values:
        dz = r._dz
        if len(dz) == 1:
            continue
        g = zgcd(lz, dz)
        lz = zmul(lz, zdivexact(dz, g))
    if len(lz) == 1:
        return ONE
    lc = lz[max(lz)]
    return LaurentPoly({k: Fraction(v, lc) for k, v in lz.items()})
