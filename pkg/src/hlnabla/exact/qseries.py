"""t-Pochhammer symbols, Gaussian binomials and a catalog of q-series identities."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Callable, Iterator

from .poly import ONE, T, ZERO, LaurentPoly
from .ratfunc import RatFunc, rf_sum


def binom2(n: int) -> int:
    """C(n, 2) = n(n-1)/2 for any integer n."""
    return n * (n - 1) // 2


def pochhammer(x, n: int) -> RatFunc:
    """(x; t)_n = prod_{i<n} (1 - x t^i)."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    if isinstance(x, RatFunc) and not x.is_laurent():
        out = RatFunc.one()
        for i in range(n):
            out = out * (1 - x * T ** i)
        return out
    x = x.as_laurent() if isinstance(x, RatFunc) else _lp(x)
    return RatFunc.from_lp(poch_lp(x, n))


def poch_lp(x: LaurentPoly, n: int) -> LaurentPoly:
    out = ONE
    for i in range(n):
        out = out * (ONE - x.shift(0, i))
    return out


def poch_mono(eq: int, et: int, n: int, sign: int = 1) -> LaurentPoly:
    """(sign * q^eq t^et; t)_n, the common case with a monomial argument."""
    return _poch_mono_cached(eq, et, n, sign)


@lru_cache(maxsize=4096)
def _poch_mono_cached(eq: int, et: int, n: int, sign: int) -> LaurentPoly:
    if n == 0:
        return ONE
    prev = _poch_mono_cached(eq, et, n - 1, sign)
    return prev * LaurentPoly._raw({(0, 0): 1, (eq, et + n - 1): -sign})


@lru_cache(maxsize=4096)
def tbinomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n choose k]_t; zero unless 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return ZERO
    if k == 0 or k == n:
        return ONE
    # Pascal recurrence [n,k] = [n-1,k-1] + t^k [n-1,k]
    return tbinomial(n - 1, k - 1) + tbinomial(n - 1, k).shift(0, k)


def tfactorial(n: int) -> LaurentPoly:
    """(t; t)_n."""
    return poch_mono(0, 1, n)


# ---------------------------------------------------------------------------
# identity catalog


class IdentityRangeError(ValueError):
    """Parameters lie outside the hypotheses of the requested identity."""


def _lp(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    if isinstance(x, RatFunc):
        return x.as_laurent()
    raise TypeError(f"expected a Laurent polynomial, got {x!r}")


def _rf(x) -> RatFunc:
    return RatFunc.coerce(x)


def _nonneg(**kw: int) -> None:
    for name, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise IdentityRangeError(f"{name} must be a nonnegative integer, got {v!r}")


def _integer(**kw: int) -> None:
    for name, v in kw.items():
        if not isinstance(v, int):
            raise IdentityRangeError(f"{name} must be an integer, got {v!r}")


def _tpow(e: int) -> RatFunc:
    return RatFunc.from_lp(LaurentPoly.monomial(0, e))


def _id_binom_sum(a: int, b: int) -> bool:
    _integer(a=a, b=b)
    return binom2(a + b) == binom2(a) + binom2(b) + a * b


def _id_binom_diff(a: int, b: int) -> bool:
    _integer(a=a, b=b)
    return binom2(a - b) == binom2(a) + binom2(b + 1) - a * b


def _id_inversion(x, n: int) -> bool:
    _nonneg(n=n)
    x = _rf(x)
    lhs = pochhammer(x, n)
    rhs = (-1) ** n * x ** n * _tpow(binom2(n)) * pochhammer(x.inverse() * _tpow(1 - n), n)
    return lhs == rhs


def _id_splitting(x, n: int, m: int) -> bool:
    _nonneg(n=n, m=m)
    x = _rf(x)
    return pochhammer(x, n + m) == pochhammer(x, n) * pochhammer(x * _tpow(n), m)


def _id_quotient_neg(N: int, n: int) -> bool:
    _nonneg(N=N, n=n)
    if n > N:
        raise IdentityRangeError("quotient-neg needs N >= n >= 0")
    lhs = pochhammer(_tpow(-N), n)
    rhs = (-1) ** n * _tpow(-N * n + binom2(n)) * RatFunc(tfactorial(N), tfactorial(N - n))
    return lhs == rhs


def _id_quotient_pos(A: int, n: int) -> bool:
    _nonneg(n=n)
    if not isinstance(A, int) or A < 1:
        raise IdentityRangeError("quotient-pos needs an integer A >= 1")
    lhs = pochhammer(_tpow(A), n)
    return lhs == RatFunc(tfactorial(A + n - 1), tfactorial(A - 1))


def _id_punctured(x, n: int, k: int) -> bool:
    _nonneg(n=n, k=k)
    if not k <= n - 1:
        raise IdentityRangeError("punctured needs 0 <= k <= n-1")
    x = _rf(x)
    lhs = RatFunc.one()
    for j in range(n):
        if j != k:
            lhs = lhs * (1 - x * _tpow(j))
    return lhs == pochhammer(x, k) * pochhammer(x * _tpow(k + 1), n - 1 - k)


def _id_exchange(n: int, k: int, m: int) -> bool:
    _nonneg(n=n, k=k, m=m)
    return tbinomial(n, k) * tbinomial(k, m) == tbinomial(n, m) * tbinomial(n - m, n - k)


def _id_chu_vandermonde(n: int, b, c) -> bool:
    _nonneg(n=n)
    b, c = _rf(b), _rf(c)
    if b.is_zero():
        raise IdentityRangeError("chu-vandermonde needs b != 0")
    cn = pochhammer(c, n)
    if cn.is_zero():
        raise IdentityRangeError("chu-vandermonde needs (c;t)_n != 0")
    terms = []
    for k in range(n + 1):
        num = pochhammer(_tpow(-n), k) * pochhammer(b, k) * _tpow(k)
        den = pochhammer(c, k) * RatFunc.from_lp(tfactorial(k))
        terms.append(num / den)
    lhs = rf_sum(terms)
    rhs = pochhammer(c / b, n) / cn * b ** n
    return lhs == rhs


def _id_inverse_tbinomial(z, n: int) -> bool:
    _nonneg(n=n)
    z = _rf(z)
    terms = [(-1) ** k * _tpow(binom2(k + 1) - n * k) * RatFunc.from_lp(tbinomial(n, k))
             * pochhammer(z, k) for k in range(n + 1)]
    return rf_sum(terms) == z ** n


_IDENTITIES: dict[str, tuple[Callable[..., bool], tuple[str, ...]]] = {
    "binom-sum": (_id_binom_sum, ("a", "b")),
    "binom-diff": (_id_binom_diff, ("a", "b")),
    "inversion": (_id_inversion, ("x", "n")),
    "splitting": (_id_splitting, ("x", "n", "m")),
    "quotient-neg": (_id_quotient_neg, ("N", "n")),
    "quotient-pos": (_id_quotient_pos, ("A", "n")),
    "punctured": (_id_punctured, ("x", "n", "k")),
    "exchange": (_id_exchange, ("n", "k", "m")),
    "chu-vandermonde": (_id_chu_vandermonde, ("n", "b", "c")),
    "inverse-tbinomial": (_id_inverse_tbinomial, ("z", "n")),
}

IDENTITY_TAGS: tuple[str, ...] = tuple(_IDENTITIES)


def identity_params(tag: str) -> tuple[str, ...]:
    if tag not in _IDENTITIES:
        raise ValueError(f"unknown identity tag {tag!r}")
    return _IDENTITIES[tag][1]


def check_identity(tag: str, *args, **kwargs) -> bool:
    """Evaluate both sides of the tagged identity in canonical form and compare.

    Parameters may be given positionally (in the order of
    :func:`identity_params`) or by name.  Out-of-range parameters raise
    :class:`IdentityRangeError`.
    """
    if tag not in _IDENTITIES:
        raise ValueError(f"unknown identity tag {tag!r}")
    fn, names = _IDENTITIES[tag]
    if len(args) > len(names):
        raise TypeError(f"{tag} takes parameters {names}")
    params = dict(zip(names, args))
    for k, v in kwargs.items():
        if k not in names or k in params:
            raise TypeError(f"{tag} takes parameters {names}, got {k!r}")
        params[k] = v
    missing = [n for n in names if n not in params]
    if missing:
        raise TypeError(f"{tag} is missing parameters {missing}")
    return fn(**params)


def substitution_set() -> dict[str, LaurentPoly]:
    """The symbolic values used for x, z, b, c on the identity grid."""
    return {
        "q": LaurentPoly.monomial(1, 0),
        "t": LaurentPoly.monomial(0, 1),
        "qt": LaurentPoly.monomial(1, 1),
        "q/t": LaurentPoly.monomial(1, -1),
        "t^2": LaurentPoly.monomial(0, 2),
        "1": ONE,
    }


_SYMBOLIC = {"inversion": {"x"}, "splitting": {"x"}, "punctured": {"x"},
             "chu-vandermonde": {"b", "c"}, "inverse-tbinomial": {"z"}}


def identity_grid(tag: str, int_max: int = 6) -> Iterator[dict]:
    """All in-hypothesis parameter assignments for ``tag``.

    Integers range over [0, int_max]; symbolic parameters over
    :func:`substitution_set`.  Combinations outside the identity's stated
    hypotheses are skipped.
    """
    names = identity_params(tag)
    subs = substitution_set()
    symbolic = _SYMBOLIC.get(tag, set())
    axes = [list(subs.items()) if n in symbolic else [(str(i), i) for i in range(int_max + 1)]
            for n in names]
    for combo in product(*axes):
        params = {n: v for n, (_, v) in zip(names, combo)}
        if _in_range(tag, params):
            yield {n: label for n, (label, _) in zip(names, combo)}, params


def _in_range(tag: str, p: dict) -> bool:
    if tag == "quotient-neg":
        return p["N"] >= p["n"]
    if tag == "quotient-pos":
        return p["A"] >= 1
    if tag == "punctured":
        return p["k"] <= p["n"] - 1
    if tag == "chu-vandermonde":
        return not poch_lp(_lp(p["c"]), p["n"]).is_zero()
    return True
