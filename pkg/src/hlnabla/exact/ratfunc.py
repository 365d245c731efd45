"""Rational functions in q and t with a canonical normal form."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ._kernel import ZTerms, content, zdivexact, zmul
from .gcd import zgcd
from .poly import ONE, ZERO, LaurentPoly, _norm_coeff, render

_UNIT: ZTerms = {(0, 0): 1}


def _prim(p: LaurentPoly) -> tuple[Fraction | int, int, int, ZTerms]:
    """Split p as s * q^mq t^mt * z with z primitive over Z, min exponents 0, lc > 0."""
    s, z = p.zsplit()
    mq = min(k[0] for k in z)
    mt = min(k[1] for k in z)
    c = content(z)
    if z[max(z)] < 0:
        c = -c
    if mq or mt or c != 1:
        z = {(i - mq, j - mt): v // c for (i, j), v in z.items()}
    return s * c, mq, mt, z


def _assemble(s, mq: int, mt: int, nz: ZTerms, dz: ZTerms) -> "RatFunc":
    """num = s q^mq t^mt nz, den = dz (primitive, no monomial factor, coprime to nz)."""
    lc = dz[max(dz)]
    if len(dz) == 1:
        # dz is the constant 1 here since it carries no monomial factor
        s = Fraction(s) / lc if lc != 1 else s
        num = LaurentPoly._raw({(i + mq, j + mt): _norm_coeff(s * v) for (i, j), v in nz.items()})
        return RatFunc._make(num, ONE, _UNIT)
    if lc != 1:
        s = Fraction(s) / lc
        den = LaurentPoly._raw({k: _norm_coeff(Fraction(v, lc)) for k, v in dz.items()})
    else:
        den = LaurentPoly._raw(dz)
    num = LaurentPoly._raw({(i + mq, j + mt): _norm_coeff(s * v) for (i, j), v in nz.items()})
    return RatFunc._make(num, den, dz)


def canonical(num: LaurentPoly, den: LaurentPoly, reduce: bool = True) -> "RatFunc":
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return RatFunc.zero()
    if den.is_monomial():
        ((i, j), c), = den.items()
        num = num.shift(-i, -j)
        if c != 1:
            num = num * (Fraction(1) / c)
        return RatFunc._make(num, ONE, _UNIT)
    ns, nq, nt, nz = _prim(num)
    ds, dq, dt, dz = _prim(den)
    if reduce and len(nz) > 1:
        g = zgcd(nz, dz)
        if g != _UNIT:
            nz = zdivexact(nz, g)
            dz = zdivexact(dz, g)
            assert nz is not None and dz is not None
    return _assemble(Fraction(ns) / ds if ds != 1 else ns, nq - dq, nt - dt, nz, dz)


class RatFunc:
    """Canonical fraction num/den.

    The denominator is a polynomial with no monomial factor, coprime to the
    numerator over Q[q,t], with lex-greatest coefficient 1.  Monomial
    content lives in the numerator, which may have negative exponents.
    """

    __slots__ = ("num", "den", "_dz", "_hash")

    def __init__(self, num=0, den=1):
        num = _as_lp(num)
        den = _as_lp(den)
        r = canonical(num, den)
        self.num, self.den, self._dz = r.num, r.den, r._dz
        self._hash = None

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly, dz: ZTerms) -> "RatFunc":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._dz = dz
        r._hash = None
        return r

    @classmethod
    def zero(cls) -> "RatFunc":
        return _ZERO_RF

    @classmethod
    def one(cls) -> "RatFunc":
        return _ONE_RF

    @classmethod
    def from_lp(cls, p: LaurentPoly) -> "RatFunc":
        return cls._make(p, ONE, _UNIT)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return cls._make(x, ONE, _UNIT)
        if isinstance(x, (int, Fraction)):
            return cls._make(LaurentPoly.const(x), ONE, _UNIT)
        raise TypeError(f"cannot coerce {x!r} to RatFunc")

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"not a Laurent polynomial: {self}")
        return self.num

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic ------------------------------------------------------

    def __neg__(self) -> "RatFunc":
        return RatFunc._make(-self.num, self.den, self._dz)

    def __add__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        b1, d1 = b.is_one(), d.is_one()
        if b1 and d1:
            return RatFunc._make(a + c, ONE, _UNIT)
        # a + c/d with c/d reduced is already reduced
        if b1:
            n = a * d + c
            return RatFunc._make(n, d, other._dz) if n else _ZERO_RF
        if d1:
            n = c * b + a
            return RatFunc._make(n, b, self._dz) if n else _ZERO_RF
        if b == d:
            return canonical(a + c, b)
        g = zgcd(self._dz, other._dz)
        if g == _UNIT:
            n = a * d + c * b
            if not n:
                return _ZERO_RF
            return RatFunc._make(n, b * d, zmul(self._dz, other._dz))
        bq = LaurentPoly._raw(zdivexact(self._dz, g))
        dq = LaurentPoly._raw(zdivexact(other._dz, g))
        # b, d are the primitive parts scaled to monic; rebuild exact scalings
        sb = Fraction(b.leading()[1]) / self._dz[max(self._dz)]
        sd = Fraction(d.leading()[1]) / other._dz[max(other._dz)]
        n = a * dq * sd + c * bq * sb
        return canonical(n, LaurentPoly._raw(g) * bq * dq * (sb * sd))

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO_RF
            return RatFunc._make(self.num * other, self.den, self._dz)
        if isinstance(other, LaurentPoly):
            other = RatFunc.from_lp(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return _ZERO_RF
        b1, d1 = b.is_one(), d.is_one()
        if b1 and d1:
            return RatFunc._make(a * c, ONE, _UNIT)
        if a.is_monomial() and b1:
            return RatFunc._make(a * c, d, other._dz)
        if c.is_monomial() and d1:
            return RatFunc._make(a * c, b, self._dz)
        return _mul_cross(a, self._dz, c, other._dz)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return canonical(self.den, self.num, reduce=False)

    def __truediv__(self, other) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return RatFunc._make(self.num * (Fraction(1) / other), self.den, self._dz)
        other = RatFunc.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        if self.den.is_one():
            return RatFunc._make(self.num ** n, ONE, _UNIT)
        # coprime parts stay coprime under powers; den = dz / lc(dz)
        lc = self._dz[max(self._dz)]
        num = self.num ** n
        if lc != 1:
            num = num * lc ** n
        return _assemble_pow(num, _zpow(self._dz, n))

    # -- substitution ----------------------------------------------------

    def subs_monomial(self, q=(1, 0), t=(0, 1)) -> "RatFunc":
        return canonical(self.num.subs_monomial(q, t), self.den.subs_monomial(q, t))

    def swap_qt(self) -> "RatFunc":
        return canonical(self.num.swap_qt(), self.den.swap_qt(), reduce=False)

    def invert_vars(self, q: bool = True, t: bool = True) -> "RatFunc":
        return canonical(self.num.invert_vars(q, t), self.den.invert_vars(q, t), reduce=False)

    def evaluate(self, q=None, t=None) -> "RatFunc":
        """Partial evaluation; raises ZeroDivisionError at a pole."""
        den = self.den.evaluate(q, t)
        if den.is_zero():
            raise ZeroDivisionError(f"evaluation hits a pole of {self}")
        return canonical(self.num.evaluate(q, t), den)

    def at_q_zero(self) -> "RatFunc":
        den = self.den.at_q_zero()
        if den.is_zero():
            raise ZeroDivisionError("q = 0 is a pole")
        return canonical(self.num.at_q_zero(), den)

    # -- output ----------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RatFunc":
        return cls(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))

    def __str__(self) -> str:
        if self.den.is_one():
            return render(self.num)
        return f"({render(self.num)})/({render(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _zpow(z: ZTerms, n: int) -> ZTerms:
    out: ZTerms = {(0, 0): 1}
    base = z
    while n:
        if n & 1:
            out = zmul(out, base)
        n >>= 1
        if n:
            base = zmul(base, base)
    return out


def _assemble_pow(num: LaurentPoly, dz: ZTerms) -> RatFunc:
    s, mq, mt, nz = _prim(num)
    return _assemble(s, mq, mt, nz, dz)


def _mul_cross(a: LaurentPoly, bz: ZTerms, c: LaurentPoly, dz: ZTerms) -> RatFunc:
    """(a / b) * (c / d) where b = bz / lc(bz) and d = dz / lc(dz)."""
    sa, aq, at, az = _prim(a)
    sc, cq, ct, cz = _prim(c)
    sa = sa * bz[max(bz)]
    sc = sc * dz[max(dz)]
    # cancel across: gcd(a, d) and gcd(c, b)
    if len(az) > 1 and len(dz) > 1:
        g = zgcd(az, dz)
        if g != _UNIT:
            az, dz = zdivexact(az, g), zdivexact(dz, g)
    if len(cz) > 1 and len(bz) > 1:
        g = zgcd(cz, bz)
        if g != _UNIT:
            cz, bz = zdivexact(cz, g), zdivexact(bz, g)
    return _assemble(sa * sc, aq + cq, at + ct, zmul(az, cz), zmul(bz, dz))


def _as_lp(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {x!r} as a Laurent polynomial")


def rf_sum(items: Iterable[RatFunc]) -> RatFunc:
    """Sum grouping equal denominators first, so each distinct one is combined once."""
    groups: dict[LaurentPoly, list[RatFunc]] = {}
    for r in items:
        if not r.is_zero():
            groups.setdefault(r.den, []).append(r)
    total = _ZERO_RF
    for den, rs in groups.items():
        acc: dict = {}
        for r in rs:
            for k, c in r.num.items():
                acc[k] = acc.get(k, 0) + c
        num = LaurentPoly(acc)
        if num.is_zero():
            continue
        part = RatFunc._make(num, ONE, _UNIT) if den.is_one() else canonical(num, den)
        total = total + part
    return total


_ZERO_RF = RatFunc._make(ZERO, ONE, _UNIT)
_ONE_RF = RatFunc._make(ONE, ONE, _UNIT)
