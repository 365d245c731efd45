"""Sparse Laurent polynomials in q and t with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Mapping

from ._kernel import ZTerms, content, zdivexact, zmul

Monomial = tuple[int, int]


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Element of Q[q, q^-1, t, t^-1].

    ``terms`` maps ``(e_q, e_t)`` to a nonzero ``int`` or ``Fraction``; the
    map is the canonical form, so equality is map equality.
    """

    __slots__ = ("_terms", "_hash", "_zsplit")

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None, *, _trusted: bool = False):
        if terms is None:
            self._terms: dict[Monomial, int | Fraction] = {}
        elif _trusted:
            self._terms = terms  # type: ignore[assignment]
        else:
            clean = {}
            for (i, j), c in terms.items():
                if not isinstance(c, (int, Fraction)):
                    if isinstance(c, Rational):
                        c = Fraction(c.numerator, c.denominator)
                    else:
                        raise TypeError(f"coefficient {c!r} is not an exact rational")
                if c:
                    clean[(int(i), int(j))] = _norm_coeff(c)
            self._terms = clean
        self._hash = None
        self._zsplit = None

    # -- construction ---------------------------------------------------

    @classmethod
    def const(cls, c: Rational) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, eq: int = 0, et: int = 0, c: Rational = 1) -> "LaurentPoly":
        return cls({(eq, et): c})

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        return cls(terms, _trusted=True)

    # -- basic protocol -------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int | Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): _norm_coeff(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def coeff(self, eq: int, et: int) -> int | Fraction:
        return self._terms.get((eq, et), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self):
        """The rational value if this is a constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and (0, 0) in self._terms:
            return self._terms[(0, 0)]
        return None

    def leading(self) -> tuple[Monomial, int | Fraction]:
        """Lex-greatest monomial (q before t) and its coefficient."""
        m = max(self._terms)
        return m, self._terms[m]

    def min_exponents(self) -> Monomial:
        return (min(k[0] for k in self._terms), min(k[1] for k in self._terms))

    def max_exponents(self) -> Monomial:
        return (max(k[0] for k in self._terms), max(k[1] for k in self._terms))

    def is_polynomial(self) -> bool:
        return all(i >= 0 and j >= 0 for i, j in self._terms)

    def in_N_qt(self) -> bool:
        """True for polynomials with nonnegative integer coefficients."""
        return all(i >= 0 and j >= 0 and isinstance(c, int) and c > 0
                   for (i, j), c in self._terms.items())

    def has_nonneg_coeffs(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # -- integer view ---------------------------------------------------

    def zsplit(self) -> tuple[Fraction | int, ZTerms]:
        """Return (s, z) with self == s * z and z integral."""
        if self._zsplit is None:
            d = 1
            for c in self._terms.values():
                if isinstance(c, Fraction):
                    d = lcm(d, c.denominator)
            if d == 1:
                self._zsplit = (1, self._terms)
            else:
                self._zsplit = (Fraction(1, d), {k: int(c * d) for k, c in self._terms.items()})
        return self._zsplit

    @classmethod
    def _from_scaled(cls, s, z: ZTerms) -> "LaurentPoly":
        if s == 1:
            return cls._raw(z)
        return cls._raw({k: _norm_coeff(s * c) for k, c in z.items()})

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm_coeff(v)
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = _norm_coeff(v)
            else:
                del out[k]
        return LaurentPoly._raw(out)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            if other == 1:
                return self
            return LaurentPoly._raw({k: _norm_coeff(c * other) for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        sa, za = self.zsplit()
        sb, zb = other.zsplit()
        return LaurentPoly._from_scaled(sa * sb, zmul(za, zb))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((i, j), c), = self._terms.items()
            return LaurentPoly({(i * n, j * n): Fraction(c) ** n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, dq: int, dt: int) -> "LaurentPoly":
        """Multiply by q^dq t^dt."""
        if not dq and not dt:
            return self
        return LaurentPoly._raw({(i + dq, j + dt): c for (i, j), c in self._terms.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Exact quotient in the Laurent ring, or None if other does not divide self."""
        if not other._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        sa, za = self.zsplit()
        sb, zb = other.zsplit()
        cb = content(zb)
        if cb != 1:
            zb = {k: c // cb for k, c in zb.items()}
            sb = sb * cb
        h = zdivexact(za, zb)
        if h is None:
            return None
        return LaurentPoly._from_scaled(Fraction(sa) / sb, h)

    # -- substitutions and evaluation ------------------------------------

    def subs_monomial(self, q: Monomial = (1, 0), t: Monomial = (0, 1)) -> "LaurentPoly":
        """Substitute q -> q^q[0] t^q[1] and t -> q^t[0] t^t[1]."""
        (a, b), (c, d) = q, t
        out: dict = {}
        for (i, j), v in self._terms.items():
            k = (a * i + c * j, b * i + d * j)
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return LaurentPoly._raw({k: _norm_coeff(v) for k, v in out.items()})

    def swap_qt(self) -> "LaurentPoly":
        return LaurentPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def invert_vars(self, q: bool = True, t: bool = True) -> "LaurentPoly":
        sq = -1 if q else 1
        st = -1 if t else 1
        return LaurentPoly._raw({(sq * i, st * j): c for (i, j), c in self._terms.items()})

    def evaluate(self, q=None, t=None) -> "LaurentPoly":
        """Partial evaluation at rational values; None keeps the variable."""
        out: dict = {}
        for (i, j), c in self._terms.items():
            if q is not None:
                c = c * _rpow(q, i)
                i = 0
            if t is not None:
                c = c * _rpow(t, j)
                j = 0
            out[(i, j)] = out.get((i, j), 0) + c
        return LaurentPoly(out)

    def at_q_zero(self) -> "LaurentPoly":
        if any(i < 0 for i, _ in self._terms):
            raise ZeroDivisionError("q = 0 is a pole of this Laurent polynomial")
        return LaurentPoly._raw({k: c for k, c in self._terms.items() if k[0] == 0})

    def at_t_zero(self) -> "LaurentPoly":
        if any(j < 0 for _, j in self._terms):
            raise ZeroDivisionError("t = 0 is a pole of this Laurent polynomial")
        return LaurentPoly._raw({k: c for k, c in self._terms.items() if k[1] == 0})

    # -- output ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int | Fraction]]:
        return sorted(self._terms.items(), reverse=True)

    def to_json(self) -> dict:
        out = []
        for (i, j), c in self.sorted_terms():
            f = Fraction(c)
            out.append({"q": i, "t": j, "num": str(f.numerator), "den": str(f.denominator)})
        return {"terms": out}

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPoly":
        return cls({(int(d["q"]), int(d["t"])): Fraction(int(d["num"]), int(d["den"]))
                    for d in obj["terms"]})

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)})"


def _rpow(x, e: int):
    if e >= 0:
        return x ** e
    if x == 0:
        raise ZeroDivisionError("negative power of zero")
    return Fraction(1, 1) / (Fraction(x) ** (-e))


def _coerce(x) -> LaurentPoly | None:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    return None


def _mono_str(i: int, j: int) -> str:
    s = ""
    if i:
        s += "q" if i == 1 else f"q^{i}" if i > 0 else f"q^({i})"
    if j:
        s += "t" if j == 1 else f"t^{j}" if j > 0 else f"t^({j})"
    return s


def render(p: LaurentPoly) -> str:
    """Plain text, terms in descending (q,t)-lex order, e.g. ``q^2t - (3/2)t + 1``."""
    if not p:
        return "0"
    parts = []
    for k, ((i, j), c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _mono_str(i, j)
        if isinstance(a, Fraction):
            cs = f"({a.numerator}/{a.denominator})"
        else:
            cs = str(a)
        if mono:
            body = mono if a == 1 else cs + mono
        else:
            body = str(a) if isinstance(a, int) else f"{a.numerator}/{a.denominator}"
        if k == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def lincomb(pairs: Iterable[tuple[Rational, LaurentPoly]]) -> LaurentPoly:
    out: dict = {}
    for s, p in pairs:
        for k, c in p._terms.items():
            out[k] = out.get(k, 0) + s * c
    return LaurentPoly(out)


def lp_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict = {}
    for p in polys:
        for k, c in p._terms.items():
            out[k] = out.get(k, 0) + c
    return LaurentPoly(out)


ZERO = LaurentPoly()
ONE = LaurentPoly._raw({(0, 0): 1})
Q = LaurentPoly._raw({(1, 0): 1})
T = LaurentPoly._raw({(0, 1): 1})
