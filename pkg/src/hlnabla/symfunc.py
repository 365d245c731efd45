"""Homogeneous symmetric functions in the Schur basis over Q(q,t).

Also builds the modified Hall-Littlewood polynomials (from cocharge) and the
two-column modified Macdonald polynomials (from their Hall-Littlewood
expansion), together with the coefficient families relating the two bases.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .exact import ONE, LaurentPoly, RatFunc, binom2, poch_mono, rf_sum, tbinomial, tfactorial
from .partitions import (Partition, b_mu, conjugate, enumerate_partitions, hook_lengths,
                         n_stat, partition, t_mu, two_col, two_col_partitions)
from .tableaux import kostka_foulkes_column

Scalar = RatFunc | LaurentPoly | int | Fraction


def _rf(x: Scalar) -> RatFunc:
    return RatFunc.coerce(x)


class SchurVector:
    """A homogeneous symmetric function of fixed degree, as {partition: coefficient}."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Partition, Scalar] | None = None):
        self.degree = degree
        clean: dict[Partition, RatFunc] = {}
        for lam, c in (coeffs or {}).items():
            lam = partition(lam)
            if sum(lam) != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")
            c = _rf(c)
            if not c.is_zero():
                clean[lam] = c
        self._coeffs = clean

    @classmethod
    def _raw(cls, degree: int, coeffs: dict[Partition, RatFunc]) -> "SchurVector":
        v = object.__new__(cls)
        v.degree = degree
        v._coeffs = coeffs
        return v

    @classmethod
    def schur(cls, lam: Iterable[int], coeff: Scalar = 1) -> "SchurVector":
        lam = partition(lam)
        return cls(sum(lam), {lam: coeff})

    @classmethod
    def zero(cls, degree: int) -> "SchurVector":
        return cls._raw(degree, {})

    # -- access ------------------------------------------------------------

    @property
    def coeffs(self) -> dict[Partition, RatFunc]:
        return dict(self._coeffs)

    def coeff(self, lam: Iterable[int]) -> RatFunc:
        return self._coeffs.get(tuple(lam), RatFunc.zero())

    def items(self):
        """(partition, coefficient) pairs in descending lex order of partitions."""
        return sorted(self._coeffs.items(), reverse=True)

    def support(self) -> list[Partition]:
        return sorted(self._coeffs, reverse=True)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurVector):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self._coeffs.items())))

    # -- linear structure ----------------------------------------------------

    def _check_degree(self, other: "SchurVector") -> None:
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "SchurVector") -> "SchurVector":
        if not isinstance(other, SchurVector):
            return NotImplemented
        self._check_degree(other)
        out = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            v = out[lam] + c if lam in out else c
            if v.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = v
        deg = self.degree if self._coeffs else other.degree
        return SchurVector._raw(deg, out)

    def __neg__(self) -> "SchurVector":
        return SchurVector._raw(self.degree, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "SchurVector":
        c = _rf(c)
        if c.is_zero():
            return SchurVector.zero(self.degree)
        return SchurVector._raw(self.degree, {k: v * c for k, v in self._coeffs.items()})

    def __mul__(self, c: Scalar) -> "SchurVector":
        if isinstance(c, SchurVector):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def map_coeffs(self, fn: Callable[[RatFunc], RatFunc]) -> "SchurVector":
        out = {}
        for k, v in self._coeffs.items():
            w = fn(v)
            if not w.is_zero():
                out[k] = w
        return SchurVector._raw(self.degree, out)

    def subs_monomial(self, q=(1, 0), t=(0, 1)) -> "SchurVector":
        """Apply q -> q^q[0] t^q[1], t -> q^t[0] t^t[1] to every coefficient."""
        return self.map_coeffs(lambda c: c.subs_monomial(q, t))

    def invert_params(self) -> "SchurVector":
        """q -> 1/q, t -> 1/t."""
        return self.map_coeffs(lambda c: c.invert_vars(True, True))

    def swap_qt(self) -> "SchurVector":
        return self.map_coeffs(lambda c: c.swap_qt())

    def evaluate(self, q=None, t=None) -> "SchurVector":
        return self.map_coeffs(lambda c: c.evaluate(q, t))

    # -- output --------------------------------------------------------------

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "coeffs": [{"partition": list(lam), "value": c.to_json()} for lam, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "SchurVector":
        return cls(int(obj["degree"]),
                   {tuple(d["partition"]): RatFunc.from_json(d["value"]) for d in obj["coeffs"]})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for lam, c in self.items():
            name = "s[" + ",".join(map(str, lam)) + "]"
            parts.append(name if c.is_one() else f"({c}){name}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SchurVector({self})"


def schur_sum(vectors: Iterable[tuple[Scalar, SchurVector]], degree: int) -> SchurVector:
    """Linear combination, each Schur coefficient summed once with grouped denominators."""
    acc: dict[Partition, list[RatFunc]] = {}
    for c, v in vectors:
        c = _rf(c)
        if c.is_zero():
            continue
        for lam, x in v._coeffs.items():
            acc.setdefault(lam, []).append(x * c)
    out = {}
    for lam, xs in acc.items():
        s = rf_sum(xs)
        if not s.is_zero():
            out[lam] = s
    return SchurVector._raw(degree, out)


def omega(f: SchurVector) -> SchurVector:
    """omega(s_lam) = s_{lam'}."""
    return SchurVector._raw(f.degree, {conjugate(lam): c for lam, c in f._coeffs.items()})


def hall_inner(f: SchurVector, g: SchurVector) -> RatFunc:
    """Hall scalar product; the Schur basis is orthonormal."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    return rf_sum(c * g._coeffs[lam] for lam, c in f._coeffs.items() if lam in g._coeffs)


@dataclass(frozen=True)
class Positivity:
    """Result of a Schur positivity test; falsy when a witness was found."""
    positive: bool
    witness: tuple[Partition, RatFunc] | None = None

    def __bool__(self) -> bool:
        return self.positive


def coeff_in_N_qt(c: RatFunc) -> bool:
    return c.is_laurent() and c.num.in_N_qt()


def is_schur_positive(f: SchurVector) -> Positivity:
    """Every coefficient a polynomial in q, t with nonnegative integer coefficients.

    The witness is the first offending (partition, coefficient) in descending lex order.
    """
    for lam, c in f.items():
        if not coeff_in_N_qt(c):
            return Positivity(False, (lam, c))
    return Positivity(True)


# ---------------------------------------------------------------------------
# Hall-Littlewood side

_HL_LOCK = threading.Lock()
_HL_CACHE: dict[Partition, SchurVector] = {}


def modified_hl(mu: Iterable[int]) -> SchurVector:
    """H~_mu[X;0,t] = sum_lam K~_{lam,mu}(t) s_lam."""
    mu = partition(mu)
    v = _HL_CACHE.get(mu)
    if v is None:
        col = kostka_foulkes_column(mu)
        v = SchurVector._raw(sum(mu), {lam: RatFunc.from_lp(p) for lam, p in col.items()})
        with _HL_LOCK:
            v = _HL_CACHE.setdefault(mu, v)
    return v


def modified_hl_inverted(mu: Iterable[int]) -> SchurVector:
    """omega H~_mu[X;0,1/t]: coefficient of s_{lam'} is K~_{lam,mu}(1/t)."""
    mu = partition(mu)
    col = kostka_foulkes_column(mu)
    return SchurVector._raw(sum(mu), {conjugate(lam): RatFunc.from_lp(p.invert_vars(False, True))
                                      for lam, p in col.items()})


# ---------------------------------------------------------------------------
# two-column Macdonald polynomials


def mac_to_hl_coeff(a: int, b: int, r: int) -> LaurentPoly:
    """Coefficient of H~_{2^r 1^{2a+b-2r}}[X;0,t] in H~_{2^a 1^b}[X;q,t] (0 <= r <= a).

    q^{a-r} t^{-(a-r)(a+b-r)} (q t^{-(a+b)}; t)_r (t^{-a}; t)_r / (t^{-r}; t)_r, where
    the last quotient equals t^{r^2 - a r} [a choose r]_t.
    """
    if not 0 <= r <= a:
        return LaurentPoly()
    head = LaurentPoly.monomial(a - r, -(a - r) * (a + b - r) + r * r - a * r)
    return head * poch_mono(1, -(a + b), r) * tbinomial(a, r)


def hl_to_mac_coeff(a: int, b: int, m: int) -> RatFunc:
    """Coefficient of H~_{2^m 1^{2a+b-2m}}[X;q,t] in H~_{2^a 1^b}[X;0,t] (0 <= m <= a)."""
    if not 0 <= m <= a:
        return RatFunc.zero()
    sign = -1 if m % 2 else 1
    num = LaurentPoly.monomial(-m, binom2(a + b + 1) - binom2(a + b + 1 - m), sign) * tbinomial(a, m)
    den = poch_mono(-1, 2 * a + b - 2 * m + 1, m) * poch_mono(-1, a + b - m, a - m)
    return RatFunc(num, den)


_MAC_LOCK = threading.Lock()
_MAC_CACHE: dict[tuple[int, int], SchurVector] = {}


def macdonald_two_col(a: int, b: int) -> SchurVector:
    """H~_{2^a 1^b}[X;q,t] from its Hall-Littlewood expansion.

    Raises ArithmeticError if a Schur coefficient is not in N[q,t].
    """
    key = (a, b)
    v = _MAC_CACHE.get(key)
    if v is not None:
        return v
    n = 2 * a + b
    acc: dict[Partition, dict] = {}
    for r in range(a + 1):
        c = mac_to_hl_coeff(a, b, r)
        for lam, k in kostka_foulkes_column(two_col(r, n - 2 * r)).items():
            d = acc.setdefault(lam, {})
            for mono, x in (c * k).items():
                d[mono] = d.get(mono, 0) + x
    coeffs = {}
    for lam, d in acc.items():
        p = LaurentPoly(d)
        if p.is_zero():
            continue
        if not p.in_N_qt():
            raise ArithmeticError(f"Macdonald coefficient of s{lam} in H~_{two_col(a, b)} "
                                  f"is not in N[q,t]: {p}")
        coeffs[lam] = RatFunc.from_lp(p)
    v = SchurVector._raw(n, coeffs)
    with _MAC_LOCK:
        v = _MAC_CACHE.setdefault(key, v)
    return v


def macdonald(mu: Iterable[int]) -> SchurVector:
    """Two-column modified Macdonald polynomial indexed by a partition with parts <= 2."""
    mu = partition(mu)
    if any(x > 2 for x in mu):
        raise ValueError(f"Macdonald polynomials are only available for two-column shapes, got {mu}")
    a = mu.count(2)
    return macdonald_two_col(a, len(mu) - a)


def hl_in_macdonald_coeffs(a: int, b: int) -> list[RatFunc]:
    """[D_0, ..., D_a] with H~_{2^a1^b}[X;0,t] = sum_m D_m H~_{2^m 1^{2a+b-2m}}[X;q,t]."""
    return [hl_to_mac_coeff(a, b, m) for m in range(a + 1)]


def reconstruct_hl_from_macdonald(a: int, b: int) -> SchurVector:
    n = 2 * a + b
    coeffs = hl_in_macdonald_coeffs(a, b)
    return schur_sum(((d, macdonald_two_col(m, n - 2 * m)) for m, d in enumerate(coeffs)), n)


def check_hl_reconstruction(a: int, b: int) -> bool:
    return reconstruct_hl_from_macdonald(a, b) == modified_hl(two_col(a, b))


def check_cd_inverse(a: int, b: int) -> bool:
    """C_{a,a} D_{a,a} = 1 and sum_{r=m}^a C_{a,r} D_{r,m} = 0 for m < a.

    D_{r,m} is taken for the partition 2^r 1^{2a+b-2r}.
    """
    n = 2 * a + b
    if not (RatFunc.from_lp(mac_to_hl_coeff(a, b, a)) * hl_to_mac_coeff(a, b, a)).is_one():
        return False
    for m in range(a):
        total = rf_sum(hl_to_mac_coeff(r, n - 2 * r, m) * mac_to_hl_coeff(a, b, r)
                       for r in range(m, a + 1))
        if not total.is_zero():
            return False
    return True


def macdonald_column(n: int, max_n: int = 20) -> SchurVector:
    """(t;t)_n h_n[X/(1-t)] via the principal specialization of Schur functions."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the bound {max_n}")
    tt = tfactorial(n)
    out = {}
    for lam in enumerate_partitions(n, max_n):
        den = ONE
        for h in hook_lengths(lam):
            den = den * LaurentPoly({(0, 0): 1, (0, h): -1})
        quo = tt.divexact(den)
        if quo is None:
            raise ArithmeticError(f"hook product does not divide (t;t)_{n} for {lam}")
        out[lam] = RatFunc.from_lp(quo.shift(0, n_stat(lam)))
    return SchurVector._raw(n, out)


def check_symmetry_relation(a: int, b: int) -> bool:
    """H~_mu = T_mu omega H~_mu[X; 1/q, 1/t] for mu = 2^a 1^b."""
    mac = macdonald_two_col(a, b)
    rhs = omega(mac.invert_params()).scale(t_mu(two_col(a, b)))
    return mac == rhs


def _specialize(v: SchurVector, r: int, s: int) -> SchurVector:
    return v.subs_monomial(q=(0, r), t=(0, s))


def check_b_determines_h(n: int, r: int, s: int) -> bool:
    """For two-column lam, mu of n: equal B at (t^r, t^s) forces equal H~ at (t^r, t^s)."""
    shapes = two_col_partitions(n)
    bvals = {mu: b_mu(mu).subs_monomial(q=(0, r), t=(0, s)) for mu in shapes}
    spec: dict[Partition, SchurVector] = {}
    for i, lam in enumerate(shapes):
        for mu in shapes[i:]:
            if bvals[lam] != bvals[mu]:
                continue
            for nu in (lam, mu):
                if nu not in spec:
                    spec[nu] = _specialize(macdonald(nu), r, s)
            if spec[lam] != spec[mu]:
                return False
    return True


def b_equal_pairs(n: int, r: int, s: int) -> list[tuple[Partition, Partition]]:
    """Distinct two-column pairs of n whose B agree at (t^r, t^s)."""
    shapes = two_col_partitions(n)
    bvals = {mu: b_mu(mu).subs_monomial(q=(0, r), t=(0, s)) for mu in shapes}
    return [(lam, mu) for i, lam in enumerate(shapes) for mu in shapes[i + 1:]
            if bvals[lam] == bvals[mu]]
