"""Creation operators and the lowering/raising operators on Lambda[y_1..y_k].

Symmetric functions are kept in the Schur basis.  Adding one weighted letter
to the alphabet is done with the single-letter coproduct:

    s_lam[X + c w] = sum over horizontal strips lam/mu of s_mu (c w)^|lam/mu|
    s_lam[X - c w] = sum over vertical strips lam/mu of s_mu (-c w)^|lam/mu|

so no general plethysm is needed.  Auxiliary letters (z^-1 for the creation
operators, y_k for the lowering operator) are tracked as explicit exponents in
the term map and their coefficients are read off directly.

All operators here preserve Z[q, 1/q], so coefficients are LaurentPoly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .exact import LaurentPoly, RatFunc, binom2
from .exact.poly import ONE, Q, ZERO
from .partitions import (Partition, conjugate, enumerate_partitions, horizontal_strips, n_stat,
                         partition, two_col, vertical_strips)
from .symfunc import SchurVector, modified_hl, omega

Key = tuple[Partition, tuple[int, ...]]

DEFAULT_EXTRA_DEGREE = 8
LEMMA_A1_MAX_N = 6
LEMMA_A4_MAX = 4


class TruncationError(ArithmeticError):
    """A verification consulted a coefficient that was dropped by the degree cap."""


def _lp(c) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, RatFunc):
        p = c.as_laurent()
        if p is None:
            raise ValueError(f"coefficient {c} is not a Laurent polynomial")
        return p
    return LaurentPoly.const(c)


def _add(acc: dict, key, c: LaurentPoly) -> None:
    old = acc.get(key)
    acc[key] = c if old is None else old + c


def _clean(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if not v.is_zero()}


class PolySym:
    """An element of Lambda[y_1..y_k], truncated at symmetric degree degree_cap.

    terms maps (partition, y exponents) to a coefficient.  ``truncated`` is set
    when some operation dropped a term of symmetric degree above the cap.
    """

    __slots__ = ("k", "degree_cap", "terms", "truncated")

    def __init__(self, k: int = 0, degree_cap: int | None = None,
                 terms: Mapping | None = None, truncated: bool = False):
        if k < 0:
            raise ValueError("k must be nonnegative")
        acc: dict[Key, LaurentPoly] = {}
        for (lam, ys), c in (terms or {}).items():
            lam, ys = partition(lam), tuple(int(e) for e in ys)
            if len(ys) != k or any(e < 0 for e in ys):
                raise ValueError(f"bad y-exponent vector {ys} for k={k}")
            _add(acc, (lam, ys), _lp(c))
        acc = _clean(acc)
        top = max((sum(lam) for lam, _ in acc), default=0)
        if degree_cap is None:
            degree_cap = top + DEFAULT_EXTRA_DEGREE
        if top > degree_cap:
            raise ValueError(f"term of degree {top} exceeds degree_cap {degree_cap}")
        self.k = k
        self.degree_cap = degree_cap
        self.terms = acc
        self.truncated = truncated

    @classmethod
    def _raw(cls, k: int, cap: int, terms: dict, truncated: bool) -> "PolySym":
        obj = cls.__new__(cls)
        obj.k, obj.degree_cap, obj.terms, obj.truncated = k, cap, _clean(terms), truncated
        return obj

    @classmethod
    def one(cls, k: int = 0, degree_cap: int = DEFAULT_EXTRA_DEGREE) -> "PolySym":
        return cls._raw(k, degree_cap, {((), (0,) * k): ONE}, False)

    @classmethod
    def from_schur(cls, v: SchurVector, k: int = 0, degree_cap: int | None = None) -> "PolySym":
        return cls(k, degree_cap, {(lam, (0,) * k): c for lam, c in v.coeffs.items()})

    def to_schur(self, degree: int | None = None) -> SchurVector:
        if self.k:
            raise ValueError("to_schur needs k = 0")
        degs = {sum(lam) for lam, _ in self.terms}
        if degree is None:
            if len(degs) > 1:
                raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
            degree = degs.pop() if degs else 0
        elif degs - {degree}:
            raise ValueError(f"terms outside degree {degree}")
        return SchurVector(degree, {lam: RatFunc.from_lp(c) for (lam, _), c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(lam) for lam, _ in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySym):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def _combine(self, other: "PolySym", sign: int) -> "PolySym":
        if self.k != other.k:
            raise ValueError(f"k mismatch: {self.k} vs {other.k}")
        acc = dict(self.terms)
        for key, c in other.terms.items():
            _add(acc, key, c if sign > 0 else -c)
        return PolySym._raw(self.k, min(self.degree_cap, other.degree_cap), acc,
                            self.truncated or other.truncated)

    def __add__(self, other: "PolySym") -> "PolySym":
        return self._combine(other, 1)

    def __sub__(self, other: "PolySym") -> "PolySym":
        return self._combine(other, -1)

    def __neg__(self) -> "PolySym":
        return self.scale(-1)

    def scale(self, c) -> "PolySym":
        c = _lp(c)
        return PolySym._raw(self.k, self.degree_cap, {key: v * c for key, v in self.terms.items()},
                            self.truncated)

    def mul_y(self, i: int, e: int = 1) -> "PolySym":
        """Multiply by y_i^e (1-based index)."""
        if not 1 <= i <= self.k:
            raise IndexError(f"y_{i} out of range for k={self.k}")
        j = i - 1
        terms = {(lam, ys[:j] + (ys[j] + e,) + ys[j + 1:]): c for (lam, ys), c in self.terms.items()}
        return PolySym._raw(self.k, self.degree_cap, terms, self.truncated)

    def with_cap(self, degree_cap: int) -> "PolySym":
        if self.degree > degree_cap:
            raise ValueError("new cap is below the current degree")
        return PolySym._raw(self.k, degree_cap, dict(self.terms), self.truncated)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (lam, ys), c in sorted(self.terms.items(), reverse=True):
            y = "".join(f"y{i + 1}^{e}" if e > 1 else f"y{i + 1}" for i, e in enumerate(ys) if e)
            parts.append(f"({c})s[{','.join(map(str, lam))}]{y}")
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# single-letter alphabet shifts and Pieri products


@lru_cache(maxsize=None)
def _removed_hstrips(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """(mu, |lam/mu|) for every mu with lam/mu a horizontal strip."""
    n = len(lam)
    ranges = [range(lam[i + 1] if i + 1 < n else 0, lam[i] + 1) for i in range(n)]
    out = []
    for mu in product(*ranges):
        out.append((tuple(x for x in mu if x), sum(lam) - sum(mu)))
    return tuple(out)


@lru_cache(maxsize=None)
def _removed_vstrips(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple((conjugate(mu), j) for mu, j in _removed_hstrips(conjugate(lam)))


def _shift(terms: dict, slot: int, q_exp: int, sign: int) -> dict:
    """F -> F[X + sign * q^q_exp * w] where w is the auxiliary letter at ``slot``."""
    acc: dict = {}
    strips = _removed_hstrips if sign > 0 else _removed_vstrips
    for (lam, ys), c in terms.items():
        for mu, j in strips(lam):
            w = c if j == 0 else c * LaurentPoly.monomial(q_exp * j, 0, (-1) ** j if sign < 0 else 1)
            _add(acc, (mu, ys[:slot] + (ys[slot] + j,) + ys[slot + 1:]), w)
    return _clean(acc)


@lru_cache(maxsize=None)
def _pieri(mu: Partition, i: int, vertical: bool) -> tuple[Partition, ...]:
    return tuple(vertical_strips(mu, i) if vertical else horizontal_strips(mu, i))


def _require_k0(f: PolySym) -> None:
    if f.k:
        raise ValueError("creation operators act on PolySym with k = 0")


def exp_pleth(letters: Sequence[tuple[int, int]] = (), degree_cap: int = 4,
              x_sign: int = 1) -> list[PolySym]:
    """Graded pieces h_i[x_sign*X + sum_j s_j q^e_j w_j] for i <= degree_cap.

    ``letters`` lists (s_j, e_j) with s_j = +-1; the auxiliary letter w_j is
    tracked as the j-th y-exponent of piece i.  Uses Exp[A + B] = Exp[A] Exp[B],
    Exp[X] = sum h_r, Exp[-X] = sum (-1)^r e_r, Exp[c w] = sum c^n w^n and
    Exp[-c w] = 1 - c w.
    """
    if x_sign not in (1, -1):
        raise ValueError("x_sign must be +1 or -1")
    k = len(letters)
    # scalar part: {exponent vector: coefficient}, truncated at total degree cap
    scal: dict[tuple[int, ...], LaurentPoly] = {(0,) * k: ONE}
    for j, (s, e) in enumerate(letters):
        if s not in (1, -1):
            raise ValueError("letter signs must be +1 or -1")
        ns: dict = {}
        for ys, c in scal.items():
            room = degree_cap - sum(ys)
            top = room if s > 0 else min(room, 1)
            for n in range(top + 1):
                coeff = LaurentPoly.monomial(e * n, 0, 1 if s > 0 or n == 0 else -1)
                _add(ns, ys[:j] + (ys[j] + n,) + ys[j + 1:], c * coeff)
        scal = _clean(ns)
    pieces: list[dict] = [{} for _ in range(degree_cap + 1)]
    for r in range(degree_cap + 1):
        lam = (r,) if x_sign > 0 else (1,) * r
        sgn = 1 if x_sign > 0 or r % 2 == 0 else -1
        for ys, c in scal.items():
            i = r + sum(ys)
            if i <= degree_cap:
                _add(pieces[i], (lam if r else (), ys), c if sgn > 0 else -c)
    return [PolySym._raw(k, degree_cap, p, False) for p in pieces]


def _creation(m: int, f: PolySym, minus_q: bool) -> PolySym:
    _require_k0(f)
    work = {(lam, (0,)): c for (lam, _), c in f.terms.items()}
    if minus_q:
        # X - (q - 1) z^-1, then multiply by Exp[-zX]
        work = _shift(_shift(work, 0, 1, -1), 0, 0, 1)
    else:
        # X - (1 - q) z^-1, then multiply by Exp[zX]
        work = _shift(_shift(work, 0, 0, -1), 0, 1, 1)
    acc: dict = {}
    truncated = f.truncated
    cap = f.degree_cap
    for (mu, (j,)), c in work.items():
        i = m + j
        if i < 0:
            continue
        if sum(mu) + i > cap:
            truncated = True
            continue
        if minus_q and i % 2:
            c = -c
        for lam in _pieri(mu, i, minus_q):
            _add(acc, (lam, ()), c)
    return PolySym._raw(0, cap, acc, truncated)


def creation_h(m: int, f: PolySym) -> PolySym:
    """H_m F = F[X - (1-q)/z] Exp[zX] at z^m."""
    return _creation(m, f, False)


def creation_b(m: int, f: PolySym) -> PolySym:
    """B_m F = F[X - (q-1)/z] Exp[-zX] at z^m."""
    return _creation(m, f, True)


def omega_poly(f: PolySym) -> PolySym:
    return PolySym._raw(f.k, f.degree_cap, {(conjugate(lam), ys): c for (lam, ys), c in f.terms.items()},
                        f.truncated)


# ---------------------------------------------------------------------------
# Demazure-Lusztig type operators and d_+, d_-


@lru_cache(maxsize=None)
def _upsilon_mono(alpha: int, beta: int) -> tuple[tuple[int, int, LaurentPoly], ...]:
    """Upsilon applied to u^alpha v^beta, as (u exponent, v exponent, coefficient)."""
    d = alpha + beta + 1
    c = [ZERO] * (d + 1)
    c[alpha + 1] = c[alpha + 1] + (Q - 1)
    c[beta] = c[beta] + 1
    c[beta + 1] = c[beta + 1] - Q
    # numerator = sum c_j u^j v^(d-j); divide by (v - u) via prefix sums
    out = []
    acc = ZERO
    for j in range(d):
        acc = acc + c[j]
        if not acc.is_zero():
            out.append((j, d - 1 - j, acc))
    if not (acc + c[d]).is_zero():
        raise ArithmeticError(f"Upsilon: inexact division for u^{alpha} v^{beta}")
    return tuple(out)


def upsilon(f: PolySym, i: int, j: int) -> PolySym:
    """((q-1) u P(u,v) + (v - q u) P(v,u)) / (v - u) with u = y_i, v = y_j."""
    if not (1 <= i <= f.k and 1 <= j <= f.k) or i == j:
        raise IndexError(f"bad variable pair ({i}, {j}) for k={f.k}")
    i, j = i - 1, j - 1
    acc: dict = {}
    for (lam, ys), c in f.terms.items():
        for eu, ev, w in _upsilon_mono(ys[i], ys[j]):
            nys = list(ys)
            nys[i], nys[j] = eu, ev
            _add(acc, (lam, tuple(nys)), c * w)
    return PolySym._raw(f.k, f.degree_cap, acc, f.truncated)


def hecke_t(f: PolySym, i: int) -> PolySym:
    """T_i = Upsilon on (y_i, y_{i+1})."""
    return upsilon(f, i, i + 1)


def d_plus(f: PolySym) -> PolySym:
    """V_k -> V_{k+1}: T_1 T_2 ... T_k (F[X + (q-1) y_{k+1}])."""
    k = f.k
    work = {(lam, ys + (0,)): c for (lam, ys), c in f.terms.items()}
    work = _shift(_shift(work, k, 1, 1), k, 0, -1)
    g = PolySym._raw(k + 1, f.degree_cap, work, f.truncated)
    for i in range(k, 0, -1):
        g = hecke_t(g, i)
    return g


def d_minus(f: PolySym) -> PolySym:
    """V_k -> V_{k-1}: -F[X - (q-1) y_k] sum_i (-1/y_k)^i e_i[X] at y_k^-1.

    A term y_k^e picks up e_{e+1} with sign (-1)^e.
    """
    k = f.k
    if k < 1:
        raise ValueError("d_minus needs k >= 1")
    work = _shift(_shift(f.terms, k - 1, 1, -1), k - 1, 0, 1)
    acc: dict = {}
    truncated = f.truncated
    cap = f.degree_cap
    for (mu, ys), c in work.items():
        e = ys[-1]
        if sum(mu) + e + 1 > cap:
            truncated = True
            continue
        w = -c if e % 2 else c
        for lam in _pieri(mu, e + 1, True):
            _add(acc, (lam, ys[:-1]), w)
    return PolySym._raw(k - 1, cap, acc, truncated)


# ---------------------------------------------------------------------------
# verifications


def _check(f: PolySym) -> PolySym:
    if f.truncated:
        raise TruncationError("degree cap too small: a consulted term was truncated")
    return f


def _result(ok: bool, witness, detail: bool):
    return (ok, None if ok else witness) if detail else ok


def creation_product(mu: Iterable[int], minus_q: bool = False, degree_cap: int | None = None) -> PolySym:
    """H_{mu_1} ... H_{mu_l}(1) (or the B_m product), rightmost applied first."""
    mu = tuple(mu)
    f = PolySym.one(0, sum(mu) if degree_cap is None else degree_cap)
    op = creation_b if minus_q else creation_h
    for m in reversed(mu):
        f = op(m, f)
    return _check(f)


def hl_at_inverse_q(mu: Iterable[int]) -> SchurVector:
    """q^n(mu) H~_mu[X; 0, 1/q]."""
    mu = partition(mu)
    v = modified_hl(mu).subs_monomial(q=(1, 0), t=(-1, 0))
    return v * LaurentPoly.monomial(n_stat(mu), 0)


def verify_lemma_a1(mu: Iterable[int], max_n: int = LEMMA_A1_MAX_N, detail: bool = False):
    """H_{mu_1} ... H_{mu_l}(1) = q^n(mu) H~_mu[X; 0, 1/q]."""
    mu = partition(mu)
    if sum(mu) > max_n:
        raise ValueError(f"|mu| = {sum(mu)} exceeds the cap {max_n}")
    got = creation_product(mu).to_schur(sum(mu))
    want = hl_at_inverse_q(mu)
    return _result(got == want, {"mu": list(mu), "got": str(got), "expected": str(want)}, detail)


def lowering_chain(r: Sequence[int], degree_cap: int | None = None) -> PolySym:
    """d_-^m y_1^r_1 ... y_m^r_m d_+^m (1) with m = len(r)."""
    m = len(r)
    cap = m + sum(r) if degree_cap is None else degree_cap
    f = PolySym.one(0, cap)
    for _ in range(m):
        f = d_plus(f)
    for i, e in enumerate(r, 1):
        if e:
            f = f.mul_y(i, e)
    for _ in range(m):
        f = d_minus(f)
    return _check(f)


def verify_lowering_identity(r: Sequence[int], detail: bool = False):
    """d_-^m y^r d_+^m (1) = (-1)^m B_{r_1+1} ... B_{r_m+1}(1)."""
    r = tuple(r)
    lhs = lowering_chain(r)
    rhs = creation_product([e + 1 for e in r], minus_q=True, degree_cap=lhs.degree_cap)
    if len(r) % 2:
        rhs = -rhs
    return _result(lhs == rhs, {"r": list(r), "lhs": str(lhs), "rhs": str(rhs)}, detail)


def lemma_a4_lhs(a: int, b: int) -> SchurVector:
    """d_-^{a+b} y_1 ... y_a d_+^{a+b}(1), as a Schur vector of degree 2a+b."""
    return lowering_chain((1,) * a + (0,) * b).to_schur(2 * a + b)


def lemma_a4_rhs(a: int, b: int) -> SchurVector:
    """(-1)^a q^n(2^a 1^b) omega H~_{2^a 1^b}[X; 0, 1/q]."""
    v = omega(hl_at_inverse_q(two_col(a, b)))
    return -v if a % 2 else v


def verify_lemma_a4(a: int, b: int, max_total: int = LEMMA_A4_MAX, detail: bool = False):
    """Left side built with d_+ in place of the starred raising operator (both fix 1)."""
    if a < 0 or b < 0 or a + b == 0:
        raise ValueError("need a, b >= 0 with a + b >= 1")
    if a + b > max_total:
        raise ValueError(f"a + b = {a + b} exceeds the cap {max_total}")
    got, want = lemma_a4_lhs(a, b), lemma_a4_rhs(a, b)
    return _result(got == want, {"a": a, "b": b, "got": str(got), "expected": str(want)}, detail)


def verify_b_h_relation(m: int, lam: Iterable[int], detail: bool = False):
    """B_m s_lam = (-1)^m omega H_m omega s_lam."""
    lam = partition(lam)
    cap = sum(lam) + max(m, 0)
    f = PolySym(0, cap, {(lam, ()): 1})
    lhs = _check(creation_b(m, f))
    rhs = _check(omega_poly(creation_h(m, omega_poly(f))))
    if m % 2:
        rhs = -rhs
    return _result(lhs == rhs, {"m": m, "lam": list(lam), "lhs": str(lhs), "rhs": str(rhs)}, detail)


def hecke_defect(f: PolySym, i: int) -> PolySym:
    """T_i^2 F - (1 - q) T_i F - q F, which vanishes identically."""
    tf = hecke_t(f, i)
    return hecke_t(tf, i) - tf.scale(1 - Q) - f.scale(Q)


def thm41_from_lowering(a: int, b: int) -> SchurVector:
    """Rebuild (-1)^a nabla H~_{2^a 1^b}[X; 0, t] from the lowering-operator side.

    Starts from L = d_-^{a+b} y_1..y_a d_+^{a+b}(1) = (-1)^a q^n omega H~[X; 0, 1/q],
    forms t^a q^{C(2a+b,2) + C(a+b,2)} omega H~[X; 0, 1/q] and swaps q and t.
    """
    n = n_stat(two_col(a, b))
    scale = LaurentPoly.monomial(binom2(2 * a + b) + binom2(a + b) - n, a, -1 if a % 2 else 1)
    return (lemma_a4_lhs(a, b) * scale).swap_qt()


def verify_thm41_composite(a: int, b: int, detail: bool = False):
    from .nabla import nabla_pow
    got = thm41_from_lowering(a, b)
    v = nabla_pow(modified_hl(two_col(a, b)))
    want = -v if a % 2 else v
    return _result(got == want, {"a": a, "b": b, "got": str(got), "expected": str(want)}, detail)


def lemma_a1_cases(max_n: int = LEMMA_A1_MAX_N) -> list[Partition]:
    return [mu for n in range(1, max_n + 1) for mu in enumerate_partitions(n)]


def lowering_cases(max_m: int = LEMMA_A4_MAX) -> list[tuple[int, ...]]:
    return [r for m in range(1, max_m + 1) for r in product((0, 1), repeat=m)]
