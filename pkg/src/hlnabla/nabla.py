"""The nabla operator on the span of two-column Macdonald polynomials.

Expansion in the Macdonald basis goes through Hall-Littlewood coordinates:
a Schur vector is first written in the basis H~_{2^s 1^{n-2s}}[X;0,t] by
forward substitution (Kostka-Foulkes matrices are unitriangular up to the
monomial pivots t^{n(mu)}), and the Macdonald coordinates then come from a
fraction-free solve against the triangular change of basis given by
:func:`mac_to_hl_coeff`.  Nothing here uses the closed-form inverse
coefficients of :func:`hl_to_mac_coeff`, so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from .exact import ONE, LaurentPoly, RatFunc, binom2, canonical, poch_mono, rf_sum, tbinomial
from .linalg import bareiss_solve, common_denominator
from .partitions import Partition, conjugate, t_mu, two_col
from .symfunc import (SchurVector, coeff_in_N_qt, is_schur_positive, mac_to_hl_coeff,
                      macdonald_two_col, modified_hl, modified_hl_inverted, omega, schur_sum)
from .tableaux import _chains, cocharge

__all__ = [
    "NotInSpanError", "TwoColExpansion", "expand_in_two_col_macdonald", "nabla_pow",
    "TransitionMatrix", "transition_matrix", "matrix_power", "matrix_power_entry",
    "matrix_power_entry_paths", "verify_thm_4_1", "verify_thm_5_1", "verify_main_i",
    "verify_main_ii", "verify_dominance_difference", "s_a_value", "s_a_summand_coeff",
    "residue_pair_check", "nabla_power_counterexample", "nabla_pow_hl_formula", "s_a_target",
    "residue_indices", "residue_closed_forms", "residue_by_limit", "sa_poles", "m_entry",
    "hl_coordinates", "thm41_scale", "main_ii_coeffs", "cocharge_sum_inverted",
]


class NotInSpanError(ValueError):
    """The input is not in the span of the two-column Macdonald polynomials."""


def _mu(n: int, s: int) -> Partition:
    return two_col(s, n - 2 * s)


# ---------------------------------------------------------------------------
# expansion


@dataclass
class TwoColExpansion:
    """sum_r coeffs[r] * H~_{2^r 1^{n-2r}}[X;q,t]."""

    degree: int
    coeffs: list[RatFunc]
    # fraction-free form: coeffs[r] == numerators[r] / denominator
    numerators: list[LaurentPoly] = field(default_factory=list, repr=False)
    denominator: LaurentPoly = field(default=ONE, repr=False)

    def reconstruct(self) -> SchurVector:
        n = self.degree
        return schur_sum(((c, macdonald_two_col(r, n - 2 * r)) for r, c in enumerate(self.coeffs)), n)

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [c.to_json() for c in self.coeffs]}


def hl_coordinates(f: SchurVector) -> list[RatFunc]:
    """y with f = sum_s y_s H~_{2^s 1^{n-2s}}[X;0,t]; raises NotInSpanError."""
    n = f.degree
    big_r = n // 2
    cols = [modified_hl(_mu(n, s)).coeffs for s in range(big_r + 1)]
    y: list[RatFunc] = []
    for u in range(big_r + 1):
        lam = _mu(n, u)
        acc = [f.coeff(lam)]
        for s in range(u):
            k = cols[s].get(lam)
            if k is not None and not y[s].is_zero():
                acc.append(-(y[s] * k))
        pivot = cols[u][lam].as_laurent()  # the monomial t^{n(mu_u)}
        y.append(rf_sum(acc) * RatFunc.from_lp(pivot ** -1))
    # every other Schur coefficient must agree as well
    den = common_denominator(y)
    ys = [(c * den).as_laurent() for c in y]
    support = set(f.coeffs)
    for c in cols:
        support.update(c)
    for lam in support:
        lhs = LaurentPoly()
        for s, col in enumerate(cols):
            k = col.get(lam)
            if k is not None and not ys[s].is_zero():
                lhs = lhs + ys[s] * k.as_laurent()
        if RatFunc(lhs, den) != f.coeff(lam):
            raise NotInSpanError(f"degree-{n} input is not in the two-column Macdonald span "
                                 f"(mismatch at s{lam})")
    return y


def _change_of_basis(n: int) -> list[list[LaurentPoly]]:
    """cb[r][s] = coefficient of HL_s in Mac_r (lower triangular)."""
    big_r = n // 2
    return [[mac_to_hl_coeff(r, n - 2 * r, s) for s in range(big_r + 1)] for r in range(big_r + 1)]


def expand_in_two_col_macdonald(f: SchurVector) -> TwoColExpansion:
    """Coordinates of f in the basis H~_{2^r 1^{n-2r}}[X;q,t], r = 0..n/2."""
    n = f.degree
    big_r = n // 2
    if f.is_zero():
        zero = [RatFunc.zero()] * (big_r + 1)
        return TwoColExpansion(n, zero, [LaurentPoly()] * (big_r + 1), ONE)
    y = hl_coordinates(f)
    den_y = common_denominator(y)
    rhs = [(c * den_y).as_laurent() for c in y]
    cb = _change_of_basis(n)
    # y_s = sum_r cb[r][s] x_r, i.e. the transpose system
    a = [[cb[r][s] for r in range(big_r + 1)] for s in range(big_r + 1)]
    x_num, det = bareiss_solve(a, rhs)
    total_den = det * den_y
    coeffs = [canonical(xn, total_den) if not xn.is_zero() else RatFunc.zero() for xn in x_num]
    return TwoColExpansion(n, coeffs, x_num, total_den)


def nabla_pow(f: SchurVector, k: int = 1) -> SchurVector:
    """nabla^k f for f in the two-column Macdonald span."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = f.degree
    big_r = n // 2
    ex = expand_in_two_col_macdonald(f)
    if f.is_zero():
        return f
    cb = _change_of_basis(n)
    scaled = [ex.numerators[r] * t_mu(_mu(n, r)) ** k for r in range(big_r + 1)]
    # new HL coordinates, all over the common denominator ex.denominator
    p = []
    for s in range(big_r + 1):
        acc = LaurentPoly()
        for r in range(s, big_r + 1):
            if not scaled[r].is_zero() and not cb[r][s].is_zero():
                acc = acc + cb[r][s] * scaled[r]
        p.append(acc)
    return _hl_combination(n, p, ex.denominator)


def _hl_combination(n: int, numerators: Sequence[LaurentPoly], den: LaurentPoly) -> SchurVector:
    """(sum_s numerators[s] H~_{2^s 1^{n-2s}}[X;0,t]) / den, one canonicalization per Schur term."""
    acc: dict[Partition, LaurentPoly] = {}
    for s, ps in enumerate(numerators):
        if ps.is_zero():
            continue
        for lam, k in modified_hl(_mu(n, s)).coeffs.items():
            term = ps * k.as_laurent()
            acc[lam] = acc[lam] + term if lam in acc else term
    out = {lam: canonical(v, den) for lam, v in acc.items() if not v.is_zero()}
    return SchurVector._raw(n, out)


def nabla_pow_hl_formula(a: int, b: int, k: int = 1) -> SchurVector:
    """nabla^k H~_{2^a 1^b}[X;0,t] through the closed-form inverse coefficients."""
    from .symfunc import hl_in_macdonald_coeffs
    n = 2 * a + b
    d = hl_in_macdonald_coeffs(a, b)
    return schur_sum(((d[m] * t_mu(_mu(n, m)) ** k, macdonald_two_col(m, n - 2 * m))
                      for m in range(a + 1)), n)


# ---------------------------------------------------------------------------
# transition matrix


@dataclass(frozen=True)
class TransitionMatrix:
    a: int
    b: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return self.a + 1

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPoly()
                for r in range(j, i + 1):
                    x, y = self.entries[i][r], other.entries[r][j]
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
                row.append(acc)
            rows.append(tuple(row))
        return TransitionMatrix(self.a, self.b, tuple(rows))

    def to_json(self) -> list[list[dict]]:
        return [[e.to_json() for e in row] for row in self.entries]


def m_entry(a: int, b: int, i: int, j: int) -> LaurentPoly:
    """M_{i,j} = T_{2^{a-i} 1^{b+2i}} [a-j choose i-j]_t (zero above the diagonal)."""
    if not (0 <= j <= a and 0 <= i <= a):
        raise IndexError(f"index ({i},{j}) out of range for a = {a}")
    if i < j:
        return LaurentPoly()
    return t_mu(two_col(a - i, b + 2 * i)) * tbinomial(a - j, i - j)


def transition_matrix(a: int, b: int) -> TransitionMatrix:
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    return TransitionMatrix(a, b, tuple(tuple(m_entry(a, b, i, j) for j in range(a + 1))
                                        for i in range(a + 1)))


def _identity(a: int, b: int) -> TransitionMatrix:
    return TransitionMatrix(a, b, tuple(tuple(ONE if i == j else LaurentPoly() for j in range(a + 1))
                                        for i in range(a + 1)))


def matrix_power(a: int, b: int, k: int) -> TransitionMatrix:
    """M^k by repeated multiplication (M^0 is the identity)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = transition_matrix(a, b)
    out = _identity(a, b)
    for _ in range(k):
        out = m @ out
    return out


def matrix_power_entry_paths(a: int, b: int, k: int, i: int, j: int) -> LaurentPoly:
    """Sum over chains j = s_0 <= s_1 <= ... <= s_k = i of prod M_{s_rho, s_{rho-1}}."""
    if k == 0:
        return ONE if i == j else LaurentPoly()
    if i < j:
        return LaurentPoly()
    m = transition_matrix(a, b)
    total = LaurentPoly()
    for mid in combinations_with_replacement(range(j, i + 1), k - 1):
        chain = (j,) + mid + (i,)
        prod = ONE
        for rho in range(1, k + 1):
            prod = prod * m[chain[rho], chain[rho - 1]]
        total = total + prod
    return total


def matrix_power_entry(a: int, b: int, k: int, i: int, j: int) -> LaurentPoly:
    """M^{(k)}_{i,j}, computed by matrix multiplication and by chain sums, which must agree."""
    if not (0 <= j <= i <= a):
        if 0 <= i < j <= a:
            return LaurentPoly()
        raise IndexError(f"index ({i},{j}) out of range for a = {a}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    val = matrix_power(a, b, k)[i, j]
    if val != matrix_power_entry_paths(a, b, k, i, j):
        raise ArithmeticError(f"M^{k} entry ({i},{j}) disagrees with its chain sum")
    return val


# ---------------------------------------------------------------------------
# verification


def _witness(lhs: SchurVector, rhs: SchurVector) -> dict | None:
    for lam in sorted(set(lhs.coeffs) | set(rhs.coeffs), reverse=True):
        if lhs.coeff(lam) != rhs.coeff(lam):
            return {"partition": list(lam), "lhs": str(lhs.coeff(lam)), "rhs": str(rhs.coeff(lam))}
    return None


def _result(ok: bool, witness, detail: bool):
    return (ok, witness) if detail else ok


def thm41_scale(a: int, b: int) -> LaurentPoly:
    """q^a t^{C(2a+b,2) + C(a+b,2)}."""
    return LaurentPoly.monomial(a, binom2(2 * a + b) + binom2(a + b))


def cocharge_sum_inverted(mu: Partition) -> SchurVector:
    """sum over SSYT T of weight mu of t^{-cocharge(T)} s_{shape(T)'}, from tableau objects."""
    from .tableaux import Tableau
    acc: dict[Partition, dict] = {}
    for lam, rows in _chains(mu):
        tab = Tableau(lam, tuple(tuple(r) for r in rows))
        key = (0, -cocharge(tab))
        d = acc.setdefault(conjugate(lam), {})
        d[key] = d.get(key, 0) + 1
    return SchurVector(sum(mu), {lam: LaurentPoly(d) for lam, d in acc.items()})


def verify_thm_4_1(a: int, b: int, detail: bool = False):
    """(-1)^a nabla H~_{2^a1^b}[X;0,t] = q^a t^{C(2a+b,2)+C(a+b,2)} omega H~_{2^a1^b}[X;0,1/t],
    with the right side also compared against the explicit cocharge sum."""
    mu = two_col(a, b)
    lhs = nabla_pow(modified_hl(mu), 1).scale((-1) ** a)
    inv = modified_hl_inverted(mu)
    if inv != cocharge_sum_inverted(mu):
        return _result(False, {"stage": "cocharge-sum"}, detail)
    rhs = inv.scale(thm41_scale(a, b))
    ok = lhs == rhs
    return _result(ok, None if ok else _witness(lhs, rhs), detail)


def verify_main_i(a: int, b: int, k: int, j: int, detail: bool = False):
    """nabla^k omega H~_{2^{a-j}1^{b+2j}}[X;0,1/t] = sum_{i>=j} M^{(k)}_{i,j} omega H~_{2^{a-i}1^{b+2i}}[X;0,1/t]."""
    if not 0 <= j <= a:
        raise ValueError("need 0 <= j <= a")
    if k < 1:
        raise ValueError("k must be positive")
    n = 2 * a + b
    lhs = nabla_pow(modified_hl_inverted(two_col(a - j, b + 2 * j)), k)
    mk = matrix_power(a, b, k)
    rhs = schur_sum(((mk[i, j], modified_hl_inverted(two_col(a - i, b + 2 * i)))
                     for i in range(j, a + 1)), n)
    ok = lhs == rhs
    return _result(ok, None if ok else _witness(lhs, rhs), detail)


def verify_thm_5_1(a: int, b: int, j: int, detail: bool = False):
    """The k = 1 case of :func:`verify_main_i`, with M itself on the right."""
    if not 0 <= j <= a:
        raise ValueError("need 0 <= j <= a")
    n = 2 * a + b
    lhs = nabla_pow(modified_hl_inverted(two_col(a - j, b + 2 * j)), 1)
    rhs = schur_sum(((m_entry(a, b, i, j), modified_hl_inverted(two_col(a - i, b + 2 * i)))
                     for i in range(j, a + 1)), n)
    ok = lhs == rhs
    return _result(ok, None if ok else _witness(lhs, rhs), detail)


def main_ii_coeffs(a: int, b: int, k: int) -> list[LaurentPoly]:
    """c_i^{(k)} = q^a t^{C(2a+b,2)+C(a+b,2)} M^{(k-1)}_{i,0}."""
    scale = thm41_scale(a, b)
    return [scale * matrix_power_entry(a, b, k - 1, i, 0) for i in range(a + 1)]


def verify_main_ii(a: int, b: int, k: int, detail: bool = False):
    """(-1)^a nabla^k H~_{2^a1^b}[X;0,t] = sum_i c_i^{(k)} omega H~_{2^{a-i}1^{b+2i}}[X;0,1/t]."""
    if k < 1:
        raise ValueError("k must be positive")
    n = 2 * a + b
    lhs = nabla_pow(modified_hl(two_col(a, b)), k).scale((-1) ** a)
    c = main_ii_coeffs(a, b, k)
    if not all(x.is_zero() or x.in_N_qt() for x in c):
        return _result(False, {"stage": "coefficients not in N[q,t]"}, detail)
    rhs = schur_sum(((c[i], modified_hl_inverted(two_col(a - i, b + 2 * i))) for i in range(a + 1)), n)
    ok = lhs == rhs
    return _result(ok, None if ok else _witness(lhs, rhs), detail)


def verify_dominance_difference(a: int, b: int, k: int, j: int, detail: bool = False):
    """Adjacent two-column difference of nabla^k omega H~[X;0,1/t] is Schur positive, with
    the matrix-entry differences in N[q,t] and, for k = 1, their closed form."""
    if not 0 <= j < a:
        raise ValueError("need 0 <= j < a")
    if k < 1:
        raise ValueError("k must be positive")
    mk = matrix_power(a, b, k)
    for i in range(a + 1):
        diff = mk[i, j] - mk[i, j + 1]
        if not (diff.is_zero() or diff.in_N_qt()):
            return _result(False, {"stage": "entry difference", "i": i, "value": str(diff)}, detail)
        if k == 1 and i >= j:
            closed = t_mu(two_col(a - i, b + 2 * i)) * tbinomial(a - j - 1, i - j).shift(0, i - j)
            if diff != closed:
                return _result(False, {"stage": "closed form", "i": i, "value": str(diff)}, detail)
    upper = nabla_pow(modified_hl_inverted(two_col(a - j, b + 2 * j)), k)
    lower = nabla_pow(modified_hl_inverted(two_col(a - j - 1, b + 2 * j + 2)), k)
    pos = is_schur_positive(upper - lower)
    if not pos:
        lam, c = pos.witness
        return _result(False, {"stage": "schur positivity", "partition": list(lam), "value": str(c)},
                       detail)
    return _result(True, None, detail)


# ---------------------------------------------------------------------------
# the sum S_a, evaluated at q = t^p, and its residues


def _sa_exponent(a: int, b: int, r: int) -> int:
    return binom2(r) - binom2(a) + binom2(a + b + r) + binom2(a - r)


def s_a_summand_coeff(a: int, b: int, r: int) -> RatFunc:
    """The scalar in front of omega H~_{2^{a-r}1^{b+2r}}[X;1/q,1/t] in the r-th summand of S_a."""
    num = LaurentPoly.monomial(-r, _sa_exponent(a, b, r), (-1) ** r) * tbinomial(a, r)
    den = poch_mono(-1, b + r, r) * poch_mono(-1, b + 2 * r + 1, a - r)
    return RatFunc(num, den)


def _omega_mac_at(a: int, b: int, p: int) -> SchurVector:
    """omega H~_{2^a 1^b}[X; t^-p, t^-1]."""
    return omega(macdonald_two_col(a, b).subs_monomial(q=(0, -p), t=(0, -1)))


def sa_poles(a: int, b: int) -> set[int]:
    """Integers p for which some summand of S_a has a vanishing denominator at q = t^p."""
    poles = set()
    for r in range(a + 1):
        poles.update(range(b + r, b + 2 * r))
        poles.update(range(b + 2 * r + 1, a + b + r + 1))
    return poles


def s_a_value(a: int, b: int, p: int) -> SchurVector:
    """S_a at q = t^p, a Schur vector with coefficients in Q(t)."""
    if p in sa_poles(a, b):
        raise ValueError(f"q = t^{p} is a pole of a summand of S_{a} (b = {b})")
    n = 2 * a + b
    terms = []
    for r in range(a + 1):
        c = s_a_summand_coeff(a, b, r).subs_monomial(q=(0, p))
        terms.append((c, _omega_mac_at(a - r, b + 2 * r, p)))
    return schur_sum(terms, n)


def s_a_target(a: int, b: int) -> SchurVector:
    """t^{C(a+b,2)} omega H~_{2^a1^b}[X;0,1/t]."""
    return modified_hl_inverted(two_col(a, b)).scale(LaurentPoly.monomial(0, binom2(a + b)))


def residue_indices(a: int, b: int, p: int) -> list[int]:
    """The set A = {r : 2r+1 <= p-b <= a+r}."""
    return [r for r in range(a + 1) if 2 * r + 1 <= p - b <= a + r]


def _tpoch(e: int, n: int) -> LaurentPoly:
    return poch_mono(0, e, n)


def residue_closed_forms(a: int, b: int, p: int, r: int) -> tuple[RatFunc, RatFunc]:
    """Scalar parts of lim_{q->t^p} (1 - t^p/q) S_{a,r} and S_{a,r'} from the punctured factorizations."""
    r2 = p - b - r
    c1 = LaurentPoly.monomial(0, _sa_exponent(a, b, r) - p * r, (-1) ** r) * tbinomial(a, r)
    d1 = _tpoch(b + r - p, r) * _tpoch(b + 2 * r + 1 - p, p - b - 2 * r - 1) * _tpoch(1, a - p + b + r)
    c2 = LaurentPoly.monomial(0, _sa_exponent(a, b, r2) - p * r2, (-1) ** r2) * tbinomial(a, r2)
    d2 = _tpoch(-r, r) * _tpoch(1, p - b - 2 * r - 1) * _tpoch(p - b - 2 * r + 1, a - p + b + r)
    return RatFunc(c1, d1), RatFunc(c2, d2)


def residue_by_limit(a: int, b: int, p: int, r: int) -> RatFunc:
    """lim_{q->t^p} (1 - t^p/q) times the scalar of S_{a,r}, by cancelling the factor symbolically."""
    c = s_a_summand_coeff(a, b, r) * RatFunc(LaurentPoly({(0, 0): 1, (-1, p): -1}))
    return c.subs_monomial(q=(0, p))


def residue_pair_check(a: int, b: int, p: int, r: int, detail: bool = False):
    """Res_{q=t^p} S_{a,r} + Res_{q=t^p} S_{a,r'} = 0 for r in A and r' = p - b - r."""
    if r not in residue_indices(a, b, p):
        raise ValueError(f"r = {r} is not in A for (a, b, p) = ({a}, {b}, {p})")
    r2 = p - b - r
    k1, k2 = residue_closed_forms(a, b, p, r)
    if k1 != residue_by_limit(a, b, p, r) or k2 != residue_by_limit(a, b, p, r2):
        return _result(False, {"stage": "closed form vs limit"}, detail)
    h1 = _omega_mac_at(a - r, b + 2 * r, p)
    h2 = _omega_mac_at(a - r2, b + 2 * r2, p)
    if h1 != h2:
        return _result(False, {"stage": "specialized Macdonald pair", "witness": _witness(h1, h2)},
                       detail)
    total = h1.scale(k1 + k2)
    ok = total.is_zero()
    return _result(ok, None if ok else {"stage": "residue sum", "value": str(k1 + k2)}, detail)


# ---------------------------------------------------------------------------
# the counterexample to positivity of nabla^2


def _lp(terms: dict) -> LaurentPoly:
    return LaurentPoly(terms)


def counterexample_f() -> SchurVector:
    return SchurVector(2, {
        (2,): _lp({(2, 1): 1, (1, 2): 1, (2, 0): 1, (1, 1): 1, (0, 2): 1}),
        (1, 1): _lp({(2, 2): 1, (2, 1): 1, (1, 2): 1}),
    })


def counterexample_expected() -> tuple[SchurVector, SchurVector]:
    nf = SchurVector(2, {(2,): _lp({(2, 2): 1, (2, 1): 1, (1, 2): 1}), (1, 1): _lp({(2, 2): 1})})
    n2f = SchurVector(2, {(2,): _lp({(2, 2): 1}), (1, 1): _lp({(3, 3): -1})})
    return nf, n2f


@dataclass
class CounterexampleReport:
    f: SchurVector
    nabla_f: SchurVector
    nabla2_f: SchurVector
    nabla_f_matches: bool
    nabla2_f_matches: bool
    nabla_f_positive: bool
    nabla2_f_positive: bool
    nabla2_f_witness: tuple[Partition, RatFunc] | None

    @property
    def passed(self) -> bool:
        return (self.nabla_f_matches and self.nabla2_f_matches and self.nabla_f_positive
                and not self.nabla2_f_positive and self.nabla2_f_witness is not None
                and self.nabla2_f_witness[0] == (1, 1))

    def to_json(self) -> dict:
        w = self.nabla2_f_witness
        return {
            "F": str(self.f), "nabla_F": str(self.nabla_f), "nabla2_F": str(self.nabla2_f),
            "nabla_F_matches": self.nabla_f_matches, "nabla2_F_matches": self.nabla2_f_matches,
            "nabla_F_schur_positive": self.nabla_f_positive,
            "nabla2_F_schur_positive": self.nabla2_f_positive,
            "nabla2_F_witness": None if w is None else {"partition": list(w[0]), "value": str(w[1])},
        }


def nabla_power_counterexample() -> CounterexampleReport:
    """nabla F is Schur positive while nabla^2 F is not, for an explicit degree-2 F."""
    f = counterexample_f()
    nf = nabla_pow(f, 1)
    n2f = nabla_pow(f, 2)
    exp1, exp2 = counterexample_expected()
    p1 = is_schur_positive(nf)
    p2 = is_schur_positive(n2f)
    return CounterexampleReport(f, nf, n2f, nf == exp1, n2f == exp2, p1.positive, p2.positive,
                                p2.witness)


def entries_in_N_qt(mat: TransitionMatrix) -> bool:
    return all(e.is_zero() or e.in_N_qt() for row in mat.entries for e in row)


def coeffs_in_N_qt(v: SchurVector) -> bool:
    return all(coeff_in_N_qt(c) for _, c in v.items())
