"""Verification suites: case grids and a picklable case runner.

A case is a (check name, params) pair.  ``run_case`` looks the check up in
``CHECKS`` so cases can be shipped to worker processes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from . import creation, nabla, symfunc
from .exact import IDENTITY_TAGS, LaurentPoly, RatFunc, check_identity, identity_grid
from .exact.qseries import substitution_set
from .partitions import (b_mu, conjugate, contains, dominates, enumerate_partitions, n_stat,
                         t_mu, two_col)
from .tableaux import Tableau, cocharge, kostka_foulkes_column, kostka_number, reading_word

SUITES = ("qseries", "combinatorics", "inversion", "thm41", "thm51", "main-i", "main-ii",
          "dominance", "residues", "counterexample", "appendix")
SAFE_LIMITS = {"a_max": 5, "b_max": 4, "k_max": 4}
KOSTKA_MAX_N = 6
B_SPECIAL_RANGE = range(-2, 3)
SA_POINTS = 3


@dataclass(frozen=True)
class Grid:
    a_max: int = 3
    b_max: int = 3
    k_max: int = 3


# ---------------------------------------------------------------------------
# checks: each takes a params dict and returns (ok, witness)


def _golden_values() -> dict:
    tab = Tableau.from_rows([[1, 1, 1], [2, 2, 4], [3]])
    return {
        "conjugate": (lambda: conjugate((3, 3, 1)), (3, 2, 2)),
        "dominance": (lambda: dominates((3, 3, 1), (3, 2, 2)), True),
        "containment": (lambda: contains((3, 2), (3, 3, 1)), True),
        "n-stat-331": (lambda: n_stat((3, 3, 1)), 5),
        "n-stat-322": (lambda: n_stat((3, 2, 2)), 6),
        "t-mu": (lambda: t_mu((3, 3, 1)), LaurentPoly.monomial(6, 5)),
        "b-mu": (lambda: b_mu((3, 3, 1)),
                 LaurentPoly({(2, 1): 1, (2, 0): 1, (1, 1): 1, (0, 2): 1, (1, 0): 1, (0, 1): 1,
                              (0, 0): 1})),
        "reading-word": (lambda: reading_word(tab), (3, 2, 2, 4, 1, 1, 1)),
        "cocharge": (lambda: cocharge(tab), 6),
    }


def _check_golden(p):
    fn, want = _golden_values()[p["name"]]
    got = fn()
    return got == want, None if got == want else {"got": str(got), "expected": str(want)}


def _check_kostka_at_one(p):
    """K~_{lam,mu}(1) equals the Kostka number for every pair of partitions of n."""
    n = p["n"]
    for mu in enumerate_partitions(n):
        col = kostka_foulkes_column(mu)
        for lam in enumerate_partitions(n):
            got = col[lam].evaluate(t=1).constant_value() if lam in col else 0
            want = kostka_number(lam, mu)
            if got != want:
                return False, {"lambda": list(lam), "mu": list(mu), "got": str(got), "expected": want}
    return True, None


def _check_symmetry(p):
    return symfunc.check_symmetry_relation(p["a"], p["b"]), None


def _check_b_determines_h(p):
    return symfunc.check_b_determines_h(p["n"], p["r"], p["s"]), None


def _check_qseries(p):
    subs = substitution_set()
    args = {k: subs[v] if isinstance(v, str) else v for k, v in p.items() if k != "tag"}
    return check_identity(p["tag"], **args), None


def _check_cd_inverse(p):
    return symfunc.check_cd_inverse(p["a"], p["b"]), None


def _check_reconstruction(p):
    return symfunc.check_hl_reconstruction(p["a"], p["b"]), None


def _check_cross_path(p):
    """Linear-solve expansion agrees with the closed-form coefficients."""
    a, b = p["a"], p["b"]
    got = nabla.expand_in_two_col_macdonald(symfunc.modified_hl(two_col(a, b))).coeffs
    want = symfunc.hl_in_macdonald_coeffs(a, b)
    # the formula has no terms beyond m = a; the solve must give zeros there
    want = want + [RatFunc.zero()] * (len(got) - len(want))
    for m, (x, y) in enumerate(zip(got, want)):
        if x != y:
            return False, {"m": m, "solve": str(x), "formula": str(y)}
    return True, None


def _check_detail(fn, *keys):
    def run(p):
        return fn(*(p[k] for k in keys), detail=True)
    return run


def _check_sa_independence(p):
    a, b = p["a"], p["b"]
    target = nabla.s_a_target(a, b)
    for q in p["p"]:
        v = nabla.s_a_value(a, b, q)
        if v != target:
            return False, {"p": q, "got": str(v), "expected": str(target)}
    return True, None


def _check_counterexample(p):
    rep = nabla.nabla_power_counterexample()
    return rep.passed, rep.to_json()


def _check_hecke(p):
    f = creation.PolySym(3, 6, {((2, 1), (2, 0, 1)): 3, ((1,), (0, 1, 3)): -1,
                                ((), (1, 2, 0)): LaurentPoly.monomial(1, 0)})
    d = creation.hecke_defect(f, p["i"])
    return d.is_zero(), None if d.is_zero() else {"defect": str(d)}


CHECKS = {
    "golden": _check_golden,
    "kostka-at-one": _check_kostka_at_one,
    "symmetry-relation": _check_symmetry,
    "b-determines-h": _check_b_determines_h,
    "qseries": _check_qseries,
    "cd-inverse": _check_cd_inverse,
    "hl-reconstruction": _check_reconstruction,
    "cross-path": _check_cross_path,
    "thm41": _check_detail(nabla.verify_thm_4_1, "a", "b"),
    "thm51": _check_detail(nabla.verify_thm_5_1, "a", "b", "j"),
    "main-i": _check_detail(nabla.verify_main_i, "a", "b", "k", "j"),
    "main-ii": _check_detail(nabla.verify_main_ii, "a", "b", "k"),
    "dominance": _check_detail(nabla.verify_dominance_difference, "a", "b", "k", "j"),
    "sa-independence": _check_sa_independence,
    "residue-pair": _check_detail(nabla.residue_pair_check, "a", "b", "p", "r"),
    "counterexample": _check_counterexample,
    "lemma-a1": lambda p: creation.verify_lemma_a1(p["mu"], detail=True),
    "lemma-a4": _check_detail(creation.verify_lemma_a4, "a", "b"),
    "lowering-identity": lambda p: creation.verify_lowering_identity(p["r"], detail=True),
    "b-h-relation": lambda p: creation.verify_b_h_relation(p["m"], p["lam"], detail=True),
    "hecke": _check_hecke,
    "thm41-composite": _check_detail(creation.verify_thm41_composite, "a", "b"),
}


# ---------------------------------------------------------------------------
# grids


def _ab(g: Grid):
    return product(range(g.a_max + 1), range(g.b_max + 1))


def _valid_points(a: int, b: int, count: int) -> list[int]:
    """Sample points outside [b, 2a+b]: b - 1 and then 2a+b+1, 2a+b+2, ..."""
    out = [b - 1] + list(range(2 * a + b + 1, 2 * a + b + count))
    assert not set(out) & nabla.sa_poles(a, b)
    return out


def suite_cases(suite: str, g: Grid) -> list[tuple[str, dict]]:
    if suite == "qseries":
        return [("qseries", {"tag": tag, **{k: (int(v) if v.isdigit() else v) for k, v in labels.items()}})
                for tag in IDENTITY_TAGS for labels, _ in identity_grid(tag)]
    if suite == "combinatorics":
        cases = [("golden", {"name": name}) for name in _golden_values()]
        cases += [("kostka-at-one", {"n": n}) for n in range(1, KOSTKA_MAX_N + 1)]
        cases += [("symmetry-relation", {"a": a, "b": b}) for a, b in _ab(g)]
        n_max = 2 * g.a_max + g.b_max
        cases += [("b-determines-h", {"n": n, "r": r, "s": s}) for n in range(1, n_max + 1)
                  for r in B_SPECIAL_RANGE for s in B_SPECIAL_RANGE]
        return cases
    if suite == "inversion":
        return [(check, {"a": a, "b": b}) for a, b in _ab(g)
                for check in ("cd-inverse", "hl-reconstruction", "cross-path")]
    if suite == "thm41":
        return [("thm41", {"a": a, "b": b}) for a, b in _ab(g)]
    if suite == "thm51":
        return [("thm51", {"a": a, "b": b, "j": j}) for a, b in _ab(g) for j in range(a + 1)]
    if suite == "main-i":
        return [("main-i", {"a": a, "b": b, "k": k, "j": j}) for a, b in _ab(g)
                for k in range(1, g.k_max + 1) for j in range(a + 1)]
    if suite == "main-ii":
        return [("main-ii", {"a": a, "b": b, "k": k}) for a, b in _ab(g)
                for k in range(1, g.k_max + 1)]
    if suite == "dominance":
        return [("dominance", {"a": a, "b": b, "k": k, "j": j}) for a, b in _ab(g)
                for k in range(1, g.k_max + 1) for j in range(a)]
    if suite == "residues":
        cases = []
        for a, b in _ab(g):
            cases.append(("sa-independence", {"a": a, "b": b, "p": _valid_points(a, b, SA_POINTS)}))
            for p in range(b, 2 * a + b + 1):
                cases += [("residue-pair", {"a": a, "b": b, "p": p, "r": r})
                          for r in nabla.residue_indices(a, b, p)]
        return cases
    if suite == "counterexample":
        return [("counterexample", {})]
    if suite == "appendix":
        cases = [("lemma-a1", {"mu": list(mu)}) for mu in creation.lemma_a1_cases()]
        cases += [("lemma-a4", {"a": a, "b": b}) for a, b in _ab(g)
                  if 1 <= a + b <= creation.LEMMA_A4_MAX]
        cases += [("lowering-identity", {"r": list(r)}) for r in creation.lowering_cases()]
        cases += [("b-h-relation", {"m": m, "lam": list(lam)}) for m in range(1, 4)
                  for n in range(5) for lam in (enumerate_partitions(n) if n else [()])]
        cases += [("hecke", {"i": i}) for i in (1, 2)]
        cases += [("thm41-composite", {"a": a, "b": b}) for a, b in _ab(g)
                  if a <= 2 and b <= 2 and a + b >= 1]
        return cases
    if suite == "all":
        return [c for s in SUITES for c in suite_cases(s, g)]
    raise ValueError(f"unknown suite {suite!r}")


def run_case(case: tuple[str, dict]) -> dict:
    """Run one case; arithmetic failures are reported in the record, not raised."""
    check, params = case
    start = time.perf_counter()
    error = None
    try:
        ok, witness = CHECKS[check](params)
    except (ArithmeticError, ZeroDivisionError) as exc:
        ok, witness, error = False, {"error": f"{type(exc).__name__}: {exc}"}, True
    millis = round((time.perf_counter() - start) * 1000, 3)
    rec = {"check": check, "params": params, "pass": bool(ok), "witness": witness, "millis": millis}
    if error:
        rec["arithmetic_error"] = True
    return rec
