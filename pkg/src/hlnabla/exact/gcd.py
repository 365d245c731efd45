"""GCD of bivariate integer polynomials.

Two independent algorithms are provided:

* :func:`prs_gcd` -- primitive polynomial remainder sequence in a main
  variable, with contents taken recursively in the other variable.
* :func:`heu_gcd` -- the heuristic GCD (evaluate at a large integer, take an
  integer gcd, interpolate back, verify by exact division).

:func:`zgcd` tries the heuristic first and falls back to the PRS.
"""

from __future__ import annotations

from math import gcd, isqrt

from ._kernel import ZTerms, content, max_norm, zdivexact

try:  # pragma: no cover - optional speedup
    import gmpy2

    def _igcd(a: int, b: int) -> int:
        return int(gmpy2.gcd(a, b))
except ImportError:  # pragma: no cover
    _igcd = gcd

_HEU_TRIES = 6


def _strip_monomial(f: ZTerms) -> tuple[ZTerms, int, int]:
    mq = min(k[0] for k in f)
    mt = min(k[1] for k in f)
    if mq or mt:
        f = {(i - mq, j - mt): c for (i, j), c in f.items()}
    return f, mq, mt


def _normalize_sign(h: ZTerms) -> ZTerms:
    if h[max(h)] < 0:
        return {k: -c for k, c in h.items()}
    return h


def _scale(f: ZTerms, c: int) -> ZTerms:
    if c == 1:
        return f
    return {k: v * c for k, v in f.items()}


def _exact_int_div(f: ZTerms, c: int) -> ZTerms:
    if c == 1:
        return f
    return {k: v // c for k, v in f.items()}


def _degrees(f: ZTerms) -> tuple[int, int]:
    return max(k[0] for k in f), max(k[1] for k in f)


def zgcd(f: ZTerms, g: ZTerms) -> ZTerms:
    """Greatest common divisor over Z[q,t], positive leading coefficient (lex, q first).

    Inputs must have nonnegative exponents.
    """
    if not f and not g:
        return {}
    if not f or not g:
        h = f or g
        return _normalize_sign(_exact_int_div(h, content(h)))
    f, fq, ft = _strip_monomial(f)
    g, gq, gt = _strip_monomial(g)
    mq, mt = min(fq, gq), min(ft, gt)
    cf, cg = content(f), content(g)
    c = gcd(cf, cg)
    f = _exact_int_div(f, cf)
    g = _exact_int_div(g, cg)
    if len(f) == 1 or len(g) == 1:
        core: ZTerms = {(0, 0): 1}
    elif f == g:
        core = f
    else:
        core = heu_gcd(f, g)
        if core is None:
            core = prs_gcd(f, g)
    core = _normalize_sign(core)
    return {(i + mq, j + mt): v * c for (i, j), v in core.items()}


# ---------------------------------------------------------------------------
# heuristic gcd


def _interpolate(h: int, x: int) -> list[int]:
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return out


def _horner(coeffs: list[int], x: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * x + c
    return v


def _dense(f: dict[int, int]) -> list[int]:
    out = [0] * (max(f) + 1)
    for e, c in f.items():
        out[e] = c
    return out


def _uni_heu_gcd(f: list[int], g: list[int]) -> list[int] | None:
    """Heuristic gcd of dense univariate integer polynomials (low degree first)."""
    cf = content({(i, 0): c for i, c in enumerate(f) if c})
    cg = content({(i, 0): c for i, c in enumerate(g) if c})
    common = gcd(cf, cg)
    f = [c // common for c in f]
    g = [c // common for c in g]
    if len(f) == 1 or len(g) == 1:
        return [common]
    fz = {(i, 0): c for i, c in enumerate(f) if c}
    gz = {(i, 0): c for i, c in enumerate(g) if c}
    fn, gn = max_norm(fz), max_norm(gz)
    bound = 2 * min(fn, gn) + 29
    x = max(min(bound, 99 * isqrt(bound)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(_HEU_TRIES):
        ff, gg = _horner(f, x), _horner(g, x)
        if ff and gg:
            hh = _igcd(ff, gg)
            for cand in (hh, ff // hh, gg // hh):
                dense = _interpolate(cand, x)
                if not dense:
                    continue
                cz = {(i, 0): c for i, c in enumerate(dense) if c}
                cz = _exact_int_div(cz, content(cz))
                if cand == hh:
                    h = cz
                else:
                    h = zdivexact(fz if cand == ff // hh else gz, cz)
                    if h is None:
                        continue
                if zdivexact(fz, h) is not None and zdivexact(gz, h) is not None:
                    h = _normalize_sign(h)
                    out = _dense({i: c for (i, _), c in h.items()})
                    return [c * common for c in out]
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def heu_gcd(f: ZTerms, g: ZTerms) -> ZTerms | None:
    """Heuristic gcd of primitive bivariate polynomials; None if it gives up."""
    # evaluate the variable of larger degree, keep the other one symbolic
    dfq, dft = _degrees(f)
    dgq, dgt = _degrees(g)
    swap = max(dfq, dgq) > max(dft, dgt)
    if swap:
        f = {(j, i): c for (i, j), c in f.items()}
        g = {(j, i): c for (i, j), c in g.items()}
    rows_f: dict[int, dict[int, int]] = {}
    rows_g: dict[int, dict[int, int]] = {}
    for (i, j), c in f.items():
        rows_f.setdefault(i, {})[j] = c
    for (i, j), c in g.items():
        rows_g.setdefault(i, {})[j] = c
    dense_f = {i: _dense(r) for i, r in rows_f.items()}
    dense_g = {i: _dense(r) for i, r in rows_g.items()}
    fn, gn = max_norm(f), max_norm(g)
    lcf = abs(f[max(f)])
    lcg = abs(g[max(g)])
    bound = 2 * min(fn, gn) + 29
    x = max(min(bound, 99 * isqrt(bound)), 2 * min(fn // lcf, gn // lcg) + 2)
    for _ in range(_HEU_TRIES):
        ff = [0] * (max(dense_f) + 1)
        gg = [0] * (max(dense_g) + 1)
        for i, row in dense_f.items():
            ff[i] = _horner(row, x)
        for i, row in dense_g.items():
            gg[i] = _horner(row, x)
        if any(ff) and any(gg):
            while ff and not ff[-1]:
                ff.pop()
            while gg and not gg[-1]:
                gg.pop()
            hu = _uni_heu_gcd(ff, gg)
            if hu is not None:
                h: ZTerms = {}
                for i, big in enumerate(hu):
                    for j, c in enumerate(_interpolate(big, x)):
                        if c:
                            h[(i, j)] = c
                if h:
                    h = _exact_int_div(h, content(h))
                    if zdivexact(f, h) is not None and zdivexact(g, h) is not None:
                        if swap:
                            h = {(j, i): c for (i, j), c in h.items()}
                        return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


# ---------------------------------------------------------------------------
# primitive PRS


def _u_trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


def _u_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _u_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _u_trim(out)


def _u_content(a: list[int]) -> int:
    c = 0
    for x in a:
        c = gcd(c, x)
    return c


def _u_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        if c % lb:
            raise ArithmeticError("inexact univariate division")
        c //= lb
        q[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    if any(a):
        raise ArithmeticError("inexact univariate division")
    return _u_trim(q)


def _u_prem(a: list[int], b: list[int]) -> list[int]:
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = _u_trim(r)
    return r


def _u_primitive(a: list[int]) -> list[int]:
    c = _u_content(a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def u_gcd(a: list[int], b: list[int]) -> list[int]:
    """Univariate gcd over Z by primitive PRS; positive leading coefficient."""
    a, b = _u_trim(list(a)), _u_trim(list(b))
    if not a:
        return _u_primitive(b) if b else []
    if not b:
        return _u_primitive(a)
    c = gcd(_u_content(a), _u_content(b))
    a, b = _u_primitive(a), _u_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _u_prem(a, b)
        if not r:
            return [c * x for x in b]
        if len(r) == 1:
            return [c]
        a, b = b, _u_primitive(r)


def _b_content(rows: list[list[int]]) -> list[int]:
    g: list[int] = []
    for r in rows:
        if r:
            g = u_gcd(g, r) if g else _u_primitive(r)
            if len(g) == 1 and g[0] == 1:
                break
    return g


def _b_prem(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    r = [list(x) for x in a]
    lb = b[-1]
    db = len(b) - 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [_u_mul(lb, x) for x in r]
        for i, y in enumerate(b):
            r[i + shift] = _u_sub(r[i + shift], _u_mul(lr, y))
        while r and not r[-1]:
            r.pop()
    return r


def prs_gcd(f: ZTerms, g: ZTerms) -> ZTerms:
    """Primitive PRS in the variable of smaller degree, contents in the other."""
    dfq, dft = _degrees(f)
    dgq, dgt = _degrees(g)
    swap = max(dfq, dgq) > max(dft, dgt)
    if swap:
        f = {(j, i): c for (i, j), c in f.items()}
        g = {(j, i): c for (i, j), c in g.items()}

    def rows(p: ZTerms) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(k[0] for k in p) + 1)]
        for (i, j), c in p.items():
            row = out[i]
            if len(row) <= j:
                row.extend([0] * (j + 1 - len(row)))
            row[j] = c
        return out

    a, b = rows(f), rows(g)
    ca, cb = _b_content(a), _b_content(b)
    cont = u_gcd(ca, cb)
    a = [_u_divexact(x, ca) if x else [] for x in a]
    b = [_u_divexact(x, cb) if x else [] for x in b]
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _b_prem(a, b)
        if not r:
            result = b
            break
        if len(r) == 1:
            result = [[1]]
            break
        cr = _b_content(r)
        a, b = b, [_u_divexact(x, cr) if x else [] for x in r]
    cres = _b_content(result)
    result = [_u_divexact(x, cres) if x else [] for x in result]
    out: ZTerms = {}
    for i, row in enumerate(result):
        for j, c in enumerate(row):
            if c:
                out[(i, j)] = c
    out = {k: v for k, v in _mul_uni_t(out, cont).items()}
    if swap:
        out = {(j, i): c for (i, j), c in out.items()}
    return _normalize_sign(out)


def _mul_uni_t(p: ZTerms, u: list[int]) -> ZTerms:
    out: ZTerms = {}
    for (i, j), c in p.items():
        for k, d in enumerate(u):
            if d:
                key = (i, j + k)
                out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}
