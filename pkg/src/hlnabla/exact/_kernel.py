"""Integer kernels for bivariate polynomials.

Polynomials here are plain dicts ``{(e_q, e_t): int}``.  Large products and
exact quotients go through Kronecker substitution: the polynomial is packed
into one big integer with fixed-width signed slots, so the heavy lifting is
done by CPython's big-integer multiply and divide.
"""

from __future__ import annotations

from math import gcd

ZTerms = dict[tuple[int, int], int]

# below this many term products, schoolbook dict multiplication wins
_KRON_MIN_WORK = 1500


def _round8(bits: int) -> int:
    return (bits + 7) & ~7


def max_norm(terms: ZTerms) -> int:
    return max(abs(c) for c in terms.values())


def _box(terms: ZTerms) -> tuple[int, int, int, int]:
    qs = [k[0] for k in terms]
    ts = [k[1] for k in terms]
    return min(qs), max(qs), min(ts), max(ts)


def pack(terms: ZTerms, q0: int, t0: int, width: int, nbytes: int) -> int:
    """Evaluate at the Kronecker point: slot index (e_q-q0)*width + (e_t-t0)."""
    size = 0
    for (i, j) in terms:
        s = (i - q0) * width + (j - t0)
        if s >= size:
            size = s + 1
    pos = bytearray(size * nbytes)
    neg = None
    for (i, j), c in terms.items():
        s = ((i - q0) * width + (j - t0)) * nbytes
        if c > 0:
            pos[s:s + nbytes] = c.to_bytes(nbytes, "little")
        else:
            if neg is None:
                neg = bytearray(size * nbytes)
            neg[s:s + nbytes] = (-c).to_bytes(nbytes, "little")
    v = int.from_bytes(pos, "little")
    if neg is not None:
        v -= int.from_bytes(neg, "little")
    return v


def unpack(v: int, nslots: int, nbytes: int) -> dict[int, int]:
    """Inverse of :func:`pack` assuming every slot value fits in signed ``8*nbytes`` bits."""
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * nslots, "little")
    w = v + offset
    if w < 0 or w.bit_length() > 8 * nbytes * nslots:
        raise OverflowError("slot overflow while unpacking")
    raw = w.to_bytes(nslots * nbytes, "little")
    out = {}
    frombytes = int.from_bytes
    for s in range(nslots):
        d = frombytes(raw[s * nbytes:(s + 1) * nbytes], "little") - half
        if d:
            out[s] = d
    return out


def _schoolbook(a: ZTerms, b: ZTerms) -> ZTerms:
    out: ZTerms = {}
    get = out.get
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def zmul(a: ZTerms, b: ZTerms) -> ZTerms:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        ((bi, bj), bc), = b.items()
        return {(i + bi, j + bj): c * bc for (i, j), c in a.items()}
    if len(a) * len(b) < _KRON_MIN_WORK:
        return _schoolbook(a, b)
    aq0, aq1, at0, at1 = _box(a)
    bq0, bq1, bt0, bt1 = _box(b)
    width = (at1 - at0) + (bt1 - bt0) + 1
    bits = max_norm(a).bit_length() + max_norm(b).bit_length() + len(b).bit_length() + 1
    nbytes = _round8(bits) // 8
    prod = pack(a, aq0, at0, width, nbytes) * pack(b, bq0, bt0, width, nbytes)
    nslots = ((aq1 - aq0) + (bq1 - bq0)) * width + width
    q0, t0 = aq0 + bq0, at0 + bt0
    return {(q0 + s // width, t0 + s % width): c
            for s, c in unpack(prod, nslots, nbytes).items()}


def _divexact_schoolbook(f: ZTerms, g: ZTerms, box) -> ZTerms | None:
    """Lex (q before t) long division; None unless the division is exact over Z."""
    hq0, hq1, ht0, ht1 = box
    r = dict(f)
    lm = max(g)
    lc = g[lm]
    h: ZTerms = {}
    while r:
        m = max(r)
        c = r[m]
        if c % lc:
            return None
        di, dj = m[0] - lm[0], m[1] - lm[1]
        if not (hq0 <= di <= hq1 and ht0 <= dj <= ht1):
            return None
        qc = c // lc
        h[(di, dj)] = qc
        for (i, j), gc in g.items():
            k = (i + di, j + dj)
            v = r.get(k, 0) - qc * gc
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return h


def zdivexact(f: ZTerms, g: ZTerms) -> ZTerms | None:
    """Return h with f == g*h over Z[q^±, t^±], or None when no such h exists."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return {}
    fq0, fq1, ft0, ft1 = _box(f)
    gq0, gq1, gt0, gt1 = _box(g)
    box = (fq0 - gq0, fq1 - gq1, ft0 - gt0, ft1 - gt1)
    if box[0] > box[1] or box[2] > box[3]:
        return None
    if len(g) == 1:
        ((gi, gj), gc), = g.items()
        if any(c % gc for c in f.values()):
            return None
        return {(i - gi, j - gj): c // gc for (i, j), c in f.items()}
    if len(f) * len(g) < _KRON_MIN_WORK:
        return _divexact_schoolbook(f, g, box)
    width = (ft1 - ft0) + 1
    hq = box[1] - box[0]
    ht = box[3] - box[2]
    bits = max(max_norm(f).bit_length(), max_norm(g).bit_length()) + 24
    for _ in range(3):
        nbytes = _round8(bits) // 8
        quo, rem = divmod(pack(f, fq0, ft0, width, nbytes), pack(g, gq0, gt0, width, nbytes))
        if rem:
            return None
        try:
            slots = unpack(quo, hq * width + ht + 1, nbytes)
        except OverflowError:
            bits *= 2
            continue
        h = {}
        ok = True
        for s, c in slots.items():
            i, j = divmod(s, width)
            if j > ht:
                ok = False
                break
            h[(box[0] + i, box[2] + j)] = c
        if ok and zmul(g, h) == f:
            return h
        bits *= 2
    return _divexact_schoolbook(f, g, box)


def content(terms: ZTerms) -> int:
    c = 0
    for v in terms.values():
        c = gcd(c, v)
        if c == 1:
            break
    return c
