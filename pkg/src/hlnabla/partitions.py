"""Integer partitions as plain tuples, plus the statistics n, T and B."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .exact import LaurentPoly

Partition = tuple[int, ...]

DEFAULT_MAX_N = 20


class PartitionError(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize: drop trailing zeros, require weakly decreasing positive parts."""
    p = [int(x) for x in parts]
    while p and p[-1] == 0:
        p.pop()
    if any(x <= 0 for x in p):
        raise PartitionError(f"parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise PartitionError(f"parts must be weakly decreasing: {p}")
    return tuple(p)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated form ``"2,2,1"``; an empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise PartitionError(f"bad partition {text!r}: {exc}") from None


def two_col(a: int, b: int) -> Partition:
    """The partition 2^a 1^b."""
    if a < 0 or b < 0:
        raise PartitionError("a and b must be nonnegative")
    return (2,) * a + (1,) * b


def two_col_params(mu: Sequence[int]) -> tuple[int, int]:
    """Inverse of :func:`two_col`."""
    if any(x > 2 for x in mu):
        raise PartitionError(f"{tuple(mu)} is not a two-column partition")
    a = sum(1 for x in mu if x == 2)
    return a, len(mu) - a


def is_two_col(mu: Sequence[int]) -> bool:
    return all(x <= 2 for x in mu)


def size(mu: Sequence[int]) -> int:
    return sum(mu)


@lru_cache(maxsize=None)
def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for x in mu if x > j) for j in range(mu[0]))


def _check_same_size(lam, mu) -> None:
    if sum(lam) != sum(mu):
        raise PartitionError(f"size mismatch: |{tuple(lam)}| != |{tuple(mu)}|")


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam >= mu in dominance order (equal sizes required)."""
    _check_same_size(lam, mu)
    s1 = s2 = 0
    for i in range(max(len(lam), len(mu))):
        s1 += lam[i] if i < len(lam) else 0
        s2 += mu[i] if i < len(mu) else 0
        if s1 < s2:
            return False
    return True


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam is contained in mu as a diagram."""
    if len(lam) > len(mu):
        return False
    return all(x <= y for x, y in zip(lam, mu))


def n_stat(mu: Sequence[int]) -> int:
    return sum(i * x for i, x in enumerate(mu))


def t_mu(mu: Sequence[int]) -> LaurentPoly:
    """T_mu = q^{n(mu')} t^{n(mu)}."""
    mu = tuple(mu)
    return LaurentPoly.monomial(n_stat(conjugate(mu)), n_stat(mu))


def t_mu_exponents(mu: Sequence[int]) -> tuple[int, int]:
    mu = tuple(mu)
    return n_stat(conjugate(mu)), n_stat(mu)


def cells(mu: Sequence[int]) -> list[tuple[int, int]]:
    """(row, column) of every cell, 0-based, bottom row first."""
    return [(i, j) for i, x in enumerate(mu) for j in range(x)]


def b_mu(mu: Sequence[int]) -> LaurentPoly:
    """B_mu = sum over cells of q^coarm t^coleg."""
    return LaurentPoly({(j, i): 1 for i, j in cells(mu)})


def b_mu_specialized(mu: Sequence[int], p: int) -> LaurentPoly:
    """B_mu at q = t^-p, t = t^-1, for mu with parts at most 2."""
    if not is_two_col(mu):
        raise PartitionError(f"{tuple(mu)} has a part larger than 2")
    out: dict = {}
    for i, j in cells(mu):
        e = -(p * j + i)
        out[(0, e)] = out.get((0, e), 0) + 1
    return LaurentPoly(out)


def _parts_desc(n: int, cap: int) -> Iterable[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(_parts_desc(n, n))


def enumerate_partitions(n: int, max_n: int = DEFAULT_MAX_N) -> list[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise PartitionError("n must be nonnegative")
    if n > max_n:
        raise PartitionError(f"n = {n} exceeds the enumeration bound {max_n}")
    return list(_all_partitions(n))


def two_col_partitions(n: int) -> list[Partition]:
    """Partitions of n with parts at most 2, in descending lex order (2^u 1^{n-2u}, u decreasing)."""
    return [two_col(u, n - 2 * u) for u in range(n // 2, -1, -1)]


def hook_lengths(mu: Sequence[int]) -> list[int]:
    conj = conjugate(tuple(mu))
    return [(mu[i] - j - 1) + (conj[j] - i - 1) + 1 for i, j in cells(mu)]


def add_cell_shapes(mu: Partition) -> list[Partition]:
    """Shapes obtained by adding one cell to mu."""
    out = []
    for i in range(len(mu) + 1):
        cur = mu[i] if i < len(mu) else 0
        if i == 0 or mu[i - 1] > cur:
            nu = list(mu) + ([0] if i == len(mu) else [])
            nu[i] += 1
            out.append(tuple(nu))
    return out


def horizontal_strips(mu: Partition, k: int) -> list[Partition]:
    """All lam containing mu with lam/mu a horizontal strip of size k."""
    mu = tuple(mu)
    n = len(mu)
    out: list[Partition] = []
    # lam_1 >= mu_1 free, mu_{i-1} >= lam_i >= mu_i for i >= 2, lam_{n+1} <= mu_n
    caps = [None] + [mu[i - 1] for i in range(1, n + 1)]

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == n + 1:
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        base = mu[i] if i < n else 0
        cap = base + left if i == 0 else min(caps[i], base + left)
        for v in range(cap, base - 1, -1):
            acc.append(v)
            rec(i + 1, left - (v - base), acc)
            acc.pop()

    rec(0, k, [])
    return out


def vertical_strips(mu: Partition, k: int) -> list[Partition]:
    """All lam containing mu with lam/mu a vertical strip of size k."""
    conj = conjugate(tuple(mu))
    return [conjugate(nu) for nu in horizontal_strips(conj, k)]
