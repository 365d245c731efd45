"""Semistandard tableaux, the cocharge statistic and Kostka-Foulkes polynomials.

Tableaux are in French notation: ``rows[0]`` is the bottom row, rows weakly
increase to the right and columns strictly increase upward.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .exact import LaurentPoly
from .partitions import Partition, PartitionError, horizontal_strips, partition


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        rows_t = tuple(tuple(int(x) for x in r) for r in rows if len(r))
        shape = partition(len(r) for r in rows_t)
        tab = cls(shape, rows_t)
        if not tab.is_valid():
            raise ValueError(f"not a semistandard tableau: {rows_t}")
        return tab

    def is_valid(self) -> bool:
        for r in self.rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
        for i in range(1, len(self.rows)):
            below, row = self.rows[i - 1], self.rows[i]
            if len(row) > len(below) or any(row[j] <= below[j] for j in range(len(row))):
                return False
        return True

    def weight(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for r in self.rows:
            for x in r:
                counts[x] = counts.get(x, 0) + 1
        top = max(counts, default=0)
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def reading_word(self) -> tuple[int, ...]:
        return reading_word(self)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def reading_word(tab: Tableau) -> tuple[int, ...]:
    """Rows from top to bottom, each read left to right."""
    return tuple(x for r in reversed(tab.rows) for x in r)


@dataclass(frozen=True)
class CochargeWord:
    word: tuple[int, ...]
    labels: tuple[int, ...]
    subword_index: tuple[int, ...]

    @property
    def cocharge(self) -> int:
        return sum(self.labels)


def cocharge_labels(word: Sequence[int]) -> CochargeWord:
    """Label a word of partition weight by repeated cocharge subword extraction."""
    n = len(word)
    labels = [-1] * n
    sub = [-1] * n
    remaining = n
    k = 0
    while remaining:
        pos = _find(word, labels, 1, n - 1)
        if pos < 0:
            raise ValueError(f"word {tuple(word)} does not have partition weight")
        lab = 0
        labels[pos] = 0
        sub[pos] = k
        remaining -= 1
        v = 1
        while True:
            v += 1
            nxt = _find(word, labels, v, pos - 1)
            if nxt >= 0:
                lab += 1
            else:
                nxt = _find(word, labels, v, n - 1, stop=pos)
                if nxt < 0:
                    break
            labels[nxt] = lab
            sub[nxt] = k
            remaining -= 1
            pos = nxt
        k += 1
    return CochargeWord(tuple(word), tuple(labels), tuple(sub))


def _find(word, labels, v: int, start: int, stop: int = -1) -> int:
    for i in range(start, stop, -1):
        if labels[i] < 0 and word[i] == v:
            return i
    return -1


def cocharge_of_word(word: Sequence[int]) -> int:
    """Cocharge of a word of partition weight (sum of labels only, no bookkeeping)."""
    n = len(word)
    free = [True] * n
    total = 0
    remaining = n
    while remaining:
        pos = n - 1
        while not (free[pos] and word[pos] == 1):
            pos -= 1
        free[pos] = False
        remaining -= 1
        lab = 0
        v = 2
        while True:
            i = pos - 1
            while i >= 0 and not (free[i] and word[i] == v):
                i -= 1
            if i >= 0:
                lab += 1
            else:
                i = n - 1
                while i > pos and not (free[i] and word[i] == v):
                    i -= 1
                if i <= pos:
                    break
            free[i] = False
            remaining -= 1
            total += lab
            pos = i
            v += 1
    return total


def cocharge(tab: Tableau) -> int:
    return cocharge_of_word(reading_word(tab))


def _check_sizes(shape, weight) -> None:
    if sum(shape) != sum(weight):
        raise PartitionError(f"size mismatch: |{tuple(shape)}| != |{tuple(weight)}|")


def _chains(weight: Partition):
    """Yield (shape, rows) for every SSYT of the given weight, over all shapes."""

    def rec(i: int, shape: Partition, rows: list[list[int]]):
        if i == len(weight):
            yield shape, rows
            return
        v = i + 1
        for lam in horizontal_strips(shape, weight[i]):
            new_rows = [list(r) for r in rows] + [[] for _ in range(len(lam) - len(rows))]
            for r in range(len(lam)):
                old = shape[r] if r < len(shape) else 0
                new_rows[r].extend([v] * (lam[r] - old))
            yield from rec(i + 1, lam, new_rows)

    yield from rec(0, (), [])


def enumerate_ssyt(shape: Sequence[int], weight: Sequence[int]) -> list[Tableau]:
    """All SSYT of the given shape and weight, sorted by reading word."""
    shape, weight = partition(shape), partition(weight)
    _check_sizes(shape, weight)
    out = []
    for lam, rows in _chains(weight):
        if lam == shape:
            out.append(Tableau(lam, tuple(tuple(r) for r in rows)))
    out.sort(key=reading_word)
    return out


def kostka_number(shape: Sequence[int], weight: Sequence[int]) -> int:
    return len(enumerate_ssyt(shape, weight))


_KF_LOCK = threading.Lock()
_KF_CACHE: dict[Partition, dict[Partition, LaurentPoly]] = {}


def kostka_foulkes_column(mu: Sequence[int]) -> dict[Partition, LaurentPoly]:
    """{lam: K~_{lam,mu}(t)} for all lam with a nonzero entry."""
    mu = partition(mu)
    cached = _KF_CACHE.get(mu)
    if cached is not None:
        return cached
    acc: dict[Partition, dict[tuple[int, int], int]] = {}
    for lam, rows in _chains(mu):
        word = [x for r in reversed(rows) for x in r]
        key = (0, cocharge_of_word(word))
        d = acc.setdefault(lam, {})
        d[key] = d.get(key, 0) + 1
    col = {lam: LaurentPoly(d) for lam, d in acc.items()}
    with _KF_LOCK:
        _KF_CACHE.setdefault(mu, col)
    return _KF_CACHE[mu]


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """K~_{lam,mu}(t) = sum over SSYT(lam, mu) of t^cocharge."""
    lam, mu = partition(lam), partition(mu)
    _check_sizes(lam, mu)
    return kostka_foulkes_column(mu).get(lam, LaurentPoly())
