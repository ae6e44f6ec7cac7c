"""Partitions and Young-diagram geometry.

Boxes use matrix coordinates ``(i, j)``: ``i`` is the row (growing
downwards), ``j`` the column, both starting at 1.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction; anything else that is not a
    partition raises ``ValueError``.  ``Partition()`` is the empty partition.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """lambda_i with the convention lambda_i = 0 beyond the length (1-based)."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def contains(self, other: "Partition") -> bool:
        """Diagram containment ``other`` inside ``self``."""
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def to_json(self) -> list[int]:
        return list(self)

    def key(self) -> str:
        """Compact string key such as ``"[2,1]"`` used in JSON/CSV output."""
        return "[" + ",".join(map(str, self)) + "]"


EMPTY = Partition()


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_of(n))


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    out = []

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for k in range(min(remaining, max_part), 0, -1):
            prefix.append(k)
            rec(remaining - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_up_to(n: int) -> list[Partition]:
    return [lam for d in range(n + 1) for lam in _partitions_of(d)]


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def contains_box(lam: Partition, i: int, j: int) -> bool:
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def arm_leg(lam: Partition, i: int, j: int) -> tuple[int, int]:
    """Arm and leg of box (i, j) relative to ``lam``; the box need not lie in it.

    Missing rows and columns count as length 0, so both values can be
    negative for boxes outside the diagram.
    """
    lam = Partition(lam)
    return lam.part(i) - j, conjugate(lam).part(j) - i


def removable_corners(lam: Partition) -> list[tuple[int, int]]:
    """Boxes whose removal leaves a partition, top to bottom."""
    lam = Partition(lam)
    return [(i, part) for i, part in enumerate(lam, start=1)
            if i == len(lam) or lam[i] < part]


def addable_boxes(lam: Partition) -> list[tuple[int, int]]:
    lam = Partition(lam)
    out = []
    for i in range(1, len(lam) + 2):
        j = lam.part(i) + 1
        if i == 1 or lam.part(i - 1) >= j:
            out.append((i, j))
    return out


def remove_box(lam: Partition, i: int) -> Partition:
    parts = list(lam)
    parts[i - 1] -= 1
    return Partition(parts)


def add_box(lam: Partition, i: int) -> Partition:
    parts = list(lam) + [0]
    parts[i - 1] += 1
    return Partition(parts)


@lru_cache(maxsize=None)
def z_of(lam: Partition) -> int:
    out = 1
    for part, mult in Counter(lam).items():
        out *= part**mult * factorial(mult)
    return out


def _prefix_sums(lam):
    acc, out = 0, []
    for p in lam:
        acc += p
        out.append(acc)
    return out


def dominance_compare(mu: Partition, lam: Partition) -> int | None:
    """-1 if mu < lam, 0 if equal, 1 if mu > lam, None if incomparable.

    Partitions of different sizes are incomparable.
    """
    if sum(mu) != sum(lam):
        return None
    if tuple(mu) == tuple(lam):
        return 0
    a, b = _prefix_sums(mu), _prefix_sums(lam)
    n = max(len(a), len(b))
    a += [a[-1] if a else 0] * (n - len(a))
    b += [b[-1] if b else 0] * (n - len(b))
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le:
        return -1
    if ge:
        return 1
    return None


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    cmp = dominance_compare(mu, lam)
    return cmp is not None and cmp <= 0


def shrink_by(lam: Partition, k: int) -> list[Partition]:
    """All mu contained in lam with |mu| = |lam| - k, reverse-lex ordered."""
    if k < 0:
        raise ValueError("k must be non-negative")
    level = {Partition(lam)}
    for _ in range(k):
        level = {remove_box(mu, i) for mu in level for i, _ in removable_corners(mu)}
    return sorted(level, reverse=True)


def grow_by(mu: Partition, k: int) -> list[Partition]:
    """All lam containing mu with |lam| = |mu| + k, reverse-lex ordered."""
    if k < 0:
        raise ValueError("k must be non-negative")
    level = {Partition(mu)}
    for _ in range(k):
        level = {add_box(lam, i) for lam in level for i, _ in addable_boxes(lam)}
    return sorted(level, reverse=True)


def block_encoding(lam: Partition) -> tuple[list[int], list[int]]:
    """Return (m, n) with lam = (n_1^{j_1}, ..., n_l^{j_l}) and m_k = j_1 + ... + j_k.

    ``n`` is strictly decreasing and ``m`` strictly increasing; the corners
    of lam are exactly the boxes (m_k, n_k).
    """
    ms, ns = [], []
    for i, part in enumerate(lam, start=1):
        if i == len(lam) or lam[i] < part:
            ms.append(i)
            ns.append(part)
    return ms, ns


def from_block_encoding(ms: list[int], ns: list[int]) -> Partition:
    parts, prev = [], 0
    for m, n in zip(ms, ns):
        parts += [n] * (m - prev)
        prev = m
    return Partition(parts)


def partition_tuples(d: int, r: int) -> list[tuple[Partition, ...]]:
    """All r-tuples of partitions with total size d."""
    if r == 0:
        return [()] if d == 0 else []
    out = []
    for k in range(d, -1, -1):
        for first in _partitions_of(k):
            for rest in partition_tuples(d - k, r - 1):
                out.append((first,) + rest)
    return out


def linear_extension(d: int, order: str = "lex") -> list[Partition]:
    """Partitions of d listed so that dominance-smaller ones come first.

    ``"lex"`` is increasing lexicographic order; ``"conjugate"`` sorts by
    decreasing lexicographic order of the conjugate.  Both refine dominance
    but order incomparable pairs differently from degree 6 on.
    """
    parts = list(_partitions_of(d))
    if order == "lex":
        return parts[::-1]
    if order == "conjugate":
        return sorted(parts, key=conjugate, reverse=True)
    raise ValueError(f"unknown order {order!r}")
