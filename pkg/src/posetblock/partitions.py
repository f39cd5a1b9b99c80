"""Bounded integer partitions and multiset arrangements for the counting sums.

The distribution formulas pair an ideal having j maximal elements with the
partitions of r - c*M_w into exactly j parts, each part between 1 and M_w,
and then range over all distinct orderings (arrangements) of the parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import BoundsError, ExplosionError

ARRANGEMENT_CAP_DEFAULT = 10**6


@dataclass(frozen=True)
class BoundedPartition:
    """Non-increasing parts, each within [1, max_part] for the generating call."""

    parts: tuple[int, ...]

    @property
    def target(self) -> int:
        return sum(self.parts)

    @property
    def part_count(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """(value, count) pairs, descending by value."""
        out = []
        for p in self.parts:
            if out and out[-1][0] == p:
                out[-1][1] += 1
            else:
                out.append([p, 1])
        return tuple((v, c) for v, c in out)


@lru_cache(maxsize=None)
def partitions_by_count(
    target: int, max_part: int, max_parts: int
) -> dict:
    """Partitions of target with bounded parts, keyed by part count.

    Keys are part counts j; values are tuples of BoundedPartition sorted
    ascending as tuples.  target <= 0 yields an empty dict.
    """
    if max_part < 1:
        raise BoundsError(f"max_part {max_part} < 1")
    if max_parts < 0:
        raise BoundsError(f"max_parts {max_parts} < 0")
    out: dict = {}

    def rec(remaining: int, bound: int, acc: list) -> None:
        if remaining == 0:
            out.setdefault(len(acc), []).append(BoundedPartition(tuple(acc)))
            return
        if len(acc) == max_parts:
            return
        for p in range(min(bound, remaining), 0, -1):
            # remaining parts each at most p, so feasibility prunes early
            if remaining - p > p * (max_parts - len(acc) - 1):
                break
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    if target > 0:
        rec(target, max_part, [])
    return {j: tuple(sorted(v, key=lambda b: b.parts)) for j, v in out.items()}


def enumerate_partitions(
    r: int,
    c: int,
    max_part: int,
    max_parts: int,
    *,
    allow_empty: bool = False,
) -> list[BoundedPartition]:
    """All partitions of r - c*max_part into 1..max_parts parts in [1, max_part].

    A nonpositive target yields [] except that a zero target yields the
    empty partition when allow_empty is set (the zero-weight special case).
    """
    if r < 0 or c < 0:
        raise BoundsError(f"negative inputs r={r}, c={c}")
    target = r - c * max_part
    if target < 0:
        return []
    if target == 0:
        return [BoundedPartition(())] if allow_empty else []
    grouped = partitions_by_count(target, max_part, max_parts)
    return [b for j in sorted(grouped) for b in grouped[j]]


def arrangement_count(b: BoundedPartition) -> int:
    """Number of distinct orderings of the parts: t! / (r_1! ... r_l!)."""
    total = factorial(b.part_count)
    for _, count in b.multiplicities():
        total //= factorial(count)
    return total


def enumerate_arrangements(
    b: BoundedPartition, *, cap: int = ARRANGEMENT_CAP_DEFAULT
) -> list[tuple[int, ...]]:
    """All distinct orderings of the parts of b, ascending lexicographic."""
    count = arrangement_count(b)
    if count > cap:
        raise ExplosionError(f"{count} arrangements exceed cap {cap}")
    values = sorted({p for p in b.parts})
    remaining = {v: 0 for v in values}
    for p in b.parts:
        remaining[p] += 1
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def rec() -> None:
        if len(acc) == b.part_count:
            out.append(tuple(acc))
            return
        for v in values:
            if remaining[v]:
                remaining[v] -= 1
                acc.append(v)
                rec()
                acc.pop()
                remaining[v] += 1

    rec()
    return out
