"""Z_q^N addressed as n labeled blocks, and the (P,w,pi)-weight and distance.

A vector is a flat sequence of N symbols; block i is the slice
[offsets[i-1], offsets[i-1] + k_i).  The weight of a vector sums the block
weights (max symbol weight within the block) over the maximal elements of
the ideal generated by its block support, plus M_w for every non-maximal
element of that ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BoundsError, DimensionError
from .poset import Poset
from .weights import WeightModel


@dataclass(frozen=True)
class LabelMap:
    """Block lengths (k_1, ..., k_n) with prefix offsets for flat addressing."""

    k: tuple[int, ...]
    N: int
    offsets: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.k)

    def block_slice(self, i: int) -> slice:
        """Slice of block i (1-indexed) in a flat vector."""
        if not 1 <= i <= self.n:
            raise BoundsError(f"block index {i} outside [1, {self.n}]")
        return slice(self.offsets[i - 1], self.offsets[i - 1] + self.k[i - 1])


def label_map(ks: Sequence[int]) -> LabelMap:
    ks = tuple(int(v) for v in ks)
    if not ks or any(v < 1 for v in ks):
        raise BoundsError(f"block lengths must be positive: {ks}")
    offsets = []
    total = 0
    for v in ks:
        offsets.append(total)
        total += v
    return LabelMap(k=ks, N=total, offsets=tuple(offsets))


@dataclass(frozen=True)
class BlockVector:
    """A vector of Z_q^N together with its block structure."""

    pi: LabelMap
    entries: tuple[int, ...]

    def block(self, i: int) -> tuple[int, ...]:
        return self.entries[self.pi.block_slice(i)]


def block_vector(pi: LabelMap, entries: Sequence[int]) -> BlockVector:
    entries = tuple(int(v) for v in entries)
    if len(entries) != pi.N:
        raise DimensionError(f"vector length {len(entries)} != N = {pi.N}")
    return BlockVector(pi=pi, entries=entries)


def _entries(pi: LabelMap, x) -> tuple[int, ...]:
    if isinstance(x, BlockVector):
        if x.pi.k != pi.k:
            raise DimensionError("vector belongs to a different label map")
        return x.entries
    x = tuple(x)
    if len(x) != pi.N:
        raise DimensionError(f"vector length {len(x)} != N = {pi.N}")
    return x


def pi_support(pi: LabelMap, x) -> tuple[int, ...]:
    """Labels of the nonzero blocks of x, ascending."""
    e = _entries(pi, x)
    return tuple(
        i
        for i in range(1, pi.n + 1)
        if any(v != 0 for v in e[pi.block_slice(i)])
    )


def block_weight(W: WeightModel, block: Sequence[int]) -> int:
    """Max of the componentwise symbol weights; 0 iff the block is zero."""
    if not block:
        raise BoundsError("empty block")
    return max(W.weight(v) for v in block)


def pwpi_weight(P: Poset, pi: LabelMap, W: WeightModel, x) -> int:
    """Weight of x: block weights on the maximals of <supp_pi(x)>, M_w elsewhere."""
    if P.n != pi.n:
        raise DimensionError(f"poset has {P.n} elements, label map {pi.n}")
    e = _entries(pi, x)
    supp_mask = 0
    bw = {}
    for i in range(1, pi.n + 1):
        w = max(W.weight(v) for v in e[pi.block_slice(i)])
        if w:
            supp_mask |= 1 << (i - 1)
            bw[i - 1] = w
    ideal = P.closure_mask(supp_mask)
    maxm = P.maximals_mask(ideal)
    total = W.M_w * (ideal & ~maxm).bit_count()
    m = maxm
    while m:
        low = m & -m
        total += bw[low.bit_length() - 1]
        m ^= low
    return total


def vector_sub(q: int, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """Componentwise x - y mod q."""
    if len(x) != len(y):
        raise DimensionError(f"vector lengths differ: {len(x)} vs {len(y)}")
    return tuple((a - b) % q for a, b in zip(x, y))


def pwpi_distance(P: Poset, pi: LabelMap, W: WeightModel, x, y) -> int:
    """Distance d(x, y) = weight of the componentwise difference mod q."""
    return pwpi_weight(P, pi, W, vector_sub(W.q, _entries(pi, x), _entries(pi, y)))
