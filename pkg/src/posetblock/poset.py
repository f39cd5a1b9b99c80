"""Finite posets on {1,...,n}: ideals, ideal families, classifiers, duals.

Elements are 1-indexed at the API boundary (matching the usual convention
for coordinate labels) and 0-indexed internally.  Every subset of the
ground set is stored as a bitmask over the internal indices, so closure,
maximal-element and comparability queries are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    BoundsError,
    CycleError,
    DimensionError,
    ExplosionError,
    PreconditionError,
)

N_CAP_DEFAULT = 24
IDEAL_CAP_DEFAULT = 1 << 22


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """Partial order on {1..n} stored as per-element down-set bitmasks.

    down[j] is the bitmask of {i : i <= j} (0-indexed, includes j itself);
    up[i] is the bitmask of {j : i <= j}.  Both are redundant but keep the
    hot closure/maximal queries branch-free.
    """

    n: int
    down: tuple[int, ...]
    up: tuple[int, ...]

    def leq(self, a: int, b: int) -> bool:
        """Whether a <= b in the order (1-indexed)."""
        self._check_element(a)
        self._check_element(b)
        return bool((self.down[b - 1] >> (a - 1)) & 1)

    def _check_element(self, a: int) -> None:
        if not 1 <= a <= self.n:
            raise BoundsError(f"element {a} outside [1, {self.n}]")

    def closure_mask(self, mask: int) -> int:
        """Bitmask of the ideal generated by the elements of mask."""
        out = 0
        for i in _bits(mask):
            out |= self.down[i]
        return out

    def maximals_mask(self, mask: int) -> int:
        """Bitmask of the maximal elements of the subset mask."""
        out = 0
        for i in _bits(mask):
            if self.up[i] & mask == 1 << i:
                out |= 1 << i
        return out

    def cover_relations(self) -> list[tuple[int, int]]:
        """Transitive reduction as 1-indexed (a, b) pairs with a covered by b."""
        covers = []
        for j in range(self.n):
            below = self.down[j] & ~(1 << j)
            for i in _bits(below):
                between = self.down[j] & self.up[i] & ~(1 << i) & ~(1 << j)
                if between == 0:
                    covers.append((i + 1, j + 1))
        return covers

    def to_json_dict(self) -> dict:
        return {"n": self.n, "relations": [[a, b] for a, b in self.cover_relations()]}


@dataclass(frozen=True)
class Ideal:
    """An order ideal (down-set) together with its maximal elements."""

    n: int
    members_mask: int
    max_mask: int

    @property
    def card(self) -> int:
        return self.members_mask.bit_count()

    @property
    def max_count(self) -> int:
        return self.max_mask.bit_count()

    @property
    def members(self) -> tuple[int, ...]:
        """Members as ascending 1-indexed labels."""
        return tuple(i + 1 for i in _bits(self.members_mask))

    @property
    def maximals(self) -> tuple[int, ...]:
        """Maximal elements as ascending 1-indexed labels."""
        return tuple(i + 1 for i in _bits(self.max_mask))

    @property
    def non_maximals(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in _bits(self.members_mask & ~self.max_mask))

    def contains(self, a: int) -> bool:
        return bool((self.members_mask >> (a - 1)) & 1)


@dataclass(frozen=True)
class IdealFamily:
    """All ideals of a poset grouped into the families I_j^i.

    by_card_and_max[(i, j)] lists the ideals of cardinality i with j maximal
    elements; the empty ideal sits under (0, 0).  Ideals are ordered by
    ascending members bitmask everywhere, which fixes the pairing with
    arrangement tuples in the distribution sums.
    """

    poset: Poset
    ideals: tuple[Ideal, ...]
    by_card_and_max: dict
    totals: dict

    def group(self, card: int, max_count: int) -> tuple[Ideal, ...]:
        return self.by_card_and_max.get((card, max_count), ())

    def of_card(self, card: int) -> tuple[Ideal, ...]:
        return tuple(i for i in self.ideals if i.card == card)

    def __len__(self) -> int:
        return len(self.ideals)


@dataclass(frozen=True)
class LevelDecomposition:
    """Height function and level partition of a poset."""

    heights: tuple[int, ...]  # heights[i-1] = h(i), 1-indexed elements
    levels: tuple[tuple[int, ...], ...]  # levels[j-1] = elements of height j
    level_sizes: tuple[int, ...]

    @property
    def height(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class PosetClass:
    is_chain: bool
    is_antichain: bool
    is_hierarchical: bool
    levels: LevelDecomposition


def build_poset(
    n: int,
    relations: Iterable[tuple[int, int]] = (),
    *,
    n_cap: int = N_CAP_DEFAULT,
) -> Poset:
    """Build the poset whose order is the reflexive-transitive closure of relations.

    relations contains 1-indexed (a, b) pairs meaning a <= b.  Raises
    CycleError if the closure is not antisymmetric, BoundsError for indices
    outside [1, n] or n outside [1, n_cap].
    """
    if not 1 <= n <= n_cap:
        raise BoundsError(f"ground set size {n} outside [1, {n_cap}]")
    up = [1 << i for i in range(n)]
    for a, b in relations:
        if not (1 <= a <= n and 1 <= b <= n):
            raise BoundsError(f"relation ({a}, {b}) outside [1, {n}]")
        up[a - 1] |= 1 << (b - 1)
    # transitive closure over bitmask rows
    for k in range(n):
        for i in range(n):
            if (up[i] >> k) & 1:
                up[i] |= up[k]
    for i in range(n):
        for j in _bits(up[i] & ~(1 << i)):
            if (up[j] >> i) & 1:
                raise CycleError(
                    f"elements {i + 1} and {j + 1} are mutually comparable"
                )
    down = [0] * n
    for i in range(n):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    return Poset(n=n, down=tuple(down), up=tuple(up))


def poset_from_json(obj: dict, *, n_cap: int = N_CAP_DEFAULT) -> Poset:
    """Parse the {"n": ..., "relations": [[a, b], ...]} wire shape."""
    pairs = [(int(a), int(b)) for a, b in obj.get("relations", [])]
    return build_poset(int(obj["n"]), pairs, n_cap=n_cap)


def ideal_closure(P: Poset, S: Iterable[int]) -> Ideal:
    """Smallest ideal containing S (1-indexed labels), with maximals computed."""
    mask = 0
    for a in S:
        P._check_element(a)
        mask |= 1 << (a - 1)
    members = P.closure_mask(mask)
    return Ideal(n=P.n, members_mask=members, max_mask=P.maximals_mask(members))


def enumerate_ideals(P: Poset, *, cap: int = IDEAL_CAP_DEFAULT) -> IdealFamily:
    """Enumerate every ideal of P, grouped by (cardinality, #maximals).

    BFS over the down-set lattice: an ideal grows by any element whose
    strict down-set it already contains.  Raises ExplosionError when the
    ideal count exceeds cap (an antichain has 2^n ideals).
    """
    strict_down = [P.down[i] & ~(1 << i) for i in range(P.n)]
    full = (1 << P.n) - 1
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            free = full & ~mask
            for i in _bits(free):
                if strict_down[i] & ~mask == 0:
                    grown = mask | (1 << i)
                    if grown not in seen:
                        seen.add(grown)
                        if len(seen) > cap:
                            raise ExplosionError(
                                f"ideal count exceeds cap {cap}"
                            )
                        nxt.append(grown)
        frontier = nxt
    ideals = tuple(
        Ideal(n=P.n, members_mask=m, max_mask=P.maximals_mask(m))
        for m in sorted(seen)
    )
    by_card_and_max: dict = {}
    totals: dict = {}
    for ideal in ideals:
        key = (ideal.card, ideal.max_count)
        by_card_and_max.setdefault(key, []).append(ideal)
        totals[ideal.card] = totals.get(ideal.card, 0) + 1
    by_card_and_max = {k: tuple(v) for k, v in by_card_and_max.items()}
    return IdealFamily(
        poset=P, ideals=ideals, by_card_and_max=by_card_and_max, totals=totals
    )


def dual_poset(P: Poset) -> Poset:
    """Order-reversed poset; its ideals are the complements of P's ideals."""
    return Poset(n=P.n, down=P.up, up=P.down)


def level_decomposition(P: Poset) -> LevelDecomposition:
    """Heights h(i) = size of the largest chain with i on top, and the levels."""
    order = sorted(range(P.n), key=lambda i: P.down[i].bit_count())
    heights = [1] * P.n
    for i in order:
        below = P.down[i] & ~(1 << i)
        for j in _bits(below):
            heights[i] = max(heights[i], heights[j] + 1)
    h = max(heights)
    levels = tuple(
        tuple(i + 1 for i in range(P.n) if heights[i] == lvl)
        for lvl in range(1, h + 1)
    )
    return LevelDecomposition(
        heights=tuple(heights),
        levels=levels,
        level_sizes=tuple(len(lvl) for lvl in levels),
    )


def classify(P: Poset) -> PosetClass:
    """Chain / antichain / hierarchical classification with the level data."""
    levels = level_decomposition(P)
    hier = True
    for lo in range(len(levels.levels) - 1):
        for hi in range(lo + 1, len(levels.levels)):
            for a in levels.levels[lo]:
                for b in levels.levels[hi]:
                    if not P.leq(a, b):
                        hier = False
                        break
                if not hier:
                    break
            if not hier:
                break
        if not hier:
            break
    is_chain = hier and all(s == 1 for s in levels.level_sizes)
    is_antichain = levels.height == 1
    return PosetClass(
        is_chain=is_chain,
        is_antichain=is_antichain,
        is_hierarchical=hier,
        levels=levels,
    )


def chain_order(P: Poset) -> tuple[int, ...]:
    """Elements of a chain poset from bottom to top (1-indexed)."""
    cls = classify(P)
    if not cls.is_chain:
        raise PreconditionError("poset is not a chain")
    return tuple(lvl[0] for lvl in cls.levels.levels)


def is_finer(P: Poset, P2: Poset) -> bool:
    """Whether P2 refines P: every relation a <= b of P also holds in P2."""
    if P.n != P2.n:
        raise DimensionError(f"ground sets differ: {P.n} vs {P2.n}")
    return all(P.up[i] & ~P2.up[i] == 0 for i in range(P.n))
