"""Complete weight distributions |A_r| and ball volumes of a (P,w,pi)-space.

The general method sums, over every nonempty ideal I with j maximal and
c non-maximal elements, the contributions of all partitions of r - c*M_w
into exactly j bounded parts and all arrangements of each partition: the
arrangement tuple is applied positionally to Max(I) sorted by ascending
label, each position contributing the block class size |D_b^{k_i}|, and
the non-maximal elements contribute a factor q^(sum of their k_l).

Fast paths (equal blocks, hierarchical posets, chains, and the four
classical specializations) compute the same table without arrangement
enumeration or without global ideal enumeration; every path must agree
exactly with every other applicable path and with the brute oracle.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace
from itertools import combinations
from math import comb

from .errors import BoundsError, PreconditionError
from .partitions import (
    ARRANGEMENT_CAP_DEFAULT,
    enumerate_arrangements,
    partitions_by_count,
)
from .poset import (
    IDEAL_CAP_DEFAULT,
    Poset,
    chain_order,
    classify,
    enumerate_ideals,
)
from .space import LabelMap
from .weights import WeightModel, block_class_size


@dataclass(frozen=True)
class DistributionTable:
    """counts[r] = number of vectors of weight exactly r, 0 <= r <= n*M_w."""

    q: int
    N: int
    n: int
    max_weight: int
    counts: tuple[int, ...]
    method: str
    poset_kind: str

    def total(self) -> int:
        return sum(self.counts)

    def check_normalization(self) -> bool:
        """Whole-space identity: the counts must sum to q^N."""
        return self.counts[0] == 1 and self.total() == self.q**self.N


def ball_volume(table: DistributionTable, r: int) -> int:
    """|B_r| = 1 + |A_1| + ... + |A_r|."""
    if not 0 <= r <= table.max_weight:
        raise BoundsError(f"radius {r} outside [0, {table.max_weight}]")
    return sum(table.counts[: r + 1])


def _poset_kind(P: Poset) -> str:
    cls = classify(P)
    if cls.is_chain:
        return "chain"
    if cls.is_antichain:
        return "antichain"
    if cls.is_hierarchical:
        return "hierarchical"
    return "general"


def _check_dims(P: Poset, pi: LabelMap) -> None:
    if P.n != pi.n:
        raise PreconditionError(
            f"poset has {P.n} elements but label map has {pi.n} blocks"
        )


def _table(P, pi, W, counts, method) -> DistributionTable:
    return DistributionTable(
        q=W.q,
        N=pi.N,
        n=pi.n,
        max_weight=pi.n * W.M_w,
        counts=tuple(counts),
        method=method,
        poset_kind=_poset_kind(P),
    )


def distribution_general(
    P: Poset,
    pi: LabelMap,
    W: WeightModel,
    *,
    ideal_cap: int = IDEAL_CAP_DEFAULT,
    arrangement_cap: int = ARRANGEMENT_CAP_DEFAULT,
) -> DistributionTable:
    """The full ideal/partition/arrangement sum; works for every instance."""
    _check_dims(P, pi)
    q, M_w, n = W.q, W.M_w, pi.n
    counts = [0] * (n * M_w + 1)
    counts[0] = 1
    family = enumerate_ideals(P, cap=ideal_cap)
    for ideal in family.ideals:
        j = ideal.max_count
        if j == 0:
            continue
        c = ideal.card - j
        base = q ** sum(pi.k[l - 1] for l in ideal.non_maximals)
        max_ks = [pi.k[i - 1] for i in ideal.maximals]  # ascending labels
        for target in range(j, j * M_w + 1):
            parts = partitions_by_count(target, M_w, n).get(j, ())
            if not parts:
                continue
            contribution = 0
            for b in parts:
                for arr in enumerate_arrangements(b, cap=arrangement_cap):
                    prod = 1
                    for part, k in zip(arr, max_ks):
                        prod *= block_class_size(W, part, k)
                    contribution += prod
            counts[target + c * M_w] += contribution * base
    return _table(P, pi, W, counts, "general")


def _grouped_partition_term(W: WeightModel, b, k: int, j: int) -> int:
    """Product |D_{t_s}^k|^{r_s} * C(j - r_1 - ... - r_{s-1}, r_s) over distinct parts."""
    term = 1
    left = j
    for value, count in b.multiplicities():
        term *= block_class_size(W, value, k) ** count * comb(left, count)
        left -= count
    return term


def distribution_equal_blocks(
    P: Poset,
    pi: LabelMap,
    W: WeightModel,
    *,
    ideal_cap: int = IDEAL_CAP_DEFAULT,
) -> DistributionTable:
    """Equal-block fast path: no arrangement enumeration, ideals only by (i, j)."""
    _check_dims(P, pi)
    ks = set(pi.k)
    if len(ks) != 1:
        raise PreconditionError(f"blocks are not all equal: {pi.k}")
    k = pi.k[0]
    q, M_w, n = W.q, W.M_w, pi.n
    counts = [0] * (n * M_w + 1)
    counts[0] = 1
    family = enumerate_ideals(P, cap=ideal_cap)
    for (card, j), group in family.by_card_and_max.items():
        if j == 0:
            continue
        c = card - j
        base = len(group) * q ** (k * c)
        for target in range(j, j * M_w + 1):
            parts = partitions_by_count(target, M_w, n).get(j, ())
            if not parts:
                continue
            contribution = sum(_grouped_partition_term(W, b, k, j) for b in parts)
            counts[target + c * M_w] += contribution * base
    return _table(P, pi, W, counts, "equal")


def distribution_hierarchical(
    P: Poset,
    pi: LabelMap,
    W: WeightModel,
    *,
    arrangement_cap: int = ARRANGEMENT_CAP_DEFAULT,
) -> DistributionTable:
    """Level-by-level fast path for hierarchical posets.

    An ideal with maximals in level j is the union of all lower levels with
    a nonempty subset of level j, so the sum runs over level subsets and
    never enumerates the global ideal lattice.
    """
    _check_dims(P, pi)
    cls = classify(P)
    if not cls.is_hierarchical:
        raise PreconditionError("poset is not hierarchical")
    q, M_w, n = W.q, W.M_w, pi.n
    counts = [0] * (n * M_w + 1)
    counts[0] = 1
    below_exp = 0  # sum of k_i over all levels below the current one
    t_prefix = 0  # number of elements in lower levels = forced non-maximals
    for level in cls.levels.levels:
        base = q**below_exp
        for l in range(1, len(level) + 1):
            for subset in combinations(level, l):
                sub_ks = [pi.k[i - 1] for i in subset]
                for target in range(l, l * M_w + 1):
                    parts = partitions_by_count(target, M_w, n).get(l, ())
                    if not parts:
                        continue
                    contribution = 0
                    for b in parts:
                        for arr in enumerate_arrangements(b, cap=arrangement_cap):
                            prod = 1
                            for part, k in zip(arr, sub_ks):
                                prod *= block_class_size(W, part, k)
                            contribution += prod
                    counts[t_prefix * M_w + target] += contribution * base
        below_exp += sum(pi.k[i - 1] for i in level)
        t_prefix += len(level)
    return _table(P, pi, W, counts, "hierarchical")


def distribution_chain(P: Poset, pi: LabelMap, W: WeightModel) -> DistributionTable:
    """Chain closed form: |A_{t*M_w + a}| = q^(k_1+...+k_t) * |D_a^{k_{t+1}}|."""
    _check_dims(P, pi)
    order = chain_order(P)  # raises PreconditionError on non-chains
    q, M_w, n = W.q, W.M_w, pi.n
    counts = [0] * (n * M_w + 1)
    counts[0] = 1
    prefix_exp = 0
    for t in range(n):
        k_next = pi.k[order[t] - 1]
        for a in range(1, M_w + 1):
            counts[t * M_w + a] = q**prefix_exp * block_class_size(W, a, k_next)
        prefix_exp += k_next
    return _table(P, pi, W, counts, "chain")


def _require_hamming(W: WeightModel) -> None:
    if W.table != (0,) + (1,) * (W.q - 1):
        raise PreconditionError("this specialization requires the Hamming weight")


def distribution_specialized(
    kind: str,
    P: Poset,
    pi: LabelMap,
    W: WeightModel,
    *,
    ideal_cap: int = IDEAL_CAP_DEFAULT,
) -> DistributionTable:
    """Closed forms for the four classical specializations.

    pw : all k_i = 1 (weighted coordinates, no blocks)
    ppi: Hamming weight (poset block space)
    pi : Hamming weight on an antichain (block space)
    p  : Hamming weight and all k_i = 1 (poset space)
    """
    _check_dims(P, pi)
    q, n = W.q, pi.n
    if kind == "pw":
        if set(pi.k) != {1}:
            raise PreconditionError("pw-space requires all block lengths 1")
        counts = [0] * (n * W.M_w + 1)
        counts[0] = 1
        family = enumerate_ideals(P, cap=ideal_cap)
        for (card, j), group in family.by_card_and_max.items():
            if j == 0:
                continue
            c = card - j
            base = len(group) * q**c
            for target in range(j, j * W.M_w + 1):
                parts = partitions_by_count(target, W.M_w, n).get(j, ())
                contribution = sum(
                    _grouped_partition_term(W, b, 1, j) for b in parts
                )
                counts[target + c * W.M_w] += contribution * base
        return _table(P, pi, W, counts, "specialization:pw")
    if kind == "ppi":
        _require_hamming(W)
        counts = [0] * (n + 1)
        counts[0] = 1
        family = enumerate_ideals(P, cap=ideal_cap)
        for ideal in family.ideals:
            if ideal.card == 0:
                continue
            term = 1
            for i in ideal.maximals:
                term *= q ** pi.k[i - 1] - 1
            term *= q ** sum(pi.k[l - 1] for l in ideal.non_maximals)
            counts[ideal.card] += term
        return _table(P, pi, W, counts, "specialization:ppi")
    if kind == "pi":
        _require_hamming(W)
        if not classify(P).is_antichain:
            raise PreconditionError("pi-space requires an antichain")
        # elementary symmetric polynomial in the (q^{k_i} - 1)
        coeffs = [1]
        for k in pi.k:
            factor = q**k - 1
            coeffs = [
                (coeffs[r] if r < len(coeffs) else 0)
                + (coeffs[r - 1] * factor if r > 0 else 0)
                for r in range(len(coeffs) + 1)
            ]
        return _table(P, pi, W, coeffs, "specialization:pi")
    if kind == "p":
        _require_hamming(W)
        if set(pi.k) != {1}:
            raise PreconditionError("p-space requires all block lengths 1")
        counts = [0] * (n + 1)
        counts[0] = 1
        family = enumerate_ideals(P, cap=ideal_cap)
        for (card, j), group in family.by_card_and_max.items():
            if j == 0:
                continue
            counts[card] += len(group) * (q - 1) ** j * q ** (card - j)
        return _table(P, pi, W, counts, "specialization:p")
    raise PreconditionError(f"unknown specialization kind {kind!r}")


METHODS = ("auto", "general", "equal", "hierarchical", "chain")


def distribution(
    P: Poset,
    pi: LabelMap,
    W: WeightModel,
    *,
    method: str = "auto",
    ideal_cap: int = IDEAL_CAP_DEFAULT,
    arrangement_cap: int = ARRANGEMENT_CAP_DEFAULT,
) -> DistributionTable:
    """Dispatch: auto picks chain, then hierarchical, then equal, then general."""
    if method == "auto":
        cls = classify(P)
        if cls.is_chain:
            method = "chain"
        elif cls.is_hierarchical:
            method = "hierarchical"
        elif len(set(pi.k)) == 1:
            method = "equal"
        else:
            method = "general"
    if method == "general":
        return distribution_general(
            P, pi, W, ideal_cap=ideal_cap, arrangement_cap=arrangement_cap
        )
    if method == "equal":
        return distribution_equal_blocks(P, pi, W, ideal_cap=ideal_cap)
    if method == "hierarchical":
        return distribution_hierarchical(P, pi, W, arrangement_cap=arrangement_cap)
    if method == "chain":
        return distribution_chain(P, pi, W)
    raise PreconditionError(f"unknown method {method!r}")


def applicable_methods(P: Poset, pi: LabelMap) -> list[str]:
    """Closed-form methods whose preconditions hold for this instance."""
    cls = classify(P)
    out = ["general"]
    if len(set(pi.k)) == 1:
        out.append("equal")
    if cls.is_hierarchical:
        out.append("hierarchical")
    if cls.is_chain:
        out.append("chain")
    return out


def table_to_json_dict(table: DistributionTable) -> dict:
    """Counts serialized as decimal strings (they routinely exceed 64 bits)."""
    return {
        "q": table.q,
        "N": table.N,
        "method": table.method,
        "counts": [
            {"r": r, "count": str(c)} for r, c in enumerate(table.counts)
        ],
    }


def table_from_json_dict(obj: dict) -> DistributionTable:
    entries = sorted(obj["counts"], key=lambda e: e["r"])
    counts = tuple(int(e["count"]) for e in entries)
    return DistributionTable(
        q=int(obj["q"]),
        N=int(obj["N"]),
        n=0,
        max_weight=len(counts) - 1,
        counts=counts,
        method=obj.get("method", "unknown"),
        poset_kind="unknown",
    )


def table_to_json(table: DistributionTable) -> str:
    return json.dumps(table_to_json_dict(table), indent=2)


def table_to_csv(table: DistributionTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["r", "count"])
    for r, c in enumerate(table.counts):
        writer.writerow([r, str(c)])
    return buf.getvalue()


def with_counts(table: DistributionTable, counts) -> DistributionTable:
    """Copy with replaced counts (used by the CLI corruption test hook)."""
    return replace(table, counts=tuple(counts))
