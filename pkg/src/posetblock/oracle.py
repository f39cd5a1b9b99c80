"""Ground-truth engine: exhaustive sweeps of Z_q^N, independent of all closed forms.

Every vector index in [0, q^N) is processed in odometer order (last
coordinate fastest), in contiguous chunks.  Per-block weight lookup tables
are built by brute enumeration of each block's q^k_i values; a vector's
weight is then computed from its block-weight profile by the definitional
closure/maximals rule.  Nothing here touches the ideal/partition counting
machinery, so agreement with the closed forms is a real theorem check.
"""

from __future__ import annotations

import hashlib
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .distribution import DistributionTable
from .errors import BoundsError, ExplosionError
from .poset import Poset
from .space import LabelMap
from .weights import WeightModel

SPACE_CAP_DEFAULT = 10**7
SPACE_CAP_ENV = "POSETBLOCK_CAP_SPACE"
_CHUNK = 1 << 18


def space_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(SPACE_CAP_ENV)
    return int(env) if env else SPACE_CAP_DEFAULT


@dataclass(frozen=True)
class OracleResult:
    histogram: dict
    total: int
    elapsed: float
    fingerprint: str
    q: int
    N: int
    n: int
    max_weight: int

    def to_table(self) -> DistributionTable:
        counts = tuple(self.histogram.get(r, 0) for r in range(self.max_weight + 1))
        return DistributionTable(
            q=self.q,
            N=self.N,
            n=self.n,
            max_weight=self.max_weight,
            counts=counts,
            method="oracle",
            poset_kind="unknown",
        )


@dataclass(frozen=True)
class PerfectnessResult:
    disjoint: bool
    covering: bool
    max_multiplicity: int
    min_multiplicity: int


@dataclass(frozen=True)
class MetricViolation:
    kind: str  # "identity" | "symmetry" | "triangle"
    x: tuple
    y: tuple
    z: tuple | None


@dataclass(frozen=True)
class MetricAxiomReport:
    samples: int
    violation_count: int
    witnesses: tuple

    @property
    def ok(self) -> bool:
        return self.violation_count == 0


def _fingerprint(P: Poset, pi: LabelMap, W: WeightModel) -> str:
    blob = repr((W.q, P.down, pi.k, W.table)).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _block_weight_tables(pi: LabelMap, W: WeightModel) -> list[np.ndarray]:
    """For each block, the weight of every one of its q^k_i values.

    Built by literal enumeration: split the block code into base-q digits
    and take the max symbol weight.
    """
    wtab = np.array(W.table, dtype=np.int64)
    out = []
    for k in pi.k:
        codes = np.arange(W.q**k, dtype=np.int64)
        bw = np.zeros(W.q**k, dtype=np.int64)
        for t in range(k):
            digit = (codes // (W.q ** (k - 1 - t))) % W.q
            np.maximum(bw, wtab[digit], out=bw)
        out.append(bw)
    return out


def _order_matrices(P: Poset) -> tuple[np.ndarray, np.ndarray]:
    """leq[i, j] = i <= j and strict[i, j] = i < j as uint8 matrices (0-indexed)."""
    n = P.n
    leq = np.zeros((n, n), dtype=np.uint8)
    for j in range(n):
        for i in range(n):
            leq[i, j] = (P.down[j] >> i) & 1
    strict = leq.copy()
    np.fill_diagonal(strict, 0)
    return leq, strict


def _weights_from_block_weights(
    leq: np.ndarray, strict: np.ndarray, M_w: int, wmat: np.ndarray
) -> np.ndarray:
    """Definitional weight of each row of an (S, n) block-weight matrix."""
    support = (wmat > 0).astype(np.uint8)
    closure = (support @ leq.T) > 0
    dominated = (closure.astype(np.uint8) @ strict.T) > 0
    maximal = closure & ~dominated
    non_max = closure & ~maximal
    return (wmat * maximal).sum(axis=1) + M_w * non_max.sum(axis=1)


def _index_places(pi: LabelMap, q: int) -> tuple[list[int], list[int]]:
    """Per-block radix q^k_i and positional factor in the odometer index."""
    sizes = [q**k for k in pi.k]
    places = [1] * pi.n
    for i in range(pi.n - 2, -1, -1):
        places[i] = places[i + 1] * sizes[i + 1]
    return sizes, places


def _check_cap(q: int, N: int, cap: int | None) -> int:
    total = q**N
    limit = space_cap(cap)
    if total > limit:
        raise ExplosionError(f"q^N = {total} exceeds space cap {limit}")
    return total


def oracle_distribution(
    P: Poset,
    pi: LabelMap,
    W: WeightModel,
    *,
    cap: int | None = None,
    threads: int = 1,
) -> OracleResult:
    """Exact weight histogram of the whole space by exhaustive sweep."""
    if P.n != pi.n:
        raise BoundsError(f"poset has {P.n} elements, label map {pi.n}")
    q = W.q
    total = _check_cap(q, pi.N, cap)
    start = time.monotonic()
    bw_tables = _block_weight_tables(pi, W)
    sizes, places = _index_places(pi, q)
    # rank-compress block weights so profile keys fit comfortably in int64
    attained = [np.unique(bw) for bw in bw_tables]
    rank_tables = [
        np.searchsorted(att, bw).astype(np.int64)
        for att, bw in zip(attained, bw_tables)
    ]
    radices = [len(att) for att in attained]
    key_places = [1] * pi.n
    for i in range(pi.n - 2, -1, -1):
        key_places[i] = key_places[i + 1] * radices[i + 1]
    leq, strict = _order_matrices(P)
    max_weight = pi.n * W.M_w

    def sweep(lo: int, hi: int) -> np.ndarray:
        idx = np.arange(lo, hi, dtype=np.int64)
        key = np.zeros(hi - lo, dtype=np.int64)
        for i in range(pi.n):
            code = (idx // places[i]) % sizes[i]
            key += rank_tables[i][code] * key_places[i]
        ukeys, inverse = np.unique(key, return_inverse=True)
        wmat = np.empty((len(ukeys), pi.n), dtype=np.int64)
        rest = ukeys
        for i in range(pi.n):
            wmat[:, i] = attained[i][(rest // key_places[i]) % radices[i]]
        uweights = _weights_from_block_weights(leq, strict, W.M_w, wmat)
        return np.bincount(uweights[inverse], minlength=max_weight + 1)

    ranges = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    hist = np.zeros(max_weight + 1, dtype=np.int64)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(lambda rg: sweep(*rg), ranges):
                hist += part
    else:
        for lo, hi in ranges:
            hist += sweep(lo, hi)
    histogram = {r: int(c) for r, c in enumerate(hist)}
    return OracleResult(
        histogram=histogram,
        total=total,
        elapsed=time.monotonic() - start,
        fingerprint=_fingerprint(P, pi, W),
        q=q,
        N=pi.N,
        n=pi.n,
        max_weight=max_weight,
    )


def _codeword_matrix(code, pi: LabelMap) -> np.ndarray:
    from .codes import codewords

    words = codewords(code)
    if len(words[0]) != pi.N:
        raise BoundsError("code length differs from label map N")
    return np.array(words, dtype=np.int64)


def _block_codes_of_rows(rows: np.ndarray, pi: LabelMap, q: int) -> np.ndarray:
    """(S, n) matrix of per-block base-q codes for flat symbol rows."""
    out = np.zeros((rows.shape[0], pi.n), dtype=np.int64)
    for i in range(pi.n):
        sl = pi.block_slice(i + 1)
        for pos in range(sl.start, sl.stop):
            out[:, i] = out[:, i] * q + rows[:, pos]
    return out


def oracle_perfectness(
    code,
    P: Poset,
    pi: LabelMap,
    W: WeightModel,
    *,
    ideal=None,
    radius: int | None = None,
    cap: int | None = None,
) -> PerfectnessResult:
    """Exact disjointness/covering verdict for I-balls or r-balls by full sweep.

    Exactly one of ideal / radius must be given.  Assigns every vector of
    the space to the balls that contain it (by definition) and reports
    whether any vector lies in two balls or in none.
    """
    if (ideal is None) == (radius is None):
        raise BoundsError("give exactly one of ideal= or radius=")
    q = W.q
    total = _check_cap(q, pi.N, cap)
    words = _codeword_matrix(code, pi)
    sizes, places = _index_places(pi, q)
    max_mult = 0
    min_mult = None

    if ideal is not None:
        outside = [i for i in range(pi.n) if not (ideal.members_mask >> i) & 1]
        out_places = [1] * len(outside)
        for t in range(len(outside) - 2, -1, -1):
            out_places[t] = out_places[t + 1] * sizes[outside[t + 1]]
        cw_codes = _block_codes_of_rows(words, pi, q)
        cw_keys = np.zeros(len(words), dtype=np.int64)
        for t, i in enumerate(outside):
            cw_keys += cw_codes[:, i] * out_places[t]
        sorted_keys = np.sort(cw_keys)
        for lo in range(0, total, _CHUNK):
            hi = min(lo + _CHUNK, total)
            idx = np.arange(lo, hi, dtype=np.int64)
            key = np.zeros(hi - lo, dtype=np.int64)
            for t, i in enumerate(outside):
                key += ((idx // places[i]) % sizes[i]) * out_places[t]
            left = np.searchsorted(sorted_keys, key, side="left")
            right = np.searchsorted(sorted_keys, key, side="right")
            counts = right - left
            max_mult = max(max_mult, int(counts.max()))
            cmin = int(counts.min())
            min_mult = cmin if min_mult is None else min(min_mult, cmin)
    else:
        if radius < 0:
            raise BoundsError(f"radius {radius} < 0")
        bw_tables = _block_weight_tables(pi, W)
        leq, strict = _order_matrices(P)
        # weight of every vector of the space, indexed by odometer position
        wt = np.empty(total, dtype=np.int64)
        for lo in range(0, total, _CHUNK):
            hi = min(lo + _CHUNK, total)
            idx = np.arange(lo, hi, dtype=np.int64)
            wmat = np.empty((hi - lo, pi.n), dtype=np.int64)
            for i in range(pi.n):
                wmat[:, i] = bw_tables[i][(idx // places[i]) % sizes[i]]
            wt[lo:hi] = _weights_from_block_weights(leq, strict, W.M_w, wmat)
        inball = wt <= radius
        member = np.zeros(total, dtype=np.int32)
        # difference tables: block code of v  ->  block code of (v - c) mod q
        for c_row in words:
            diff_tables = []
            for i in range(pi.n):
                k = pi.k[i]
                codes = np.arange(sizes[i], dtype=np.int64)
                shifted = np.zeros(sizes[i], dtype=np.int64)
                sl = pi.block_slice(i + 1)
                cblock = c_row[sl.start : sl.stop]
                for t in range(k):
                    digit = (codes // (q ** (k - 1 - t))) % q
                    shifted = shifted * q + (digit - int(cblock[t])) % q
                diff_tables.append(shifted)
            for lo in range(0, total, _CHUNK):
                hi = min(lo + _CHUNK, total)
                idx = np.arange(lo, hi, dtype=np.int64)
                shifted_idx = np.zeros(hi - lo, dtype=np.int64)
                for i in range(pi.n):
                    code = (idx // places[i]) % sizes[i]
                    shifted_idx += diff_tables[i][code] * places[i]
                member[lo:hi] += inball[shifted_idx]
        max_mult = int(member.max())
        min_mult = int(member.min())
    return PerfectnessResult(
        disjoint=max_mult <= 1,
        covering=min_mult >= 1,
        max_multiplicity=max_mult,
        min_multiplicity=int(min_mult),
    )


def _pairwise_weights(
    P: Poset, pi: LabelMap, W: WeightModel, diff: np.ndarray
) -> np.ndarray:
    """Weights of an (S, N) matrix of symbol rows."""
    wtab = np.array(W.table, dtype=np.int64)
    wsym = wtab[diff]
    wmat = np.empty((diff.shape[0], pi.n), dtype=np.int64)
    for i in range(pi.n):
        sl = pi.block_slice(i + 1)
        wmat[:, i] = wsym[:, sl.start : sl.stop].max(axis=1)
    leq, strict = _order_matrices(P)
    return _weights_from_block_weights(leq, strict, W.M_w, wmat)


def oracle_metric_axioms(
    P: Poset,
    pi: LabelMap,
    W: WeightModel,
    samples: int,
    seed: int,
    *,
    witness_limit: int = 20,
) -> MetricAxiomReport:
    """Seeded sampling of triples; reports identity/symmetry/triangle violations."""
    if samples == 0:
        return MetricAxiomReport(samples=0, violation_count=0, witnesses=())
    rng = np.random.default_rng(seed)
    q = W.q
    violation_count = 0
    witnesses: list[MetricViolation] = []
    done = 0
    while done < samples:
        batch = min(samples - done, 1 << 16)
        xs = rng.integers(0, q, size=(batch, pi.N), dtype=np.int64)
        ys = rng.integers(0, q, size=(batch, pi.N), dtype=np.int64)
        zs = rng.integers(0, q, size=(batch, pi.N), dtype=np.int64)
        d_xy = _pairwise_weights(P, pi, W, (xs - ys) % q)
        d_yx = _pairwise_weights(P, pi, W, (ys - xs) % q)
        d_yz = _pairwise_weights(P, pi, W, (ys - zs) % q)
        d_xz = _pairwise_weights(P, pi, W, (xs - zs) % q)
        ident_bad = (d_xy == 0) != (xs == ys).all(axis=1)
        sym_bad = d_xy != d_yx
        tri_bad = d_xz > d_xy + d_yz
        for kind, bad, with_z in (
            ("identity", ident_bad, False),
            ("symmetry", sym_bad, False),
            ("triangle", tri_bad, True),
        ):
            hits = np.flatnonzero(bad)
            violation_count += len(hits)
            for h in hits[: max(0, witness_limit - len(witnesses))]:
                witnesses.append(
                    MetricViolation(
                        kind=kind,
                        x=tuple(int(v) for v in xs[h]),
                        y=tuple(int(v) for v in ys[h]),
                        z=tuple(int(v) for v in zs[h]) if with_z else None,
                    )
                )
        done += batch
    return MetricAxiomReport(
        samples=samples,
        violation_count=int(violation_count),
        witnesses=tuple(witnesses),
    )
