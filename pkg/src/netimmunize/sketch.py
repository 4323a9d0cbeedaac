"""Scalable closed-walk estimation on a hashed summary graph.

Vertices are hashed into alpha buckets; the summary matrix C counts edges
between buckets.  Powers of C stand in for powers of A, and each vertex is
credited with a share of its bucket's walk mass proportional to d(v)^p.
Estimates from beta independent hash functions are combined by pointwise
minimum.  With one vertex per bucket (the identity partition) the estimate
collapses to the exact closed-walk count; tests enforce that reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

_U64 = np.uint64
_MASK64 = (1 << 64) - 1
# float64 matmul is the fallback once C^3 would no longer fit exact int64
_INT64_SAFE = float(2**62)


def _splitmix64(x: np.ndarray) -> np.ndarray:
    z = x + _U64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> _U64(30))) * _U64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> _U64(27))) * _U64(0x94D049BB133111EB)
    return z ^ (z >> _U64(31))


@dataclass(frozen=True)
class HashPartition:
    """Bucket assignment for every node; a pure function of (seed, node, alpha).

    ``seed`` is provenance only: constructing with an explicit assignment (the
    identity-partition test hook) records seed = -1.
    """

    alpha: int
    seed: int
    assignment: np.ndarray

    def __post_init__(self):
        a = np.ascontiguousarray(self.assignment, dtype=np.int64)
        if self.alpha < 1:
            raise ValueError("alpha must be at least 1")
        if a.size and (a.min() < 0 or a.max() >= self.alpha):
            raise ValueError("bucket assignment out of range")
        a.setflags(write=False)
        object.__setattr__(self, "assignment", a)


def build_partition(g: Graph, alpha: int, seed: int) -> HashPartition:
    """Assign each node a uniform bucket in [0, alpha) by a seeded integer hash."""
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    seed_word = _splitmix64(np.array([seed & _MASK64], dtype=np.uint64))[0]
    idx = np.arange(g.n, dtype=np.uint64)
    buckets = (_splitmix64(idx ^ seed_word) % _U64(alpha)).astype(np.int64)
    return HashPartition(alpha=alpha, seed=seed, assignment=buckets)


def identity_partition(g: Graph) -> HashPartition:
    """One node per bucket; makes the estimator exact (test hook)."""
    return HashPartition(alpha=max(g.n, 1), seed=-1,
                         assignment=np.arange(g.n, dtype=np.int64))


@dataclass(frozen=True)
class SummarySketch:
    """Summary matrix C with its powers and per-bucket degree-power mass.

    diag_c4/diag_c6 hold sum_j C^2(i,j)^2 and sum_j C^3(i,j)^2, i.e. the
    diagonals of C^4 and C^6.  They and d3/d4/d6 are float64: the estimator
    consumes them in double-precision ratios, and float64 keeps every value
    exact up to 2^53, which covers the identity-partition exactness regime.
    """

    partition: HashPartition
    c: np.ndarray
    c2: np.ndarray
    c3: np.ndarray
    diag_c4: np.ndarray
    diag_c6: np.ndarray
    d3: np.ndarray
    d4: np.ndarray
    d6: np.ndarray


def build_summary(g: Graph, part: HashPartition) -> SummarySketch:
    """Accumulate C over one edge scan, then take its powers.

    Each undirected edge {u, v} increments C[h(u)][h(v)] and mirrors it;
    an intra-bucket edge lands on the diagonal exactly once, so the
    upper-triangle total (diagonal included) always equals m.
    """
    if len(part.assignment) != g.n:
        raise ValueError("partition does not cover this graph")
    alpha = part.alpha
    b = part.assignment
    c = np.zeros((alpha, alpha), dtype=np.int64)
    e = g.edges()
    if e.size:
        bu, bv = b[e[:, 0]], b[e[:, 1]]
        np.add.at(c, (bu, bv), 1)
        off = bu != bv
        np.add.at(c, (bv[off], bu[off]), 1)

    cf = c.astype(np.float64)
    c3f_max = float(((cf @ cf) @ cf).max()) if alpha else 0.0
    if c3f_max < _INT64_SAFE:
        c2 = c @ c
        c3 = c2 @ c
    else:
        c2 = cf @ cf
        c3 = c2 @ cf
    c2f = c2.astype(np.float64)
    c3f = c3.astype(np.float64)
    diag_c4 = np.einsum("ij,ij->i", c2f, c2f)
    diag_c6 = np.einsum("ij,ij->i", c3f, c3f)

    # degree powers by explicit products: exact in float64 up to 2^53, and
    # identical to the numerator chain in _estimate (ratio is exactly 1.0
    # for singleton buckets)
    deg = g.degrees.astype(np.float64)
    p3, p4, p6 = _pow_chain(deg)
    d3 = np.bincount(b, weights=p3, minlength=alpha)
    d4 = np.bincount(b, weights=p4, minlength=alpha)
    d6 = np.bincount(b, weights=p6, minlength=alpha)
    return SummarySketch(partition=part, c=c, c2=c2, c3=c3,
                         diag_c4=diag_c4, diag_c6=diag_c6, d3=d3, d4=d4, d6=d6)


def _pow_chain(d: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(d^3, d^4, d^6) by multiplication only — exact in float64 up to 2^53."""
    d2 = d * d
    d3 = d2 * d
    return d3, d2 * d2, d3 * d3


def _estimate(sk: SummarySketch, verts: np.ndarray, deg: np.ndarray) -> np.ndarray:
    """Raw estimate for the given vertices (no clamping):

        6 C^6(i,i) d^6/D6(i) - 6 d C^4(i,i) d^4/D4(i)
        - 3 (C^3(i,i) d^3/D3(i))^2 + 2 d^3,  i = h(v)

    A zero D_p(i) only happens when every vertex in the bucket is isolated,
    in which case the whole term is zero.
    """
    b = sk.partition.assignment[verts]
    d = deg.astype(np.float64)
    p3, p4, p6 = _pow_chain(d)
    c3_diag = np.diagonal(sk.c3).astype(np.float64)[b]
    zeros = np.zeros_like(d)
    r6 = np.divide(p6, sk.d6[b], out=zeros.copy(), where=sk.d6[b] > 0)
    r4 = np.divide(p4, sk.d4[b], out=zeros.copy(), where=sk.d4[b] > 0)
    r3 = np.divide(p3, sk.d3[b], out=zeros.copy(), where=sk.d3[b] > 0)
    term3 = c3_diag * r3
    return (6.0 * sk.diag_c6[b] * r6
            - 6.0 * d * sk.diag_c4[b] * r4
            - 3.0 * term3 * term3
            + 2.0 * p3)


def estimate_vertex(sk: SummarySketch, g: Graph, v: int) -> float:
    """Raw closed-6-walk estimate for a single vertex (can be negative)."""
    if not 0 <= v < g.n:
        raise IndexError(f"node {v} out of range")
    verts = np.array([v], dtype=np.int64)
    return float(_estimate(sk, verts, g.degrees[verts])[0])


def estimate_all(sk: SummarySketch, g: Graph) -> np.ndarray:
    """Raw estimates for every vertex under one hash function."""
    verts = np.arange(g.n, dtype=np.int64)
    return _estimate(sk, verts, g.degrees)


@dataclass(frozen=True)
class WalkEstimates:
    """Min-aggregated per-vertex estimates plus the provenance to rerun them."""

    W: np.ndarray
    alpha: int
    beta: int
    base_seed: int

    def __post_init__(self):
        w = np.ascontiguousarray(self.W, dtype=np.float64)
        w.setflags(write=False)
        object.__setattr__(self, "W", w)


def default_alpha(n: int) -> int:
    return max(16, int(np.ceil(np.sqrt(max(n, 1)))))


def estimate_walks(g: Graph, alpha: int, beta: int, base_seed: int = 0) -> WalkEstimates:
    """Estimates under beta hash functions (seeds base_seed+1..base_seed+beta),
    clamped at zero and combined by pointwise minimum.

    Negative raw estimates are sketch noise (walk counts are nonnegative), so
    they are clamped before the min to keep one bad hash from zeroing a vertex.
    The per-hash pipelines are independent; the reduce is order-insensitive.
    """
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    if beta < 1:
        raise ValueError("beta must be at least 1")
    w: np.ndarray | None = None
    for i in range(1, beta + 1):
        part = build_partition(g, alpha, base_seed + i)
        sk = build_summary(g, part)
        est = np.maximum(estimate_all(sk, g), 0.0)
        w = est if w is None else np.minimum(w, est)
    assert w is not None
    return WalkEstimates(W=w, alpha=alpha, beta=beta, base_seed=base_seed)
