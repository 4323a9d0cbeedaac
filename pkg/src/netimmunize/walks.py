"""Exact per-vertex closed-walk-of-length-6 counting and the trace objectives.

Three independent routes to the same number are kept on purpose; they
cross-validate each other in the test suite:

  * the diagonal-power formula (``exact_cw6_all``),
  * the common-neighborhood combinatorial form (``exact_cw6_combinatorial``),
  * literal walk enumeration (``brute_force_cw6``).

All counts are exact integers; walks are directed and carry a starting point,
so the total over the whole graph is trace(A^6).
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from . import _powers
from ._powers import SizeCapError  # noqa: F401  (re-exported: callers catch it here)
from .graph import Graph, as_node_set, remove_nodes
from .spectral import trace_power

DensePowerCache = _powers.PowerDiags


def power_cache(g: Graph, *, max_nodes: int = _powers.DEFAULT_MAX_NODES,
                max_bytes: int = _powers.DEFAULT_MAX_BYTES) -> DensePowerCache:
    """Dense A^2/A^3 plus diag(A^4), diag(A^6); reusable across the ops below."""
    return _powers.compute_power_diags(g, max_nodes=max_nodes, max_bytes=max_bytes)


def exact_cw6_all(g: Graph, cache: DensePowerCache | None = None,
                  *, max_nodes: int = _powers.DEFAULT_MAX_NODES,
                  max_bytes: int = _powers.DEFAULT_MAX_BYTES) -> np.ndarray:
    """Exact closed-6-walk count containing each vertex:

        cw6(v) = 6 A^6(v,v) - 6 A^4(v,v) A^2(v,v) - 3 A^3(v,v)^2 + 2 A^2(v,v)^3
    """
    pd = cache or power_cache(g, max_nodes=max_nodes, max_bytes=max_bytes)
    d2, d3 = pd.diag2, pd.diag3
    return 6 * pd.diag6 - 6 * pd.diag4 * d2 - 3 * d3 * d3 + 2 * d2 * d2 * d2


def exact_cw6_combinatorial(g: Graph, v: int, cache: DensePowerCache | None = None) -> int:
    """The same count via common-neighborhood sums, with d(x,y) = |N(x) cap N(y)|:

        6 sum_{b!=v} sum_{d!=v} d(v,b) d(v,d) [d(b,d) - A(v,b) A(v,d)]
        + 6 sum_{c!=v} d(v,c)^2 d(v)
        + 3 sum_{b in N(v)} sum_{d in N(v)} d(v,b) d(v,d)
        + 2 d(v)^3

    Computed with Python ints (object dtype): this is a per-vertex verification
    oracle, so exactness beats speed.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"node {v} out of range")
    pd = cache or power_cache(g)
    a2 = pd.a2.astype(object)
    r = a2[v].copy()            # r[u] = d(v,u) for u != v; r[v] = d(v)
    dv = int(r[v])
    a = np.zeros(g.n, dtype=object)
    a[g.neighbors(v)] = 1
    s = r.copy()
    s[v] = 0
    t1 = 6 * int(s @ (a2 @ s) - (s @ a) ** 2)
    t2 = 6 * dv * int(s @ s)
    t3 = 3 * int(a @ r) ** 2
    t4 = 2 * dv**3
    return t1 + t2 + t3 + t4


def _check_brute_force_guard(g: Graph) -> None:
    max_deg = int(g.degrees.max()) if g.n else 0
    if g.n > 14 and max_deg > 6:
        raise SizeCapError(
            f"brute-force enumeration refused for n={g.n}, max degree {max_deg} "
            "(needs n <= 14 or max degree <= 6)")


def _closed_walk_vertex_sets(g: Graph) -> dict[int, int]:
    """Enumerate every closed 6-walk by depth-6 neighbor expansion from every
    start vertex; returns {vertex bitmask of the walk: number of such walks}.

    Matrix-free on purpose: this is the independent enumeration oracle.
    """
    _check_brute_force_guard(g)
    adj = [tuple(int(u) for u in g.neighbors(v)) for v in range(g.n)]
    bitadj = [0] * g.n
    for v in range(g.n):
        for u in adj[v]:
            bitadj[v] |= 1 << u
    counts: dict[int, int] = defaultdict(int)
    for v0 in range(g.n):
        b0 = 1 << v0
        badj0 = bitadj[v0]
        for v1 in adj[v0]:
            m1 = b0 | (1 << v1)
            for v2 in adj[v1]:
                m2 = m1 | (1 << v2)
                for v3 in adj[v2]:
                    m3 = m2 | (1 << v3)
                    for v4 in adj[v3]:
                        m4 = m3 | (1 << v4)
                        # the final step is forced back to v0
                        for v5 in adj[v4]:
                            if badj0 >> v5 & 1:
                                counts[m4 | (1 << v5)] += 1
    return dict(counts)


def brute_force_cw6(g: Graph, v: int) -> int:
    """Closed 6-walks containing v, by exhaustive enumeration."""
    if not 0 <= v < g.n:
        raise IndexError(f"node {v} out of range")
    return sum(c for mask, c in _closed_walk_vertex_sets(g).items() if mask >> v & 1)


def brute_force_cw6_all(g: Graph) -> np.ndarray:
    """Per-vertex enumeration counts from a single depth-6 expansion pass."""
    out = np.zeros(g.n, dtype=np.int64)
    for mask, c in _closed_walk_vertex_sets(g).items():
        v = 0
        while mask:
            if mask & 1:
                out[v] += c
            mask >>= 1
            v += 1
    return out


def objective_f(g: Graph, s, p: int) -> int:
    """Closed p-walks touching s: trace(A^p) - trace((A with s removed)^p)."""
    s = as_node_set(g, s)
    return trace_power(g, p) - objective_g(g, s, p)


def objective_g(g: Graph, s, p: int) -> int:
    """Closed p-walks surviving the removal of s (the quantity to minimize)."""
    s = as_node_set(g, s)
    sub, _ = remove_nodes(g, s)
    return trace_power(sub, p)
