"""Dense integer powers of the adjacency matrix, shared by spectral and walks.

Only A^2 and A^3 are ever materialized; the diagonals of A^4 and A^6 come
from row-wise square sums (A^p(v,v) = sum_j A^{p/2}(v,j)^2 for symmetric A).
Counts are exact: int64 while provably safe, Python-int (object dtype) when
the magnitude bound fails on a graph small enough to afford it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

DEFAULT_MAX_NODES = 20_000
DEFAULT_MAX_BYTES = 4 * 1024**3

# 6*diag6 and friends must stay inside int64; keep a wide safety margin.
_INT64_SAFE = 2**59
# object-dtype matmul is Python-speed; refuse beyond this many nodes.
_OBJECT_FALLBACK_MAX_N = 600


class SizeCapError(RuntimeError):
    """Dense exact computation refused; use the sketch estimator instead."""


@dataclass(frozen=True)
class PowerDiags:
    """A^2 and A^3 with the derived power diagonals (exact integers)."""

    a2: np.ndarray
    a3: np.ndarray
    diag2: np.ndarray
    diag3: np.ndarray
    diag4: np.ndarray
    diag6: np.ndarray
    widened: bool


def check_dense_guard(n: int, *, max_nodes: int = DEFAULT_MAX_NODES,
                      max_bytes: int = DEFAULT_MAX_BYTES) -> None:
    if n > max_nodes:
        raise SizeCapError(
            f"n={n} exceeds the dense cap ({max_nodes}); "
            "use the summary-sketch estimator for graphs this large")
    need = 3 * 8 * n * n
    if need > max_bytes:
        raise SizeCapError(
            f"dense powers would need ~{need / 2**30:.1f} GiB (> {max_bytes / 2**30:.1f} GiB); "
            "use the summary-sketch estimator or raise max_bytes")


def _row_square_sums(mat: np.ndarray) -> np.ndarray:
    if mat.dtype == object:
        return (mat * mat).sum(axis=1)
    return np.einsum("ij,ij->i", mat, mat)


def compute_power_diags(g: Graph, *, max_nodes: int = DEFAULT_MAX_NODES,
                        max_bytes: int = DEFAULT_MAX_BYTES) -> PowerDiags:
    check_dense_guard(g.n, max_nodes=max_nodes, max_bytes=max_bytes)
    a = g.dense_adjacency(np.int64)
    a2 = a @ a
    a3 = a2 @ a  # entries <= max_degree^2 <= n^2: safe in int64 under the node cap
    widened = False
    m3 = int(a3.max()) if g.n else 0
    if g.n * m3 * m3 >= _INT64_SAFE:
        if g.n > _OBJECT_FALLBACK_MAX_N:
            raise OverflowError(
                "walk counts exceed the 64-bit exact range and the graph is too "
                "large for the arbitrary-precision fallback")
        a2 = a2.astype(object)
        a3 = a3.astype(object)
        widened = True
    diag2 = g.degrees.astype(a2.dtype, copy=True)
    diag3 = np.diagonal(a3).copy()
    diag4 = _row_square_sums(a2)
    diag6 = _row_square_sums(a3)
    return PowerDiags(a2=a2, a3=a3, diag2=diag2, diag3=diag3,
                      diag4=diag4, diag6=diag6, widened=widened)
