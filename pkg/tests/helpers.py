"""Random-instance builders shared across the test modules."""

from __future__ import annotations

import numpy as np

from netimmunize import Graph


def random_gnp(rng: np.random.Generator, n: int, p: float) -> Graph:
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < p
    return Graph.from_edges(n, np.column_stack([iu[mask], ju[mask]]))


def random_gnm(rng: np.random.Generator, n: int, m: int) -> Graph:
    """Sample m distinct edges uniformly (rejection over random pairs)."""
    seen: set[tuple[int, int]] = set()
    while len(seen) < m:
        u, v = rng.integers(0, n, size=2)
        if u == v:
            continue
        seen.add((min(int(u), int(v)), max(int(u), int(v))))
    return Graph.from_edges(n, sorted(seen))


def random_subset(rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    return np.sort(rng.choice(n, size=size, replace=False))
