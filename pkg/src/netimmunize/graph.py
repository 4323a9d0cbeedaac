"""Simple undirected graphs in compressed adjacency form.

Graphs are immutable after construction: node ids are dense 0-based ints,
neighbor lists are sorted ascending, and the original file ids (when loaded
from an edge list) are kept as a label array so user-facing output can speak
the input's language.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

import numpy as np


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class LoadReport:
    """What got dropped while cleaning a raw edge list."""

    self_loops: int = 0
    duplicates: int = 0

    @property
    def clean(self) -> bool:
        return self.self_loops == 0 and self.duplicates == 0


class Graph:
    """Immutable simple undirected graph (no self-loops, no duplicate edges).

    Stored as CSR-style arrays: ``indptr`` (length n+1) delimits each node's
    slice of ``adj``, which holds sorted neighbor ids.  ``labels[v]`` maps the
    dense id v back to the id used in the source file (identity for graphs
    built programmatically).
    """

    __slots__ = ("n", "m", "indptr", "adj", "labels", "degrees")

    def __init__(self, indptr: np.ndarray, adj: np.ndarray, labels: np.ndarray | None = None):
        indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        adj = np.ascontiguousarray(adj, dtype=np.int64)
        n = len(indptr) - 1
        if labels is None:
            labels = np.arange(n, dtype=np.int64)
        labels = np.ascontiguousarray(labels, dtype=np.int64)
        if len(labels) != n:
            raise ValueError("labels length must equal node count")
        if adj.size and (adj.min() < 0 or adj.max() >= n):
            raise ValueError("neighbor id out of range")
        self.n = n
        self.m = adj.size // 2
        self.indptr = indptr
        self.adj = adj
        self.labels = labels
        self.degrees = np.diff(indptr)
        for arr in (self.indptr, self.adj, self.labels, self.degrees):
            arr.setflags(write=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] | np.ndarray,
                   labels: np.ndarray | None = None) -> "Graph":
        """Build a graph on nodes 0..n-1; self-loops and duplicates are dropped."""
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                       dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ValueError("edge endpoint out of range")
        e = e[e[:, 0] != e[:, 1]]
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        e = np.unique(np.column_stack([lo, hi]), axis=0) if e.size else e.reshape(0, 2)
        return cls._from_clean_edges(n, e, labels)

    @classmethod
    def _from_clean_edges(cls, n: int, e: np.ndarray, labels: np.ndarray | None) -> "Graph":
        both = np.concatenate([e, e[:, ::-1]]) if e.size else e.reshape(0, 2)
        order = np.lexsort((both[:, 1], both[:, 0])) if both.size else np.array([], dtype=np.int64)
        both = both[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        if both.size:
            np.add.at(indptr, both[:, 0] + 1, 1)
        np.cumsum(indptr, out=indptr)
        return cls(indptr, both[:, 1].copy() if both.size else np.empty(0, np.int64), labels)

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of v (read-only view)."""
        return self.adj[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"node {v} out of range for graph with n={self.n}")
        return int(self.degrees[v])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return i < len(nb) and nb[i] == v

    def edges(self) -> np.ndarray:
        """(m, 2) array of edges with u < v, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = src < self.adj
        return np.column_stack([src[keep], self.adj[keep]])

    def arc_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(src, dst) arrays listing every directed arc; src is nondecreasing."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        return src, self.adj

    def dense_adjacency(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        src, dst = self.arc_arrays()
        a[src, dst] = 1
        return a

    def to_edge_list_text(self) -> str:
        """Serialize as one 'label label' line per edge (round-trips via load_edge_list)."""
        e = self.edges()
        lab = self.labels
        return "".join(f"{lab[u]} {lab[v]}\n" for u, v in e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.m == other.m
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.adj, other.adj)
                and np.array_equal(self.labels, other.labels))

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def load_edge_list(source: str | Path | IO[str], *, one_indexed: bool = False,
                   allow_comments: bool = True) -> tuple[Graph, LoadReport]:
    """Parse an edge-list text stream into a cleaned Graph plus a LoadReport.

    Each non-comment line holds two whitespace-separated integer tokens.
    Self-loops and duplicate edges are dropped and counted in the report.
    Original ids are compacted to dense 0-based ids in ascending id order and
    kept verbatim as labels; ``one_indexed`` only tightens validation (every
    token must then be >= 1), so output always speaks the file's id language.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text()

    min_id = 1 if one_indexed else 0
    pairs: list[tuple[int, int]] = []
    loop_nodes: set[int] = set()
    self_loops = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if allow_comments:
                continue
            raise EdgeListParseError("comment line not allowed", line_no)
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected two tokens, got {len(tokens)}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer token in {line!r}", line_no) from None
        if u < min_id or v < min_id:
            kind = "id 0 in one-indexed input" if one_indexed else "negative id"
            raise EdgeListParseError(f"{kind}: {raw.strip()!r}", line_no)
        if u == v:
            self_loops += 1
            loop_nodes.add(u)  # the node is real even though its loop is dropped
            continue
        pairs.append((min(u, v), max(u, v)))

    if not pairs and self_loops == 0:
        raise EdgeListParseError("empty input: no edges found")

    mentioned = [u for uv in pairs for u in uv] + sorted(loop_nodes)
    raw_labels = np.unique(np.asarray(mentioned, dtype=np.int64))
    dense = {int(lab): i for i, lab in enumerate(raw_labels)}
    e = np.asarray([(dense[u], dense[v]) for u, v in pairs], dtype=np.int64).reshape(-1, 2)
    uniq = np.unique(e, axis=0) if e.size else e
    duplicates = len(pairs) - len(uniq)
    g = Graph._from_clean_edges(len(raw_labels), uniq, raw_labels)
    return g, LoadReport(self_loops=self_loops, duplicates=duplicates)


def as_node_set(g: Graph, nodes: Iterable[int]) -> np.ndarray:
    """Validate and canonicalize a node set: sorted unique dense ids."""
    s = np.unique(np.asarray(list(nodes), dtype=np.int64))
    if s.size and (s[0] < 0 or s[-1] >= g.n):
        raise ValueError(f"node set contains ids outside [0, {g.n})")
    return s


def remove_nodes(g: Graph, nodes: Iterable[int]) -> tuple[Graph, np.ndarray]:
    """Delete a node set; returns the renumbered subgraph and its old-id map.

    The second element maps each new dense id to the id it had in ``g``;
    the subgraph's labels are carried over so output stays in input-file terms.
    """
    s = as_node_set(g, nodes)
    keep_mask = np.ones(g.n, dtype=bool)
    keep_mask[s] = False
    kept = np.flatnonzero(keep_mask)
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[kept] = np.arange(kept.size)
    e = g.edges()
    if e.size:
        e = e[keep_mask[e[:, 0]] & keep_mask[e[:, 1]]]
        e = new_id[e]
    sub = Graph._from_clean_edges(kept.size, e.reshape(-1, 2), g.labels[kept])
    return sub, kept


def degree(g: Graph, v: int) -> int:
    return g.degree(v)
