"""
Immutable undirected simple graph shared by every generator and metric.

Nodes are dense integer indices 0..N-1; external labels (AS numbers read from
measured edge lists) live in an optional side table. Adjacency is stored in
CSR form with sorted neighbor lists so the numba kernels can walk it directly.
"""
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components as _csgraph_components

from .errors import DuplicateEdgeError, EmptyInputError
from ..utils.validation import validate_choice

DEDUP_POLICIES = ("reject", "merge")


@dataclass(frozen=True)
class BuildStats:
    """Counts of records discarded while building a simple graph."""
    self_loops_dropped: int = 0
    duplicates_merged: int = 0


class Graph:
    """
    Undirected simple graph G = (N, L).

    Parameters:
    -----------
    node_count : int
        Number of nodes N >= 1
    edges : array-like of shape (M, 2)
        Node-index pairs; orientation is irrelevant
    labels : sequence of str, optional
        External label per node index
    stats : BuildStats, optional
        Construction statistics carried along for reporting
    """

    __slots__ = ("_n", "_edges", "_indptr", "_indices", "_labels", "_stats", "_label_index")

    def __init__(self, node_count: int, edges, labels: Optional[Sequence[str]] = None,
                 stats: Optional[BuildStats] = None):
        if node_count < 1:
            raise EmptyInputError(f"Graph needs at least one node, got node_count={node_count}")
        n = int(node_count)
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ValueError(f"Edge endpoint out of range for node_count={n}")
        if np.any(e[:, 0] == e[:, 1]):
            loop = e[e[:, 0] == e[:, 1]][0]
            raise ValueError(f"Self-loop on node {int(loop[0])} is not allowed")

        # Canonical edge order: u < v, lexicographic
        e = np.sort(e, axis=1)
        e = e[np.lexsort((e[:, 1], e[:, 0]))]
        if len(e) > 1:
            dup = np.all(e[1:] == e[:-1], axis=1)
            if np.any(dup):
                u, v = e[1:][dup][0]
                raise DuplicateEdgeError(str(u), str(v))

        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        order = np.lexsort((dst, src))
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        indices = np.ascontiguousarray(dst[order])

        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != n:
                raise ValueError(f"Expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ValueError("Node labels must be unique")

        for array in (e, indptr, indices):
            array.setflags(write=False)

        self._n = n
        self._edges = e
        self._indptr = indptr
        self._indices = indices
        self._labels = labels
        self._stats = stats
        self._label_index = None

    # ------------------------------------------------------------------
    # Basic accessors
    # ------------------------------------------------------------------
    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> np.ndarray:
        """Edge array of shape (M, 2) with u < v, sorted lexicographically."""
        return self._edges

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def labels(self) -> Optional[Tuple[str, ...]]:
        return self._labels

    @property
    def stats(self) -> Optional[BuildStats]:
        return self._stats

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor indices of node v."""
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        pos = np.searchsorted(nbrs, v)
        return bool(pos < len(nbrs) and nbrs[pos] == v)

    def label_of(self, v: int) -> str:
        return self._labels[v] if self._labels is not None else str(v)

    def index_of(self, label: Hashable) -> int:
        if self._labels is None:
            v = int(label)
            if not 0 <= v < self._n:
                raise KeyError(label)
            return v
        if self._label_index is None:
            self._label_index = {label: i for i, label in enumerate(self._labels)}
        return self._label_index[str(label)]

    def edge_labels(self) -> Iterator[Tuple[str, str]]:
        """Iterate edges as (label, label) pairs in canonical order."""
        for u, v in self._edges:
            yield self.label_of(int(u)), self.label_of(int(v))

    # ------------------------------------------------------------------
    # Derived graphs and matrices
    # ------------------------------------------------------------------
    def subgraph(self, nodes: Iterable[int]) -> "Graph":
        """Induced subgraph; nodes keep their relative order and their labels."""
        keep = np.unique(np.fromiter(nodes, dtype=np.int64))
        mapping = np.full(self._n, -1, dtype=np.int64)
        mapping[keep] = np.arange(len(keep))
        mapped = mapping[self._edges]
        inside = np.all(mapped >= 0, axis=1)
        labels = [self.label_of(int(v)) for v in keep]
        return Graph(len(keep), mapped[inside], labels=labels)

    def to_scipy(self) -> sp.csr_matrix:
        """Symmetric 0/1 adjacency matrix in CSR form."""
        data = np.ones(len(self._indices), dtype=np.float64)
        return sp.csr_matrix((data, self._indices.copy(), self._indptr.copy()),
                             shape=(self._n, self._n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._n == other._n
                and np.array_equal(self._edges, other._edges)
                and self._labels == other._labels)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Graph(N={self._n}, M={self.edge_count})"


@dataclass(frozen=True)
class ComponentPartition:
    """
    Partition of the nodes into connected components.

    Component 0 is the largest; ties are broken by the smallest node index
    contained in the component.
    """
    component_id: np.ndarray
    sizes: Tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self, component: int) -> np.ndarray:
        return np.flatnonzero(self.component_id == component)


def build_graph(edge_pairs: Iterable[Tuple[Hashable, Hashable]],
                dedup_policy: str = "merge",
                nodes: Optional[Iterable[Hashable]] = None) -> Graph:
    """
    Build a simple graph from labelled edge pairs.

    Labels are assigned dense indices in first-appearance order. Self-loops
    are dropped and counted; duplicate unordered pairs are merged and counted
    under the 'merge' policy and raise DuplicateEdgeError under 'reject'.
    Labels in `nodes` that never appear in an edge become isolated nodes.
    """
    validate_choice(dedup_policy, DEDUP_POLICIES, "dedup_policy")
    index: Dict[str, int] = {}

    def intern(label) -> int:
        label = str(label)
        idx = index.get(label)
        if idx is None:
            idx = index[label] = len(index)
        return idx

    seen = set()
    edges = []
    loops = 0
    duplicates = 0
    for a, b in edge_pairs:
        u, v = intern(a), intern(b)
        if u == v:
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            if dedup_policy == "reject":
                raise DuplicateEdgeError(str(a), str(b))
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)

    if nodes is not None:
        for label in nodes:
            intern(label)
    if not index:
        raise EmptyInputError("Cannot build a graph from an empty edge list")

    return Graph(len(index), edges, labels=list(index),
                 stats=BuildStats(self_loops_dropped=loops, duplicates_merged=duplicates))


def degree_sequence(g: Graph) -> Dict[int, int]:
    """Map node index -> degree."""
    return {v: int(k) for v, k in enumerate(g.degrees)}


def connected_components(g: Graph) -> ComponentPartition:
    """Connected components sorted by non-increasing size."""
    count, raw = _csgraph_components(g.to_scipy(), directed=False)
    sizes = np.bincount(raw, minlength=count)
    first = np.full(count, g.node_count, dtype=np.int64)
    np.minimum.at(first, raw, np.arange(g.node_count))
    order = np.lexsort((first, -sizes))
    remap = np.empty(count, dtype=np.int64)
    remap[order] = np.arange(count)
    component_id = remap[raw]
    component_id.setflags(write=False)
    return ComponentPartition(component_id=component_id,
                              sizes=tuple(int(s) for s in sizes[order]))


def is_connected(g: Graph) -> bool:
    return connected_components(g).count == 1


def largest_component(g: Graph) -> Graph:
    """Induced subgraph on the largest connected component."""
    partition = connected_components(g)
    if partition.count == 1:
        return g
    return g.subgraph(partition.members(0))
