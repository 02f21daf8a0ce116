"""Immutable undirected graphs on vertex ids 0..n-1, plus domination validators.

Vertices are plain ints.  Vertex sets are ordinary Python sets/frozensets;
whenever iteration order matters downstream (tie-breaking, output), callers
sort, so nothing here depends on set ordering.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for invalid graph construction input."""


class Graph:
    """Undirected simple graph with a fixed vertex range 0..n-1.

    Self-loops are rejected, duplicate edges collapse to one.  Instances are
    immutable after construction and safe to share across threads/processes.
    """

    __slots__ = ("n", "m", "adjacency", "_nbr_sets", "_fingerprint")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n <= 0:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u} is not allowed")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in nbrs
        )
        self.m = sum(len(s) for s in nbrs) // 2
        self._nbr_sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self._fingerprint: tuple[int, int, str] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, edges)

    # -- basic queries ------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Distinct edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def min_degree(self) -> int:
        return min(len(a) for a in self.adjacency)

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood: the set of vertices adjacent to v."""
        self._check_vertex(v)
        return self._nbr_sets[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        """Closed neighborhood: v together with its neighbors."""
        self._check_vertex(v)
        return self._nbr_sets[v] | {v}

    def closed_neighborhood_of_set(self, xs: Iterable[int]) -> frozenset[int]:
        """Union of closed neighborhoods over xs; empty input gives the empty set."""
        out: set[int] = set()
        for v in xs:
            self._check_vertex(v)
            out.add(v)
            out.update(self._nbr_sets[v])
        return frozenset(out)

    # -- domination validators ----------------------------------------------

    def is_dominating(self, xs: Iterable[int]) -> bool:
        """True iff every vertex is in xs or adjacent to a member of xs."""
        xset = self._as_vertex_set(xs)
        return all(v in xset or self._nbr_sets[v] & xset for v in range(self.n))

    def is_k_dominating(self, k: int, xs: Iterable[int]) -> bool:
        """True iff every vertex outside xs has at least k neighbors in xs.

        Members of xs carry no requirement.  Defined for every k >= 1.
        """
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        xset = self._as_vertex_set(xs)
        return all(
            v in xset or len(self._nbr_sets[v] & xset) >= k for v in range(self.n)
        )

    def is_ktuple_dominating(self, k: int, xs: Iterable[int]) -> bool:
        """True iff every vertex has at least k of its closed neighborhood in xs.

        A member of xs counts toward its own requirement.  Only satisfiable
        when every vertex has closed neighborhood of size >= k, i.e. when
        k <= min_degree + 1.
        """
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        xset = self._as_vertex_set(xs)
        return all(
            len(self._nbr_sets[v] & xset) + (1 if v in xset else 0) >= k
            for v in range(self.n)
        )

    # -- identity ------------------------------------------------------------

    def fingerprint(self) -> tuple[int, int, str]:
        """(n, m, digest) identifying the graph up to exact adjacency equality."""
        if self._fingerprint is None:
            h = hashlib.sha256()
            h.update(f"n={self.n};m={self.m};".encode())
            for u, v in self.edges():
                h.update(f"{u},{v};".encode())
            # Lazy cache; the only mutation after __init__.
            self._fingerprint = (self.n, self.m, h.hexdigest()[:16])
        return self._fingerprint

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- helpers --------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} outside 0..{self.n - 1}")

    def _as_vertex_set(self, xs: Iterable[int]) -> frozenset[int]:
        xset = frozenset(xs)
        for v in xset:
            self._check_vertex(v)
        return xset
