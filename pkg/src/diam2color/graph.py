"""Immutable simple undirected graphs with the metric and induced-cycle
queries the solvers need.

Vertices are dense integers 0..n-1.  All neighbor and vertex iteration is in
ascending order, so every "pick any" choice downstream becomes "pick least"
and whole runs are reproducible.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import HasInducedCycle, NotDiameterTwo, PreconditionViolated, SelfLoop, VertexOutOfRange


@dataclass(frozen=True)
class Graph:
    """Canonical graph: edges stored as sorted (u, v) pairs with u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]
    neighbor_sets: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical Graph, collapsing duplicate edges.

    Raises SelfLoop for an edge (v, v) and VertexOutOfRange for endpoints
    outside 0..n-1.
    """
    if n < 0:
        raise PreconditionViolated(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRange(w, n)
        if u == v:
            raise SelfLoop(u)
        seen.add((u, v) if u < v else (v, u))
    sorted_edges = tuple(sorted(seen))
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted_edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    adj = tuple(tuple(sorted(ns)) for ns in neighbors)
    return Graph(n=n, edges=sorted_edges, adj=adj,
                 neighbor_sets=tuple(frozenset(ns) for ns in adj))


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Hop distances from source; math.inf for unreachable vertices."""
    dist: list[int | float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] is math.inf:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; math.inf iff disconnected; 0 for n <= 1."""
    if g.n <= 1:
        return 0
    best: int | float = 0
    for source in range(g.n):
        dist = bfs_distances(g, source)
        worst = max(dist)
        if worst is math.inf:
            return math.inf
        if worst > best:
            best = worst
    return best


def farthest_pair(g: Graph) -> tuple[int, int, int | float]:
    """Lexicographically least pair realizing the diameter."""
    if g.n <= 1:
        return (0, 0, 0)
    best_pair = (0, 0)
    best: int | float = 0
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] > best:
                best = dist[v]
                best_pair = (u, v)
    return (best_pair[0], best_pair[1], best)


def require_diameter_two(g: Graph) -> None:
    """Raise NotDiameterTwo with the least witness pair if some distance exceeds 2."""
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] > 2:
                raise NotDiameterTwo(u, v, dist[v])


@dataclass(frozen=True)
class InducedCycleCertificate:
    """An ordered vertex tuple claimed to induce a chordless cycle."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def is_induced_cycle(g: Graph, vertices: Sequence[int]) -> bool:
    """Check that the vertex sequence induces a chordless cycle in g.

    Independent of the search below: consecutive pairs (cyclically) must be
    edges and every other pair a non-edge.
    """
    k = len(vertices)
    if k < 3 or len(set(vertices)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(vertices[i], vertices[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def find_induced_cycle(g: Graph, k: int) -> InducedCycleCertificate | None:
    """Find an induced k-cycle, or None.

    Deterministic: DFS over chordless paths whose first vertex is the least
    on the cycle, extending by ascending neighbors.  The first cycle found is
    therefore the lexicographically least certificate in min-vertex-first
    form, with its second entry smaller than its last.
    """
    if k < 3:
        raise PreconditionViolated(f"cycle length must be at least 3, got {k}")
    if g.n < k:
        return None
    sets = g.neighbor_sets

    def search(path: list[int], used: set[int]) -> list[int] | None:
        start = path[0]
        last = path[-1]
        if len(path) == k - 1:
            for w in g.adj[last]:
                if w <= start or w in used or w not in sets[start]:
                    continue
                if any(w in sets[path[j]] for j in range(1, k - 2)):
                    continue
                return path + [w]
            return None
        for w in g.adj[last]:
            if w <= start or w in used:
                continue
            if any(w in sets[path[j]] for j in range(len(path) - 1)):
                continue
            used.add(w)
            path.append(w)
            found = search(path, used)
            if found is not None:
                return found
            path.pop()
            used.discard(w)
        return None

    for start in range(g.n):
        found = search([start], {start})
        if found is not None:
            return InducedCycleCertificate(tuple(found))
    return None


def find_induced_c5(g: Graph) -> tuple[int, int, int, int, int] | None:
    """The least induced 5-cycle as an anchored tuple in cycle order."""
    cert = find_induced_cycle(g, 5)
    if cert is None:
        return None
    a, b, c, d, e = cert.vertices
    return (a, b, c, d, e)


def require_no_induced_cycle(g: Graph, k: int) -> None:
    cert = find_induced_cycle(g, k)
    if cert is not None:
        raise HasInducedCycle(k, cert.vertices)


def common_neighbors(g: Graph, u: int, v: int) -> list[int]:
    return sorted(g.neighbor_sets[u] & g.neighbor_sets[v])


def connected_components(g: Graph, subset: Iterable[int] | None = None) -> list[list[int]]:
    """Components of the subgraph induced on subset (default: all vertices),
    each sorted, listed by least member."""
    vertices = sorted(range(g.n) if subset is None else subset)
    allowed = set(vertices)
    seen: set[int] = set()
    components: list[list[int]] = []
    for s in vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        components.append(sorted(comp))
    return components
