"""Immutable simple-graph core.

Vertices are dense integers 0..n-1 and the edge list is kept in
lexicographic order; every downstream canonicalization (coloring
enumeration, certificates, graph6 emission) relies on that order.
All search routines here are exact backtracking with an explicit node
budget; they are meant for desk-scale graphs, not asymptotics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

DEFAULT_NODE_BUDGET = 10**8


class GraphInputError(ValueError):
    """Raised for loops, duplicate edges or out-of-range vertex indices."""


class DisconnectedError(ValueError):
    """Raised by operations that are only defined for connected graphs."""


class SearchBudgetError(RuntimeError):
    """Raised when an exact search exceeds its node budget."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with a deterministic edge order."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: (neighbor, edge index) pairs, sorted by neighbor."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(sorted(a)) for a in inc)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def degree_profile(self) -> DegreeProfile:
        return DegreeProfile(degrees=self.degrees, min_degree=self.min_degree)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int


@dataclass(frozen=True)
class EmbeddedSubgraph:
    """A graph together with a map from its vertices into a host graph."""

    graph: Graph
    vertex_map: tuple[int, ...]

    def host_edge(self, local_edge: tuple[int, int]) -> tuple[int, int]:
        a = self.vertex_map[local_edge[0]]
        b = self.vertex_map[local_edge[1]]
        return (a, b) if a < b else (b, a)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and normalize an edge list into a Graph.

    Rejects loops, duplicate edges and out-of-range endpoints instead of
    repairing them.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    normalized = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"loop at vertex {u} is not allowed")
        normalized.append((u, v) if u < v else (v, u))
    normalized.sort()
    for a, b in zip(normalized, normalized[1:]):
        if a == b:
            raise GraphInputError(f"duplicate edge {a}")
    return Graph(n=n, edges=tuple(normalized))


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    seen = bytearray(G.n)
    seen[0] = 1
    stack = [0]
    count = 1
    adj = G.adjacency
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = 1
                count += 1
                stack.append(y)
    return count == G.n


def _connected_without(G: Graph, removed: frozenset[int]) -> bool:
    remaining = [v for v in range(G.n) if v not in removed]
    if not remaining:
        return True
    seen = set(removed)
    start = remaining[0]
    seen.add(start)
    stack = [start]
    count = 1
    adj = G.adjacency
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                count += 1
                stack.append(y)
    return count == len(remaining)


def vertex_connectivity_at_least(G: Graph, k: int) -> bool:
    """True iff n > k and no vertex set of size < k separates G.

    Exhaustive cut enumeration; adequate for the small graphs this
    package targets.
    """
    if k <= 0:
        return True
    if G.n <= k:
        return False
    for size in range(k):
        for cut in itertools.combinations(range(G.n), size):
            if not _connected_without(G, frozenset(cut)):
                return False
    return True


def is_2_connected(G: Graph) -> bool:
    return vertex_connectivity_at_least(G, 2)


def bridges(G: Graph) -> list[tuple[int, int]]:
    """All bridges of G (edges whose removal disconnects their component)."""
    n = G.n
    adj = G.adjacency
    disc = [-1] * n
    low = [0] * n
    out: list[tuple[int, int]] = []
    timer = itertools.count()

    def dfs(u: int, parent: int) -> None:
        disc[u] = low[u] = next(timer)
        skipped_parent = False
        for v in adj[u]:
            if v == parent and not skipped_parent:
                skipped_parent = True  # simple graph: one parent edge
                continue
            if disc[v] == -1:
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] > disc[u]:
                    out.append((min(u, v), max(u, v)))
            else:
                low[u] = min(low[u], disc[v])

    for s in range(n):
        if disc[s] == -1:
            dfs(s, -1)
    return sorted(out)


def blocks(G: Graph) -> list[EmbeddedSubgraph]:
    """Decompose a connected graph into blocks.

    Returns the maximal 2-connected subgraphs plus bridge edges as
    trivial blocks, each with a vertex map back to G. Every edge of G
    appears in exactly one block. The result is sorted by host edge
    lists so the decomposition order is deterministic.
    """
    if not is_connected(G):
        raise DisconnectedError("block decomposition requires a connected graph")
    n = G.n
    adj = G.adjacency
    disc = [-1] * n
    low = [0] * n
    stack: list[tuple[int, int]] = []
    components: list[list[tuple[int, int]]] = []
    timer = itertools.count()

    def dfs(u: int, parent: int) -> None:
        disc[u] = low[u] = next(timer)
        skipped_parent = False
        for v in adj[u]:
            if v == parent and not skipped_parent:
                skipped_parent = True
                continue
            if disc[v] == -1:
                stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = []
                    while True:
                        e = stack.pop()
                        comp.append(e)
                        if e == (u, v):
                            break
                    components.append(comp)
            elif disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    if n:
        dfs(0, -1)

    out = []
    for comp in components:
        host_edges = sorted((min(u, v), max(u, v)) for u, v in comp)
        vertices = sorted({x for e in host_edges for x in e})
        local = {x: i for i, x in enumerate(vertices)}
        g = build_graph(len(vertices), [(local[u], local[v]) for u, v in host_edges])
        out.append(EmbeddedSubgraph(graph=g, vertex_map=tuple(vertices)))
    out.sort(key=lambda b: tuple(b.host_edge(e) for e in b.graph.edges))
    return out


def circumference(G: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact longest-cycle length; 0 if G is acyclic."""
    n = G.n
    adj = G.adjacency
    best = 0
    nodes = 0
    visited = bytearray(n)

    def extend(s: int, x: int, length: int, avail: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(f"circumference exceeded {node_budget} nodes")
        if length + avail + 1 <= best:
            return
        for w in adj[x]:
            if w == s and length >= 2 and length + 1 > best:
                best = length + 1
            elif w > s and not visited[w]:
                visited[w] = 1
                extend(s, w, length + 1, avail - 1)
                visited[w] = 0

    for s in range(n):
        # only search cycles whose minimum vertex is s
        visited[:] = bytes(n)
        visited[s] = 1
        extend(s, s, 0, n - 1 - s)
    return best


def find_cycle_at_least(
    G: Graph, length: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[int] | None:
    """First cycle found with at least `length` edges, as a vertex list."""
    n = G.n
    adj = G.adjacency
    nodes = 0
    visited = bytearray(n)
    path: list[int] = []

    def extend(s: int, x: int, avail: int) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(f"cycle search exceeded {node_budget} nodes")
        if len(path) + avail < length:
            return None
        for w in adj[x]:
            if w == s and len(path) >= max(3, length):
                return list(path)
            if w > s and not visited[w]:
                visited[w] = 1
                path.append(w)
                found = extend(s, w, avail - 1)
                if found is not None:
                    return found
                path.pop()
                visited[w] = 0
        return None

    for s in range(n):
        visited[:] = bytes(n)
        visited[s] = 1
        path[:] = [s]
        found = extend(s, s, n - 1 - s)
        if found is not None:
            return found
    return None


def find_cycle_with_length(
    G: Graph, length: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[int] | None:
    """First cycle found with exactly `length` edges, as a vertex list."""
    if length < 3:
        return None
    n = G.n
    adj = G.adjacency
    nodes = 0
    visited = bytearray(n)
    path: list[int] = []

    def extend(s: int, x: int) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(f"cycle search exceeded {node_budget} nodes")
        for w in adj[x]:
            if w == s and len(path) == length:
                return list(path)
            if w > s and not visited[w] and len(path) < length:
                visited[w] = 1
                path.append(w)
                found = extend(s, w)
                if found is not None:
                    return found
                path.pop()
                visited[w] = 0
        return None

    for s in range(n):
        visited[:] = bytes(n)
        visited[s] = 1
        path[:] = [s]
        found = extend(s, s)
        if found is not None:
            return found
    return None


def longest_path_length(
    G: Graph, u: int, v: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> int:
    """Exact maximum number of edges over simple u-v paths; 0 if none."""
    _check_pair(G, u, v)
    n = G.n
    adj = G.adjacency
    best = 0
    nodes = 0
    visited = bytearray(n)
    visited[u] = 1

    def extend(x: int, length: int, avail: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(f"path search exceeded {node_budget} nodes")
        if length + avail <= best:
            return
        for w in adj[x]:
            if w == v:
                if length + 1 > best:
                    best = length + 1
            elif not visited[w]:
                visited[w] = 1
                extend(w, length + 1, avail - 1)
                visited[w] = 0

    extend(u, 0, n - 1)
    return best


def path_length_at_least(
    G: Graph, u: int, v: int, length: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> bool:
    """True iff some simple u-v path has at least `length` edges."""
    _check_pair(G, u, v)
    n = G.n
    adj = G.adjacency
    nodes = 0
    visited = bytearray(n)
    visited[u] = 1

    def extend(x: int, cur: int, avail: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(f"path search exceeded {node_budget} nodes")
        if cur + avail < length:
            return False
        for w in adj[x]:
            if w == v:
                if cur + 1 >= length:
                    return True
            elif not visited[w]:
                visited[w] = 1
                if extend(w, cur + 1, avail - 1):
                    return True
                visited[w] = 0
        return False

    return extend(u, 0, n - 1)


def subdivide_edge(G: Graph, edge: tuple[int, int]) -> tuple[Graph, int]:
    """Replace edge uv by u-w and w-v for a fresh vertex w = n."""
    u, v = edge
    e = (u, v) if u < v else (v, u)
    if e not in G.edge_index:
        raise GraphInputError(f"edge {e} not present")
    w = G.n
    new_edges = [x for x in G.edges if x != e]
    new_edges.append((e[0], w))
    new_edges.append((e[1], w))
    return build_graph(G.n + 1, new_edges), w


def _check_pair(G: Graph, u: int, v: int) -> None:
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise GraphInputError(f"vertex pair ({u},{v}) out of range for n={G.n}")
    if u == v:
        raise GraphInputError("endpoints must differ")
