"""Edge colorings and the two connectivity verifiers.

An edge coloring assigns every edge of a bound graph a color in 1..t.
`is_k_color_connected` checks that every vertex pair is joined by a
simple path whose edges carry at least k distinct colors;
`is_rainbow_connected` checks for paths with pairwise distinct edge
colors. Both verifiers walk simple paths by backtracking and track the
running color set as a bitset. Path means simple path throughout: no
repeated vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Mapping, Sequence

from .graphs import Graph, GraphInputError, _check_pair


class BindingError(ValueError):
    """Raised when a coloring is used with a graph it does not color."""


@dataclass(frozen=True)
class EdgeColoring:
    """A total assignment of the bound graph's edges to colors 1..t.

    `colors[i]` is the color of `graph.edges[i]`. Colors are opaque
    positive integers; only distinctness matters.
    """

    graph: Graph
    colors: tuple[int, ...]
    t: int

    def __post_init__(self) -> None:
        if len(self.colors) != self.graph.m:
            raise ValueError(
                f"{len(self.colors)} colors for {self.graph.m} edges"
            )
        if self.t < 1 and self.graph.m:
            raise ValueError(f"palette size must be positive, got {self.t}")
        for c in self.colors:
            if not 1 <= c <= self.t:
                raise ValueError(f"color {c} outside palette 1..{self.t}")

    @classmethod
    def from_pairs(
        cls, graph: Graph, assignment: Mapping[tuple[int, int], int], t: int | None = None
    ) -> "EdgeColoring":
        colors = []
        for u, v in graph.edges:
            key = (u, v) if (u, v) in assignment else (v, u)
            if key not in assignment:
                raise ValueError(f"edge ({u},{v}) has no color")
            colors.append(assignment[key])
        return cls(graph=graph, colors=tuple(colors), t=t if t is not None else max(colors))

    @cached_property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def color_of(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        return self.colors[self.graph.edge_index[e]]


@dataclass(frozen=True)
class PathWitness:
    """A simple path together with the edge colors seen along it."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    distinct_colors: int


def validate_witness(G: Graph, coloring: EdgeColoring, witness: PathWitness) -> bool:
    """Re-check a witness independently of the search that produced it."""
    vs = witness.vertices
    if len(set(vs)) != len(vs) or len(vs) < 2:
        return False
    if len(witness.colors) != len(vs) - 1:
        return False
    for a, b, c in zip(vs, vs[1:], witness.colors):
        if not G.has_edge(a, b):
            return False
        if coloring.color_of(a, b) != c:
            return False
    return witness.distinct_colors == len(set(witness.colors))


def _bind(G: Graph, coloring: EdgeColoring) -> None:
    if coloring.graph != G:
        raise BindingError("coloring is not bound to this graph")


def _tables(G: Graph, colors: Sequence[int]):
    """Adjacency with color bits, plus the per-vertex incident color mask."""
    inc: list[list[tuple[int, int, int]]] = [[] for _ in range(G.n)]
    vmask = [0] * G.n
    for i, (u, v) in enumerate(G.edges):
        bit = 1 << (colors[i] - 1)
        inc[u].append((v, bit, colors[i]))
        inc[v].append((u, bit, colors[i]))
        vmask[u] |= bit
        vmask[v] |= bit
    for a in inc:
        a.sort()
    return inc, vmask


def _find_k_path(n, inc, vmask, u, v, k):
    """Backtracking search for a simple u-v path seeing >= k colors.

    Prunes a branch when the colors already held plus every color still
    incident to an unvisited vertex cannot reach k. The bound is
    conservative, so pruning never loses a witness.
    """
    visited = bytearray(n)
    visited[u] = 1
    path = [u]
    path_colors: list[int] = []

    def walk(x: int, mask: int):
        avail = mask
        for y in range(n):
            if not visited[y]:
                avail |= vmask[y]
        if avail.bit_count() < k:
            return None
        for w, bit, color in inc[x]:
            if w == v:
                nm = mask | bit
                if nm.bit_count() >= k:
                    return (
                        tuple(path + [v]),
                        tuple(path_colors + [color]),
                        nm.bit_count(),
                    )
            elif not visited[w]:
                visited[w] = 1
                path.append(w)
                path_colors.append(color)
                found = walk(w, mask | bit)
                if found is not None:
                    return found
                path_colors.pop()
                path.pop()
                visited[w] = 0
        return None

    return walk(u, 0)


def _find_rainbow_path(n, inc, u, v):
    visited = bytearray(n)
    visited[u] = 1
    path = [u]
    path_colors: list[int] = []

    def walk(x: int, mask: int):
        for w, bit, color in inc[x]:
            if mask & bit:
                continue
            if w == v:
                return tuple(path + [v]), tuple(path_colors + [color])
            if not visited[w]:
                visited[w] = 1
                path.append(w)
                path_colors.append(color)
                found = walk(w, mask | bit)
                if found is not None:
                    return found
                path_colors.pop()
                path.pop()
                visited[w] = 0
        return None

    return walk(u, 0)


def check_k_color_connected(
    G: Graph, colors: Sequence[int], k: int
) -> tuple[bool, tuple[int, int] | None]:
    """Raw verifier over a color sequence in edge order.

    Checks unordered pairs in lexicographic order and short-circuits, so
    the reported failing pair is deterministic.
    """
    inc, vmask = _tables(G, colors)
    for u, v in combinations(range(G.n), 2):
        if _find_k_path(G.n, inc, vmask, u, v, k) is None:
            return False, (u, v)
    return True, None


def check_rainbow_connected(
    G: Graph, colors: Sequence[int]
) -> tuple[bool, tuple[int, int] | None]:
    """Raw rainbow verifier over a color sequence in edge order."""
    inc, _ = _tables(G, colors)
    for u, v in combinations(range(G.n), 2):
        if _find_rainbow_path(G.n, inc, u, v) is None:
            return False, (u, v)
    return True, None


def exists_k_color_path(
    G: Graph, coloring: EdgeColoring, u: int, v: int, k: int
) -> PathWitness | None:
    """Witness simple u-v path whose edge-color set has size >= k, if any."""
    _bind(G, coloring)
    _check_pair(G, u, v)
    if k < 1:
        raise GraphInputError(f"k must be at least 1, got {k}")
    inc, vmask = _tables(G, coloring.colors)
    found = _find_k_path(G.n, inc, vmask, u, v, k)
    if found is None:
        return None
    vs, cs, distinct = found
    return PathWitness(vertices=vs, colors=cs, distinct_colors=distinct)


def is_k_color_connected(
    G: Graph, coloring: EdgeColoring, k: int
) -> tuple[bool, tuple[int, int] | None]:
    """True iff every vertex pair has a path using at least k colors.

    On failure also returns the lexicographically first failing pair.
    """
    _bind(G, coloring)
    if k < 1:
        raise GraphInputError(f"k must be at least 1, got {k}")
    return check_k_color_connected(G, coloring.colors, k)


def is_rainbow_connected(
    G: Graph, coloring: EdgeColoring
) -> tuple[bool, tuple[int, int] | None]:
    """True iff every vertex pair is joined by an all-distinct-color path."""
    _bind(G, coloring)
    return check_rainbow_connected(G, coloring.colors)
