"""Parametric graph families and their canonical instances.

Each family spec is a small frozen dataclass; `generate` turns a spec
into a concrete Graph plus the labeling metadata (rim order, hub,
end-vertices, path memberships) that the coloring constructions need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .graphs import Graph, build_graph, subdivide_edge


class FamilySpecError(ValueError):
    """Raised when a family spec violates its invariants."""


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class ChordedCycle:
    """Cycle of length n plus a chord between vertices at cycle-distance t."""

    n: int
    t: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Wheel:
    """Hub joined to every vertex of an n-cycle rim."""

    n: int


@dataclass(frozen=True)
class WheelLike:
    """Hub joined by t internally disjoint paths to t distinct rim vertices."""

    n: int
    t: int
    spoke_lengths: tuple[int, ...]


@dataclass(frozen=True)
class Theta:
    """t internally disjoint paths of lengths q_1 >= ... >= q_t sharing both ends."""

    lengths: tuple[int, ...]


@dataclass(frozen=True)
class Subdivision:
    """Subdivide each edge of the base instance counts[i] times."""

    base: "GraphClassSpec"
    counts: tuple[int, ...]


GraphClassSpec = Union[Cycle, ChordedCycle, Complete, Wheel, WheelLike, Theta, Subdivision]


@dataclass(frozen=True)
class GeneratedGraph:
    """A family instance with enough labeling metadata for the colorers."""

    spec: GraphClassSpec
    graph: Graph
    hub: int | None = None
    rim: tuple[int, ...] | None = None
    ends: tuple[int, int] | None = None
    paths: tuple[tuple[int, ...], ...] | None = None
    chord: tuple[int, int] | None = None


def validate_spec(spec: GraphClassSpec) -> None:
    if isinstance(spec, Cycle):
        if spec.n < 3:
            raise FamilySpecError(f"cycle needs n >= 3, got {spec.n}")
    elif isinstance(spec, ChordedCycle):
        if spec.n < 4 or not 2 <= spec.t <= spec.n // 2:
            raise FamilySpecError(f"chord distance {spec.t} invalid for n={spec.n}")
    elif isinstance(spec, Complete):
        if spec.n < 1:
            raise FamilySpecError(f"complete graph needs n >= 1, got {spec.n}")
    elif isinstance(spec, Wheel):
        if spec.n < 3:
            raise FamilySpecError(f"wheel rim needs n >= 3, got {spec.n}")
    elif isinstance(spec, WheelLike):
        if spec.n < 3:
            raise FamilySpecError(f"rim needs n >= 3, got {spec.n}")
        if not 1 <= spec.t <= spec.n:
            raise FamilySpecError(f"need 1 <= t <= n, got t={spec.t}, n={spec.n}")
        if len(spec.spoke_lengths) != spec.t:
            raise FamilySpecError("one spoke length per spoke path required")
        if any(q < 1 for q in spec.spoke_lengths):
            raise FamilySpecError("spoke paths need length >= 1")
    elif isinstance(spec, Theta):
        q = spec.lengths
        if len(q) < 2:
            raise FamilySpecError("theta graph needs at least 2 paths")
        if any(a < b for a, b in zip(q, q[1:])):
            raise FamilySpecError(f"path lengths must be nonincreasing, got {q}")
        if q[-1] < 1 or q[-2] < 2:
            raise FamilySpecError(f"need q_t >= 1 and q_(t-1) >= 2, got {q}")
    elif isinstance(spec, Subdivision):
        validate_spec(spec.base)
        base_m = generate(spec.base).graph.m
        if len(spec.counts) != base_m:
            raise FamilySpecError(
                f"{len(spec.counts)} subdivision counts for {base_m} base edges"
            )
        if any(c < 0 for c in spec.counts):
            raise FamilySpecError("subdivision counts must be nonnegative")
    else:
        raise FamilySpecError(f"unknown spec {spec!r}")


def generate(spec: GraphClassSpec) -> GeneratedGraph:
    """Build the canonical instance of a family spec."""
    validate_spec(spec)
    if isinstance(spec, Cycle):
        return GeneratedGraph(
            spec=spec, graph=_cycle_graph(spec.n), rim=tuple(range(spec.n))
        )
    if isinstance(spec, ChordedCycle):
        edges = _cycle_edges(spec.n) + [(0, spec.t)]
        return GeneratedGraph(
            spec=spec,
            graph=build_graph(spec.n, edges),
            rim=tuple(range(spec.n)),
            chord=(0, spec.t),
        )
    if isinstance(spec, Complete):
        edges = [(u, v) for u in range(spec.n) for v in range(u + 1, spec.n)]
        return GeneratedGraph(spec=spec, graph=build_graph(spec.n, edges))
    if isinstance(spec, Wheel):
        hub = spec.n
        edges = _cycle_edges(spec.n) + [(i, hub) for i in range(spec.n)]
        return GeneratedGraph(
            spec=spec,
            graph=build_graph(spec.n + 1, edges),
            hub=hub,
            rim=tuple(range(spec.n)),
        )
    if isinstance(spec, WheelLike):
        return _generate_wheel_like(spec)
    if isinstance(spec, Theta):
        return _generate_theta(spec)
    assert isinstance(spec, Subdivision)
    base = generate(spec.base)
    g = base.graph
    for edge, count in zip(base.graph.edges, spec.counts):
        cur = edge
        for _ in range(count):
            g, w = subdivide_edge(g, cur)
            cur = (w, edge[1])
    return GeneratedGraph(spec=spec, graph=g)


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def _cycle_graph(n: int) -> Graph:
    return build_graph(n, _cycle_edges(n))


def _generate_wheel_like(spec: WheelLike) -> GeneratedGraph:
    # rim 0..n-1, hub n, spoke path j runs hub -> internals -> rim vertex j
    hub = spec.n
    edges = _cycle_edges(spec.n)
    next_vertex = spec.n + 1
    paths = []
    for j, q in enumerate(spec.spoke_lengths):
        path = [hub]
        for _ in range(q - 1):
            path.append(next_vertex)
            next_vertex += 1
        path.append(j)
        edges.extend((a, b) for a, b in zip(path, path[1:]))
        paths.append(tuple(path))
    return GeneratedGraph(
        spec=spec,
        graph=build_graph(next_vertex, edges),
        hub=hub,
        rim=tuple(range(spec.n)),
        paths=tuple(paths),
    )


def _generate_theta(spec: Theta) -> GeneratedGraph:
    # end-vertices x=0 and y=1; internals numbered path by path
    x, y = 0, 1
    next_vertex = 2
    edges = []
    paths = []
    for q in spec.lengths:
        path = [x]
        for _ in range(q - 1):
            path.append(next_vertex)
            next_vertex += 1
        path.append(y)
        edges.extend((a, b) for a, b in zip(path, path[1:]))
        paths.append(tuple(path))
    return GeneratedGraph(
        spec=spec,
        graph=build_graph(next_vertex, edges),
        ends=(x, y),
        paths=tuple(paths),
    )


def iter_theta_specs(sum_max: int) -> Iterator[Theta]:
    """All valid theta specs with total path length at most sum_max."""

    def parts(remaining: int, cap: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if len(acc) >= 2:
            yield tuple(acc)
        for q in range(min(cap, remaining), 0, -1):
            # at most one length-1 path, and only in last position
            if q == 1 and acc and acc[-1] == 1:
                continue
            acc.append(q)
            yield from parts(remaining - q, q, acc)
            acc.pop()

    seen = []
    for lengths in parts(sum_max, sum_max, []):
        if lengths[-2] >= 2:
            seen.append(lengths)
    seen.sort(key=lambda q: (sum(q), len(q), q))
    for lengths in seen:
        yield Theta(lengths=lengths)
