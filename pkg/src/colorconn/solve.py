"""Exact computation of k-color connection and rainbow connection numbers.

Values are proved optimal by exhaustion: color counts are tried in
ascending order and each level is searched completely under
first-occurrence canonicalization before moving on, so the first level
with a valid coloring is the exact answer. Construction routes may seed
an upper bound, which shortens the ascent but never replaces the
exhaustive emptiness proof below it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import EdgeColoring, check_k_color_connected
from .construct import (
    ExtensionError,
    PreconditionError,
    color_cycle_cck,
    color_via_min_degree,
    extend_by_subgraph,
)
from .graphs import (
    DisconnectedError,
    EmbeddedSubgraph,
    Graph,
    GraphInputError,
    SearchBudgetError,
    blocks,
    find_cycle_at_least,
    is_2_connected,
    is_connected,
    path_length_at_least,
)
from .search import DEFAULT_BUDGET, Budget, search_cck_at_t, search_rc_at_t

VALUE = "value"
DOES_NOT_EXIST = "does-not-exist"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    verifier_calls: int
    elapsed: float


@dataclass(frozen=True)
class CckResult:
    """Outcome of an exact solve: a certified value, a nonexistence
    witness pair, or a budget failure with the best-known upper bound."""

    status: str
    value: int | None = None
    certificate: EdgeColoring | None = None
    witness: tuple[int, int] | None = None
    upper_bound: int | None = None
    stats: SolveStats | None = None

    @property
    def is_value(self) -> bool:
        return self.status == VALUE


def cck_exists(G: Graph, k: int) -> tuple[bool, tuple[int, int] | None]:
    """True iff every vertex pair is joined by a simple path of >= k edges.

    Rainbow-coloring every edge shows this is sufficient; a pair whose
    paths all have fewer than k edges can never see k distinct colors.
    Returns the lexicographically first failing pair on False.
    """
    _validate(G, k)
    for u in range(G.n - 1):
        for v in range(u + 1, G.n):
            if not path_length_at_least(G, u, v, k):
                return False, (u, v)
    return True, None


def solve_cck(
    G: Graph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    seed_constructions: bool = True,
) -> CckResult:
    """Exact cc_k(G) with a verified certificate coloring."""
    _validate(G, k)
    b = Budget(budget)
    start = time.perf_counter()
    try:
        return _solve_cck_core(G, k, b, seed_constructions, start)
    except SearchBudgetError:
        return CckResult(
            status=BUDGET_EXCEEDED, upper_bound=G.m, stats=_stats(b, start)
        )


def _solve_cck_core(
    G: Graph, k: int, b: Budget, seed_constructions: bool, start: float
) -> CckResult:
    ok, witness = cck_exists(G, k)
    if not ok:
        return CckResult(status=DOES_NOT_EXIST, witness=witness, stats=_stats(b, start))

    seed: EdgeColoring | None = None
    if seed_constructions:
        seed = _seed_upper_bound(G, k, b)
        if seed is not None and seed.num_colors == k:
            # cc_k >= k always holds, so a certified k-coloring is optimal
            return CckResult(
                status=VALUE, value=k, certificate=seed, stats=_stats(b, start)
            )

    hi = seed.num_colors if seed is not None else G.m
    try:
        for t in range(k, hi if seed is not None else hi + 1):
            cols = search_cck_at_t(G, k, t, b)
            if cols is not None:
                cert = EdgeColoring(G, cols, t)
                return CckResult(
                    status=VALUE, value=t, certificate=cert, stats=_stats(b, start)
                )
    except SearchBudgetError:
        return CckResult(
            status=BUDGET_EXCEEDED,
            upper_bound=hi,
            certificate=seed,
            stats=_stats(b, start),
        )
    if seed is not None:
        # every level below the seeded bound is exhausted, so it is exact
        return CckResult(
            status=VALUE, value=hi, certificate=seed, stats=_stats(b, start)
        )
    raise RuntimeError("ascending search ended without a coloring; this should not happen")


def solve_rc(G: Graph, budget: int = DEFAULT_BUDGET) -> CckResult:
    """Exact rc(G) with a verified certificate coloring."""
    if G.n < 2:
        raise GraphInputError("rainbow connection needs at least two vertices")
    if not is_connected(G):
        raise DisconnectedError("rainbow connection is defined for connected graphs")
    b = Budget(budget)
    start = time.perf_counter()
    try:
        for t in range(1, G.m + 1):
            cols = search_rc_at_t(G, t, b)
            if cols is not None:
                cert = EdgeColoring(G, cols, t)
                return CckResult(
                    status=VALUE, value=t, certificate=cert, stats=_stats(b, start)
                )
    except SearchBudgetError:
        return CckResult(status=BUDGET_EXCEEDED, upper_bound=G.m, stats=_stats(b, start))
    raise RuntimeError("rainbow search ended without a coloring; this should not happen")


def solve_cck_by_blocks(
    G: Graph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    seed_constructions: bool = True,
) -> CckResult:
    """Exact cc_k(G) through block decomposition.

    cc_k of a connected graph is the maximum over its blocks, and does
    not exist as soon as one block is a bridge (or any block value is
    missing). Block certificates reuse the shared color range 1..max.
    """
    _validate(G, k)
    b = Budget(budget)
    start = time.perf_counter()
    parts = blocks(G)

    for part in parts:
        if part.graph.m == 1:
            u, v = part.host_edge(part.graph.edges[0])
            return CckResult(
                status=DOES_NOT_EXIST, witness=(u, v), stats=_stats(b, start)
            )

    results: list[tuple[EmbeddedSubgraph, CckResult]] = []
    for part in parts:
        try:
            res = _solve_cck_core(part.graph, k, b, seed_constructions, start)
        except SearchBudgetError:
            return CckResult(status=BUDGET_EXCEEDED, stats=_stats(b, start))
        if res.status == BUDGET_EXCEEDED:
            return CckResult(status=BUDGET_EXCEEDED, stats=_stats(b, start))
        if res.status == DOES_NOT_EXIST:
            u, v = res.witness
            host = (part.vertex_map[u], part.vertex_map[v])
            return CckResult(
                status=DOES_NOT_EXIST,
                witness=(min(host), max(host)),
                stats=_stats(b, start),
            )
        results.append((part, res))

    value = max(res.value for _, res in results)
    colors = [0] * G.m
    for part, res in results:
        for idx, e in enumerate(part.graph.edges):
            colors[G.edge_index[part.host_edge(e)]] = res.certificate.colors[idx]
    cert = EdgeColoring(G, tuple(colors), value)
    b.charge_verifier()
    ok, pair = check_k_color_connected(G, cert.colors, k)
    if not ok:
        raise RuntimeError(f"assembled block certificate failed at pair {pair}; this should not happen")
    return CckResult(status=VALUE, value=value, certificate=cert, stats=_stats(b, start))


def _seed_upper_bound(G: Graph, k: int, b: Budget) -> EdgeColoring | None:
    """Try construction routes for a certified upper bound.

    Seeding only shortens the ascending loop; it never introduces an
    unverified bound, and in particular never uses the 2k-1 conjecture.
    """
    try:
        return color_via_min_degree(G, k, b)
    except (PreconditionError, ExtensionError):
        pass
    if is_2_connected(G):
        try:
            cycle = find_cycle_at_least(G, 2 * k)
        except SearchBudgetError:
            cycle = None
        if cycle is not None:
            try:
                base = color_cycle_cck(len(cycle), k, b)
                return extend_by_subgraph(
                    G, EmbeddedSubgraph(base.graph, tuple(cycle)), base, k, b
                )
            except (PreconditionError, ExtensionError):
                pass
    return None


def _validate(G: Graph, k: int) -> None:
    if G.n < 2:
        raise GraphInputError("need a nontrivial graph with at least two vertices")
    if k < 2:
        raise GraphInputError(f"k must be at least 2, got {k}")
    if not is_connected(G):
        raise DisconnectedError("k-color connection is defined for connected graphs")


def _stats(b: Budget, start: float) -> SolveStats:
    return SolveStats(
        nodes=b.nodes,
        verifier_calls=b.verifier_calls,
        elapsed=time.perf_counter() - start,
    )
