"""Verified coloring constructions for the supported graph families.

Every coloring built here is certification-gated: it is checked by the
corresponding verifier before being returned. Schemes that can fail to
verify (subgraph extension, the theta leftover-path patterns) fall back
to exact search at the known optimal color count; `construction_stats`
records how often each fallback fires.
"""

from __future__ import annotations

from collections import Counter

from .coloring import (
    EdgeColoring,
    _bind,
    check_k_color_connected,
    check_rainbow_connected,
)
from .families import Cycle, ChordedCycle, Theta, Wheel, generate, validate_spec
from .graphs import (
    DEFAULT_NODE_BUDGET,
    EmbeddedSubgraph,
    Graph,
    GraphInputError,
    SearchBudgetError,
    find_cycle_at_least,
    find_cycle_with_length,
    is_2_connected,
    subdivide_edge,
)
from .search import Budget, search_cck_at_t, search_rc_at_t


class DoesNotExistError(ValueError):
    """Raised when the requested invariant value does not exist."""


class PreconditionError(ValueError):
    """Raised when a construction's hypothesis is violated."""


class ExtensionError(RuntimeError):
    """Raised when an extension coloring fails verification."""


construction_stats: Counter = Counter()

_CHORD_CACHE: dict[tuple[int, int], EdgeColoring] = {}
_WHEEL_CACHE: dict[int, EdgeColoring] = {}


def reset_construction_stats() -> None:
    construction_stats.clear()


def color_cycle_cck(n: int, k: int, budget: Budget | None = None) -> EdgeColoring:
    """Certified k-color connection coloring of C_n at the optimal count.

    Rainbow for n = 2k-1; for n >= 2k the periodic pattern is tried first
    but never trusted without verification, with exact search at k colors
    as the fallback.
    """
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    if n <= 2 * k - 2:
        raise DoesNotExistError(f"no k-color connection coloring of C_{n} for k={k}")
    G = generate(Cycle(n)).graph
    budget = budget if budget is not None else Budget()
    if n == 2 * k - 1:
        value = n
        assignment = {(i, (i + 1) % n): i + 1 for i in range(n)}
    else:
        value = k
        assignment = {(i, (i + 1) % n): (i % k) + 1 for i in range(n)}
    coloring = EdgeColoring.from_pairs(G, _normalize_keys(assignment), t=value)
    budget.charge_verifier()
    ok, _ = check_k_color_connected(G, coloring.colors, k)
    if ok:
        return coloring
    construction_stats["cycle_periodic_fallback"] += 1
    cols = search_cck_at_t(G, k, value, budget)
    if cols is None:
        raise RuntimeError(f"no {value}-coloring of C_{n} found for k={k}; this should not happen")
    return EdgeColoring(G, cols, value)


def transfer_subdivision_coloring(
    G: Graph, coloring: EdgeColoring, steps: list[tuple[int, int]]
) -> tuple[Graph, EdgeColoring]:
    """Carry a coloring through a sequence of edge subdivisions.

    Both replacement edges inherit the color of the replaced edge; all
    other colors are untouched. Steps reference edges of the evolving
    graph, in order.
    """
    _bind(G, coloring)
    H = G
    assignment = {e: c for e, c in zip(G.edges, coloring.colors)}
    for step in steps:
        u, v = step
        e = (u, v) if u < v else (v, u)
        if e not in H.edge_index:
            raise GraphInputError(f"subdivision step references missing edge {e}")
        color = assignment.pop(e)
        H, w = subdivide_edge(H, e)
        assignment[_norm(e[0], w)] = color
        assignment[_norm(e[1], w)] = color
    return H, EdgeColoring.from_pairs(H, assignment, t=coloring.t)


def extend_by_subgraph(
    G: Graph,
    sub: EmbeddedSubgraph,
    sub_coloring: EdgeColoring,
    k: int,
    budget: Budget | None = None,
) -> EdgeColoring:
    """Extend a subgraph coloring to all of G, painting extra edges color 1.

    Keeping color 1 (instead of fresh colors) preserves the subgraph's
    color count. The result is verified; a verification failure is
    reported as ExtensionError rather than returning an uncertified
    coloring.
    """
    _bind(sub.graph, sub_coloring)
    if not is_2_connected(G):
        raise PreconditionError("extension requires a 2-connected host graph")
    colors = [1] * G.m
    for idx, e in enumerate(sub.graph.edges):
        host = sub.host_edge(e)
        if host not in G.edge_index:
            raise GraphInputError(f"subgraph edge {e} maps to missing host edge {host}")
        colors[G.edge_index[host]] = sub_coloring.colors[idx]
    budget = budget if budget is not None else Budget()
    budget.charge_verifier()
    ok, pair = check_k_color_connected(G, colors, k)
    if not ok:
        construction_stats["extend_failed"] += 1
        raise ExtensionError(f"extension coloring fails verification at pair {pair}")
    return EdgeColoring(G, tuple(colors), max(colors))


def theta_cck_value(spec: Theta, k: int) -> int | None:
    """Exact k-color connection number of a theta graph; None if none exists."""
    validate_spec(spec)
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    q = spec.lengths
    s = q[0] + q[1]
    if s >= 2 * k:
        return k
    if s == 2 * k - 1:
        return 2 * k - 1 if len(q) == 2 else q[0] + 1
    return None


def color_theta_cck(spec: Theta, k: int, budget: Budget | None = None) -> EdgeColoring:
    """Certified coloring of a theta graph at its exact cc_k value."""
    value = theta_cck_value(spec, k)
    if value is None:
        raise DoesNotExistError(f"cc_{k} of {spec} does not exist")
    gen = generate(spec)
    G = gen.graph
    q = spec.lengths
    budget = budget if budget is not None else Budget()

    if q[0] + q[1] >= 2 * k:
        cycle_vertices = list(gen.paths[0][:-1]) + list(reversed(gen.paths[1]))[:-1]
        try:
            base = color_cycle_cck(len(cycle_vertices), k, budget)
            return extend_by_subgraph(
                G, EmbeddedSubgraph(base.graph, tuple(cycle_vertices)), base, k, budget
            )
        except ExtensionError:
            construction_stats["theta_cck_fallback"] += 1
    elif len(q) == 2:
        # the graph is the cycle C_{2k-1}: rainbow everything
        coloring = EdgeColoring(G, tuple(range(1, G.m + 1)), G.m)
        budget.charge_verifier()
        ok, _ = check_k_color_connected(G, coloring.colors, k)
        if ok:
            return coloring
        construction_stats["theta_cck_fallback"] += 1
    else:
        try:
            coloring = _theta_chorded_route(gen, k, budget)
            if coloring is not None:
                return coloring
        except ExtensionError:
            pass
        construction_stats["theta_cck_fallback"] += 1

    cols = search_cck_at_t(G, k, value, budget)
    if cols is None:
        raise RuntimeError(f"no coloring of {spec} found at {value} colors; this should not happen")
    return EdgeColoring(G, cols, value)


def _theta_chorded_route(gen, k: int, budget: Budget) -> EdgeColoring | None:
    """Color the chorded-cycle core, subdivide its chord into the third
    path, and extend over the remaining paths."""
    spec = gen.spec
    q = spec.lengths
    q2, q3 = q[1], q[2]
    core = chorded_cycle_colorer(2 * k - 1, q2, k, budget)

    steps = []
    cur = (0, q2)
    next_id = core.graph.n
    for _ in range(q3 - 1):
        steps.append(cur)
        cur = (next_id, q2)
        next_id += 1
    H, transferred = transfer_subdivision_coloring(core.graph, core, steps)

    x, y = gen.ends
    rim_map = [x] + list(gen.paths[1][1:-1]) + [y] + list(reversed(gen.paths[0][1:-1]))
    vmap = rim_map + list(gen.paths[2][1:-1])
    return extend_by_subgraph(gen.graph, EmbeddedSubgraph(H, tuple(vmap)), transferred, k, budget)


def chorded_cycle_colorer(n: int, t: int, k: int, budget: Budget | None = None) -> EdgeColoring:
    """Certified optimal coloring of the chorded cycle C_{2k-1}^{ct}.

    Obtained by exact search at the known optimum 2k-t and cached per
    (k, t); there is no closed-form construction to mirror here.
    """
    if k < 3 or not 2 <= t <= k - 1:
        raise PreconditionError(f"need k >= 3 and 2 <= t <= k-1, got k={k}, t={t}")
    if n != 2 * k - 1:
        raise PreconditionError(f"chorded cycle length must be 2k-1={2 * k - 1}, got {n}")
    key = (k, t)
    if key not in _CHORD_CACHE:
        G = generate(ChordedCycle(n, t)).graph
        budget = budget if budget is not None else Budget()
        cols = search_cck_at_t(G, k, 2 * k - t, budget)
        if cols is None:
            raise RuntimeError(
                f"no ({2 * k - t})-coloring of the chorded cycle found; this should not happen"
            )
        _CHORD_CACHE[key] = EdgeColoring(G, cols, 2 * k - t)
    return _CHORD_CACHE[key]


def color_theta_rc(spec: Theta, budget: Budget | None = None) -> EdgeColoring:
    """Certified rainbow connecting coloring of a theta graph using exactly
    ceil(sum(q)/2) colors.

    The t paths are paired into cycles (same-parity pairs first, so the
    number of even cycles is maximal), each cycle gets a fresh-color
    antipodal pattern, and an odd leftover path gets a mirrored pattern.
    The mirrored pattern can fail for leftover paths of four or more
    edges, so a periodic pattern and then exact search back it up.
    """
    validate_spec(spec)
    gen = generate(spec)
    G = gen.graph
    q = spec.lengths
    target = (sum(q) + 1) // 2
    budget = budget if budget is not None else Budget()
    pairs, leftover = _pair_paths_by_parity(q)

    for scheme in ("mirror", "periodic"):
        assignment: dict[tuple[int, int], int] = {}
        offset = 0
        for i, j in pairs:
            cycle_edges = _path_edges(gen.paths[i]) + _path_edges(tuple(reversed(gen.paths[j])))
            span = (len(cycle_edges) + 1) // 2
            for pos, e in enumerate(cycle_edges):
                assignment[e] = offset + (pos % span) + 1
            offset += span
        if leftover is not None:
            path_edges = _path_edges(gen.paths[leftover])
            ql = len(path_edges)
            span = (ql + 1) // 2
            for pos, e in enumerate(path_edges, start=1):
                if scheme == "mirror":
                    assignment[e] = offset + min(pos, ql + 1 - pos)
                else:
                    assignment[e] = offset + ((pos - 1) % span) + 1
            offset += span
        coloring = EdgeColoring.from_pairs(G, assignment, t=target)
        budget.charge_verifier()
        ok, _ = check_rainbow_connected(G, coloring.colors)
        if ok:
            return coloring
        construction_stats[f"theta_rc_{scheme}_failed"] += 1
        if leftover is None:
            break  # both schemes only differ on the leftover path

    cols = search_rc_at_t(G, target, budget)
    if cols is None:
        raise RuntimeError(f"no rainbow coloring of {spec} at {target} colors; this should not happen")
    return EdgeColoring(G, cols, target)


def construct_gap_graph(k: int, a: int, b: int) -> Theta:
    """Theta spec realizing cc_k = a and rc = b.

    Feasible for b >= a and k <= a <= 2k-2: start from the two long paths
    that pin cc_k and pad with length-2 paths until ceil(sum/2) hits b.
    """
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    if b < a:
        raise PreconditionError(f"need b >= a, got a={a}, b={b}")
    if not k <= a <= 2 * k - 2:
        raise PreconditionError(f"need k <= a <= 2k-2, got k={k}, a={a}")
    if a == k:
        lengths = (k, k) + (2,) * (b - k)
    else:
        lengths = (a - 1, 2 * k - a) + (2,) * (b - k)
    spec = Theta(lengths=lengths)
    try:
        validate_spec(spec)
    except Exception as exc:
        raise PreconditionError(f"no feasible padding for (k={k}, a={a}, b={b})") from exc
    return spec


def color_via_min_degree(G: Graph, k: int, budget: Budget | None = None) -> EdgeColoring:
    """Certified k-coloring of a 2-connected graph with minimum degree >= k.

    Prefers a cycle of length at least 2k extended over G; otherwise
    locates an (n-1)-cycle plus the remaining vertex, colors the
    wheel-like subgraph they span by subdivision transfer from a wheel
    base coloring, and extends. Exact search at k colors is the final
    fallback.
    """
    if G.n < 4:
        raise PreconditionError(f"need at least 4 vertices, got {G.n}")
    if G.min_degree < k:
        raise PreconditionError(f"minimum degree {G.min_degree} below k={k}")
    if not is_2_connected(G):
        raise PreconditionError("graph is not 2-connected")
    budget = budget if budget is not None else Budget()

    cycle = None
    try:
        cycle = find_cycle_at_least(G, 2 * k, node_budget=DEFAULT_NODE_BUDGET)
    except SearchBudgetError:
        pass
    if cycle is not None:
        base = color_cycle_cck(len(cycle), k, budget)
        try:
            return extend_by_subgraph(
                G, EmbeddedSubgraph(base.graph, tuple(cycle)), base, k, budget
            )
        except ExtensionError:
            construction_stats["min_degree_fallback"] += 1

    if k >= 3:
        coloring = _wheel_like_route(G, k, budget)
        if coloring is not None:
            return coloring

    cols = search_cck_at_t(G, k, k, budget)
    if cols is None:
        raise RuntimeError("no k-coloring found under the minimum-degree hypothesis; this should not happen")
    return EdgeColoring(G, cols, k)


def _wheel_like_route(G: Graph, k: int, budget: Budget) -> EdgeColoring | None:
    try:
        rim = find_cycle_with_length(G, G.n - 1, node_budget=DEFAULT_NODE_BUDGET)
    except SearchBudgetError:
        return None
    if rim is None:
        return None
    hub = next(v for v in range(G.n) if v not in set(rim))
    on_rim = set(G.adjacency[hub]) & set(rim)
    positions = sorted(i for i, v in enumerate(rim) if v in on_rim)
    if len(positions) < k:
        return None
    positions = positions[:k]

    base = generate(Wheel(k))
    base_coloring = _wheel_base_coloring(k, budget)
    rim_len = len(rim)
    steps: list[tuple[int, int]] = []
    vmap = [0] * (k + 1 + (rim_len - k))
    for j, p in enumerate(positions):
        vmap[j] = rim[p]
    vmap[k] = hub
    next_id = k + 1
    for j in range(k):
        p_here = positions[j]
        p_next = positions[(j + 1) % k]
        arc = (p_next - p_here) % rim_len
        cur = (j, (j + 1) % k)
        for s in range(1, arc):
            steps.append(cur)
            vmap[next_id] = rim[(p_here + s) % rim_len]
            cur = (next_id, (j + 1) % k)
            next_id += 1
    H, transferred = transfer_subdivision_coloring(base.graph, base_coloring, steps)
    try:
        return extend_by_subgraph(G, EmbeddedSubgraph(H, tuple(vmap)), transferred, k, budget)
    except ExtensionError:
        construction_stats["min_degree_fallback"] += 1
        return None


def _wheel_base_coloring(k: int, budget: Budget | None = None) -> EdgeColoring:
    """Optimal k-coloring of the wheel W_k, solver-derived and cached."""
    if k < 3:
        raise PreconditionError(f"wheel base coloring needs k >= 3, got {k}")
    if k not in _WHEEL_CACHE:
        G = generate(Wheel(k)).graph
        budget = budget if budget is not None else Budget()
        cols = search_cck_at_t(G, k, k, budget)
        if cols is None:
            raise RuntimeError(f"no {k}-coloring of the wheel found; this should not happen")
        _WHEEL_CACHE[k] = EdgeColoring(G, cols, k)
    return _WHEEL_CACHE[k]


def _pair_paths_by_parity(q: tuple[int, ...]) -> tuple[list[tuple[int, int]], int | None]:
    """Pair path indices, same parity first, so even cycles are maximal."""
    odds = [i for i, v in enumerate(q) if v % 2]
    evens = [i for i, v in enumerate(q) if v % 2 == 0]
    pairs = [(odds[i], odds[i + 1]) for i in range(0, len(odds) - 1, 2)]
    pairs += [(evens[i], evens[i + 1]) for i in range(0, len(evens) - 1, 2)]
    rest = ([odds[-1]] if len(odds) % 2 else []) + ([evens[-1]] if len(evens) % 2 else [])
    if len(rest) == 2:
        pairs.append((rest[0], rest[1]))
        return pairs, None
    return pairs, rest[0] if rest else None


def _path_edges(path: tuple[int, ...]) -> list[tuple[int, int]]:
    return [_norm(a, b) for a, b in zip(path, path[1:])]


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _normalize_keys(assignment: dict[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    return {_norm(u, v): c for (u, v), c in assignment.items()}
