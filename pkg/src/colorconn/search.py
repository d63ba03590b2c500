"""Canonicalized enumeration of edge colorings at a fixed color count.

Colorings are enumerated in edge order under first-occurrence
canonicalization: the color on edge e_i is at most one more than the
largest color used on e_0..e_{i-1}. Every coloring is equivalent under
color relabeling to exactly one canonical string, so exhausting the
canonical strings at t colors proves emptiness at t colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .coloring import check_k_color_connected, check_rainbow_connected
from .graphs import Graph, SearchBudgetError

DEFAULT_BUDGET = 10**7


@dataclass
class Budget:
    """Counts search nodes plus verifier invocations against a cap."""

    limit: int = DEFAULT_BUDGET
    nodes: int = 0
    verifier_calls: int = 0

    def charge_node(self) -> None:
        self.nodes += 1
        if self.nodes + self.verifier_calls > self.limit:
            raise SearchBudgetError(f"budget of {self.limit} exhausted")

    def charge_verifier(self) -> None:
        self.verifier_calls += 1
        if self.nodes + self.verifier_calls > self.limit:
            raise SearchBudgetError(f"budget of {self.limit} exhausted")

    @property
    def used(self) -> int:
        return self.nodes + self.verifier_calls


def find_coloring(
    G: Graph,
    t: int,
    test: Callable[[Sequence[int]], bool],
    budget: Budget,
) -> tuple[int, ...] | None:
    """First canonical coloring using exactly t colors that passes `test`.

    Returns None when no coloring with exactly t distinct colors passes;
    combined with runs at smaller t this is an exhaustiveness proof.
    The first hit is the lexicographically smallest canonical assignment.
    """
    m = G.m
    if t < 1 or t > m:
        return None
    assign = [0] * m

    def rec(i: int, max_used: int) -> tuple[int, ...] | None:
        budget.charge_node()
        if i == m:
            if max_used == t:
                budget.charge_verifier()
                if test(assign):
                    return tuple(assign)
            return None
        if max_used + (m - i) < t:
            return None
        top = min(max_used + 1, t)
        for c in range(1, top + 1):
            assign[i] = c
            found = rec(i + 1, max_used if c <= max_used else c)
            if found is not None:
                return found
        return None

    return rec(0, 0)


def search_cck_at_t(G: Graph, k: int, t: int, budget: Budget) -> tuple[int, ...] | None:
    return find_coloring(G, t, lambda cols: check_k_color_connected(G, cols, k)[0], budget)


def search_rc_at_t(G: Graph, t: int, budget: Budget) -> tuple[int, ...] | None:
    return find_coloring(G, t, lambda cols: check_rainbow_connected(G, cols)[0], budget)
