"""Maximal independent set enumeration as branching rule sets.

Both rule sets branch on the closed neighbourhood N[v] of a minimum-degree
vertex v of the remaining graph: every MIS contains some w in N[v], so each
child puts one such w into the set and deletes N[w]. An isolated v gives a
single child (forced inclusion). For t-MIS enumeration a child is dropped
when the remaining graph can no longer host exactly the remaining number of
set members.

Capacities are the integer Moon-Moser bound for all MISs and I(n, t) for
t-MISs; the branching module checks subadditivity at every node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .branching import BranchProblem, BranchRules, CostLedger, traverse
from .graph import Graph, VertexSet, induced_subgraph, is_maximal_independent, lift


def i_bound(n: int, t: int) -> int:
    """Maximum number of t-MISs in an n-vertex graph (balanced cliques)."""
    if not 1 <= t <= n:
        raise ValueError(f"i_bound needs 1 <= t <= n, got n={n}, t={t}")
    q = n // t
    return q ** ((q + 1) * t - n) * (q + 1) ** (n - q * t)


def moon_moser(n: int) -> int:
    """Maximum number of MISs in an n-vertex graph."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 1:
        return 1
    r = n % 3
    if r == 0:
        return 3 ** (n // 3)
    if r == 1:
        return 4 * 3 ** ((n - 4) // 3)
    return 2 * 3 ** ((n - 2) // 3)


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def e_exponent(delta) -> float:
    """Exponent E(delta) with I(n, floor(delta n)) = O(2^(E(delta) n))."""
    d = Fraction(delta)
    if not 0 < d <= 1:
        raise ValueError(f"delta must lie in (0, 1], got {delta}")
    q = math.floor(1 / d)
    df = float(d)
    return ((q + 1) * df - 1) * math.log2(q) + (1 - q * df) * math.log2(q + 1)


@dataclass(frozen=True)
class MisState:
    graph: Graph              # remaining graph, relabelled
    labels: tuple[int, ...]   # relabelled vertex -> vertex of the root graph
    chosen: VertexSet         # partial independent set, root labels


def _min_degree_vertex(g: Graph) -> int:
    return min(range(g.n), key=lambda v: (g.degree(v), v))


def _remove_closed_nbhd(state: MisState, w: int) -> MisState:
    g = state.graph
    rest = g.vertices & ~g.closed_neighborhood(w)
    sub, sub_labels = induced_subgraph(g, rest)
    return MisState(sub, tuple(state.labels[i] for i in sub_labels), state.chosen | 1 << state.labels[w])


class AllMisRules(BranchRules):
    """Enumerate all MISs; params are (remaining vertex count,).

    ``leaf_value`` maps a finished MIS (root labels) to the leaf solution;
    by default the MIS itself.
    """

    def __init__(self, leaf_value: Optional[Callable[[VertexSet], object]] = None):
        self.leaf_value = leaf_value

    def root(self, g: Graph) -> BranchProblem:
        return BranchProblem(MisState(g, tuple(range(g.n)), 0), (g.n,))

    def is_leaf(self, p):
        return p.payload.graph.n == 0

    def solve_leaf(self, p):
        chosen = p.payload.chosen
        return chosen if self.leaf_value is None else self.leaf_value(chosen)

    def expand(self, p):
        state = p.payload
        g = state.graph
        v = _min_degree_vertex(g)
        children = []
        for w in sorted([v] + [u for u in range(g.n) if g.adj[v] >> u & 1]):
            child = _remove_closed_nbhd(state, w)
            children.append(BranchProblem(child, (child.graph.n,)))
        return children

    def capacity(self, params):
        return moon_moser(params[0])


class TMisRules(BranchRules):
    """Enumerate MISs of size exactly t; params are (remaining n, remaining t).

    A problem whose every branch is infeasible is a dead leaf solving to None.
    """

    def __init__(self, leaf_value: Optional[Callable[[VertexSet], object]] = None):
        self.leaf_value = leaf_value

    def root(self, g: Graph, t: int) -> BranchProblem:
        if not 1 <= t <= g.n:
            raise ValueError(f"t must lie in 1..{g.n}, got {t}")
        return BranchProblem(MisState(g, tuple(range(g.n)), 0), (g.n, t))

    @staticmethod
    def _feasible(n_left: int, t_left: int) -> bool:
        return (n_left == 0) == (t_left == 0) and t_left <= n_left

    def _branch_vertices(self, p):
        g = p.payload.graph
        n, t = p.params
        v = _min_degree_vertex(g)
        nb = g.closed_neighborhood(v)
        return [w for w in range(g.n) if nb >> w & 1
                and self._feasible(n - g.degree(w) - 1, t - 1)]

    def is_leaf(self, p):
        n, t = p.params
        return n == 0 or t == 0 or not self._branch_vertices(p)

    def solve_leaf(self, p):
        n, t = p.params
        if n != 0 or t != 0:
            return None
        chosen = p.payload.chosen
        return chosen if self.leaf_value is None else self.leaf_value(chosen)

    def expand(self, p):
        n, t = p.params
        out = []
        for w in self._branch_vertices(p):
            child = _remove_closed_nbhd(p.payload, w)
            out.append(BranchProblem(child, (child.graph.n, t - 1)))
        return out

    def capacity(self, params):
        n, t = params
        if n == 0 and t == 0:
            return 1
        return i_bound(n, t)


def _collect(rules: BranchRules, root: BranchProblem, g: Graph) -> tuple[list[VertexSet], CostLedger]:
    ledger = CostLedger()
    found = set()
    for _, q in traverse(rules, root, ledger):
        s = rules.solve_leaf(q)
        if s is None:
            continue
        if not is_maximal_independent(g, s):
            raise AssertionError(f"rule set emitted non-maximal set {s:#x}")
        found.add(s)
    ledger.modeled_grover_queries = math.sqrt(rules.capacity(root.params))
    return sorted(found), ledger


def enumerate_mis_all(g: Graph) -> tuple[list[VertexSet], CostLedger]:
    """All MISs of ``g`` sorted by bitmask, with the traversal ledger."""
    rules = AllMisRules()
    return _collect(rules, rules.root(g), g)


def enumerate_mis_t(g: Graph, t: int) -> tuple[list[VertexSet], CostLedger]:
    """All MISs of ``g`` with exactly ``t`` vertices, sorted by bitmask."""
    rules = TMisRules()
    return _collect(rules, rules.root(g, t), g)


def mis_of_subset(g: Graph, s: VertexSet, t: Optional[int] = None) -> list[VertexSet]:
    """MISs (optionally of size t) of G[S], expressed in labels of ``g``."""
    sub, labels = induced_subgraph(g, s)
    if t is None:
        found, _ = enumerate_mis_all(sub)
    elif 1 <= t <= sub.n:
        found, _ = enumerate_mis_t(sub, t)
    else:
        return []
    return [lift(m, labels) for m in found]
