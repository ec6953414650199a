"""k-colourability by MIS removal and vertex bipartition, without QRAM.

``col`` decides k-colourability:

* k <= 2: polynomial check;
* k = 3: some MIS I leaves a bipartite G - I;
* k in {4, 5}: some t-MIS I with t >= ceil(n/k) leaves a (k-1)-colourable rest;
* k >= 6: some S with |S| >= ceil(n k'/k) has G[S] k'-colourable and G - S
  (k-k')-colourable, k' taken from a fixed per-k table.

``col_bounded`` adds an upper bound u on colour-class sizes, which caps |S| at
u k' and passes floor(t/k') as the bound for the second part. Its answer is
one-sided by design: True always certifies a k-colouring, and False certifies
that no k-colouring with all classes of size <= u exists. Whenever a
u-bounded colouring exists the answer is True, and whenever G is not
k-colourable it is False. Between those cases either answer may come back.

Both ORs are Grover searches in the quantum algorithm. Here they run as
classical short-circuiting loops, and the ledger carries the modeled query
count computed from the search ranges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .branching import CostLedger, run_or
from .exponents import REDUCTION_1, F3Spec, _f3_value, kprime_for
from .graph import Graph, VertexSet, chromatic_le_2, induced_subgraph, lift, popcount, subsets_of_size
from .mis import AllMisRules, TMisRules, i_bound


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_kprime(k: int, kprime: int) -> None:
    if k < 4 or not 2 <= kprime <= k // 2:
        raise ValueError(f"k' must lie in 2..{k // 2} for k={k}, got {kprime}")


@dataclass(frozen=True)
class ColQuery:
    """One k-colourability question.

    ``algo`` forces the top-level reduction ("r1" = MIS removal, "r2" =
    bipartition with ``kprime``); recursive calls always use the table.
    """

    graph: Graph
    k: int
    u: Optional[int] = None
    algo: str = "auto"
    kprime: Optional[int] = None
    f3: F3Spec = "be"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.u is not None and self.u < 0:
            raise ValueError("u must be non-negative")
        if self.algo not in ("auto", "r1", "r2"):
            raise ValueError(f"unknown algo {self.algo!r}")
        if self.algo != "auto" and self.k < 4:
            raise ValueError("forced reductions need k >= 4")
        if self.kprime is not None:
            _check_kprime(self.k, self.kprime)

    def top_choice(self) -> int:
        """k' at the root (REDUCTION_1 for MIS removal)."""
        if self.algo == "r1":
            return REDUCTION_1
        if self.algo == "r2":
            return self.kprime if self.kprime is not None else max(2, _table_kprime(self.k, self.u is not None))
        if self.kprime is not None:
            return self.kprime
        return _table_kprime(self.k, self.u is not None)

    def run(self) -> tuple[bool, CostLedger]:
        solver = _ColSolver(self.graph, self.f3, bounded=self.u is not None)
        full = (1 << self.graph.n) - 1
        value = solver.solve(full, self.k, self.u, self.top_choice() if self.k >= 4 else None)
        ledger = solver.ledger
        ledger.modeled_grover_queries = 2.0 ** log2_col_cost(
            self.graph.n, self.k, self.u, self.f3, self.top_choice() if self.k >= 4 else None
        )
        return value, ledger


def _table_kprime(k: int, bounded: bool) -> int:
    return REDUCTION_1 if k <= 5 else kprime_for(k, bounded)


class _ColSolver:
    """Memoised recursion over vertex subsets of one root graph."""

    def __init__(self, g: Graph, f3: F3Spec, bounded: bool):
        self.g = g
        self.f3 = f3
        self.bounded = bounded
        self.ledger = CostLedger()
        self.memo: dict = {}

    def solve(self, s: VertexSet, k: int, u: Optional[int], choice: Optional[int] = None) -> bool:
        n = popcount(s)
        if u is not None:
            u = min(u, n)
        key = (s, k, u if k >= 6 else None, choice)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.ledger.nodes_visited += 1
        if k <= 2:
            small = chromatic_le_2(induced_subgraph(self.g, s)[0])
            value = small is not None and small <= k
        elif k == 3:
            value = self._col3(s)
        else:
            if choice is None:
                choice = _table_kprime(k, self.bounded)
            if choice == REDUCTION_1:
                value = self._reduce1(s, k)
            else:
                value = self._reduce2(s, k, choice, u)
        self.memo[key] = value
        return value

    def _col3(self, s: VertexSet) -> bool:
        sub, labels = induced_subgraph(self.g, s)
        if sub.n == 0:
            return True

        def rest_bipartite(i: VertexSet) -> bool:
            rest = s & ~lift(i, labels)
            return chromatic_le_2(induced_subgraph(self.g, rest)[0]) is not None

        rules = AllMisRules(leaf_value=rest_bipartite)
        found, led = run_or(rules, rules.root(sub))
        self.ledger.absorb_counts(led)
        return found

    def _reduce1(self, s: VertexSet, k: int) -> bool:
        sub, labels = induced_subgraph(self.g, s)
        n = sub.n
        if n == 0:
            return True

        def rest_colourable(i: VertexSet) -> bool:
            rest = s & ~lift(i, labels)
            # the remaining part carries no useful bound: u = |V - I|
            u = popcount(rest) if self.bounded else None
            return self.solve(rest, k - 1, u)

        rules = TMisRules(leaf_value=rest_colourable)
        for t in range(_ceil_div(n, k), n + 1):
            found, led = run_or(rules, rules.root(sub, t))
            self.ledger.absorb_counts(led)
            if found:
                return True
        return False

    def _reduce2(self, s: VertexSet, k: int, kp: int, u: Optional[int]) -> bool:
        n = popcount(s)
        hi = n if u is None else min(n, u * kp)
        for t in range(_ceil_div(n * kp, k), hi + 1):
            for part in subsets_of_size(s, t):
                self.ledger.leaves_visited += 1
                rest = s & ~part
                if u is None:
                    ok = self.solve(part, kp, None) and self.solve(rest, k - kp, None)
                else:
                    ok = self.solve(part, kp, u) and self.solve(rest, k - kp, t // kp)
                if ok:
                    return True
        return False


# ---------------------------------------------------------------------------
# Modeled cost (largest term of each nested search, polynomial factors dropped)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _log2_cost(n: int, k: int, u: Optional[int], f3: float, choice: Optional[int], bounded: bool) -> float:
    if n == 0 or k <= 2:
        return 0.0
    if k == 3:
        return f3 * n
    if choice is None:
        choice = _table_kprime(k, bounded)
    if choice == REDUCTION_1:
        terms = []
        for t in range(_ceil_div(n, k), n + 1):
            rest = n - t
            inner = _log2_cost(rest, k - 1, rest if bounded else None, f3, None, bounded)
            terms.append(0.5 * math.log2(i_bound(n, t)) + inner)
        return max(terms, default=0.0)
    kp = choice
    hi = n if u is None else min(n, u * kp)
    terms = []
    for t in range(_ceil_div(n * kp, k), hi + 1):
        if u is None:
            a = _log2_cost(t, kp, None, f3, None, bounded)
            b = _log2_cost(n - t, k - kp, None, f3, None, bounded)
        else:
            a = _log2_cost(t, kp, min(t, u), f3, None, bounded)
            b = _log2_cost(n - t, k - kp, min(n - t, t // kp), f3, None, bounded)
        terms.append(0.5 * math.log2(math.comb(n, t)) + max(a, b))
    return max(terms, default=0.0)


def log2_col_cost(n: int, k: int, u: Optional[int] = None, f3: F3Spec = "be",
                  choice: Optional[int] = None) -> float:
    """log2 of the modeled query count of ``col`` (or ``col_bounded`` if u is given)."""
    bounded = u is not None
    if bounded:
        u = min(u, n)
    return _log2_cost(n, k, u, _f3_value(f3), choice if k >= 4 else None, bounded)


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------

def col3(g: Graph) -> bool:
    """3-colourability: some MIS I of G leaves G - I bipartite."""
    return _ColSolver(g, "be", False).solve((1 << g.n) - 1, 3, None)


def reduce1(g: Graph, k: int) -> bool:
    """k-colourability by MIS removal at the top level (k >= 4)."""
    if k < 4:
        raise ValueError("reduce1 needs k >= 4")
    return _ColSolver(g, "be", False).solve((1 << g.n) - 1, k, None, REDUCTION_1)


def reduce2(g: Graph, k: int, kprime: int) -> bool:
    """k-colourability by splitting V into k'- and (k-k')-colourable parts."""
    _check_kprime(k, kprime)
    return _ColSolver(g, "be", False).solve((1 << g.n) - 1, k, None, kprime)


def col(g: Graph, k: int, f3: F3Spec = "be") -> tuple[bool, CostLedger]:
    """Whether G is k-colourable, with the traversal and modeled-cost ledger."""
    return ColQuery(g, k, f3=f3).run()


def col_bounded(g: Graph, k: int, u: int, f3: F3Spec = "be") -> tuple[bool, CostLedger]:
    """Size-bounded variant; see the module docstring for the answer contract."""
    return ColQuery(g, k, u=u, f3=f3).run()
