"""OR/MIN branching over capacity-bounded computation trees.

A rule set describes a branch-and-reduce algorithm: which problems are
leaves, how an inner problem splits into children, and an integer capacity
``U(params)`` bounding the number of leaves below any problem with those
parameters. Capacities must be subadditive over every expansion,

    U(parent) >= sum(U(child) for child in children),

which is what lets an index ``s in 1..U`` name a leaf (:func:`leaf`) and
hence lets a Grover search range over the leaves in ``sqrt(U)`` queries. The
inequality is checked at every expanded node; a violation raises
:class:`CapacityError` and is never repaired.

The classical traversal and the index map share :func:`_expand`, so both
see the same computation tree.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterator


class CapacityError(RuntimeError):
    """A rule set broke capacity subadditivity or parameter descent."""


@dataclass(frozen=True)
class BranchProblem:
    payload: Any
    params: tuple[int, ...]


class BranchRules(ABC):
    """Interface for a deterministic branching algorithm.

    Implementations must be pure: equal payloads give equal ordered
    children.
    """

    @abstractmethod
    def is_leaf(self, p: BranchProblem) -> bool: ...

    @abstractmethod
    def solve_leaf(self, p: BranchProblem) -> Any: ...

    @abstractmethod
    def expand(self, p: BranchProblem) -> list[BranchProblem]: ...

    @abstractmethod
    def capacity(self, params: tuple[int, ...]) -> int: ...

    def leaf_cost_log2(self, params: tuple[int, ...]) -> float:
        """log2 of the modeled cost of solving one leaf below ``params``."""
        return 0.0


@dataclass
class CostLedger:
    leaves_visited: int = 0
    nodes_visited: int = 0
    modeled_grover_queries: float = 0.0
    max_depth: int = 0

    @property
    def log2_modeled_queries(self) -> float:
        if self.modeled_grover_queries <= 0:
            return 0.0
        return math.log2(self.modeled_grover_queries)

    def merge(self, other: "CostLedger") -> "CostLedger":
        """Counters add, depth takes the max, modeled queries add."""
        return CostLedger(
            self.leaves_visited + other.leaves_visited,
            self.nodes_visited + other.nodes_visited,
            self.modeled_grover_queries + other.modeled_grover_queries,
            max(self.max_depth, other.max_depth),
        )

    def absorb_counts(self, other: "CostLedger") -> None:
        """Add another ledger's classical counters into this one in place."""
        self.leaves_visited += other.leaves_visited
        self.nodes_visited += other.nodes_visited
        self.max_depth = max(self.max_depth, other.max_depth)

    def to_dict(self) -> dict:
        return {
            "leaves_visited": self.leaves_visited,
            "nodes_visited": self.nodes_visited,
            "log2_modeled_queries": round(self.log2_modeled_queries, 9),
            "max_depth": self.max_depth,
        }


def _expand(rules: BranchRules, p: BranchProblem) -> tuple[list[BranchProblem], list[int]]:
    children = rules.expand(p)
    if not children:
        raise ValueError(f"inner problem with params {p.params} has no children")
    caps = []
    for c in children:
        if len(c.params) != len(p.params) or any(a > b for a, b in zip(c.params, p.params)):
            raise CapacityError(f"child params {c.params} exceed parent params {p.params}")
        if tuple(c.params) == tuple(p.params):
            raise CapacityError(f"child params {c.params} do not decrease from {p.params}")
        caps.append(rules.capacity(c.params))
    parent_cap = rules.capacity(p.params)
    if sum(caps) > parent_cap:
        raise CapacityError(
            f"capacity not subadditive at params {p.params}: "
            f"U(parent)={parent_cap} < sum{caps}={sum(caps)} "
            f"(children params {[c.params for c in children]})"
        )
    return children, caps


def traverse(
    rules: BranchRules, root: BranchProblem, ledger: CostLedger | None = None
) -> Iterator[tuple[tuple[int, ...], BranchProblem]]:
    """Depth-first walk yielding ``(path, leaf)``; ``path`` lists child indices."""
    ledger = ledger if ledger is not None else CostLedger()
    stack = [(root, ())]
    while stack:
        p, path = stack.pop()
        ledger.nodes_visited += 1
        ledger.max_depth = max(ledger.max_depth, len(path))
        if rules.is_leaf(p):
            ledger.leaves_visited += 1
            yield path, p
            continue
        children, _ = _expand(rules, p)
        for i in range(len(children) - 1, -1, -1):
            stack.append((children[i], path + (i,)))


def modeled_grover_cost(rules: BranchRules, p: BranchProblem) -> float:
    """log2 of the modeled Grover query count: sqrt(U) times the leaf cost."""
    return 0.5 * math.log2(rules.capacity(p.params)) + rules.leaf_cost_log2(p.params)


def run_or(rules: BranchRules, p: BranchProblem) -> tuple[bool, CostLedger]:
    ledger = CostLedger()
    result = False
    for _, q in traverse(rules, p, ledger):
        if rules.solve_leaf(q):
            result = True
            break
    ledger.modeled_grover_queries = 2.0 ** modeled_grover_cost(rules, p)
    return result, ledger


def run_min(rules: BranchRules, p: BranchProblem) -> tuple[Any, CostLedger]:
    ledger = CostLedger()
    best = None
    for _, q in traverse(rules, p, ledger):
        v = rules.solve_leaf(q)
        if v is not None and (best is None or v < best):
            best = v
    ledger.modeled_grover_queries = 2.0 ** modeled_grover_cost(rules, p)
    return best, ledger


def _leaf_path(rules: BranchRules, p: BranchProblem, s: int) -> tuple[BranchProblem, tuple[int, ...]]:
    path = []
    while not rules.is_leaf(p):
        children, caps = _expand(rules, p)
        for i, (child, cap) in enumerate(zip(children[:-1], caps[:-1])):
            if s <= cap:
                p = child
                path.append(i)
                break
            s -= cap
        else:
            # the last child absorbs whatever index remains
            p = children[-1]
            path.append(len(children) - 1)
    return p, tuple(path)


def leaf(rules: BranchRules, p: BranchProblem, s: int) -> BranchProblem:
    """The ``s``-th leaf of ``p`` (1-based), by walking children in order."""
    cap = rules.capacity(p.params)
    if not 1 <= s <= cap:
        raise IndexError(f"leaf index {s} outside 1..{cap}")
    return _leaf_path(rules, p, s)[0]


@dataclass
class CoverageReport:
    capacity: int
    traversal_leaves: int
    uncovered: list[tuple[int, ...]] = field(default_factory=list)
    multiplicity: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.uncovered

    def to_dict(self) -> dict:
        return {
            "capacity": self.capacity,
            "traversal_leaves": self.traversal_leaves,
            "uncovered": [list(p) for p in self.uncovered],
            "multiplicity": {str(k): v for k, v in sorted(self.multiplicity.items())},
            "ok": self.ok,
        }


def leaf_coverage_check(rules: BranchRules, p: BranchProblem, limit: int = 10**6) -> CoverageReport:
    """Check that every traversal leaf is ``leaf(p, s)`` for some valid ``s``.

    ``multiplicity`` maps "number of indices landing on a leaf" to the number
    of leaves with that count.
    """
    cap = rules.capacity(p.params)
    if cap > limit:
        raise ValueError(f"capacity {cap} exceeds enumeration limit {limit}")
    tree_leaves = {path for path, _ in traverse(rules, p)}
    hits: Counter = Counter()
    for s in range(1, cap + 1):
        q, path = _leaf_path(rules, p, s)
        if not rules.is_leaf(q):
            raise CapacityError(f"index {s} reached a non-leaf problem")
        if path not in tree_leaves:
            raise CapacityError(f"index {s} reached path {path} unknown to the traversal")
        hits[path] += 1
    uncovered = sorted(tree_leaves - set(hits))
    multiplicity = Counter(hits.values())
    return CoverageReport(cap, len(tree_leaves), uncovered, dict(multiplicity))
