import math

import pytest

from qcolor.branching import (
    BranchProblem,
    BranchRules,
    CapacityError,
    CostLedger,
    leaf,
    leaf_coverage_check,
    modeled_grover_cost,
    run_min,
    run_or,
    traverse,
)
from qcolor.graph import gen_clique_union, gen_cycle, gen_gnp
from qcolor.mis import AllMisRules, TMisRules


class BitStrings(BranchRules):
    """All bit strings of length n; payload is the prefix built so far."""

    def __init__(self, cap=lambda n: 2 ** n, target=None):
        self.cap = cap
        self.target = target

    def root(self, n):
        return BranchProblem("", (n,))

    def is_leaf(self, p):
        return p.params[0] == 0

    def solve_leaf(self, p):
        if self.target is not None:
            return p.payload == self.target
        return int(p.payload, 2) if p.payload else 0

    def expand(self, p):
        n = p.params[0]
        return [BranchProblem(p.payload + b, (n - 1,)) for b in "01"]

    def capacity(self, params):
        return self.cap(params[0])


class Stuck(BitStrings):
    def expand(self, p):
        return [BranchProblem(p.payload, p.params)]


def test_traverse_visits_leaves_in_order():
    rules = BitStrings()
    ledger = CostLedger()
    leaves = [q.payload for _, q in traverse(rules, rules.root(3), ledger)]
    assert leaves == ["000", "001", "010", "011", "100", "101", "110", "111"]
    assert ledger.leaves_visited == 8 and ledger.nodes_visited == 15 and ledger.max_depth == 3


@pytest.mark.parametrize("s", range(1, 9))
def test_leaf_index_matches_traversal_order(s):
    rules = BitStrings()
    assert leaf(rules, rules.root(3), s).payload == format(s - 1, "03b")


def test_leaf_index_out_of_range():
    rules = BitStrings()
    with pytest.raises(IndexError):
        leaf(rules, rules.root(3), 0)
    with pytest.raises(IndexError):
        leaf(rules, rules.root(3), 9)


def test_slack_capacity_maps_excess_indices_to_last_child():
    rules = BitStrings(cap=lambda n: 3 ** n)
    root = rules.root(2)
    # 9 indices over 4 leaves: the last child of each node absorbs the slack
    got = [leaf(rules, root, s).payload for s in range(1, 10)]
    assert got == ["00", "01", "01", "10", "11", "11", "11", "11", "11"]
    report = leaf_coverage_check(rules, root)
    assert report.ok and report.capacity == 9 and report.traversal_leaves == 4


def test_subadditivity_violation_raises():
    rules = BitStrings(cap=lambda n: n + 1)
    with pytest.raises(CapacityError, match="not subadditive"):
        list(traverse(rules, rules.root(3)))
    with pytest.raises(CapacityError):
        leaf(rules, rules.root(3), 1)


def test_params_must_decrease():
    rules = Stuck()
    with pytest.raises(CapacityError, match="do not decrease"):
        list(traverse(rules, rules.root(2)))


def test_run_or_and_min():
    found, ledger = run_or(BitStrings(target="101"), BitStrings().root(3))
    assert found
    assert ledger.leaves_visited == 6  # short-circuits after "101"
    assert ledger.log2_modeled_queries == pytest.approx(1.5)
    assert not run_or(BitStrings(target="1111"), BitStrings().root(3))[0]
    best, _ = run_min(BitStrings(), BitStrings().root(4))
    assert best == 0


def test_modeled_cost_is_half_log_capacity():
    rules = BitStrings()
    assert modeled_grover_cost(rules, rules.root(10)) == pytest.approx(5.0)


def test_ledger_merge_and_dict():
    a = CostLedger(3, 5, 4.0, 2)
    b = CostLedger(1, 1, 4.0, 7)
    m = a.merge(b)
    assert (m.leaves_visited, m.nodes_visited, m.modeled_grover_queries, m.max_depth) == (4, 6, 8.0, 7)
    assert m.to_dict()["log2_modeled_queries"] == 3.0
    assert CostLedger().log2_modeled_queries == 0.0


@pytest.mark.parametrize("seed", range(12))
def test_or_min_agree_with_leaf_fold(seed):
    g = gen_gnp(9, 0.4, seed)
    rules = AllMisRules(leaf_value=lambda s: bin(s).count("1"))
    root = rules.root(g)
    values = [rules.solve_leaf(q) for _, q in traverse(rules, root)]
    assert run_min(rules, root)[0] == min(values)
    odd = AllMisRules(leaf_value=lambda s: bin(s).count("1") % 2 == 1)
    assert run_or(odd, odd.root(g))[0] == any(v % 2 == 1 for v in values)


@pytest.mark.parametrize(
    "rules, root",
    [
        (AllMisRules(), AllMisRules().root(gen_cycle(5))),
        (AllMisRules(), AllMisRules().root(gen_cycle(7))),
        (TMisRules(), TMisRules().root(gen_clique_union([3, 3]), 2)),
        (TMisRules(), TMisRules().root(gen_gnp(10, 0.5, 3), 3)),
    ],
)
def test_coverage_on_mis_rules(rules, root):
    report = leaf_coverage_check(rules, root)
    assert report.ok
    assert sum(report.multiplicity.values()) == report.traversal_leaves
    assert sum(k * v for k, v in report.multiplicity.items()) == report.capacity
    assert report.to_dict()["ok"] is True


def test_coverage_refuses_huge_capacity():
    rules = BitStrings()
    with pytest.raises(ValueError):
        leaf_coverage_check(rules, rules.root(30), limit=1000)


def test_capacity_exactly_tight_mis_cycle():
    # C5 has 5 MISs but the rule set reaches one of them twice: 6 leaves = M(5)
    rules = AllMisRules()
    report = leaf_coverage_check(rules, rules.root(gen_cycle(5)))
    assert report.capacity == 6 == report.traversal_leaves
    assert math.isclose(sum(report.multiplicity.values()), 6)
