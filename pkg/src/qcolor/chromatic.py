"""Chromatic number: Lawler's subset DP and a classical emulation of the
QRAM-based quantum algorithm.

The quantum algorithm precomputes chi for every vertex subset of size at most
floor(n/4), then splits V into a MIS I and two balanced halves T and
V - I - T. Each half is split once more and finished by table lookups. Every
Grover minimum is replaced by an exact classical minimum. The quantum
speed-up only shows up in the cost ledger, which charges sqrt of each search
range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .branching import CostLedger
from .graph import (
    Graph,
    SizeLimitError,
    VertexSet,
    chromatic_le_2,
    induced_subgraph,
    lift,
    popcount,
    subsets_of_size,
)
from .mis import binary_entropy, e_exponent, enumerate_mis_all, enumerate_mis_t, i_bound, moon_moser

LAWLER_MAX_VERTICES = 22
CHR_MAX_VERTICES = 20


class PartSizeError(AssertionError):
    """A split violated the balance the algorithm relies on."""


# ---------------------------------------------------------------------------
# Balanced split of a composition
# ---------------------------------------------------------------------------

def fact1_split(a: Sequence[int], m: int) -> frozenset[int]:
    """Pick indices S of {2..k} (1-based) with sum(a_S) <= m and the rest of
    {2..k} summing to at most n - m - 1, where n = sum(a).

    ``a[0]`` must be a largest entry. S is the longest prefix 2, 3, ..., t
    whose sum still fits in m.
    """
    if not a or any(x <= 0 for x in a):
        raise ValueError("a must be a nonempty list of positive integers")
    if max(a) != a[0]:
        raise ValueError("a[0] must be a maximum element")
    n = sum(a)
    if len(a) == 1:
        if m < 0:
            raise ValueError("m must be non-negative")
        return frozenset()
    if not 1 <= m <= n - 1:
        raise ValueError(f"m must lie in 1..{n - 1}, got {m}")
    total, chosen = 0, []
    for i in range(1, len(a)):
        if total + a[i] > m:
            break
        total += a[i]
        chosen.append(i + 1)
    return frozenset(chosen)


# ---------------------------------------------------------------------------
# Lawler's DP
# ---------------------------------------------------------------------------

def _mis_in(g: Graph, s: VertexSet, t: Optional[int], ledger: CostLedger) -> list[VertexSet]:
    sub, labels = induced_subgraph(g, s)
    if t is None:
        found, led = enumerate_mis_all(sub)
    else:
        found, led = enumerate_mis_t(sub, t)
    ledger.absorb_counts(led)
    return [lift(m, labels) for m in found]


def lawler_dp(g: Graph) -> int:
    """chi(G) from chi[S] = 1 + min over MISs I of G[S] of chi[S - I].

    Subsets are visited in increasing bitmask order, which lists every proper
    subset before its superset.
    """
    if g.n > LAWLER_MAX_VERTICES:
        raise SizeLimitError(f"lawler_dp refuses n={g.n} (limit {LAWLER_MAX_VERTICES})")
    chi = [0] * (1 << g.n)
    scratch = CostLedger()
    for s in range(1, 1 << g.n):
        chi[s] = 1 + min(chi[s & ~i] for i in _mis_in(g, s, None, scratch))
    return chi[-1]


# ---------------------------------------------------------------------------
# Precomputed table
# ---------------------------------------------------------------------------

@dataclass
class ChiTable:
    """chi of every vertex subset of size at most ``limit``, keyed by bitmask."""

    n: int
    limit: int
    values: dict[VertexSet, int] = field(default_factory=dict)

    def __getitem__(self, s: VertexSet) -> int:
        if popcount(s) > self.limit:
            raise PartSizeError(f"table key {s:#x} has {popcount(s)} > {self.limit} vertices")
        return self.values[s]

    def __len__(self) -> int:
        return len(self.values)

    def dump(self) -> str:
        lines = [f"chitable v1 n={self.n}"]
        lines += [f"{s:x} {c}" for s, c in sorted(self.values.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "ChiTable":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("chitable v1 n="):
            raise ValueError("missing 'chitable v1 n=<n>' header")
        try:
            n = int(lines[0].split("=", 1)[1])
            values = {}
            for ln in lines[1:]:
                key, val = ln.split()
                values[int(key, 16)] = int(val)
        except ValueError as exc:
            raise ValueError(f"malformed chitable: {exc}") from None
        if any(s >> n for s in values):
            raise ValueError("chitable key outside the vertex range")
        limit = max((popcount(s) for s in values), default=0)
        return cls(n, max(limit, n // 4), values)


def precompute_chi_table(g: Graph, ledger: Optional[CostLedger] = None) -> ChiTable:
    """chi[S] for all S with |S| <= floor(n/4), by increasing size."""
    ledger = ledger if ledger is not None else CostLedger()
    limit = g.n // 4
    table = ChiTable(g.n, limit, {0: 0})
    full = (1 << g.n) - 1
    for size in range(1, limit + 1):
        for s in subsets_of_size(full, size):
            table.values[s] = 1 + min(table.values[s & ~i] for i in _mis_in(g, s, None, ledger))
    return table


# ---------------------------------------------------------------------------
# Algorithm emulation
# ---------------------------------------------------------------------------

def _split_ranges(m: int) -> Iterator[tuple[int, int]]:
    """(t, s) pairs scanned for a set of size m; empty s-ranges are skipped."""
    for t in range(1, m + 1):
        for s in range(max(-(-m // 2) - t, 1), (m - t) // 2 + 1):
            yield t, s


class _Chr:
    def __init__(self, g: Graph, table: ChiTable, ledger: CostLedger):
        self.g = g
        self.table = table
        self.ledger = ledger
        self.memo: dict[VertexSet, int] = {}

    def _best_split(self, s_set: VertexSet, part_value) -> int:
        m = popcount(s_set)
        half = m // 2
        c = m
        for t, s in _split_ranges(m):
            for i in _mis_in(self.g, s_set, t, self.ledger):
                rest = s_set & ~i
                for part in subsets_of_size(rest, s):
                    other = rest & ~part
                    if popcount(part) > half or popcount(other) > half:
                        raise PartSizeError(
                            f"split of {s_set:#x}: parts of {popcount(part)} and "
                            f"{popcount(other)} exceed {half}"
                        )
                    c = min(c, part_value(part) + part_value(other))
        return c + 1

    def chr1(self, s_set: VertexSet) -> int:
        return self._best_split(s_set, self.chr2)

    def chr2(self, s_set: VertexSet) -> int:
        hit = self.memo.get(s_set)
        if hit is not None:
            return hit
        sub, _ = induced_subgraph(self.g, s_set)
        small = chromatic_le_2(sub)
        v = small if small is not None else self._best_split(s_set, self.table.__getitem__)
        self.memo[s_set] = v
        return v


# Modeled cost, largest term only (polynomial factors dropped).

def _log2_comb(n: int, k: int) -> float:
    return math.log2(math.comb(n, k))


@lru_cache(maxsize=None)
def _log2_t2(m: int) -> float:
    terms = [0.5 * (math.log2(i_bound(m, t)) + _log2_comb(m - t, s)) for t, s in _split_ranges(m)]
    return max(terms, default=0.0)


def _log2_t1(n: int) -> float:
    terms = [
        0.5 * (math.log2(i_bound(n, t)) + _log2_comb(n - t, s)) + max(_log2_t2(s), _log2_t2(n - t - s))
        for t, s in _split_ranges(n)
    ]
    return max(terms, default=0.0)


def _log2_precompute(n: int) -> float:
    terms = [_log2_comb(n, i) + 0.5 * math.log2(moon_moser(i)) for i in range(1, n // 4 + 1)]
    return max(terms, default=0.0)


def chr_log2_cost(n: int) -> float:
    """log2 of the modeled query count: the larger of precomputation and main search."""
    return max(_log2_precompute(n), _log2_t1(n))


def chromatic_number(g: Graph, table: Optional[ChiTable] = None) -> tuple[int, CostLedger]:
    """chi(G) via the table-plus-balanced-split algorithm.

    A ``table`` loaded from disk skips precomputation; it must belong to a
    graph with the same vertex count.
    """
    if g.n > CHR_MAX_VERTICES:
        raise SizeLimitError(f"chromatic_number refuses n={g.n} (limit {CHR_MAX_VERTICES})")
    ledger = CostLedger(nodes_visited=1)
    small = chromatic_le_2(g)
    if small is not None:
        ledger.modeled_grover_queries = 1.0
        return small, ledger
    if table is None:
        table = precompute_chi_table(g, ledger)
    elif table.n != g.n:
        raise ValueError(f"table is for n={table.n}, graph has n={g.n}")
    chi = _Chr(g, table, ledger).chr1((1 << g.n) - 1)
    ledger.modeled_grover_queries = 2.0 ** chr_log2_cost(g.n)
    return chi, ledger


# ---------------------------------------------------------------------------
# Asymptotic exponents of the cost model
# ---------------------------------------------------------------------------

def chr_cost_exponents(max_s: int = 64) -> dict:
    """Exponents of the main search, its inner step and the precomputation.

    Maximisation over delta runs over inverse integers 1/s, which is where the
    concave piecewise-linear E(delta) has its breakpoints.
    """
    t2 = max(
        ((e_exponent(Fraction(1, s)) + 1 - 1 / s) / 2, s) for s in range(1, max_s + 1)
    )
    inner_c = t2[0]
    best = None
    ratio = 2.0 ** (-2 * inner_c)
    for s in range(3, max_s + 1):
        d = 1 / s
        lam = min(0.5, (1 - d) / (1 + ratio))
        v = 0.5 * e_exponent(Fraction(1, s)) + 0.5 * binary_entropy(lam / (1 - d)) * (1 - d) + inner_c * lam
        if best is None or v > best[0]:
            best = (v, s, lam)
    pre = binary_entropy(0.25) + math.log2(3) / 24
    return {
        "t2": {"delta": f"1/{t2[1]}", "value": t2[0], "base": 2.0 ** t2[0]},
        "t1": {"delta": f"1/{best[1]}", "lambda": best[2], "value": best[0], "base": 2.0 ** best[0]},
        "precompute": {"value": pre, "base": 2.0 ** pre},
    }
