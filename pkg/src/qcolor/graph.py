"""Word-packed undirected simple graphs, vertex-set helpers and brute-force oracles.

Vertex sets are plain ``int`` bitmasks over ``0..n-1``. All iteration over a
set is in ascending vertex order, which the branching code relies on for
deterministic leaf indexing.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64
ORACLE_MAX_VERTICES = 20

VertexSet = int


class ParseError(ValueError):
    """Malformed DIMACS input."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class SizeLimitError(ValueError):
    """Instance too large for the requested algorithm or oracle."""


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def subsets_of_size(mask: VertexSet, size: int) -> Iterator[VertexSet]:
    """Subsets of ``mask`` with exactly ``size`` members, in ascending
    lexicographic order of their bitmask values."""
    members = list(bits(mask))
    k = len(members)
    if size < 0 or size > k:
        return
    if size == 0:
        yield 0
        return
    # Gosper's hack over positions 0..k-1, then scatter onto the members.
    pos = (1 << size) - 1
    limit = 1 << k
    while pos < limit:
        out = 0
        p = pos
        while p:
            low = p & -p
            out |= 1 << members[low.bit_length() - 1]
            p ^= low
        yield out
        c = pos & -pos
        r = pos + c
        pos = (((r ^ pos) >> 2) // c) | r


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise SizeLimitError(f"graph has {self.n} vertices, limit is {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in bits(nb):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for v, w in edges:
            if v == w:
                raise ValueError(f"self-loop at vertex {v}")
            if not (0 <= v < n and 0 <= w < n):
                raise ValueError(f"edge ({v}, {w}) out of range for n={n}")
            adj[v] |= 1 << w
            adj[w] |= 1 << v
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in range(self.n) for w in bits(self.adj[v]) if v < w]

    @property
    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2


# ---------------------------------------------------------------------------
# DIMACS .col
# ---------------------------------------------------------------------------

def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text (``p edge n m`` header, 1-indexed ``e u v``)."""
    n: Optional[int] = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError(lineno, f"malformed header {line!r}")
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise ParseError(lineno, f"malformed header {line!r}") from None
            if n < 0:
                raise ParseError(lineno, "negative vertex count")
            if n > MAX_VERTICES:
                raise SizeLimitError(f"graph has {n} vertices, limit is {MAX_VERTICES}")
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "edge line before header")
            if len(fields) != 3:
                raise ParseError(lineno, f"malformed edge line {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(lineno, f"malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex index out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(0, "missing 'p edge' header")
    return Graph.from_edges(n, sorted(edges))


def to_dimacs(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {v + 1} {w + 1}" for v, w in edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Subgraphs and set predicates
# ---------------------------------------------------------------------------

def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(G[S], labels)`` where ``labels[i]`` is the original vertex
    behind relabelled vertex ``i`` (ascending)."""
    labels = tuple(bits(s & g.vertices))
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        nb = 0
        for w in bits(g.adj[v] & s):
            nb |= 1 << index[w]
        adj.append(nb)
    return Graph(len(labels), tuple(adj)), labels


def lift(mask: VertexSet, labels: Sequence[int]) -> VertexSet:
    """Map a vertex set of a relabelled subgraph back to original labels."""
    out = 0
    for i in bits(mask):
        out |= 1 << labels[i]
    return out


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not (g.adj[v] & s) for v in bits(s))


def is_maximal_independent(g: Graph, s: VertexSet) -> bool:
    if not is_independent(g, s):
        return False
    for v in bits(g.vertices & ~s):
        if not (g.adj[v] & s):
            return False
    return True


def two_coloring(g: Graph) -> Optional[list[int]]:
    """Breadth-first 2-colouring, or None if ``g`` has an odd cycle."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def chromatic_le_2(g: Graph) -> Optional[int]:
    """chi(G) if it is at most 2, otherwise None."""
    if g.n == 0:
        return 0
    if not any(g.adj):
        return 1
    return 2 if two_coloring(g) is not None else None


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------

def _check_oracle_size(g: Graph) -> None:
    if g.n > ORACLE_MAX_VERTICES:
        raise SizeLimitError(
            f"oracle refuses n={g.n}; brute force is limited to n <= {ORACLE_MAX_VERTICES}"
        )


def oracle_mis_list(g: Graph) -> list[VertexSet]:
    """All maximal independent sets, by scanning every subset of V."""
    _check_oracle_size(g)
    return [s for s in range(1 << g.n) if is_maximal_independent(g, s)]


def oracle_k_colorable(g: Graph, k: int) -> bool:
    """Exhaustive backtracking k-colouring check (colour symmetry broken)."""
    _check_oracle_size(g)
    if g.n == 0:
        return True
    if k <= 0:
        return False
    color = [-1] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        forbidden = {color[w] for w in bits(g.adj[v]) if w < v}
        for c in range(min(used + 1, k)):
            if c not in forbidden:
                color[v] = c
                if place(v + 1, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return place(0, 0)


def oracle_chromatic(g: Graph) -> int:
    _check_oracle_size(g)
    k = 0
    while not oracle_k_colorable(g, k):
        k += 1
    return k


def oracle_bounded_partition(g: Graph, k: int, u: int) -> bool:
    """Whether V splits into at most k independent sets each of size <= u."""
    _check_oracle_size(g)
    if g.n == 0:
        return True
    if k <= 0 or u <= 0:
        return False
    color = [-1] * g.n
    sizes = [0] * k

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        forbidden = {color[w] for w in bits(g.adj[v]) if w < v}
        for c in range(min(used + 1, k)):
            if c not in forbidden and sizes[c] < u:
                color[v] = c
                sizes[c] += 1
                if place(v + 1, max(used, c + 1)):
                    return True
                sizes[c] -= 1
        color[v] = -1
        return False

    return place(0, 0)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def gen_complete(n: int) -> Graph:
    return Graph.from_edges(n, ((v, w) for v in range(n) for w in range(v + 1, n)))


def gen_empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def gen_path(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def gen_clique_union(sizes: Sequence[int]) -> Graph:
    """Vertex-disjoint cliques of the given sizes, numbered consecutively."""
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("sizes must be a nonempty list of positive integers")
    edges = []
    start = 0
    for size in sizes:
        edges.extend((start + i, start + j) for i in range(size) for j in range(i + 1, size))
        start += size
    return Graph.from_edges(start, edges)


def gen_gnp(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    Uses ``random.Random(seed)`` (Mersenne Twister) and visits the candidate
    pairs (v, w), v < w, in lexicographic order, keeping a pair when the next
    ``random()`` draw is below p. One draw is consumed per pair regardless of
    p, so corpora are reproducible from (n, p, seed).
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    pf = float(p)
    edges = []
    for v in range(n):
        for w in range(v + 1, n):
            if rng.random() < pf:
                edges.append((v, w))
    return Graph.from_edges(n, edges)


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def add_universal_vertex(g: Graph) -> Graph:
    """Join a new vertex ``n`` adjacent to every existing vertex."""
    return Graph.from_edges(g.n + 1, g.edges() + [(v, g.n) for v in range(g.n)])
