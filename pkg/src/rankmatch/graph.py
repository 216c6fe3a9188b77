"""Graphs with loops on the vertex set [n] = {1, ..., n}.

An edge is a sorted tuple: ``(i,)`` for a loop, ``(i, j)`` with ``i < j``
otherwise.  ``nu`` counts matching edges, ``mu`` counts covered vertices.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

Edge = tuple[int, ...]

ENUMERATION_LIMITS = {True: 6, False: 7}


def make_edge(e: Iterable[int]) -> Edge:
    verts = tuple(sorted(set(e)))
    if not 1 <= len(verts) <= 2:
        raise ValueError(f"edge must have 1 or 2 vertices, got {tuple(e)}")
    return verts


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for e in self.edges:
            if seen.intersection(e):
                raise ValueError(f"edges of a matching must be disjoint: {self.edges}")
            seen.update(e)

    @property
    def nu(self) -> int:
        return len(self.edges)

    @property
    def mu(self) -> int:
        return sum(len(e) for e in self.edges)

    @property
    def vertices(self) -> list[int]:
        return sorted(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)


@dataclass(frozen=True)
class LoopGraph:
    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        canon = frozenset(make_edge(e) for e in edges)
        for e in canon:
            if not all(1 <= v <= n for v in e):
                raise ValueError(f"edge {e} outside vertex set [1..{n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", canon)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: Iterable[int]) -> bool:
        return make_edge(e) in self.edges

    @property
    def has_loops(self) -> bool:
        return any(len(e) == 1 for e in self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __str__(self) -> str:
        inner = ",".join("{" + ",".join(map(str, e)) + "}" for e in self.sorted_edges())
        return "{ " + inner + " }" if inner else "{ }"


def _best_matching(G: LoopGraph, weight: dict[int, int]) -> tuple[int, tuple[Edge, ...]]:
    """Optimal matching by DP over the set of still-free vertices.

    Vertices are decided in increasing order; for each the options are tried
    as loop, then edges to increasing partners, then leaving it uncovered, and
    the first optimal option wins.  That yields the lexicographically smallest
    sorted edge list among optimal matchings.
    """
    n = G.n
    loops = [False] * (n + 1)
    nbrs: list[list[int]] = [[] for _ in range(n + 1)]
    for e in G.edges:
        if len(e) == 1:
            loops[e[0]] = True
        else:
            nbrs[e[0]].append(e[1])
    for lst in nbrs:
        lst.sort()
    w_loop, w_edge = weight[1], weight[2]

    @lru_cache(maxsize=None)
    def best(v: int, used: int) -> int:
        while v <= n and used >> v & 1:
            v += 1
        if v > n:
            return 0
        out = best(v + 1, used)
        if loops[v]:
            out = max(out, w_loop + best(v + 1, used))
        for u in nbrs[v]:
            if not used >> u & 1:
                out = max(out, w_edge + best(v + 1, used | 1 << u))
        return out

    value = best(1, 0)
    chosen: list[Edge] = []
    v, used = 1, 0
    while True:
        while v <= n and used >> v & 1:
            v += 1
        if v > n:
            break
        target = best(v, used)
        if loops[v] and w_loop + best(v + 1, used) == target:
            chosen.append((v,))
        else:
            for u in nbrs[v]:
                if not used >> u & 1 and w_edge + best(v + 1, used | 1 << u) == target:
                    chosen.append((v, u))
                    used |= 1 << u
                    break
        v += 1
    best.cache_clear()
    return value, tuple(chosen)


def nu(G: LoopGraph) -> int:
    """Maximum number of edges in a matching."""
    return _best_matching(G, {1: 1, 2: 1})[0]


def mu(G: LoopGraph) -> int:
    """Maximum number of vertices covered by a matching."""
    return _best_matching(G, {1: 1, 2: 2})[0]


def max_matching_witness(G: LoopGraph) -> Matching:
    """A matching attaining ``mu(G)``; ties go to the lexicographically smallest edge list."""
    return Matching(_best_matching(G, {1: 1, 2: 2})[1])


def max_nu_witness(G: LoopGraph) -> Matching:
    return Matching(_best_matching(G, {1: 1, 2: 1})[1])


def u_a(n: int, k: int) -> int:
    """Largest edge count of a simple graph on n vertices with mu = k (k even)."""
    if k % 2:
        raise ValueError(f"u_a needs even k, got {k}")
    if not 0 <= k <= n:
        raise ValueError(f"u_a needs 0 <= k <= n, got n={n}, k={k}")
    t = k // 2
    return max(comb(2 * t + 1, 2), t * n - comb(t + 1, 2))


def u_s(n: int, k: int) -> int:
    """Largest edge count of a graph with loops on n vertices with mu = k."""
    if not 0 <= k <= n:
        raise ValueError(f"u_s needs 0 <= k <= n, got n={n}, k={k}")
    t, odd = divmod(k, 2)
    if odd:
        return max(comb(2 * t + 2, 2), t * n - comb(t, 2) + 1)
    return max(comb(2 * t + 1, 2), t * n - comb(t, 2))


def all_edges(n: int, loops: bool) -> list[Edge]:
    edges: list[Edge] = [(i,) for i in range(1, n + 1)] if loops else []
    edges += list(combinations(range(1, n + 1), 2))
    return sorted(edges)


def enumerate_graphs(n: int, loops: bool) -> Iterator[LoopGraph]:
    """Every edge subset of K_n (or of K_n with loops), each exactly once."""
    limit = ENUMERATION_LIMITS[loops]
    if n > limit:
        raise ValueError(f"enumeration limited to n <= {limit} ({'with' if loops else 'without'} loops)")
    universe = all_edges(n, loops)
    for mask in range(1 << len(universe)):
        yield LoopGraph(n, [e for b, e in enumerate(universe) if mask >> b & 1])


def parse_graph(text: str, n: int | None = None) -> LoopGraph:
    """Read one edge per line (``i j`` or ``i`` for a loop, 1-based); ``#`` comments."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            verts = [int(x) for x in parts]
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {line!r}") from None
        if not 1 <= len(verts) <= 2 or any(v < 1 for v in verts):
            raise ValueError(f"line {lineno}: expected 'i' or 'i j' with 1-based vertices")
        edges.append(verts)
    top = max((v for e in edges for v in e), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"vertex {top} exceeds n={n}")
    return LoopGraph(n, edges)


def format_graph(G: LoopGraph) -> str:
    return "".join(" ".join(map(str, e)) + "\n" for e in G.sorted_edges())
