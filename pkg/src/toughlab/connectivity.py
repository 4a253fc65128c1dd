"""Connectivity primitives: components, hop distances, vertex connectivity
via unit-capacity max-flow on the vertex-split digraph, and bipartite
matching.

All distance values are either exact ints or math.inf (never a large finite
stand-in).  Local connectivity of adjacent vertices follows Menger's
convention: the edge itself counts as one internally disjoint path, so
kappa(u,v) = 1 + kappa_{G-uv}(u,v).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, VertexSet, _bits, delete_edge

# -- components --------------------------------------------------------------


def _component_count(adj: tuple[int, ...], mask: int) -> int:
    """Number of connected components of the subgraph induced on ``mask``."""
    count = 0
    rem = mask
    while rem:
        count += 1
        comp = rem & -rem
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rem & ~comp
            comp |= new
            frontier |= new
        rem &= ~comp
    return count


def _component_masks(adj: tuple[int, ...], mask: int) -> list[int]:
    out = []
    rem = mask
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rem & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rem &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their least vertex."""
    return [VertexSet(m, g.n) for m in _component_masks(g.adj, g.full_mask)]


def component_count_without(g: Graph, removed: VertexSet | Iterable[int]) -> int:
    """c(G - S): component count after deleting the vertices of S."""
    from .graphs import _as_mask

    return _component_count(g.adj, g.full_mask & ~_as_mask(removed, g.n))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or _component_count(g.adj, g.full_mask) == 1


# -- distances ----------------------------------------------------------------


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop distances; entries are ints or math.inf."""

    rows: tuple[tuple[int | float, ...], ...]

    def distance(self, u: int, v: int) -> int | float:
        return self.rows[u][v]

    def eccentricity(self, v: int) -> int | float:
        return max(self.rows[v], default=0)

    def diameter(self) -> int | float:
        return max((max(row) for row in self.rows), default=0)


def distances(g: Graph) -> DistanceTable:
    rows = []
    for src in range(g.n):
        row: list[int | float] = [math.inf] * g.n
        row[src] = 0
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            d += 1
            for v in _bits(nxt):
                row[v] = d
            seen |= nxt
            frontier = nxt
        rows.append(tuple(row))
    return DistanceTable(tuple(rows))


def diameter(g: Graph) -> int | float:
    return distances(g).diameter()


def co_diameter(g: Graph) -> int | float:
    from .graphs import complement

    return diameter(complement(g))


# -- local connectivity via max-flow ------------------------------------------


@dataclass(frozen=True)
class SplitFlowNetwork:
    """Vertex-split digraph for internally disjoint u-v paths.

    Node 2i is "v_in", node 2i+1 is "v_out"; interior vertices carry a
    capacity-1 arc in->out, each edge xy contributes arcs x_out->y_in and
    y_out->x_in.  Source is u_out, sink is v_in.
    """

    node_count: int
    capacity: tuple[tuple[int, ...], ...]
    source: int
    sink: int


def build_split_network(g: Graph, u: int, v: int) -> SplitFlowNetwork:
    n2 = 2 * g.n
    cap = [[0] * n2 for _ in range(n2)]
    for w in range(g.n):
        if w != u and w != v:
            cap[2 * w][2 * w + 1] = 1
    for x in range(g.n):
        for y in _bits(g.adj[x]):
            cap[2 * x + 1][2 * y] = 1
    return SplitFlowNetwork(n2, tuple(tuple(r) for r in cap), 2 * u + 1, 2 * v)


def _max_flow_unit(net: SplitFlowNetwork) -> int:
    """Edmonds-Karp on the small dense residual matrix."""
    n = net.node_count
    residual = [list(row) for row in net.capacity]
    flow = 0
    while True:
        parent = [-1] * n
        parent[net.source] = net.source
        queue = [net.source]
        while queue and parent[net.sink] == -1:
            nxt = []
            for x in queue:
                row = residual[x]
                for y in range(n):
                    if row[y] and parent[y] == -1:
                        parent[y] = x
                        nxt.append(y)
            queue = nxt
        if parent[net.sink] == -1:
            return flow
        y = net.sink
        while y != net.source:
            x = parent[y]
            residual[x][y] -= 1
            residual[y][x] += 1
            y = x
        flow += 1


def local_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint u-v paths."""
    if u == v:
        raise ValueError("local connectivity needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    if g.has_edge(u, v):
        return 1 + local_connectivity(delete_edge(g, u, v), u, v)
    return _max_flow_unit(build_split_network(g, u, v))


def connectivity(g: Graph) -> int:
    """Vertex connectivity kappa(G); n-1 for complete graphs, 0 for n <= 1."""
    if g.n <= 1:
        return 0
    if g.is_complete():
        return g.n - 1
    # for non-complete graphs the minimum is attained on a non-adjacent pair
    best = g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                best = min(best, local_connectivity(g, u, v))
                if best == 0:
                    return 0
    return best


# -- bipartite matching --------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges, each stored as (u, v) with u < v."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


def max_bipartite_matching(g: Graph, a: VertexSet | Iterable[int], b: VertexSet | Iterable[int]) -> Matching:
    """Maximum matching of the bipartite subgraph g[A, B].

    Only edges with one end in a and the other in b are considered.
    Augmenting-path search (Kuhn's algorithm) over the a side.
    """
    from .graphs import _as_mask

    amask = _as_mask(a, g.n)
    bmask = _as_mask(b, g.n)
    if amask & bmask:
        raise ValueError("sides overlap")
    match_of: dict[int, int] = {}  # b vertex -> a vertex

    def try_augment(x: int, visited: set[int]) -> bool:
        for y in _bits(g.adj[x] & bmask):
            if y in visited:
                continue
            visited.add(y)
            if y not in match_of or try_augment(match_of[y], visited):
                match_of[y] = x
                return True
        return False

    for x in _bits(amask):
        try_augment(x, set())
    pairs = sorted((min(x, y), max(x, y)) for y, x in match_of.items())
    return Matching(tuple(pairs))


def uv_extension(g: Graph, a: VertexSet | Iterable[int], b: VertexSet | Iterable[int]) -> tuple[Graph, int, int]:
    """Attach u adjacent to all of a and v adjacent to all of b.

    Requires (g, a, b) to be a bipartition: a and b disjoint, covering all
    vertices, with every edge between the sides.  Returns (extended graph,
    u, v) where u = g.n and v = g.n + 1; u and v are non-adjacent.
    """
    from .graphs import _as_mask

    amask = _as_mask(a, g.n)
    bmask = _as_mask(b, g.n)
    if amask & bmask:
        raise ValueError("sides overlap")
    if (amask | bmask) != g.full_mask:
        raise ValueError("sides must cover all vertices")
    for x in _bits(amask):
        if g.adj[x] & amask:
            raise ValueError("edge inside side a: input is not bipartite on (a, b)")
    for x in _bits(bmask):
        if g.adj[x] & bmask:
            raise ValueError("edge inside side b: input is not bipartite on (a, b)")
    n = g.n
    u, v = n, n + 1
    rows = list(g.adj)
    for x in range(n):
        extra = 0
        if amask >> x & 1:
            extra |= 1 << u
        if bmask >> x & 1:
            extra |= 1 << v
        rows[x] |= extra
    rows.append(amask)
    rows.append(bmask)
    return Graph(n + 2, tuple(rows)), u, v
