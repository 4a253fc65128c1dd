"""Canonical codes and isomorph-free enumeration for small graphs (n <= 10).

The canonical code of a graph is the graph6 encoding of its minimal
adjacency matrix: the relabelling whose upper-triangle bitstring (read in
graph6 column order) is lexicographically smallest.  The search is a
branch-and-bound over vertex placements: at depth j the candidate's column
(its adjacency pattern to the placed prefix) is compared against the best
known code; worse prefixes are cut, and candidates that differ by a
transposition automorphism of the whole graph are explored only once.

Enumeration generates level n by augmenting every level n-1 representative
with a new vertex over all neighbourhood masks (normalized modulo twin
classes), deduplicating by canonical code.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .connectivity import is_connected
from .graph6 import parse_graph6, write_graph6
from .graphs import Graph, relabel

CanonicalCode = bytes

_MAX_CANON = 10
_INF = 1 << 62


def _swap_equiv(adj: tuple[int, ...], a: int, b: int) -> bool:
    """True iff the transposition (a b) is an automorphism."""
    m = ~((1 << a) | (1 << b))
    return adj[a] & m == adj[b] & m


def _canonical_placement(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """placement[i] = original vertex put at position i of the minimal code."""
    if n == 0:
        return ()
    best_cols = [_INF] * n
    best_perm: list[int] = []
    placed: list[int] = []
    used = 0

    def dfs() -> None:
        nonlocal used
        j = len(placed)
        if j == n:
            best_perm[:] = placed
            return
        cands = []
        for v in range(n):
            if used >> v & 1:
                continue
            val = 0
            av = adj[v]
            for p in placed:
                val = (val << 1) | (av >> p & 1)
            cands.append((val, v))
        cands.sort()
        tried: list[tuple[int, int]] = []
        for val, v in cands:
            if val > best_cols[j]:
                break
            if any(tval == val and _swap_equiv(adj, tv, v) for tval, tv in tried):
                continue
            tried.append((val, v))
            if val < best_cols[j]:
                best_cols[j] = val
                for k in range(j + 1, n):
                    best_cols[k] = _INF
            placed.append(v)
            used |= 1 << v
            dfs()
            placed.pop()
            used ^= 1 << v

    dfs()
    return tuple(best_perm)


def canonical_form(g: Graph) -> Graph:
    """The canonically relabelled copy of g."""
    if g.n > _MAX_CANON:
        raise ValueError(f"canonical form supported up to {_MAX_CANON} vertices")
    placement = _canonical_placement(g.n, g.adj)
    old_to_new = [0] * g.n
    for new, old in enumerate(placement):
        old_to_new[old] = new
    return relabel(g, old_to_new)


def canonical_code(g: Graph) -> CanonicalCode:
    """Isomorphism-invariant byte string: graph6 of the canonical form."""
    return write_graph6(canonical_form(g)).encode("ascii")


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_code(g1) == canonical_code(g2)


# -- enumeration ---------------------------------------------------------------


def _twin_classes(g: Graph) -> list[int]:
    """Partition vertices into transposition-automorphism classes (bitmasks)."""
    classes: list[tuple[int, int]] = []  # (representative, mask)
    for v in range(g.n):
        for i, (rep, mask) in enumerate(classes):
            if _swap_equiv(g.adj, rep, v):
                classes[i] = (rep, mask | (1 << v))
                break
        else:
            classes.append((v, 1 << v))
    return [mask for _, mask in classes]


def _normalized_mask(mask: int, classes: list[int]) -> bool:
    """Is mask the least representative modulo permuting within twin classes?"""
    for cls in classes:
        sel = mask & cls
        k = sel.bit_count()
        low = 0
        m = cls
        for _ in range(k):
            bit = m & -m
            low |= bit
            m ^= bit
        if sel != low:
            return False
    return True


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[CanonicalCode, ...]:
    if n == 0:
        return (write_graph6(Graph.empty(0)).encode("ascii"),)
    if n == 1:
        return (write_graph6(Graph.empty(1)).encode("ascii"),)
    seen: set[CanonicalCode] = set()
    new_bit = 1 << (n - 1)
    for parent_code in _codes(n - 1):
        parent = parse_graph6(parent_code.decode("ascii"))
        classes = _twin_classes(parent)
        prows = parent.adj
        for mask in range(1 << (n - 1)):
            if not _normalized_mask(mask, classes):
                continue
            rows = [prows[i] | new_bit if mask >> i & 1 else prows[i] for i in range(n - 1)]
            rows.append(mask)
            seen.add(canonical_code(Graph(n, tuple(rows))))
    return tuple(sorted(seen))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class, ascending canonical code."""
    if not 0 <= n <= _MAX_CANON:
        raise ValueError(f"enumeration supported for 0 <= n <= {_MAX_CANON}")
    for code in _codes(n):
        g = parse_graph6(code.decode("ascii"))
        if connected_only and not is_connected(g):
            continue
        yield g
