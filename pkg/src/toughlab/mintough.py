"""Minimal toughness: deciders, edge conditions, dominating edges, joins.

A graph is minimally tough when deleting any single edge lowers its
toughness.  Complete and edgeless graphs are trivially so (no edge deletion
can help / nothing to delete that matters); the interesting verdict is
NON_TRIVIAL: connected, non-complete, every edge deletion strictly drops t.

Two independent deciders:

* by definition — recompute toughness after every single-edge deletion;
* by edge criterion — an edge uv is deletable-without-dropping unless
  (cond1) its local connectivity is below 2t+1, or (cond2) some separator S
  of G also separates u from v in G-uv and satisfies |S| < t*(c(G-S)+1).
  The graph is minimally tough iff every edge meets cond1 or cond2.

The criterion decider refuses nothing: disconnected non-edgeless inputs get
t = 0, both conditions fail on every edge, and the verdict is NOT_MIN_TOUGH.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .connectivity import _component_count, co_diameter, distances, local_connectivity
from .families import Family, FamilySpec, make_named
from .graphs import Graph, VertexSet, _bits, complement, delete_edge
from .toughness import (
    Toughness,
    _masks_of_popcount,
    format_toughness,
    iterate_separators,
    toughness,
)


class MinToughStatus(Enum):
    TRIVIALLY_MIN_TOUGH = "trivially-minimally-tough"
    NON_TRIVIALLY_MIN_TOUGH = "non-trivially-minimally-tough"
    NOT_MIN_TOUGH = "not-minimally-tough"


@dataclass(frozen=True)
class MinToughVerdict:
    status: MinToughStatus
    toughness: Toughness
    #: lexicographically least edge whose deletion keeps toughness unchanged
    #: (definition route) / meets neither condition (criterion route)
    failing_edge: tuple[int, int] | None = None


@dataclass(frozen=True)
class EdgeWitness:
    """Per-edge record from the criterion decider."""

    edge: tuple[int, int]
    kappa: int
    cond1: bool
    cond2: bool
    separator: VertexSet | None  # first (size, bitmask)-ascending cond2 witness


def is_minimally_tough_by_definition(g: Graph) -> MinToughVerdict:
    """Sweep every single-edge deletion and compare toughness values."""
    if g.is_complete() or g.is_edgeless():
        return MinToughVerdict(MinToughStatus.TRIVIALLY_MIN_TOUGH, toughness(g))
    t = toughness(g)
    for u, v in g.edges():
        t_minus = toughness(delete_edge(g, u, v))
        assert t_minus <= t  # edge deletion can never raise toughness
        if t_minus == t:
            return MinToughVerdict(MinToughStatus.NOT_MIN_TOUGH, t, (u, v))
    return MinToughVerdict(MinToughStatus.NON_TRIVIALLY_MIN_TOUGH, t)


# -- edge criterion -----------------------------------------------------------


def _cond2_scan(g: Graph, t: Fraction, u: int, v: int) -> tuple[int, int] | None:
    """First (size, bitmask)-ascending S with: S separates G, S separates u
    from v in G-uv, and |S| < t*(c(G-S)+1).  Returns (mask, components)."""
    n, adj, full = g.n, g.adj, g.full_mask
    avoid = (1 << u) | (1 << v)
    adj_cut = list(adj)
    adj_cut[u] &= ~(1 << v)
    adj_cut[v] &= ~(1 << u)
    for size in range(0, max(n - 1, 0)):
        if size >= t * (n - size + 1):  # even n-size components cannot satisfy the bound
            break
        for mask in _masks_of_popcount(n, size):
            if mask & avoid:
                continue
            keep = full & ~mask
            c = _component_count(adj, keep)
            if c < 2 or size >= t * (c + 1):
                continue
            # is S a u-v separator of G - uv?  flood from u without the edge
            comp = 1 << u
            frontier = comp
            reached = False
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = adj_cut[low.bit_length() - 1] & keep & ~comp
                if new >> v & 1:
                    reached = True
                    break
                comp |= new
                frontier |= new
            if not reached:
                return mask, c
    return None


def cond2_candidates(g: Graph, u: int, v: int) -> Iterator[VertexSet]:
    """All S that separate G and separate u from v in G-uv (no size bound).

    Ascending (size, bitmask).  Used to check that dominating edges admit no
    candidates at all.
    """
    if not g.has_edge(u, v):
        raise ValueError("cond2 candidates are defined for edges")
    n, adj, full = g.n, g.adj, g.full_mask
    avoid = (1 << u) | (1 << v)
    adj_cut = list(adj)
    adj_cut[u] &= ~(1 << v)
    adj_cut[v] &= ~(1 << u)
    for size in range(0, max(n - 1, 0)):
        for mask in _masks_of_popcount(n, size):
            if mask & avoid:
                continue
            keep = full & ~mask
            if _component_count(adj, keep) < 2:
                continue
            comp = 1 << u
            frontier = comp
            reached = False
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = adj_cut[low.bit_length() - 1] & keep & ~comp
                if new >> v & 1:
                    reached = True
                    break
                comp |= new
                frontier |= new
            if not reached:
                yield VertexSet(mask, n)


def is_minimally_tough_by_criterion(g: Graph) -> tuple[MinToughVerdict, list[EdgeWitness]]:
    """Decide via the per-edge criterion; returns full per-edge witnesses."""
    if g.is_complete() or g.is_edgeless():
        return MinToughVerdict(MinToughStatus.TRIVIALLY_MIN_TOUGH, toughness(g)), []
    t = toughness(g)
    threshold = 2 * t + 1
    witnesses = []
    failing: tuple[int, int] | None = None
    for u, v in g.edges():
        kappa = local_connectivity(g, u, v)
        cond1 = kappa < threshold
        hit = _cond2_scan(g, t, u, v)
        cond2 = hit is not None
        witnesses.append(
            EdgeWitness((u, v), kappa, cond1, cond2, VertexSet(hit[0], g.n) if hit else None)
        )
        if not cond1 and not cond2 and failing is None:
            failing = (u, v)
    if failing is not None:
        return MinToughVerdict(MinToughStatus.NOT_MIN_TOUGH, t, failing), witnesses
    return MinToughVerdict(MinToughStatus.NON_TRIVIALLY_MIN_TOUGH, t), witnesses


def is_nontrivially_minimally_tough(g: Graph, method: str = "criterion") -> bool:
    """Fast boolean: connected, non-complete, minimally tough.

    The criterion route short-circuits on the first failing edge and skips
    the cond2 sweep whenever cond1 already holds.
    """
    if g.is_complete() or g.is_edgeless():
        return False
    t = toughness(g)
    if t == 0:
        return False
    if method == "definition":
        return all(toughness(delete_edge(g, u, v)) < t for u, v in g.edges())
    if method != "criterion":
        raise ValueError(f"unknown method {method!r}")
    threshold = 2 * t + 1
    for u, v in g.edges():
        if local_connectivity(g, u, v) < threshold:
            continue
        if _cond2_scan(g, t, u, v) is None:
            return False
    return True


# -- dominating edges ----------------------------------------------------------


@dataclass(frozen=True)
class DominatingEdgeReport:
    """An edge uv with N(u) u N(v) = V, certified by three routes."""

    edge: tuple[int, int]
    via_neighborhoods: bool
    via_separators: bool
    via_co_distance: bool


def dominating_edges(g: Graph) -> list[DominatingEdgeReport]:
    """All dominating edges; the three detection routes are evaluated
    independently for every edge and asserted equal."""
    full = g.full_mask
    sep_masks = [s.bits for s in iterate_separators(g)]
    co_dist = distances(complement(g))
    out = []
    for u, v in g.edges():
        uv = (1 << u) | (1 << v)
        via_n = (g.adj[u] | g.adj[v]) == full
        via_s = all(mask & uv for mask in sep_masks)
        via_d = co_dist.distance(u, v) >= 3
        assert via_n == via_s == via_d, f"dominating-edge routes disagree on {(u, v)}"
        if via_n:
            out.append(DominatingEdgeReport((u, v), via_n, via_s, via_d))
    return out


def universal_vertices(g: Graph) -> VertexSet:
    full = g.full_mask
    bits = 0
    for v in range(g.n):
        if g.adj[v] == full ^ (1 << v):
            bits |= 1 << v
    return VertexSet(bits, g.n)


# -- shortcuts and spot checks ---------------------------------------------------


def check_2t_regular_shortcut(g: Graph) -> MinToughVerdict | None:
    """If g is regular of degree exactly ceil(2t), it is minimally tough.

    Returns the implied verdict, or None when the shortcut does not apply
    (irregular, complete, or degree mismatch).
    """
    if g.n == 0 or g.is_complete():
        return None
    degs = set(g.degrees())
    if len(degs) != 1:
        return None
    d = degs.pop()
    t = toughness(g)
    if math.ceil(2 * t) != d:
        return None
    if g.is_edgeless():
        return MinToughVerdict(MinToughStatus.TRIVIALLY_MIN_TOUGH, t)
    return MinToughVerdict(MinToughStatus.NON_TRIVIALLY_MIN_TOUGH, t)


def kriesell_check(g: Graph) -> bool:
    """Does a minimally tough graph have a vertex of degree ceil(2t)?

    Raises on inputs that are not non-trivially minimally tough (the
    conjecture is about finite positive toughness).
    """
    t = toughness(g)
    if not isinstance(t, Fraction) or t <= 0:
        raise ValueError("kriesell check needs finite positive toughness")
    if not is_nontrivially_minimally_tough(g):
        raise ValueError("input is not minimally tough")
    return math.ceil(2 * t) in g.degrees()


@dataclass(frozen=True)
class JoinConditionReport:
    """Evaluated facts for the join theorem on G = g1 * g2.

    When the premises hold (G non-trivially minimally tough and g1 holds a
    maximum-degree vertex of G), the theorem forces g2 to be
    ceil(2*t2)-regular with ceil(2t) = ceil(2*t2) + |V(g1)|.
    """

    join_graph: Graph
    minimally_tough: bool
    toughness: Toughness
    g1_holds_max_degree: bool
    g2_toughness: Toughness
    g2_regular: bool
    g2_degree: int | None
    ceil_identity: bool | None
    premises_hold: bool
    conclusion_holds: bool | None


def check_join_condition(g1: Graph, g2: Graph) -> JoinConditionReport:
    from .graphs import join

    if g1.n == 0 or g2.n == 0:
        raise ValueError("join condition needs two non-empty factors")
    g = join(g1, g2)
    mintough = is_nontrivially_minimally_tough(g)
    t = toughness(g)
    degs = g.degrees()
    max_deg = max(degs)
    g1_max = any(degs[v] == max_deg for v in range(g1.n))
    t2 = toughness(g2)
    g2_degs = set(g2.degrees())
    g2_regular = len(g2_degs) == 1
    g2_degree = g2_degs.pop() if g2_regular else None
    premises = mintough and g1_max
    if isinstance(t, Fraction) and isinstance(t2, Fraction):
        ceil_identity = math.ceil(2 * t) == math.ceil(2 * t2) + g1.n
    else:
        ceil_identity = None
    if premises:
        conclusion = (
            g2_regular
            and isinstance(t2, Fraction)
            and g2_degree == math.ceil(2 * t2)
            and ceil_identity is True
        )
    else:
        conclusion = None
    return JoinConditionReport(
        join_graph=g,
        minimally_tough=mintough,
        toughness=t,
        g1_holds_max_degree=g1_max,
        g2_toughness=t2,
        g2_regular=g2_regular,
        g2_degree=g2_degree,
        ceil_identity=ceil_identity,
        premises_hold=premises,
        conclusion_holds=conclusion,
    )


def classify_universal_vertex_graph(g: Graph) -> FamilySpec:
    """Name a minimally tough graph with a universal vertex and 0 < t <= 3/2.

    Star K_{1,n-1} when t <= 1/2, wheel (hub + rim cycle) when t > 1; the
    range (1/2, 1] is impossible for conforming inputs.
    """
    from .canon import canonical_code

    if not universal_vertices(g).bits:
        raise ValueError("no universal vertex")
    t = toughness(g)
    if not isinstance(t, Fraction) or not 0 < t <= Fraction(3, 2):
        raise ValueError("toughness outside (0, 3/2]")
    if not is_nontrivially_minimally_tough(g):
        raise ValueError("input is not minimally tough")
    if t <= Fraction(1, 2):
        spec = FamilySpec(Family.STAR, (g.n - 1,))
    elif t > 1:
        spec = FamilySpec(Family.WHEEL, (g.n - 1,))
    else:
        raise ValueError(
            "no minimally tough graph with a universal vertex has toughness in (1/2, 1]"
        )
    assert canonical_code(g) == canonical_code(make_named(spec))
    return spec


# -- serialization ----------------------------------------------------------------


def verdict_to_json(g: Graph, verdict: MinToughVerdict, witnesses: list[EdgeWitness] = ()) -> dict:
    from .graph6 import write_graph6

    record: dict = {
        "graph6": write_graph6(g),
        "status": verdict.status.value,
        "toughness": format_toughness(verdict.toughness),
        "failing_edge": list(verdict.failing_edge) if verdict.failing_edge else None,
        "witnesses": [
            {
                "edge": list(w.edge),
                "kappa": w.kappa,
                "cond1": w.cond1,
                "cond2": w.cond2,
                "separator": sorted(w.separator) if w.separator is not None else None,
            }
            for w in witnesses
        ],
    }
    return record
