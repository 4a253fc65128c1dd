"""Constructors for the named graph families the laboratory talks about.

A FamilySpec both *builds* a graph (make_named) and *names* an isomorphism
class (family identification returns FamilySpec values).  Parameter
conventions:

  complete n            K_n, n >= 0
  path n                P_n on n >= 1 vertices
  cycle n               C_n, n >= 3
  star l                K_{1,l}, l >= 1; centre is vertex 0
  doublestar k,l        S_{k,l}: two adjacent centres with k and l leaves,
                        1 <= k <= l
  triplestar a,b,c      S_{a,b,c}: a triangle of centres with a/b/c leaves,
                        1 <= a <= b <= c
  multipartite n1..nk   complete multipartite, parts ascending, each >= 1
  turan n,k             Turan graph T_{n,k}: complete multipartite on n
                        vertices with k parts as equal as possible
                        (sizes floor(n/k) and ceil(n/k), ascending)
  wheel l               hub joined to a cycle of length l, l >= 4
                        (l+1 vertices; hub is the last vertex)
  net                   triangle with one pendant at each corner (= S_{1,1,1})
  conet                 complement of the net
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, complement, join


class Family(Enum):
    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    DOUBLE_STAR = "doublestar"
    TRIPLE_STAR = "triplestar"
    COMPLETE_MULTIPARTITE = "multipartite"
    TURAN = "turan"
    WHEEL = "wheel"
    NET = "net"
    CO_NET = "conet"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _validate(self.family, self.params)

    def __str__(self) -> str:
        if self.params:
            return f"{self.family.value}:{','.join(map(str, self.params))}"
        return self.family.value


def _validate(family: Family, params: tuple[int, ...]) -> None:
    def need(count: int) -> None:
        if len(params) != count:
            raise ValueError(f"{family.value} takes {count} parameter(s), got {len(params)}")

    if family is Family.COMPLETE:
        need(1)
        if params[0] < 0:
            raise ValueError("complete: n must be >= 0")
    elif family is Family.PATH:
        need(1)
        if params[0] < 1:
            raise ValueError("path: n must be >= 1")
    elif family is Family.CYCLE:
        need(1)
        if params[0] < 3:
            raise ValueError("cycle: n must be >= 3")
    elif family is Family.STAR:
        need(1)
        if params[0] < 1:
            raise ValueError("star: l must be >= 1")
    elif family is Family.DOUBLE_STAR:
        need(2)
        k, l = params
        if not 1 <= k <= l:
            raise ValueError("doublestar: need 1 <= k <= l")
    elif family is Family.TRIPLE_STAR:
        need(3)
        a, b, c = params
        if not (1 <= a <= b <= c):
            raise ValueError("triplestar: need 1 <= a <= b <= c")
    elif family is Family.COMPLETE_MULTIPARTITE:
        if not params:
            raise ValueError("multipartite: at least one part required")
        if any(p < 1 for p in params):
            raise ValueError("multipartite: parts must be >= 1")
        if list(params) != sorted(params):
            raise ValueError("multipartite: parts must be ascending")
    elif family is Family.TURAN:
        need(2)
        n, k = params
        if not 1 <= k <= n:
            raise ValueError("turan: need 1 <= k <= n")
    elif family is Family.WHEEL:
        need(1)
        if params[0] < 4:
            raise ValueError("wheel: rim length must be >= 4")
    elif family in (Family.NET, Family.CO_NET):
        need(0)
    else:  # pragma: no cover
        raise ValueError(f"unknown family {family}")


def turan_parts(n: int, k: int) -> tuple[int, ...]:
    """Part sizes of the Turan graph T_{n,k}, ascending."""
    if not 1 <= k <= n:
        raise ValueError("turan: need 1 <= k <= n")
    q, r = divmod(n, k)
    return (q,) * (k - r) + (q + 1,) * r


def complete_multipartite(parts: tuple[int, ...]) -> Graph:
    n = sum(parts)
    boundaries = []
    start = 0
    for p in parts:
        boundaries.append((start, start + p))
        start += p
    full = (1 << n) - 1
    rows = []
    for lo, hi in boundaries:
        part_mask = ((1 << hi) - 1) ^ ((1 << lo) - 1)
        for _ in range(lo, hi):
            rows.append(full ^ part_mask)
    return Graph(n, tuple(rows))


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _double_star(k: int, l: int) -> Graph:
    # centres 0 and 1; k leaves on 0, l leaves on 1
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(k)]
    edges += [(1, 2 + k + i) for i in range(l)]
    return Graph.from_edges(2 + k + l, edges)


def _triple_star(a: int, b: int, c: int) -> Graph:
    # centres 0,1,2 forming a triangle
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for centre, cnt in ((0, a), (1, b), (2, c)):
        for _ in range(cnt):
            edges.append((centre, nxt))
            nxt += 1
    return Graph.from_edges(3 + a + b + c, edges)


def make_named(spec: FamilySpec) -> Graph:
    f, p = spec.family, spec.params
    if f is Family.COMPLETE:
        return Graph.complete(p[0])
    if f is Family.PATH:
        return _path(p[0])
    if f is Family.CYCLE:
        return _cycle(p[0])
    if f is Family.STAR:
        # star as multipartite (1, l): centre first
        return complete_multipartite((1, p[0]))
    if f is Family.DOUBLE_STAR:
        return _double_star(*p)
    if f is Family.TRIPLE_STAR:
        return _triple_star(*p)
    if f is Family.COMPLETE_MULTIPARTITE:
        return complete_multipartite(p)
    if f is Family.TURAN:
        return complete_multipartite(turan_parts(*p))
    if f is Family.WHEEL:
        return join(_cycle(p[0]), Graph.complete(1))
    if f is Family.NET:
        return _triple_star(1, 1, 1)
    if f is Family.CO_NET:
        return complement(_triple_star(1, 1, 1))
    raise ValueError(f"unknown family {f}")  # pragma: no cover


_ALIASES = {
    "complete": Family.COMPLETE,
    "k": Family.COMPLETE_MULTIPARTITE,
    "multipartite": Family.COMPLETE_MULTIPARTITE,
    "path": Family.PATH,
    "p": Family.PATH,
    "cycle": Family.CYCLE,
    "c": Family.CYCLE,
    "star": Family.STAR,
    "doublestar": Family.DOUBLE_STAR,
    "s": Family.DOUBLE_STAR,
    "triplestar": Family.TRIPLE_STAR,
    "turan": Family.TURAN,
    "t": Family.TURAN,
    "wheel": Family.WHEEL,
    "w": Family.WHEEL,
    "net": Family.NET,
    "conet": Family.CO_NET,
}


def parse_family_spec(text: str) -> FamilySpec:
    """Parse CLI family strings like ``turan:8,4``, ``K:1,2,2`` or ``net``."""
    name, _, rest = text.strip().partition(":")
    key = name.strip().lower()
    if key not in _ALIASES:
        raise ValueError(f"unknown family {name!r}")
    family = _ALIASES[key]
    if rest.strip():
        try:
            params = tuple(int(tok) for tok in rest.split(","))
        except ValueError as exc:
            raise ValueError(f"bad parameters in family spec {text!r}") from exc
    else:
        params = ()
    return FamilySpec(family, params)
