"""Simple undirected graphs: construction, standard families, products,
distances, components, subgraph containment, and a plain edge-list format.

Vertices are always labeled 0..n-1. All types are immutable; every
operation returns a fresh value.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

#: Sentinel distance for unreachable vertex pairs.
UNREACHABLE = -1

#: Guard for the exponential subgraph search.
SUBGRAPH_PATTERN_LIMIT = 64


class InputError(ValueError):
    """Invalid graph input (bad endpoint, loop, family parameter, ...)."""


class SizeLimitError(InputError):
    """An operation was invoked beyond its guarded size limit."""


class ParseError(ValueError):
    """Malformed edge-list text."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    ``edges`` holds normalized pairs (u, v) with u < v; no loops, no
    duplicates. Connectivity is not an invariant (see :func:`is_connected`).
    """

    n: int
    edges: frozenset

    @cached_property
    def adjacency(self) -> tuple:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)


class SatelliteRef(NamedTuple):
    """Provenance of one copied vertex in a corona product.

    ``g`` is the center it hangs off, ``t`` the 1-based component index of
    H, ``h`` the vertex of H it copies, ``idx`` its index in the product.
    """

    g: int
    t: int
    h: int
    idx: int


@dataclass(frozen=True)
class CoronaMap:
    """Labeling of corona-product vertices as centers or satellites."""

    centers: tuple
    satellites: tuple
    components: tuple

    def to_json_dict(self) -> dict:
        return {
            "centers": list(self.centers),
            "satellites": [
                {"g": s.g, "t": s.t, "h": s.h, "idx": s.idx}
                for s in self.satellites
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _normalize_edge(a: int, b: int) -> tuple:
    return (a, b) if a < b else (b, a)


def make_graph(n: int, edges: Iterable) -> Graph:
    """Build a simple graph, collapsing duplicate edges.

    Raises :class:`InputError` on loops or out-of-range endpoints.
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    normalized = set()
    for a, b in edges:
        if a == b:
            raise InputError(f"loop at vertex {a} is not allowed")
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"edge ({a}, {b}) out of range [0, {n})")
        normalized.add(_normalize_edge(a, b))
    return Graph(n, frozenset(normalized))


def generate(family: str, *params: int) -> Graph:
    """Generate a standard graph family.

    Families: ``path n``, ``cycle n`` (n >= 3), ``star n`` (n >= 2),
    ``complete n``, ``empty n``, ``double_star a b`` (a, b >= 1).
    """
    if family == "path":
        (n,) = params
        if n < 1:
            raise InputError("path requires n >= 1")
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise InputError("cycle requires n >= 3")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "star":
        (n,) = params
        if n < 2:
            raise InputError("star requires n >= 2")
        return make_graph(n, [(0, i) for i in range(1, n)])
    if family == "complete":
        (n,) = params
        if n < 1:
            raise InputError("complete requires n >= 1")
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "empty":
        (n,) = params
        if n < 0:
            raise InputError("empty requires n >= 0")
        return make_graph(n, [])
    if family == "double_star":
        a, b = params
        if a < 1 or b < 1:
            raise InputError("double_star requires a, b >= 1")
        # Centers 0 and 1; endpoints 2..a+1 on center 0, the rest on center 1.
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(a)]
        edges += [(1, 2 + a + i) for i in range(b)]
        return make_graph(2 + a + b, edges)
    raise InputError(f"unknown family {family!r}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint union; H's vertices are shifted up by |V(G)|."""
    edges = set(g.edges)
    edges.update((a + g.n, b + g.n) for a, b in h.edges)
    return Graph(g.n + h.n, frozenset(edges))


def join_with_k1(h: Graph) -> Graph:
    """H plus one new vertex (highest index) adjacent to all of V(H)."""
    apex = h.n
    edges = set(h.edges)
    edges.update((v, apex) for v in range(h.n))
    return Graph(h.n + 1, frozenset(edges))


def connected_components(g: Graph) -> list:
    """Components as sorted vertex tuples, ordered by smallest member.

    This order is the canonical component order used by every downstream
    construction.
    """
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = []
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Iterable) -> Graph:
    """Induced subgraph relabeled to 0..m-1 in ascending vertex order."""
    ordered = sorted(vertices)
    index = {v: i for i, v in enumerate(ordered)}
    edges = [
        (index[a], index[b]) for a, b in g.edges if a in index and b in index
    ]
    return make_graph(len(ordered), edges)


def corona(g: Graph, h: Graph) -> tuple:
    """Corona product G (.) H with a provenance map.

    Vertex numbering: centers 0..n-1 in G's order, then one copy of H per
    center in G-vertex order; inside a copy, vertices follow the canonical
    component order, ascending within each component.
    """
    if g.n < 1:
        raise InputError("corona requires |V(G)| >= 1")
    comps = connected_components(h)
    copy_order = [v for comp in comps for v in comp]
    comp_of = {}
    for t, comp in enumerate(comps, start=1):
        for v in comp:
            comp_of[v] = t

    edges = set(g.edges)
    satellites = []
    for u in range(g.n):
        base = g.n + u * h.n
        pos = {v: base + i for i, v in enumerate(copy_order)}
        for v in copy_order:
            edges.add(_normalize_edge(u, pos[v]))
            satellites.append(SatelliteRef(u, comp_of[v], v, pos[v]))
        for a, b in h.edges:
            edges.add(_normalize_edge(pos[a], pos[b]))

    product = Graph(g.n * (1 + h.n), frozenset(edges))
    cmap = CoronaMap(tuple(range(g.n)), tuple(satellites), tuple(comps))
    return product, cmap


def all_pairs_distances(g: Graph) -> list:
    """Hop distances by BFS from every vertex; UNREACHABLE for no path."""
    dist = []
    for start in range(g.n):
        row = [UNREACHABLE] * g.n
        row[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if row[w] == UNREACHABLE:
                    row[w] = row[v] + 1
                    queue.append(w)
        dist.append(row)
    return dist


def subgraph_isomorphic(pattern: Graph, host: Graph) -> bool:
    """True iff host contains a (not necessarily induced) copy of pattern."""
    if pattern.n > SUBGRAPH_PATTERN_LIMIT:
        raise SizeLimitError(
            f"pattern has {pattern.n} vertices, limit is {SUBGRAPH_PATTERN_LIMIT}"
        )
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return False

    # Order pattern vertices so each one (after the first of its component)
    # has a previously placed neighbor; anchors the backtracking early.
    order = []
    placed = set()
    remaining = set(range(pattern.n))
    while remaining:
        best = max(
            remaining,
            key=lambda v: (
                sum(1 for w in pattern.adjacency[v] if w in placed),
                pattern.degree(v),
                -v,
            ),
        )
        order.append(best)
        placed.add(best)
        remaining.discard(best)

    mapping = [-1] * pattern.n
    used = [False] * host.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        anchored = [mapping[w] for w in pattern.adjacency[p] if mapping[w] >= 0]
        for cand in range(host.n):
            if used[cand] or host.degree(cand) < pattern.degree(p):
                continue
            if all(host.has_edge(cand, a) for a in anchored):
                mapping[p] = cand
                used[cand] = True
                if extend(i + 1):
                    return True
                mapping[p] = -1
                used[cand] = False
        return False

    return extend(0)


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text: 'n <order>' then sorted 'e <u> <v>' lines."""
    lines = [f"n {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format; round-trips with :func:`serialize_graph`."""
    n = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise ParseError("duplicate 'n' line", line_no)
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("expected 'n <order>'", line_no)
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise ParseError("'e' line before 'n' line", line_no)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", line_no)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("endpoints must be integers", line_no) from None
            if u == v:
                raise ParseError(f"loop at vertex {u}", line_no)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"endpoint out of range [0, {n})", line_no)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", line_no)
    if n is None:
        raise ParseError("missing 'n' line", 1)
    return make_graph(n, edges)
