"""Locating colorings: color codes, verification, lower bounds, and an
exact solver for the locating-chromatic number with a brute-force oracle.

A k-coloring is *proper* when no edge is monochromatic and *locating* when
additionally every vertex has a distinct color code, the vector of hop
distances to the k color classes. The locating-chromatic number is the
least k admitting a locating k-coloring.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass

from .graphs import (
    Graph,
    InputError,
    SizeLimitError,
    all_pairs_distances,
    is_connected,
)

#: Default search budget, counted in search-tree nodes.
DEFAULT_BUDGET = 10**8

#: Hard cap for the brute-force oracle.
BRUTE_FORCE_LIMIT = 8

FOUND = "found"
INFEASIBLE = "infeasible"
BUDGET_EXHAUSTED = "budget-exhausted"


class DisconnectedGraphError(ValueError):
    """Locating operations are only defined on connected graphs."""


@dataclass(frozen=True)
class Coloring:
    """A surjective vertex coloring with colors 1..k."""

    k: int
    colors: tuple

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"color count must be positive, got {self.k}")
        if any(not (1 <= c <= self.k) for c in self.colors):
            raise InputError(f"colors must lie in 1..{self.k}")
        if len(set(self.colors)) != self.k:
            raise InputError("coloring must use every color in 1..k")

    def color_classes(self) -> list:
        classes = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            classes[c - 1].append(v)
        return [tuple(cls) for cls in classes]

    def to_json_dict(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Coloring":
        return cls(int(data["k"]), tuple(int(c) for c in data["colors"]))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a locating-coloring check with a re-checkable witness."""

    proper: bool
    locating: bool
    witness: dict | None

    def to_json_dict(self) -> dict:
        return {
            "verdict": {"proper": self.proper, "locating": self.locating},
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass(frozen=True)
class SearchResult:
    status: str
    coloring: Coloring | None
    nodes: int


@dataclass(frozen=True)
class ChiLResult:
    """Exact value with certificate, or an interval on budget exhaustion."""

    value: int | None
    certificate: Coloring | None
    interval: tuple | None = None

    def to_json_dict(self) -> dict:
        if self.value is not None:
            return {
                "value": self.value,
                "certificate": self.certificate.to_json_dict(),
            }
        return {"value": None, "interval": list(self.interval)}


def _require_connected(g: Graph):
    if not is_connected(g):
        raise DisconnectedGraphError(
            "color codes are undefined on a disconnected graph"
        )


def _check_coloring_size(g: Graph, c: Coloring):
    if len(c.colors) != g.n:
        raise InputError(
            f"coloring has {len(c.colors)} entries for a graph of order {g.n}"
        )


def color_codes(g: Graph, c: Coloring) -> list:
    """Per-vertex distance vectors to the k color classes."""
    _require_connected(g)
    _check_coloring_size(g, c)
    dist = all_pairs_distances(g)
    classes = c.color_classes()
    return [
        tuple(min(dist[v][u] for u in cls) for cls in classes)
        for v in range(g.n)
    ]


def verify(g: Graph, c: Coloring) -> VerificationReport:
    """Check properness and code distinctness; failures carry a witness."""
    _require_connected(g)
    _check_coloring_size(g, c)
    for u, v in g.sorted_edges():
        if c.colors[u] == c.colors[v]:
            witness = {
                "type": "monochromatic-edge",
                "u": u,
                "v": v,
                "color": c.colors[u],
            }
            return VerificationReport(False, False, witness)
    codes = color_codes(g, c)
    seen = {}
    for v, code in enumerate(codes):
        if code in seen:
            witness = {
                "type": "code-collision",
                "u": seen[code],
                "v": v,
                "code": list(code),
            }
            return VerificationReport(True, False, witness)
        seen[code] = v
    return VerificationReport(True, True, None)


def twin_classes(g: Graph) -> list:
    """Maximal classes of vertices with identical distances to the rest.

    u and v are twins when d(u, w) = d(v, w) for every w outside {u, v};
    any locating coloring must give a class's members pairwise distinct
    colors.
    """
    _require_connected(g)
    dist = all_pairs_distances(g)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if all(
                dist[u][w] == dist[v][w]
                for w in range(g.n)
                if w != u and w != v
            ):
                parent[find(v)] = find(u)

    groups = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(grp) for grp in groups.values()), key=lambda t: t[0])


def locating_lower_bound(g: Graph) -> tuple:
    """Best known lower bound with the tag of the binding rule.

    Rules: the trivial bound 2; one more than the largest number of
    endpoints sharing a neighbor; the largest twin class, plus one when
    some outside vertex is adjacent to the whole class.
    """
    _require_connected(g)
    if g.n < 2:
        raise InputError("lower bound requires order >= 2")

    best, tag = 2, "trivial-order"

    endpoints = {v for v in range(g.n) if g.degree(v) == 1}
    for v in range(g.n):
        k = sum(1 for w in g.adjacency[v] if w in endpoints)
        if k + 1 > best:
            best, tag = k + 1, "endpoint-corollary"

    for cls in twin_classes(g):
        if len(cls) < 2:
            continue
        bound = len(cls)
        members = set(cls)
        if any(
            members <= set(g.adjacency[v])
            for v in range(g.n)
            if v not in members
        ):
            bound += 1
        if bound > best:
            best, tag = bound, "twin-class"

    return best, tag


class _Budget(Exception):
    pass


def find_locating_coloring(
    g: Graph, k: int, budget: int = DEFAULT_BUDGET
) -> SearchResult:
    """Search for a locating coloring using exactly k colors.

    Deterministic backtracking: vertices in descending-degree order,
    colors introduced first-occurrence-ordered to break the color
    permutation symmetry. Prunes on edge conflicts and twin conflicts;
    full code distinctness is only decidable on complete assignments.
    """
    _require_connected(g)
    if not (1 <= k <= g.n):
        raise InputError(f"need 1 <= k <= {g.n}, got {k}")

    twins = twin_classes(g)
    if any(len(cls) > k for cls in twins):
        return SearchResult(INFEASIBLE, None, 0)

    n = g.n
    dist = all_pairs_distances(g)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    earlier_neighbors = [
        [w for w in g.adjacency[v] if pos[w] < pos[v]] for v in range(n)
    ]
    twin_of = [None] * n
    for cls in twins:
        for v in cls:
            twin_of[v] = cls
    earlier_twins = [
        [w for w in twin_of[v] if pos[w] < pos[v] and w != v] for v in range(n)
    ]

    assignment = [0] * n
    members = [[] for _ in range(k + 1)]
    nodes = 0

    def codes_distinct() -> bool:
        seen = set()
        for v in range(n):
            row = dist[v]
            code = tuple(
                min(row[u] for u in members[c]) for c in range(1, k + 1)
            )
            if code in seen:
                return False
            seen.add(code)
        return True

    def search(i: int, used: int):
        nonlocal nodes
        if i == n:
            if used == k and codes_distinct():
                return tuple(assignment)
            return None
        v = order[i]
        # Remaining vertices must still be able to introduce missing colors.
        if used + (n - i) < k:
            return None
        limit = min(k, used + 1)
        for color in range(1, limit + 1):
            nodes += 1
            if nodes > budget:
                raise _Budget()
            if any(assignment[w] == color for w in earlier_neighbors[v]):
                continue
            if any(assignment[w] == color for w in earlier_twins[v]):
                continue
            assignment[v] = color
            members[color].append(v)
            found = search(i + 1, max(used, color))
            members[color].pop()
            assignment[v] = 0
            if found is not None:
                return found
        return None

    try:
        found = search(0, 0)
    except _Budget:
        return SearchResult(BUDGET_EXHAUSTED, None, nodes)
    if found is None:
        return SearchResult(INFEASIBLE, None, nodes)
    return SearchResult(FOUND, Coloring(k, found), nodes)


@functools.lru_cache(maxsize=None)
def chi_L(g: Graph, budget: int = DEFAULT_BUDGET) -> ChiLResult:
    """Exact locating-chromatic number with a verifiable certificate.

    Iterates k upward from the lower bound; feasibility is not assumed
    monotone in k. Always terminates by k = n since the all-distinct
    coloring is locating. On budget exhaustion at some k the result is
    the interval [k, n].
    """
    _require_connected(g)
    if g.n < 2:
        raise InputError("locating-chromatic number requires order >= 2")
    start, _ = locating_lower_bound(g)
    for k in range(start, g.n + 1):
        result = find_locating_coloring(g, k, budget)
        if result.status == FOUND:
            return ChiLResult(k, result.coloring)
        if result.status == BUDGET_EXHAUSTED:
            return ChiLResult(None, None, (k, g.n))
    raise AssertionError("unreachable: the all-distinct coloring is locating")


def brute_force_chi_L(g: Graph) -> int:
    """Oracle: exhaustive enumeration over proper colorings, k ascending.

    Improper colorings can never be locating, so restricting the
    enumeration to proper ones loses nothing. No ordering heuristics, no
    symmetry breaking; intended as an independent check of :func:`chi_L`
    on graphs with at most 8 vertices.
    """
    _require_connected(g)
    if g.n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(
            f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices"
        )
    n = g.n
    dist = all_pairs_distances(g)
    assignment = [0] * n

    def locating() -> bool:
        classes = {}
        for v, c in enumerate(assignment):
            classes.setdefault(c, []).append(v)
        codes = set()
        for v in range(n):
            row = dist[v]
            code = tuple(
                min(row[u] for u in classes[c]) for c in sorted(classes)
            )
            if code in codes:
                return False
            codes.add(code)
        return True

    def enumerate_proper(v: int, k: int) -> bool:
        if v == n:
            return len(set(assignment)) == k and locating()
        for color in range(1, k + 1):
            if any(assignment[w] == color for w in g.adjacency[v] if w < v):
                continue
            assignment[v] = color
            if enumerate_proper(v + 1, k):
                return True
        assignment[v] = 0
        return False

    for k in range(1, n + 1):
        if enumerate_proper(0, k):
            return k
    raise AssertionError("unreachable: k = n always succeeds")
