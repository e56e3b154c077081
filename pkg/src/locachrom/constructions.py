"""Constructive colorings and bound formulas for corona products.

Every construction here is re-verified against the locating engine before
it is returned; an unverifiable construction raises, it is never silently
handed back.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .graphs import (
    CoronaMap,
    Graph,
    InputError,
    connected_components,
    corona,
    generate,
    induced_subgraph,
    join_with_k1,
    subgraph_isomorphic,
)
from .locating import (
    DEFAULT_BUDGET,
    ChiLResult,
    Coloring,
    chi_L,
    locating_lower_bound,
    verify,
)


class ConstructionError(RuntimeError):
    """A construction failed verification; indicates a bug or bad data."""


@dataclass(frozen=True)
class BoundsReport:
    """Lower/upper bounds with machine-readable justification tags."""

    lower: int
    upper: int
    lower_tag: str
    upper_tag: str
    tags: dict
    indeterminate: bool = False

    def to_json_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "lower_tag": self.lower_tag,
            "upper_tag": self.upper_tag,
            "tags": dict(self.tags),
            "indeterminate": self.indeterminate,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed coloring together with its verification status."""

    source: str
    coloring: Coloring
    colors_used: int
    verified: bool

    def to_json_dict(self) -> dict:
        return {
            "source": self.source,
            "k": self.colors_used,
            "colors": list(self.coloring.colors),
            "verified": self.verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass(frozen=True)
class Theorem2Fixture:
    """The certified 5-coloring of P3 (.) (P2 u C4) with its code table."""

    graph: Graph
    corona_map: CoronaMap
    result: ConstructionResult
    labels: tuple
    expected_codes: dict


def _checked_result(source: str, g: Graph, coloring: Coloring) -> ConstructionResult:
    report = verify(g, coloring)
    if not report.locating:
        raise ConstructionError(
            f"{source} construction failed verification: {report.witness}"
        )
    return ConstructionResult(source, coloring, coloring.k, True)


def _interval(result: ChiLResult) -> tuple:
    if result.value is not None:
        return result.value, result.value
    return result.interval


def corona_bounds(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> BoundsReport:
    """Sandwich bounds for the corona product.

    Lower: the largest locating-chromatic number among the joins of H's
    components with one apex vertex. Upper: that of G plus the sum of
    (each join value minus one). Both sides use the exact solver.
    """
    component_joins = [
        join_with_k1(induced_subgraph(h, comp))
        for comp in connected_components(h)
    ]
    join_vals = [_interval(chi_L(q, budget)) for q in component_joins]
    g_val = _interval(chi_L(g, budget))

    lower = max(lo for lo, _ in join_vals)
    upper = g_val[1] + sum(hi - 1 for _, hi in join_vals)
    indeterminate = g_val[0] != g_val[1] or any(lo != hi for lo, hi in join_vals)
    tags = {"join-component-max": lower, "construction-lemma4": upper}
    return BoundsReport(
        lower, upper, "join-component-max", "construction-lemma4", tags,
        indeterminate,
    )


def corona_upper_coloring(
    g: Graph, h: Graph, f: Coloring, c_list: list
) -> ConstructionResult:
    """Assemble the block-offset coloring of G (.) H from given parts.

    ``f`` must be a verified locating coloring of G; ``c_list[t-1]`` a
    verified locating coloring of the t-th component of H joined with one
    apex, in which the apex (the highest-indexed vertex) receives the
    highest color. The copies of component t are recolored by a fixed
    offset so the blocks use disjoint color ranges above f's.
    """
    if not verify(g, f).locating:
        raise InputError("f is not a locating coloring of G")
    comps = connected_components(h)
    if len(c_list) != len(comps):
        raise InputError(
            f"expected {len(comps)} component colorings, got {len(c_list)}"
        )
    block_sizes = []
    local_index = []
    for t, (comp, c_t) in enumerate(zip(comps, c_list), start=1):
        joined = join_with_k1(induced_subgraph(h, comp))
        if not verify(joined, c_t).locating:
            raise InputError(f"component coloring {t} is not locating")
        apex = joined.n - 1
        if c_t.colors[apex] != c_t.k:
            raise InputError(
                f"component coloring {t} must give the apex the highest "
                f"color {c_t.k}, got {c_t.colors[apex]}"
            )
        block_sizes.append(c_t.k)
        local_index.append({v: i for i, v in enumerate(comp)})

    l = f.k
    offsets = [0] * len(comps)
    for t in range(1, len(comps)):
        offsets[t] = offsets[t - 1] + block_sizes[t - 1] - 1

    product, cmap = corona(g, h)
    colors = [0] * product.n
    for u, idx in enumerate(cmap.centers):
        colors[idx] = f.colors[u]
    for sat in cmap.satellites:
        t = sat.t - 1
        c_t = c_list[t]
        colors[sat.idx] = c_t.colors[local_index[t][sat.h]] + l + offsets[t]

    total = l + sum(m - 1 for m in block_sizes)
    coloring = Coloring(total, tuple(colors))
    return _checked_result("corona-upper", product, coloring)


def optimal_upper_parts(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> tuple:
    """Solver-optimal inputs for :func:`corona_upper_coloring`.

    Returns a locating coloring of G and one of each component-join of H,
    each with the apex permuted to the highest color. Color permutation
    renames the classes and permutes every code coordinate-wise, so the
    locating property is preserved.
    """
    f = chi_L(g, budget)
    if f.value is None:
        raise ConstructionError("budget exhausted while coloring G")
    c_list = []
    for comp in connected_components(h):
        joined = join_with_k1(induced_subgraph(h, comp))
        result = chi_L(joined, budget)
        if result.value is None:
            raise ConstructionError("budget exhausted on a component join")
        cert = result.certificate
        apex_color = cert.colors[joined.n - 1]
        swap = {apex_color: cert.k, cert.k: apex_color}
        c_list.append(
            Coloring(cert.k, tuple(swap.get(c, c) for c in cert.colors))
        )
    return f.certificate, c_list


# Vertex labels of the Theorem-2 fixture: G = P3 on {u, v, w}, H = P2 u C4
# on {a, b, p, q, r, s} with edges ab, pq, ps, qr, rs.
_T2_CENTERS = ("u", "v", "w")
_T2_COPY = ("a", "b", "p", "q", "r", "s")

_T2_COLORS = {
    "(u)": 5, "(v)": 1, "(w)": 3,
    "(u,a)": 2, "(u,b)": 4, "(u,p)": 1, "(u,q)": 2, "(u,r)": 3, "(u,s)": 4,
    "(v,a)": 2, "(v,b)": 4, "(v,p)": 3, "(v,q)": 2, "(v,r)": 4, "(v,s)": 5,
    "(w,a)": 2, "(w,b)": 4, "(w,p)": 1, "(w,q)": 4, "(w,r)": 2, "(w,s)": 5,
}

_T2_CODES = {
    "(u)": (1, 1, 1, 1, 0), "(v)": (0, 1, 1, 1, 1), "(w)": (1, 1, 0, 1, 1),
    "(u,a)": (2, 0, 2, 1, 1), "(v,a)": (1, 0, 2, 1, 2), "(w,a)": (2, 0, 1, 1, 2),
    "(u,b)": (2, 1, 2, 0, 1), "(v,b)": (1, 1, 2, 0, 2), "(w,b)": (2, 1, 1, 0, 2),
    "(u,p)": (0, 1, 2, 1, 1), "(v,p)": (1, 1, 0, 2, 1), "(w,p)": (0, 2, 1, 1, 1),
    "(u,q)": (1, 0, 1, 2, 1), "(v,q)": (1, 0, 1, 1, 2), "(w,q)": (1, 1, 1, 0, 2),
    "(u,r)": (2, 1, 0, 1, 1), "(v,r)": (1, 1, 2, 0, 1), "(w,r)": (2, 0, 1, 1, 1),
    "(u,s)": (1, 2, 1, 0, 1), "(v,s)": (1, 2, 1, 1, 0), "(w,s)": (1, 1, 1, 2, 0),
}


def fixture_theorem2() -> Theorem2Fixture:
    """Build and certify the 5-colored P3 (.) (P2 u C4) reference instance."""
    g = generate("path", 3)
    # H = P2 on {a=0, b=1} union C4 on {p=2, q=3, r=4, s=5}.
    h = Graph(6, frozenset({(0, 1), (2, 3), (2, 5), (3, 4), (4, 5)}))
    product, cmap = corona(g, h)

    labels = [""] * product.n
    for u, idx in enumerate(cmap.centers):
        labels[idx] = f"({_T2_CENTERS[u]})"
    for sat in cmap.satellites:
        labels[sat.idx] = f"({_T2_CENTERS[sat.g]},{_T2_COPY[sat.h]})"

    colors = tuple(_T2_COLORS[labels[v]] for v in range(product.n))
    result = _checked_result("theorem2", product, Coloring(5, colors))
    return Theorem2Fixture(product, cmap, result, tuple(labels), dict(_T2_CODES))


def empty_corona_coloring(g: Graph, k: int) -> ConstructionResult:
    """(k+1)-coloring of G (.) the edgeless graph on k vertices.

    Requires k >= 2 and 2 <= |V(G)| <= k+1. Center i gets color i; the
    j-th pendant of center i gets color j, except j = i which gets k+1.
    Together with the endpoint lower bound this certifies the value k+1.
    """
    if k < 2:
        # k = 1 genuinely fails: two pendants on an edge form a path on 4
        # vertices, whose value is 3, not k+1 = 2.
        raise InputError("construction requires k >= 2")
    if g.n < 2:
        raise InputError("construction requires |V(G)| >= 2")
    if g.n > k + 1:
        raise InputError(
            f"construction requires |V(G)| <= k+1, got n={g.n}, k={k}"
        )
    product, cmap = corona(g, generate("empty", k))
    colors = [0] * product.n
    for u, idx in enumerate(cmap.centers):
        colors[idx] = u + 1
    for sat in cmap.satellites:
        # For the edgeless H the component index t is the 1-based pendant
        # number within the copy.
        colors[sat.idx] = k + 1 if sat.t == sat.g + 1 else sat.t
    coloring = Coloring(k + 1, tuple(colors))
    return _checked_result("empty-corona", product, coloring)


def star_corona_chi_L(n: int) -> int:
    """Closed form ceil(sqrt(n)) + 1 for the star-with-pendants product."""
    if n < 4:
        raise InputError("star construction requires n >= 4")
    return math.isqrt(n - 1) + 2


def star_corona_coloring(n: int) -> ConstructionResult:
    """Optimal coloring of the order-n star with one pendant per vertex.

    Uses l = ceil(sqrt(n)) + 1 colors. Leaves are colored in blocks of
    l-1; pendants below a block count down through the palette, skipping
    the block color.
    """
    l = star_corona_chi_L(n)
    star = generate("star", n)
    product, cmap = corona(star, generate("empty", 1))
    pendant = {sat.g: sat.idx for sat in cmap.satellites}

    colors = [0] * product.n
    colors[0] = 1                 # star center x
    colors[pendant[0]] = l        # its pendant y
    for i in range(1, n):
        t = (i + l - 2) // (l - 1)          # block index, 1-based
        j = i - (t - 1) * (l - 1)           # position within the block
        colors[i] = t + 1
        colors[pendant[i]] = l - j + 1 if l - j > t else l - j
    coloring = Coloring(l, tuple(colors))
    return _checked_result("star-corona", product, coloring)


def tree_empty_corona_bounds(
    t: Graph, m: int, budget: int = DEFAULT_BUDGET
) -> BoundsReport:
    """Bounds m+1 <= value <= chi_L(T) + m for a tree with edgeless copies."""
    if m < 1:
        raise InputError("m must be >= 1")
    _require_tree(t)
    result = chi_L(t, budget)
    lo, hi = _interval(result)
    lower = m + 1
    upper = hi + m
    tags = {"m-plus-1": lower, "chiL-plus-m": upper}
    return BoundsReport(
        lower, upper, "m-plus-1", "chiL-plus-m", tags, lo != hi
    )


def _require_tree(t: Graph):
    from .graphs import is_connected

    if t.n < 2 or not is_connected(t) or t.num_edges != t.n - 1:
        raise InputError("expected a tree with at least 2 vertices")


def pendant_tree_classifier(
    t: Graph, g3: Graph, budget: int = DEFAULT_BUDGET
) -> int:
    """Value of chi_L for a one-pendant-per-vertex extension of a tree.

    For trees with locating-chromatic number 3, the extension has value 3
    exactly when the tree embeds into P6 or into the externally supplied
    graph g3, and 4 otherwise. When the extension is small enough the
    classification is cross-checked against the exact solver; a
    disagreement (typically a wrong g3 file) raises.
    """
    _require_tree(t)
    base = chi_L(t, budget)
    if base.value != 3:
        raise InputError(
            f"classifier requires a tree with value 3, solver found {base.value}"
        )
    p6 = generate("path", 6)
    value = 3 if subgraph_isomorphic(t, p6) or subgraph_isomorphic(t, g3) else 4
    if 2 * t.n <= 14:
        product, _ = corona(t, generate("empty", 1))
        exact = chi_L(product, budget)
        if exact.value is not None and exact.value != value:
            raise ConstructionError(
                f"classifier says {value} but the solver found {exact.value}; "
                "check the supplied g3 graph"
            )
    return value
