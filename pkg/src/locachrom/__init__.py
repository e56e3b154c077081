"""Locating-chromatic numbers of graphs, with corona-product support."""

from .graphs import (
    UNREACHABLE,
    CoronaMap,
    Graph,
    InputError,
    ParseError,
    SatelliteRef,
    SizeLimitError,
    all_pairs_distances,
    connected_components,
    corona,
    disjoint_union,
    generate,
    induced_subgraph,
    is_connected,
    join_with_k1,
    make_graph,
    parse_graph,
    serialize_graph,
    subgraph_isomorphic,
)
from .locating import (
    BUDGET_EXHAUSTED,
    DEFAULT_BUDGET,
    FOUND,
    INFEASIBLE,
    ChiLResult,
    Coloring,
    DisconnectedGraphError,
    SearchResult,
    VerificationReport,
    brute_force_chi_L,
    chi_L,
    color_codes,
    find_locating_coloring,
    locating_lower_bound,
    twin_classes,
    verify,
)
from .constructions import (
    BoundsReport,
    ConstructionError,
    ConstructionResult,
    Theorem2Fixture,
    corona_bounds,
    corona_upper_coloring,
    empty_corona_coloring,
    fixture_theorem2,
    optimal_upper_parts,
    pendant_tree_classifier,
    star_corona_chi_L,
    star_corona_coloring,
    tree_empty_corona_bounds,
)

__version__ = "0.1.0"
