"""Certifying recognition of Helly circular-arc graphs and their obstructions."""

from .graphs import (
    Graph,
    GraphError,
    build_graph,
    canonical_form,
    canonical_labeling,
    complement,
    disjoint_union,
    enumerate_all_graphs,
    find_induced_copy,
    format_graph,
    induced_subgraph,
    isomorphic,
    maximal_cliques,
    parse_graph,
)
from .models import (
    ArcModel,
    HellyReport,
    ModelError,
    format_model,
    helly_report,
    intersection_graph,
    is_proper,
    normalize_extremes,
    parse_model,
    submodel,
)
from .catalog import catalog_graph, UntranscribedFigureGraph
from .recognition import (
    HellyModelCert,
    NotHCA,
    circular_ones_row_order,
    find_obstacle_enumeration,
    is_hca,
    minimal_non_hca,
    recognize_hca,
)
from .obstacles import (
    ObstacleEnumeration,
    ObstacleError,
    classify_edge,
    essentialize,
    format_enumeration,
    is_essential,
    parse_enumeration,
    validate_enumeration,
)
from .obstacle_models import build_deleted_model, build_essential_model
from .generator import (
    ObstacleSpec,
    bracelet_count,
    enumerate_essential,
    gen_obstacle,
    obst8_catalog,
)
from .concave import (
    FamilyTag,
    Forbidden,
    MultiplePartition,
    classify_concave_forbidden,
    contract_true_twins,
    forbidden_profile_check,
    minimal_non_concave,
    multiple_partition_coC7,
    pattern_graph,
    quasi_line_pipeline,
    recognize_concave_round,
)

__all__ = [
    "Graph",
    "GraphError",
    "build_graph",
    "canonical_form",
    "canonical_labeling",
    "complement",
    "disjoint_union",
    "enumerate_all_graphs",
    "find_induced_copy",
    "format_graph",
    "induced_subgraph",
    "isomorphic",
    "maximal_cliques",
    "parse_graph",
    "ArcModel",
    "HellyReport",
    "ModelError",
    "format_model",
    "helly_report",
    "intersection_graph",
    "is_proper",
    "normalize_extremes",
    "parse_model",
    "submodel",
    "catalog_graph",
    "UntranscribedFigureGraph",
    "HellyModelCert",
    "NotHCA",
    "circular_ones_row_order",
    "find_obstacle_enumeration",
    "is_hca",
    "minimal_non_hca",
    "recognize_hca",
    "ObstacleEnumeration",
    "ObstacleError",
    "classify_edge",
    "essentialize",
    "format_enumeration",
    "is_essential",
    "parse_enumeration",
    "validate_enumeration",
    "build_deleted_model",
    "build_essential_model",
    "ObstacleSpec",
    "bracelet_count",
    "enumerate_essential",
    "gen_obstacle",
    "obst8_catalog",
    "FamilyTag",
    "Forbidden",
    "MultiplePartition",
    "classify_concave_forbidden",
    "contract_true_twins",
    "forbidden_profile_check",
    "minimal_non_concave",
    "multiple_partition_coC7",
    "pattern_graph",
    "quasi_line_pipeline",
    "recognize_concave_round",
]
