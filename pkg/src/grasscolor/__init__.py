"""Explicit colorings of Grassmann graphs J_q(n, m) with exact verification."""

from .colorings import (
    Coloring,
    ColoringReport,
    EImage,
    color_graph,
    hawtin_color,
    hawtin_image,
    johnson_sum_color,
    kneser_point_color,
    moore_color,
    verify_coloring,
)
from .gfarith import FieldCtx, FieldElement, make_ctx, moore_det
from .graphs import GraphHandle, build_graph, pencil_clique, valency
from .oracle import ChromaticBounds, exact_chromatic, greedy_dsatur, max_clique
from .projlinalg import ProjectivePoint, Subspace, enumerate_subspaces, gaussian_binomial, rref
from .spreads import classify_class, classify_coloring

__all__ = [
    "ChromaticBounds", "Coloring", "ColoringReport", "EImage", "FieldCtx", "FieldElement",
    "GraphHandle", "ProjectivePoint", "Subspace", "build_graph", "classify_class",
    "classify_coloring", "color_graph", "enumerate_subspaces", "exact_chromatic",
    "gaussian_binomial", "greedy_dsatur", "hawtin_color", "hawtin_image",
    "johnson_sum_color", "kneser_point_color", "make_ctx", "max_clique", "moore_color",
    "moore_det", "pencil_clique", "rref", "valency", "verify_coloring",
]
