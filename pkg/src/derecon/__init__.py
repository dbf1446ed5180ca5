"""Degree-associated edge-reconstruction numbers of small graphs."""

__version__ = "0.1.0"

from .canon import canonical_form, component_profiles, is_isomorphic
from .deck import Decard, Dedeck, EdgeClass, classify_edge, dedeck, middle_decard_count
from .families import (
    DoubleBroomParams,
    SubdividedParams,
    broom,
    counterexample,
    cycle,
    double_broom,
    parse_family,
    path,
    star,
    subdivided_double_broom,
)
from .graph import CapacityError, DomainError, Graph, disjoint_union, edge_degree
from .recon import NotDedeckReconstructible, ReconReport, adern, dern, determines, max_overlap, recon_report
from .reconstruct import confusers, extensions, lemma1_holds

__all__ = [
    "CapacityError",
    "Decard",
    "Dedeck",
    "DomainError",
    "DoubleBroomParams",
    "EdgeClass",
    "Graph",
    "NotDedeckReconstructible",
    "ReconReport",
    "SubdividedParams",
    "adern",
    "broom",
    "canonical_form",
    "classify_edge",
    "component_profiles",
    "confusers",
    "counterexample",
    "cycle",
    "dedeck",
    "dern",
    "determines",
    "disjoint_union",
    "double_broom",
    "edge_degree",
    "extensions",
    "is_isomorphic",
    "lemma1_holds",
    "max_overlap",
    "middle_decard_count",
    "parse_family",
    "path",
    "recon_report",
    "star",
    "subdivided_double_broom",
]
