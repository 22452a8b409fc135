"""Ontology-based compliance checking for directive measures."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .dsl import compile_measures, load_measures, parse_measures
from .gaps import GapReport, GapRow, gap_analysis, match_patterns, missing_measures_query, query_gaps
from .kb import KnowledgeBase, Iri, rdf_view
from .reasoner import Reasoner, classify, realize
from .turtle import load_turtle, parse_turtle, serialize

__version__ = "0.1.0"


def data_path(name: str) -> Path:
    """Path of a shipped fixture, e.g. ``data_path("nis-seed.dsl")``."""
    return Path(str(resources.files(__package__).joinpath("data", name)))


__all__ = [
    "GapReport",
    "GapRow",
    "Iri",
    "KnowledgeBase",
    "Reasoner",
    "classify",
    "compile_measures",
    "data_path",
    "gap_analysis",
    "load_measures",
    "load_turtle",
    "match_patterns",
    "missing_measures_query",
    "parse_measures",
    "parse_turtle",
    "query_gaps",
    "rdf_view",
    "realize",
    "serialize",
]
