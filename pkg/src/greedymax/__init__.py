"""Tight worst-case analysis of greedy k-independent set deletion on multigraphs."""

from .errors import InputError, LimitError
from .multiset import (
    DegreeSequence,
    SigmaProfile,
    from_sigma,
    is_graphical,
    is_trivial,
    make_degree_sequence,
    mu,
    parse_degrees,
    render_ferrers,
    sigma,
)
from .omega import BTrace, DecrementTrace, b, decrement_sequence, omega

__all__ = [
    "InputError",
    "LimitError",
    "DegreeSequence",
    "SigmaProfile",
    "from_sigma",
    "is_graphical",
    "is_trivial",
    "make_degree_sequence",
    "mu",
    "parse_degrees",
    "render_ferrers",
    "sigma",
    "BTrace",
    "DecrementTrace",
    "b",
    "decrement_sequence",
    "omega",
]
