"""Nonrepetitive list colouring: the entropy-compression engine, its
certificates, pathwidth constructions, local-lemma samplers and the
counting bounds behind them."""
from .codec import decode_path, encode_path
from .engine import (Algorithm, RunResult, dyck_of_record, lexicographic_priority,
                     reconstruct_input, run, run_random, trace_of_record)
from .errors import (ConstructionError, DecodeError, ExhaustionError, InputError,
                     InvariantError, NonrepError, ReconstructionError, ResourceError,
                     ValidationError)
from .graph import (Graph, ListAssignment, find_repetitive_path, is_almost_repetitive,
                    is_nonrepetitive, verify_star)
from .pathwidth import PathDecomposition, colour_pathwidth, star_colour_pathwidth
from .strategies import (SubdividedGraph, colour_bounded_degree, colour_subdivision,
                         list_size_for_degree, subdivide)

__all__ = [
    "Algorithm",
    "ConstructionError",
    "DecodeError",
    "ExhaustionError",
    "Graph",
    "InputError",
    "InvariantError",
    "ListAssignment",
    "NonrepError",
    "PathDecomposition",
    "ReconstructionError",
    "ResourceError",
    "RunResult",
    "SubdividedGraph",
    "ValidationError",
    "colour_bounded_degree",
    "colour_pathwidth",
    "colour_subdivision",
    "decode_path",
    "dyck_of_record",
    "encode_path",
    "find_repetitive_path",
    "is_almost_repetitive",
    "is_nonrepetitive",
    "lexicographic_priority",
    "list_size_for_degree",
    "reconstruct_input",
    "run",
    "run_random",
    "star_colour_pathwidth",
    "subdivide",
    "trace_of_record",
    "verify_star",
]

__version__ = "0.1.0"
