"""Reconstruction of binary images from row and column sums under block,
window, and pattern constraints: polynomial-time solvers for the tractable
parameter regimes, an exhaustive oracle for everything else at desk scale,
and transformations between instance classes."""

from .errors import InputError, LimitError, ParseError
from .flow import TransportProblem, solve_transport
from .generate import gen_planted
from .grid import (
    Axis,
    BinaryImage,
    PatternClass,
    RecInstance,
    Rel,
    WRecInstance,
    corner_points,
    pattern_enumerate,
    pattern_member,
    pattern_of,
    region_and_projections,
    strip_rank,
    window_cells,
)
from .one_per_block import OnePerBlockInstance
from .oracle import (
    EnumerationResult,
    OracleLimits,
    OracleResult,
    Status,
    oracle_enumerate,
    oracle_solve,
)
from .reductions import (
    ThreeColorInstance,
    ThreeColorSolution,
    decode_three_color,
    invert_colors,
    one_pad,
    pad_to_k,
    three_color_to_rec,
    zero_pad,
)
from .solvers import (
    BlockOccupancy,
    Method,
    SolveResult,
    classify,
    solve,
    solve_rec1,
    solve_rec_k10,
    solve_rec_kv2,
)
from .verify import ViolationReport, verify_rec, verify_wrec

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BinaryImage",
    "BlockOccupancy",
    "EnumerationResult",
    "InputError",
    "LimitError",
    "Method",
    "OnePerBlockInstance",
    "OracleLimits",
    "OracleResult",
    "ParseError",
    "PatternClass",
    "RecInstance",
    "Rel",
    "SolveResult",
    "Status",
    "ThreeColorInstance",
    "ThreeColorSolution",
    "TransportProblem",
    "ViolationReport",
    "WRecInstance",
    "classify",
    "corner_points",
    "decode_three_color",
    "gen_planted",
    "invert_colors",
    "one_pad",
    "oracle_enumerate",
    "oracle_solve",
    "pad_to_k",
    "pattern_enumerate",
    "pattern_member",
    "pattern_of",
    "region_and_projections",
    "solve",
    "solve_rec1",
    "solve_rec_k10",
    "solve_rec_kv2",
    "solve_transport",
    "strip_rank",
    "three_color_to_rec",
    "verify_rec",
    "verify_wrec",
    "window_cells",
    "zero_pad",
    "__version__",
]
