"""Exact characterization, decision, and witnessing of the area tuples cut from
a convex quadrilateral by lines through prescribed division ratios of two
opposite sides."""

from .cone import (
    CaseLabel,
    ConeFrame,
    classify,
    continue_degenerate,
    cumulants,
    discriminants,
    evaluate_plane,
    frame,
    hyperplanes,
)
from .division import DivisionSpec, to_fraction
from .errors import (
    DegenerateCollapseError,
    DegenerateDenominatorError,
    InconsistentQuadError,
    InvalidInputError,
    InvalidPivotError,
    NotAttainableError,
    NoValidContinuationError,
    QuadAreasError,
)
from .geometry import (
    ApexFrame,
    ConvexQuad,
    DivisionPoints,
    ParallelMarker,
    Point,
    apex_of,
    is_convex_ccw,
    polygon_area,
    pt,
    strip_areas,
    subdivide,
)
from .membership import (
    Certificate,
    Interval,
    Verdict,
    member,
    parallel_diagnosis,
    proportional_bounds,
)
from .oracle import SampleReport, Violation, cross_validate, sample_convex_quads, sample_parallel_family
from .reduction import (
    CollapsedInstance,
    StationCoefficients,
    StationReport,
    TailSummedSequence,
    collapse,
    cumulant_tail_sums,
    extend_solution,
    member_tail,
    member_via_collapse,
    planar_ratio_bounds,
    station_check,
    station_coefficients,
    tail_cumulants,
)
from .witness import WitnessOutput, apex_areas, apex_quad, synthesize_witness

__version__ = "0.1.0"

__all__ = [
    "ApexFrame",
    "CaseLabel",
    "Certificate",
    "CollapsedInstance",
    "ConeFrame",
    "ConvexQuad",
    "DegenerateCollapseError",
    "DegenerateDenominatorError",
    "DivisionPoints",
    "DivisionSpec",
    "InconsistentQuadError",
    "Interval",
    "InvalidInputError",
    "InvalidPivotError",
    "NotAttainableError",
    "NoValidContinuationError",
    "ParallelMarker",
    "Point",
    "QuadAreasError",
    "SampleReport",
    "StationCoefficients",
    "StationReport",
    "TailSummedSequence",
    "Verdict",
    "Violation",
    "WitnessOutput",
    "apex_areas",
    "apex_of",
    "apex_quad",
    "classify",
    "collapse",
    "continue_degenerate",
    "cross_validate",
    "cumulant_tail_sums",
    "cumulants",
    "discriminants",
    "evaluate_plane",
    "extend_solution",
    "frame",
    "hyperplanes",
    "is_convex_ccw",
    "member",
    "member_tail",
    "member_via_collapse",
    "parallel_diagnosis",
    "planar_ratio_bounds",
    "polygon_area",
    "proportional_bounds",
    "pt",
    "sample_convex_quads",
    "sample_parallel_family",
    "station_check",
    "station_coefficients",
    "strip_areas",
    "subdivide",
    "synthesize_witness",
    "tail_cumulants",
    "to_fraction",
]
