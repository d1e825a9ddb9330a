"""Frames on finite measure spaces: bounds, duals and retro-dual diagnostics."""

from .duals import (
    DualPairReport,
    alternate_duals,
    canonical_dual,
    verify_hilbert_dual,
)
from .errors import (
    BadDimension,
    DimensionMismatch,
    EmptyMatrix,
    FrameError,
    FrameFileError,
    Infeasible,
    InvalidInterval,
    NotAFrame,
    NotHermitian,
    NotSquare,
    SpaceMismatch,
    UnknownScenario,
)
from .frames import (
    Frame,
    FrameBounds,
    FrameClass,
    MeasureSpace,
    analysis_matrix,
    classify,
    frame_operator,
    optimal_bounds,
    uniform_quadrature,
)
from .io import dump_frame, frame_from_dict, frame_to_dict, load_frame
from .numerics import distance_to_span, hermitian_eigenvalues, min_norm_solve, singular_values
from .retro import (
    BiorthReport,
    DistanceProfile,
    OmegaSubset,
    RetroVerdict,
    Verdict,
    analysis_lower_bound,
    check_biorthogonality,
    distance_profile,
    exactness_profile,
    min_norm_biorthogonal,
    retro_dual_verdict,
)
from .scenarios import list_scenarios, run_scenario

__version__ = "0.1.0"
