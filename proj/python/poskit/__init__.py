"""Exact positivity toolkit.

Nef/ample tests and Seshadri constants for line and vector bundles on
combinatorial models of simple G-projective varieties and on complete
smooth toric fans, plus the nef/Mori cones of the blow-up at the sink.
All arithmetic is exact: values cross the boundary as ints and
fractions.Fraction.
"""

from poskit._core import (
    BlowupModel,
    Fan,
    InputError,
    InternalError,
    RationalCone,
    Refusal,
    SplittingData,
    ValidationReport,
    VarietyModel,
    Wall,
    DEFAULT_CONE_DIM_BOUND,
    __version__,
    ample_check_bundle,
    ample_check_linebundle,
    blowup_mori_generators,
    blowup_nef_generators,
    build_blowup,
    build_flag_model,
    build_projective_space_model,
    cartan_matrix,
    cone_contains,
    cones_equal,
    divisor_degree_on_wall,
    dual_cone,
    enumerate_walls,
    intersect,
    is_nef_on_blowup,
    nef_check_bundle,
    nef_check_linebundle,
    nef_check_toric,
    pair_classes,
    seshadri_bundle,
    seshadri_line,
    seshadri_toric_fixed_point,
    seshadri_via_blowup,
    validate_fan,
    validate_splitting,
)

__all__ = [
    "BlowupModel",
    "Fan",
    "InputError",
    "InternalError",
    "RationalCone",
    "Refusal",
    "SplittingData",
    "ValidationReport",
    "VarietyModel",
    "Wall",
    "DEFAULT_CONE_DIM_BOUND",
    "__version__",
    "ample_check_bundle",
    "ample_check_linebundle",
    "blowup_mori_generators",
    "blowup_nef_generators",
    "build_blowup",
    "build_flag_model",
    "build_projective_space_model",
    "cartan_matrix",
    "cone_contains",
    "cones_equal",
    "divisor_degree_on_wall",
    "dual_cone",
    "enumerate_walls",
    "intersect",
    "is_nef_on_blowup",
    "nef_check_bundle",
    "nef_check_linebundle",
    "nef_check_toric",
    "pair_classes",
    "seshadri_bundle",
    "seshadri_line",
    "seshadri_toric_fixed_point",
    "seshadri_via_blowup",
    "validate_fan",
    "validate_splitting",
]
