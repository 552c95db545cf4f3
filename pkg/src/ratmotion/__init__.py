"""Exact trajectory degree analysis for rational rigid body motions."""
from ._backend import BACKEND
from .analysis import (
    DegreeReport,
    RulingCertificate,
    algebraic_certificate,
    analyze_inverse,
    geometric_certificate,
    predicted_degree,
    ruling_swap_check,
)
from .expr import ParseError, format_motion, parse_motion
from .motion import (
    MotionPolynomial,
    StudyViolation,
    generic_degree_oracle,
    inverse,
    normalize,
    trajectory,
    trajectory_degree,
    validate,
)
from .quat_algebra import DualQuaternion, Quaternion
from .quat_poly import DualQuatPoly, InconsistencyError, QuatPoly, gcrd, mrpf, right_divide
from .scalar_poly import RealPoly

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DegreeReport",
    "RulingCertificate",
    "algebraic_certificate",
    "analyze_inverse",
    "geometric_certificate",
    "predicted_degree",
    "ruling_swap_check",
    "ParseError",
    "format_motion",
    "parse_motion",
    "MotionPolynomial",
    "StudyViolation",
    "generic_degree_oracle",
    "inverse",
    "normalize",
    "trajectory",
    "trajectory_degree",
    "validate",
    "DualQuaternion",
    "Quaternion",
    "DualQuatPoly",
    "InconsistencyError",
    "QuatPoly",
    "gcrd",
    "mrpf",
    "right_divide",
    "RealPoly",
]
