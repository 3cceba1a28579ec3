"""Local rigidity of Fano complete intersections in rational homogeneous spaces."""

from .bwb import LineBundleClass, line_cohomology
from .classify import Verdict, classify_quasi_homogeneous_hyperplane, classify_rigidity, enumerate_verdicts
from .intersect import CISpec, chi_tangent, restricted_sections
from .rootdata import HomSpace, build_root_system, lie_dim, normalize, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "CISpec",
    "HomSpace",
    "LineBundleClass",
    "Verdict",
    "build_root_system",
    "chi_tangent",
    "classify_quasi_homogeneous_hyperplane",
    "classify_rigidity",
    "enumerate_verdicts",
    "lie_dim",
    "line_cohomology",
    "normalize",
    "restricted_sections",
    "weyl_dim",
]
