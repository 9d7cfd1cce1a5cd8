"""Explicit multi-slit Loewner flows in the disc and the half-plane.

Closed-form flows for driving measures made of finitely many boundary
atoms: rotating atoms on the circle (radial, spirallike map phi) and
square-root-scaled atoms on the real line (chordal, one map h per root
structure of the auxiliary polynomial).  Includes independent ODE oracles,
a Moebius bridge between the two pictures, and a CLI experiment harness.
"""

from .bridge import HalfPlaneToDisc, chordal_to_radial, moebius_apply, moebius_inverse, verify_correspondence
from .chordal import (
    AngleReport,
    ChordalTraceSample,
    DistinctRealCase,
    DoubleCase,
    SpiralCase,
    TripleCase,
    attraction_point,
    build_case,
    chordal_flow,
    chordal_trace,
    chordal_w_explicit,
    h_boundary_image,
    h_derivative,
    h_eval,
    intersection_angles,
)
from .configs import ChordalConfig, RadialConfig
from .errors import (
    ClassificationError,
    ConfigError,
    ContinuationError,
    DomainError,
    SeedingError,
    SlitflowError,
)
from .oracle import OracleReport, chordal_ode_solve, compare, radial_ode_solve
from .polyroots import (
    ComplexPair,
    DistinctReal,
    DoubleRoot,
    TripleRoot,
    build_chordal_P,
    build_radial_QiaR,
    classify_roots,
    find_roots,
)
from .radial import (
    RadialSpiralData,
    TraceSample,
    compute_spiral_data,
    convergence_experiment,
    phi_boundary_image,
    phi_derivative,
    phi_eval,
    radial_flow,
    radial_trace,
    semigroup_residual,
    trace_diagnostics,
)

__version__ = "0.1.0"
