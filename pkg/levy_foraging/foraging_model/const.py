"""constants module."""

from .models import QuadratureSpec, SolverSpec


EULER_GAMMA = 0.57721566490153286061

POLE_TOLERANCE = 1e-14

# Relative error bounds committed to by the special function evaluators.
GAMMA_REL_ERROR = 1e-13
DIGAMMA_REL_ERROR = 1e-13
ZETA_REL_ERROR = 1e-13
ZETA_PRIME_REL_ERROR = 1e-12

DEFAULT_QUADRATURE = QuadratureSpec()

# Kernel integrations inside the oracles never use the tail law.
ORACLE_QUADRATURE = QuadratureSpec(
    abs_tol=1e-14,
    rel_tol=1e-11,
    max_subdivisions=4096,
    asymptotic_cutoff=None,
)

DEFAULT_SOLVER = SolverSpec()

# Initial subdivision limit of the quadrature attempt loop.
INITIAL_SUBDIVISIONS = 200

MOMENT_TAIL_START = 50.0
MOMENT_MAX_DOUBLINGS = 6
MOMENT_SHELL_TOLERANCE = 1e-6

LATTICE_TAIL_MODE_CUTOFF = 4000.0
LATTICE_TAIL_TOLERANCE = 1e-7

AVAILABLE_FUNCTIONALS = {
    "E1", "E2", "E3", "E4", "E5", "E6",
    "G1", "G2", "G3", "G4", "G5", "G6",
    "H1", "H2", "H3", "H4", "H5", "H6",
    "g5c", "g6c",
}

# Reference constants quoted for the bifurcation and constrained optima.
T_STAR_REFERENCE = 2.145248182
L_STAR_REFERENCE = 1.768198
G5_ARGMAX_REFERENCE = 0.80261
G6_ARGMAX_REFERENCE = 0.861187

# Outer integrals of the oracles, taken over kernel values.
ORACLE_OUTER_ABS_TOL = 1e-20
ORACLE_OUTER_REL_TOL = 1e-7
