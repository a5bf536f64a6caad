"""
Numerical tolerances shared by every module.

Values are absolute unless stated otherwise.
"""

# DensityMatrix invariants.
HERMITICITY = 1e-10
TRACE = 1e-10
POSITIVITY = 1e-9

# Bloch vectors.
BLOCH_NORM = 1e-9

# Linear solves: pivots below this (relative to the largest matrix entry) are singular.
PIVOT = 1e-10
SOLVE_RESIDUAL = 1e-10

# Steady state: max-norm of L.vec(rho).
STEADY_RESIDUAL = 1e-9

# Time integration.
STABILITY_GUARD = 0.1
STEP_CORRECTION = 1e-8
DEFAULT_STEP_SCALE = 0.01

# Magic detection.
MAGIC = 1e-9

# Closed-form evaluation: reset rates below this are outside the model range.
MIN_PERTURBATIVE_RATE = 1e-6

# Closed forms hold at omega == 1 only.
UNIT_OMEGA = 1e-12

# Bisection on the heat-bath temperature.
BOUNDARY_T1 = 1e-6

# Weak coupling: warn when g exceeds this fraction of min(p1, p2).
WEAK_COUPLING_RATIO = 0.2
