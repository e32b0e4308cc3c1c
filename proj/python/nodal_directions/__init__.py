"""Directional statistics of nodal lines of Laplace eigenfunctions.

Thin re-export of the compiled core.  The heavy lifting (lattice point
enumeration, closed-form Kac-Rice expectations, marching-squares counting,
Monte Carlo experiments, separable-domain cases) lives in C++; this package
keeps the Python surface flat: ``import nodal_directions as nd`` and call.
"""

from ._core import (
    Direction,
    DirectionalCountReport,
    DirectionalPoint,
    DiskEigenfunction,
    ExperimentRecord,
    GeodesicLine,
    JetAtPoint,
    KacRiceBreakdown,
    LatticeCircle,
    MonteCarloSummary,
    SeparableCount,
    ToralEigenfunction,
    bessel_j,
    bessel_j_prime,
    bessel_zero,
    bezout_bound,
    classify,
    conditional_jacobian_expectation,
    count_directional_points,
    default_grid_cells,
    density_factor_phi0,
    derivative_covariance_matrix,
    detect_geodesics,
    disk_bound_check,
    disk_directional_count,
    emit_disk_svg,
    emit_nodal_svg,
    enumerate_circle,
    expected_count,
    fixture,
    geodesic_bound,
    is_sum_of_two_squares,
    kac_rice_breakdown,
    make_disk_eigenfunction,
    moment_sums,
    monte_carlo_jexp_oracle,
    mu_hat,
    rectangle_directional_count,
    read_csv,
    run_monte_carlo,
    sample_wave,
)

__all__ = [
    "Direction",
    "DirectionalCountReport",
    "DirectionalPoint",
    "DiskEigenfunction",
    "ExperimentRecord",
    "GeodesicLine",
    "JetAtPoint",
    "KacRiceBreakdown",
    "LatticeCircle",
    "MonteCarloSummary",
    "SeparableCount",
    "ToralEigenfunction",
    "bessel_j",
    "bessel_j_prime",
    "bessel_zero",
    "bezout_bound",
    "classify",
    "conditional_jacobian_expectation",
    "count_directional_points",
    "default_grid_cells",
    "density_factor_phi0",
    "derivative_covariance_matrix",
    "detect_geodesics",
    "disk_bound_check",
    "disk_directional_count",
    "emit_disk_svg",
    "emit_nodal_svg",
    "enumerate_circle",
    "expected_count",
    "fixture",
    "geodesic_bound",
    "is_sum_of_two_squares",
    "kac_rice_breakdown",
    "make_disk_eigenfunction",
    "moment_sums",
    "monte_carlo_jexp_oracle",
    "mu_hat",
    "rectangle_directional_count",
    "read_csv",
    "run_monte_carlo",
    "sample_wave",
]

__version__ = "0.1.0"
