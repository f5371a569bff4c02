"""Bohr and Rogosinski abscissas of ordinary Dirichlet series."""

from ._core import (  # noqa: F401
    AbscissaResult,
    BracketError,
    Enclosure,
    LatticeSpec,
    OracleReport,
    PrecisionError,
    PrimeTable,
    ResourceError,
    TruncationPolicy,
    almost_prime_zeta,
    bohr_bound_modulus,
    bohr_bound_squared,
    bohr_sum,
    direct_sum_oracle,
    evaluate_dirichlet,
    evaluate_lifted,
    lattice_enumeration_check,
    lattice_for_degree,
    lift,
    prime_zeta,
    radius_to_abscissa,
    riemann_zeta,
    rogosinski_halfplane_bound,
    rogosinski_radius,
    run_cli,
    solve_abscissa,
)

__version__ = "0.1.0"
