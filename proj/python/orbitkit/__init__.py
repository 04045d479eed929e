"""Exact orbit counting and zeta-function data for the circle-doubling map
and its 3-adic extension."""

from ._orbitkit import (
    InternalError,
    MapSpec,
    OrbitTable,
    ValidationError,
    build_table,
    delta_gap,
    divisors,
    fix_count,
    iterate_square_identity,
    merten_series,
    mobius,
    modulus_product,
    modulus_product_polar,
    ord_p,
    orbit_count_iterate,
    orbit_product_series,
    padic_abs,
    padic_factor,
    pi_sum,
    pnt_ratio,
    radial_scan,
    ratio_series,
    run_cli,
    run_invariants,
    series_modulus,
    xi1_closed_form,
    xi1_direct,
    xi_decomposition,
    xi_series,
    zeta_series,
)

__all__ = [name for name in dir() if not name.startswith("_")]
