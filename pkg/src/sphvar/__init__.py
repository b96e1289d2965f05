"""Exact combinatorial invariants of spherical varieties and their
unramified basic functions, with brute-force cross-checks."""
from __future__ import annotations

from .chars import QLaurent
from .engine import (BasicFunctionTable, BorelRoute, KAPPA, LFactor, PPRoute,
                     SmoothRoute, TransportRoute, basic_function_borel,
                     basic_function_graded, basic_function_pp,
                     basic_function_smooth, basic_function_transport,
                     dual_radical, f_fixed, growth_certificate, local_lfactor,
                     toric_distance)
from .geometry import Cone, LatticeMap, lattice_points
from .rootdata import (ParabolicDatum, RootDatum, levi_datum, product_datum,
                       root_datum)
from .spherical import (ColoredCone, SphericalDatum, affine_closure_data,
                        arithmetic_multiplicity, enumerate_orbits, is_affine,
                        is_wavefront, negligible_orbit_check,
                        parabolic_induction, validate_colored_cone)

__version__ = "0.1.0"

__all__ = [
    "BasicFunctionTable", "BorelRoute", "ColoredCone", "Cone", "KAPPA",
    "LFactor", "LatticeMap", "PPRoute", "ParabolicDatum", "QLaurent",
    "RootDatum", "SmoothRoute", "SphericalDatum", "TransportRoute",
    "affine_closure_data", "arithmetic_multiplicity", "basic_function_borel",
    "basic_function_graded", "basic_function_pp", "basic_function_smooth",
    "basic_function_transport", "dual_radical", "enumerate_orbits", "f_fixed",
    "growth_certificate", "is_affine", "is_wavefront", "lattice_points",
    "levi_datum", "local_lfactor", "negligible_orbit_check",
    "parabolic_induction", "product_datum", "root_datum", "toric_distance",
    "validate_colored_cone",
]
