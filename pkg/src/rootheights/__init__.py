"""Exact computations relating root heights and exponents of simple Lie algebras."""

from .fseries import ExpSeries, coefficient, geometric_factor, series_mul, xi_series
from .identities import (
    ExponentMultiset,
    VerificationReport,
    conjugate_partition,
    exponents_from_heights,
    exponents_from_kostka,
    kostka_theta,
    verify_constant_term,
    verify_duality,
    verify_prop1,
)
from .rootsys import (
    CartanMatrix,
    RootSystem,
    RootVector,
    WeylElement,
    build_root_system,
    cartan_matrix,
    root_system,
    weyl_group,
)
from .tpoly import TPoly, monomial_gap, poly_add, poly_mul
from .vecpart import (
    VectorPartition,
    enumerate_partitions,
    fact1_map,
    split_by_simple,
    t_kostant,
    verify_fact2,
    weight,
    xi_coefficient_comb,
)

__version__ = "0.1.0"
