"""Coprimality densities and prime structure in the Gaussian integers.

Exact arithmetic in Z[i] (gcd, prime classification, multiplicity lattices
with Pick counts), truncated zeta / Dirichlet L machinery with certified tail
bounds, and box-limit density estimators that converge to 1/zeta_Qi(2).
"""

from .backend import active as active_backend
from .backend import set_thread_cap, using_numba
from .density import (
    ConvergenceRow,
    DensityEstimate,
    Mode,
    both_divide_frequency,
    convergence_table,
    divisibility_frequency,
    gaussian_pair_density_exhaustive,
    gaussian_pair_density_mc,
    rational_tuple_density,
)
from .gaussian import (
    I,
    ONE,
    UNITS,
    ZERO,
    GaussianInt,
    PrimeClass,
    PrimeTag,
    canonical_associate,
    classify,
    divides,
    gcd,
    is_coprime,
    is_rational_prime,
    norm,
)
from .lattice import (
    FundamentalDomain,
    MultiplicityLattice,
    PickReport,
    count_boundary_points,
    count_interior_points,
    is_primitive_segment,
    pick_identity_check,
)
from .zeta import (
    BASEL,
    TruncatedValue,
    chi,
    coprime_constant_product,
    dedekind_zeta_Qi,
    dirichlet_L,
    dirichlet_L_euler,
    gaussian_coprime_constant,
    rational_coprime_constant,
    sieve_primes,
    zeta_euler,
    zeta_series,
)

__version__ = "0.1.0"

__all__ = [
    "BASEL",
    "ConvergenceRow",
    "DensityEstimate",
    "FundamentalDomain",
    "GaussianInt",
    "I",
    "Mode",
    "MultiplicityLattice",
    "ONE",
    "PickReport",
    "PrimeClass",
    "PrimeTag",
    "TruncatedValue",
    "UNITS",
    "ZERO",
    "active_backend",
    "both_divide_frequency",
    "canonical_associate",
    "chi",
    "classify",
    "convergence_table",
    "coprime_constant_product",
    "count_boundary_points",
    "count_interior_points",
    "dedekind_zeta_Qi",
    "dirichlet_L",
    "dirichlet_L_euler",
    "divides",
    "divisibility_frequency",
    "gaussian_coprime_constant",
    "gaussian_pair_density_exhaustive",
    "gaussian_pair_density_mc",
    "gcd",
    "is_coprime",
    "is_primitive_segment",
    "is_rational_prime",
    "norm",
    "pick_identity_check",
    "rational_coprime_constant",
    "rational_tuple_density",
    "set_thread_cap",
    "sieve_primes",
    "using_numba",
    "zeta_euler",
    "zeta_series",
]
