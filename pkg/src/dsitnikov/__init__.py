"""Circular double Sitnikov problem.

Closed-form solutions of the integrable equal-mass limit via Jacobi
elliptic functions, period/action formulas, symplectic collision
regularization with an elastic-bounce flow extension, and a verified
catalog of resonant tori and the energy surfaces carrying periodic orbits.

Hot numerical kernels are numba-compiled by default; set the environment
variable DSITNIKOV_NO_NUMBA=1 before import to run the pure NumPy/Python
fallback (see benchmarks/bench_kernels.py for the comparison).
"""

__version__ = "0.1.0"

from ._kernels import BACKEND, HAVE_NUMBA
from ._errors import (
    CollisionApproachError,
    ConvergenceError,
    DomainError,
    LevelSetError,
    SingularityError,
)
from .elliptic import (
    JacobiTriple,
    Modulus,
    complete_E,
    complete_K,
    complete_Pi,
    incomplete_Pi,
    jacobi,
    jacobi_epsilon,
)
from .closedform import (
    ActionAngle,
    EnergyModulus,
    SingleOrbit,
    T_MIN,
    action_J,
    action_angle,
    eval_double_state,
    eval_state,
    eval_state_array,
    make_orbit,
    modulus_from_energy,
    nu_of_time,
    omega,
    period_T,
    time_of_nu,
)
from .dynamics import (
    EQUAL_MASS_LIMIT,
    BounceTrajectory,
    MassParams,
    PhysicalState,
    RegularizedState,
    RegularizedTrajectory,
    Trajectory,
    extend_with_bounce,
    hamiltonian_full,
    hamiltonian_limit,
    integrate_physical,
    integrate_regularized,
    partial_energies,
    regularized_L,
    regularized_initial,
    rho_inverse,
    rho_map,
    vector_field,
)
from .resonance import (
    Catalog,
    CatalogEntry,
    DensityReport,
    ResonanceTriplet,
    build_catalog,
    count_bound,
    density_report,
    energy_surface,
    enumerate_triplets,
    gcd3,
    invert_period,
    is_admissible,
    minimality_report,
    rational_to_triplet,
    totient,
)
