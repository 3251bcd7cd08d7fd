"""Geometry of quantum states: Bloch vectors, fidelities and equal-fidelity surfaces."""

from .errors import (
    BlochGeometryError,
    ConvergenceError,
    DimensionError,
    DomainError,
    InvalidState,
    NoSolution,
    NotPositiveSemidefinite,
)
from .linalg import (
    EigenDecomposition,
    eigh,
    is_psd,
    random_density,
    random_pure_density,
    random_unitary,
    sqrt_psd,
)
from .metrics import (
    ComparisonReport,
    bures_distance,
    bures_length,
    compare,
    distance_dl,
    fidelity,
    fidelity_eigsum,
    fidelity_extended,
    fidelity_qubit_bloch,
    inner_distance,
    super_fidelity,
)
from .states import (
    BlochVector,
    DensityMatrix,
    ExtendedBlochVector,
    GeneratorSet,
    extend,
    from_bloch,
    purity,
    su_generators,
    to_bloch,
)
from .surfaces import (
    EqualFidelitySurface,
    SurfaceKind,
    SurfacePoint,
    contains,
    cross_section_xz,
    equal_fidelity_surface,
    min_fidelity_state,
    rotation_to_z,
    sample_points,
)

__version__ = "0.1.0"
