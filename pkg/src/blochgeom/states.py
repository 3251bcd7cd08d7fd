"""Density matrices, SU(N) generators and Bloch-vector conversions.

Bloch vectors use the convention ``rho = I/N + sum_i b_i G_i`` with
``b_i = Tr[rho G_i] / 2``, so qubit pure states sit at radius 1/2 and a
general pure state at radius ``sqrt((N-1)/(2N))``.

Generator order is fixed: all symmetric ``u_jk`` for ``j < k`` in
lexicographic order, then all antisymmetric ``v_jk`` in the same order, then
the diagonal ``w_m`` for ``m = 1 .. N-1``. For ``N = 2`` this is
``(sigma_x, sigma_y, sigma_z)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DimensionError, DomainError, InvalidState
from .linalg import PSD_CLAMP, as_hermitian, eigh, roundoff_floor

__all__ = [
    "DensityMatrix",
    "GeneratorSet",
    "BlochVector",
    "ExtendedBlochVector",
    "su_generators",
    "as_density",
    "to_bloch",
    "from_bloch",
    "extend",
    "purity",
    "pure_radius",
]

TRACE_TOL = 1e-12
LENGTH_TOL = 1e-12


def pure_radius(dim: int) -> float:
    """Bloch radius of pure states, ``sqrt((N-1)/(2N))``."""
    return float(np.sqrt((dim - 1) / (2.0 * dim)))


@dataclass(frozen=True)
class DensityMatrix:
    """A validated quantum state.

    Construction checks Hermiticity, unit trace, positivity (smallest
    eigenvalue at least -1e-10) and the purity range ``[1/N, 1]``; any failure
    raises `InvalidState` naming the violated condition and its residual.
    """

    matrix: np.ndarray

    def __post_init__(self):
        try:
            m = as_hermitian(self.matrix)
        except DomainError as exc:
            raise InvalidState(str(exc)) from None
        n = m.shape[0]
        tr = np.trace(m)
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidState(f"trace is {tr.real:.15g}, residual {abs(tr - 1.0):.3e}")
        wmin = eigh(m).eigenvalues[0]
        if wmin < -PSD_CLAMP:
            raise InvalidState(f"not positive semidefinite: min eigenvalue {wmin:.3e}")
        p = float(np.sum(np.abs(m) ** 2))
        if not (1.0 / n - TRACE_TOL <= p <= 1.0 + TRACE_TOL):
            raise InvalidState(f"purity {p:.15g} outside [1/{n}, 1]")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)

    def conjugate_by(self, u) -> "DensityMatrix":
        """The state ``U rho U^dagger``."""
        u = np.asarray(u)
        m = u @ self.matrix @ u.conj().T
        return DensityMatrix(0.5 * (m + m.conj().T))


def as_density(rho) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)


@dataclass(frozen=True)
class GeneratorSet:
    dim: int
    generators: tuple
    labels: tuple = field(default=())

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def stacked(self) -> np.ndarray:
        """Generators as an array of shape ``(N^2 - 1, N, N)``."""
        return _stacked(self.dim)


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@lru_cache(maxsize=None)
def su_generators(dim: int) -> GeneratorSet:
    """Ordered Hermitian, traceless SU(N) generators with ``Tr[G_i G_j] = 2 delta_ij``.

    Parameters
    ----------
    dim : int
        Hilbert-space dimension N >= 2.

    Returns
    -------
    GeneratorSet
        N^2 - 1 matrices in u-block, v-block, w-block order, with labels such
        as ``"u12"``, ``"v13"``, ``"w2"`` (1-based indices).
    """
    if int(dim) != dim or dim < 2:
        raise DimensionError(f"dimension must be an integer >= 2, got {dim!r}")
    n = int(dim)
    pairs = [(j, k) for j in range(n) for k in range(j + 1, n)]
    gens, labels = [], []
    for j, k in pairs:
        u = np.zeros((n, n), dtype=np.complex128)
        u[j, k] = u[k, j] = 1.0
        gens.append(_frozen(u))
        labels.append(f"u{j + 1}{k + 1}")
    for j, k in pairs:
        v = np.zeros((n, n), dtype=np.complex128)
        v[j, k] = -1j
        v[k, j] = 1j
        gens.append(_frozen(v))
        labels.append(f"v{j + 1}{k + 1}")
    for m in range(1, n):
        d = np.zeros(n)
        d[:m] = 1.0
        d[m] = -m
        gens.append(_frozen(np.diag(np.sqrt(2.0 / (m * (m + 1))) * d).astype(np.complex128)))
        labels.append(f"w{m}")
    return GeneratorSet(n, tuple(gens), tuple(labels))


@lru_cache(maxsize=None)
def _stacked(dim: int) -> np.ndarray:
    return _frozen(np.stack(su_generators(dim).generators))


@dataclass(frozen=True)
class BlochVector:
    """Generalized Bloch vector: N^2 - 1 real components."""

    dim: int
    components: np.ndarray

    def __post_init__(self):
        c = np.array(self.components, dtype=np.float64).reshape(-1)
        if c.size != self.dim**2 - 1:
            raise DimensionError(
                f"dim {self.dim} needs {self.dim**2 - 1} components, got {c.size}"
            )
        object.__setattr__(self, "components", _frozen(c))

    @classmethod
    def from_components(cls, components) -> "BlochVector":
        """Infer N from the component count ``N^2 - 1``."""
        c = np.asarray(components, dtype=np.float64).reshape(-1)
        n = int(round(np.sqrt(c.size + 1)))
        if n * n - 1 != c.size or n < 2:
            raise DimensionError(f"{c.size} components is not N^2 - 1 for any N >= 2")
        return cls(n, c)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.components))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.components, dtype=dtype)


@dataclass(frozen=True)
class ExtendedBlochVector:
    """Bloch vector plus a non-negative last component, on the sphere of
    radius ``sqrt((N-1)/(2N))`` in R^(N^2)."""

    dim: int
    components: np.ndarray

    def __post_init__(self):
        c = np.array(self.components, dtype=np.float64).reshape(-1)
        if c.size != self.dim**2:
            raise DimensionError(f"dim {self.dim} needs {self.dim**2} components, got {c.size}")
        object.__setattr__(self, "components", _frozen(c))

    @property
    def bloch(self) -> BlochVector:
        return BlochVector(self.dim, self.components[:-1])

    @property
    def last(self) -> float:
        return float(self.components[-1])

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.components, dtype=dtype)


def _as_bloch(vec) -> BlochVector:
    return vec if isinstance(vec, BlochVector) else BlochVector.from_components(vec)


def to_bloch(rho) -> BlochVector:
    """Components ``Tr[rho G_i] / 2`` over the ordered generators."""
    rho = as_density(rho)
    g = _stacked(rho.dim)
    # Tr[rho G] = sum_jk rho_jk G_kj
    comps = 0.5 * np.einsum("jk,ikj->i", rho.matrix, g).real
    return BlochVector(rho.dim, comps)


def from_bloch(vec) -> DensityMatrix:
    """The state ``I/N + sum_i b_i G_i``.

    Raises `InvalidState` when the matrix is not a valid state; for N > 2 this
    can happen well inside the radius bound.
    """
    vec = _as_bloch(vec)
    n = vec.dim
    m = np.eye(n, dtype=np.complex128) / n + np.tensordot(vec.components, _stacked(n), axes=1)
    return DensityMatrix(m)


def extend(vec) -> ExtendedBlochVector:
    """Append ``sqrt((N-1)/(2N) - |b|^2)``; accepts a state or a Bloch vector.

    Gaps within round-off of zero (either sign) give a last component of
    exactly 0, so pure states land on the equator of the hemisphere.
    """
    if not isinstance(vec, BlochVector):
        if isinstance(vec, DensityMatrix) or np.ndim(vec) == 2:
            vec = to_bloch(vec)
        else:
            vec = BlochVector.from_components(vec)
    n = vec.dim
    gap = (n - 1) / (2.0 * n) - float(vec.components @ vec.components)
    if gap < -LENGTH_TOL:
        raise DomainError(
            f"Bloch length {vec.norm:.15g} exceeds pure-state radius {pure_radius(n):.15g}"
        )
    last = np.sqrt(gap) if gap > roundoff_floor(n) else 0.0
    return ExtendedBlochVector(n, np.append(vec.components, last))


def purity(rho) -> float:
    """``Tr[rho^2]``."""
    m = as_density(rho).matrix
    return float(np.sum(np.abs(m) ** 2))
