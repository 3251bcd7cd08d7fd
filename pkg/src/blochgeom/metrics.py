"""Fidelity, super-fidelity and the distances derived from them."""

from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np

from .errors import DimensionError, DomainError
from .linalg import PSD_CLAMP, eigh, numerical_zero, roundoff_floor, sqrt_psd
from .states import (
    BlochVector,
    DensityMatrix,
    ExtendedBlochVector,
    as_density,
    extend,
    purity,
)

__all__ = [
    "ComparisonReport",
    "fidelity",
    "fidelity_raw",
    "fidelity_eigsum",
    "fidelity_qubit_bloch",
    "fidelity_extended",
    "super_fidelity",
    "distance_dl",
    "bures_distance",
    "bures_length",
    "inner_distance",
    "compare",
]

DOMAIN_SLACK = 1e-12
FIDELITY_SLACK = 1e-10


def _clamp(x, lo, hi, what, slack=DOMAIN_SLACK):
    if x < lo - slack or x > hi + slack:
        raise DomainError(f"{what} = {x!r} outside [{lo}, {hi}]")
    return min(max(x, lo), hi)


def _mixedness(x, dim):
    # zero when indistinguishable from a pure state; sqrt would amplify noise
    return x if x > roundoff_floor(dim) else 0.0


def _pair(rho1, rho2):
    a, b = as_density(rho1), as_density(rho2)
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return a, b


def _root_first(a: DensityMatrix, b: DensityMatrix):
    # The square root goes on the less pure state: the root of a (near-)pure
    # matrix carries ~sqrt(eps) noise in its null space, which leaks into the
    # trace unless the other factor is also pure.
    return (a, b) if purity(a) <= purity(b) else (b, a)


def fidelity_raw(rho1, rho2) -> float:
    """``(Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))**2`` without clamping."""
    a, b = _root_first(*_pair(rho1, rho2))
    s = sqrt_psd(a.matrix)
    m = s @ b.matrix @ s
    inner = sqrt_psd(0.5 * (m + m.conj().T))
    return float(np.trace(inner).real ** 2)


def fidelity(rho1, rho2) -> float:
    """Uhlmann fidelity through two matrix square roots, clamped to [0, 1].

    Examples
    --------
    >>> fidelity(np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))
    0.0
    """
    return _clamp(fidelity_raw(rho1, rho2), 0.0, 1.0, "fidelity", FIDELITY_SLACK)


def fidelity_eigsum(rho1, rho2) -> float:
    """Fidelity as ``Tr[rho1 rho2] + 2 sum_{i<j} chi_i chi_j``.

    The ``chi`` are the eigenvalues of ``sqrt(sqrt(rho1) rho2 sqrt(rho1))``,
    i.e. square roots of the eigenvalues of the inner product matrix.
    """
    a, b = _root_first(*_pair(rho1, rho2))
    s = sqrt_psd(a.matrix)
    m = s @ b.matrix @ s
    w = eigh(0.5 * (m + m.conj().T)).eigenvalues
    if w[0] < -PSD_CLAMP:
        raise DomainError(f"negative eigenvalue {w[0]:.3e} in fidelity kernel")
    chi = np.sqrt(np.where(w < numerical_zero(w), 0.0, w))
    overlap = float(np.sum(a.matrix * b.matrix.conj()).real)
    cross = (chi.sum() ** 2 - chi @ chi) / 2.0
    return _clamp(overlap + 2.0 * cross, 0.0, 1.0, "fidelity", FIDELITY_SLACK)


def _qubit_vector(v, cls):
    if isinstance(v, (BlochVector, ExtendedBlochVector)):
        if v.dim != 2:
            raise DimensionError(f"qubit formula needs dim 2, got {v.dim}")
        return v.components
    c = np.asarray(v, dtype=np.float64).reshape(-1)
    size = 3 if cls is BlochVector else 4
    if c.size != size:
        raise DimensionError(f"expected {size} components for a qubit, got {c.size}")
    return c


def fidelity_qubit_bloch(bloch1, bloch2) -> float:
    """Qubit fidelity from two Bloch 3-vectors (radius-1/2 convention)."""
    l1 = _qubit_vector(bloch1, BlochVector)
    l2 = _qubit_vector(bloch2, BlochVector)
    g1 = _mixedness(_clamp(0.25 - l1 @ l1, 0.0, 0.25, "1/4 - |b1|^2"), 2)
    g2 = _mixedness(_clamp(0.25 - l2 @ l2, 0.0, 0.25, "1/4 - |b2|^2"), 2)
    return float(0.5 + 2.0 * (l1 @ l2) + 2.0 * np.sqrt(g1 * g2))


def fidelity_extended(ext1, ext2) -> float:
    """Qubit fidelity ``1/2 + 2 L1.L2`` from extended Bloch 4-vectors."""
    l1 = _qubit_vector(ext1, ExtendedBlochVector)
    l2 = _qubit_vector(ext2, ExtendedBlochVector)
    return float(0.5 + 2.0 * (l1 @ l2))


def super_fidelity(rho1, rho2) -> float:
    """``Tr[rho1 rho2] + sqrt((1 - Tr[rho1^2]) (1 - Tr[rho2^2]))``."""
    a, b = _pair(rho1, rho2)
    overlap = float(np.sum(a.matrix * b.matrix.conj()).real)
    mix = _mixedness(1.0 - purity(a), a.dim) * _mixedness(1.0 - purity(b), b.dim)
    return _clamp(overlap + np.sqrt(mix), 0.0, 1.0, "super-fidelity", FIDELITY_SLACK)


def distance_dl(rho1, rho2) -> float:
    """Euclidean distance between the extended Bloch vectors of two states.

    Equal to ``sqrt(1 - super_fidelity)``; a metric on states of any dimension.
    """
    a, b = _pair(rho1, rho2)
    return float(np.linalg.norm(extend(a).components - extend(b).components))


def bures_distance(rho1, rho2) -> float:
    """``sqrt(2 - 2 sqrt(F))``."""
    f = fidelity(rho1, rho2)
    return float(np.sqrt(max(2.0 - 2.0 * np.sqrt(f), 0.0)))


def bures_length(rho1, rho2) -> float:
    """Bures angle ``arccos(sqrt(F))``."""
    return float(np.arccos(np.sqrt(fidelity(rho1, rho2))))


def inner_distance(rho1, rho2) -> float:
    """Great-circle distance between extended Bloch vectors on their sphere.

    ``sqrt((N-1)/(2N)) * arccos((N F' - 1)/(N - 1))``; for qubits this is the
    Bures length.
    """
    a, b = _pair(rho1, rho2)
    n = a.dim
    cos = _clamp((n * super_fidelity(a, b) - 1.0) / (n - 1.0), -1.0, 1.0, "cos(theta)")
    return float(np.sqrt((n - 1) / (2.0 * n)) * np.arccos(cos))


@dataclass(frozen=True)
class ComparisonReport:
    fidelity: float
    super_fidelity: float
    d_l: float
    bures_distance: float
    inner_distance: float
    fidelity_raw: float

    def as_dict(self) -> dict:
        return asdict(self)


def compare(rho1, rho2) -> ComparisonReport:
    """All measures for one pair; ``fidelity_raw`` is the unclamped value."""
    a, b = _pair(rho1, rho2)
    raw = fidelity_raw(a, b)
    f = _clamp(raw, 0.0, 1.0, "fidelity", FIDELITY_SLACK)
    return ComparisonReport(
        fidelity=f,
        super_fidelity=super_fidelity(a, b),
        d_l=distance_dl(a, b),
        bures_distance=float(np.sqrt(max(2.0 - 2.0 * np.sqrt(f), 0.0))),
        inner_distance=inner_distance(a, b),
        fidelity_raw=raw,
    )
