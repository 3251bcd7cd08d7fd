"""Dense complex Hermitian linear algebra.

Everything here is small-matrix code (N up to ~16) written without LAPACK so
that the fidelity routes built on top of it depend on nothing but numpy array
arithmetic.

Random numbers
--------------
Seeded generation uses numpy's ``PCG64`` bit generator as a raw stream of
64-bit words. Each word is mapped to a double in (0, 1] through its top 53
bits, and normal variates come from the Box-Muller transform applied to
consecutive pairs. Only ``PCG64.random_raw`` is used, whose output is frozen
by numpy's stream-compatibility policy, so test vectors do not drift with
numpy releases.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError, DimensionError, DomainError, NotPositiveSemidefinite

__all__ = [
    "EigenDecomposition",
    "as_hermitian",
    "eigh",
    "sqrt_psd",
    "is_psd",
    "numerical_zero",
    "roundoff_floor",
    "random_normals",
    "random_uniforms",
    "random_hermitian",
    "random_density",
    "random_pure_density",
    "random_unitary",
]

HERMITIAN_TOL = 1e-12
PSD_CLAMP = 1e-10
MAX_SWEEPS = 100
_REL_OFF_TOL = 1e-14


class EigenDecomposition(NamedTuple):
    """Ascending eigenvalues and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_hermitian(h, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return `h` as a read-only complex array after checking Hermiticity.

    Raises `DimensionError` for non-square or 1x1 input and `DomainError` when
    some entry differs from the conjugate of its transpose by more than `tol`.
    """
    a = np.array(h, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 2:
        raise DimensionError("dimension must be at least 2")
    resid = np.max(np.abs(a - a.conj().T))
    if resid > tol:
        raise DomainError(f"matrix is not Hermitian (max |H - H^dagger| = {resid:.3e})")
    a.flags.writeable = False
    return a


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def eigh(h) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Each off-diagonal pair ``(p, q)`` is annihilated by a 2x2 unitary made of a
    phase that turns ``h[p, q]`` real followed by a real Jacobi rotation.
    Sweeps stop once the off-diagonal Frobenius norm falls below
    ``1e-14 * ||h||_F``.

    Raises
    ------
    ConvergenceError
        If 100 sweeps do not reach the tolerance.
    """
    a = np.array(as_hermitian(h), dtype=np.complex128)
    n = a.shape[0]
    # exact Hermitian start so round-off cannot accumulate asymmetry
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    target = _REL_OFF_TOL * float(np.sqrt(np.sum(np.abs(a) ** 2)))

    sweeps = 0
    off = _off_norm(a)
    while off > target:
        if sweeps == MAX_SWEEPS:
            raise ConvergenceError(off, sweeps)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                phase = apq / mag
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # g = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                g = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ g
        off = _off_norm(a)

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    w.flags.writeable = False
    v.flags.writeable = False
    return EigenDecomposition(w, v)


def sqrt_psd(h) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-1e-10, 0)`` are treated as round-off and clamped to 0,
    as are positive eigenvalues below ``4 N eps`` times the spectral radius,
    which the eigensolver cannot distinguish from zero. Without the second
    clamp a rank-deficient input gains ~sqrt(eps) spurious weight.

    Raises
    ------
    NotPositiveSemidefinite
        If an eigenvalue lies below ``-1e-10``.
    """
    w, v = eigh(h)
    if w[0] < -PSD_CLAMP:
        raise NotPositiveSemidefinite(w[0])
    w = np.where(w < numerical_zero(w), 0.0, w)
    r = (v * np.sqrt(w)) @ v.conj().T
    r = 0.5 * (r + r.conj().T)
    r.flags.writeable = False
    return r


def numerical_zero(eigenvalues) -> float:
    """Magnitude below which an eigenvalue is indistinguishable from zero."""
    w = np.asarray(eigenvalues)
    return 4.0 * w.size * np.finfo(np.float64).eps * float(np.max(np.abs(w)))


def roundoff_floor(dim: int) -> float:
    """Absolute size of round-off in unit-scale quantities such as ``1 - Tr[rho^2]``.

    Values below this are zeroed before a square root is taken.
    """
    return 8.0 * dim * np.finfo(np.float64).eps


def is_psd(h, tol: float = PSD_CLAMP) -> bool:
    """True iff the smallest eigenvalue of `h` is at least ``-tol``."""
    return bool(eigh(h).eigenvalues[0] >= -tol)


def random_uniforms(count: int, seed: int) -> np.ndarray:
    """`count` doubles in (0, 1] from the raw PCG64 stream for `seed`."""
    raw = np.random.PCG64(seed).random_raw(count)
    return ((raw >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53


def random_normals(count: int, seed: int) -> np.ndarray:
    """`count` standard normal variates via Box-Muller on the PCG64 stream."""
    pairs = (count + 1) // 2
    u = random_uniforms(2 * pairs, seed)
    r = np.sqrt(-2.0 * np.log(u[0::2]))
    theta = 2.0 * np.pi * u[1::2]
    z = np.empty(2 * pairs)
    z[0::2] = r * np.cos(theta)
    z[1::2] = r * np.sin(theta)
    return z[:count]


def _check_dim(dim: int) -> int:
    if int(dim) != dim or dim < 2:
        raise DimensionError(f"dimension must be an integer >= 2, got {dim!r}")
    return int(dim)


def _ginibre(dim: int, seed: int, cols: int | None = None) -> np.ndarray:
    cols = dim if cols is None else cols
    z = random_normals(2 * dim * cols, seed)
    return (z[0::2] + 1j * z[1::2]).reshape(dim, cols)


def random_hermitian(dim: int, seed: int) -> np.ndarray:
    """Seeded Hermitian matrix ``(G + G^dagger) / 2`` with Ginibre `G`."""
    g = _ginibre(_check_dim(dim), seed)
    h = 0.5 * (g + g.conj().T)
    h.flags.writeable = False
    return h


def random_density(dim: int, seed: int):
    """Seeded full-rank `DensityMatrix` ``G G^dagger / Tr[G G^dagger]``."""
    from .states import DensityMatrix

    g = _ginibre(_check_dim(dim), seed)
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rho / np.trace(rho).real)


def random_pure_density(dim: int, seed: int):
    """Projector onto a seeded normalized Gaussian vector, as a `DensityMatrix`."""
    from .states import DensityMatrix

    psi = _ginibre(_check_dim(dim), seed, cols=1)[:, 0]
    psi = psi / np.linalg.norm(psi)
    return DensityMatrix(np.outer(psi, psi.conj()))


def random_unitary(dim: int, seed: int) -> np.ndarray:
    """Seeded unitary built from Givens rotations on every coordinate pair.

    Each pair ``(p, q)`` gets a rotation angle in ``[0, pi/2]`` and two
    phases; a final diagonal of phases completes the product.
    """
    n = _check_dim(dim)
    npairs = n * (n - 1) // 2
    u = random_uniforms(3 * npairs + n, seed)
    out = np.eye(n, dtype=np.complex128)
    k = 0
    for p in range(n - 1):
        for q in range(p + 1, n):
            theta = 0.5 * np.pi * u[k]
            phi = 2.0 * np.pi * u[k + 1]
            chi = 2.0 * np.pi * u[k + 2]
            k += 3
            c, s = np.cos(theta), np.sin(theta)
            g = np.array([
                [c * np.exp(1j * phi), -s * np.exp(-1j * chi)],
                [s * np.exp(1j * chi), c * np.exp(-1j * phi)],
            ])
            idx = [p, q]
            out[:, idx] = out[:, idx] @ g
    out = out * np.exp(2j * np.pi * u[k:k + n])
    out.flags.writeable = False
    return out
