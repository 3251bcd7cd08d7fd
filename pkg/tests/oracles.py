"""Independent reference computations used as test oracles.

None of these touch the Jacobi solver or the library's fidelity code.
"""

import itertools

import mpmath
import numpy as np


def charpoly_eigenvalues(h, dps=50):
    """Eigenvalues of a Hermitian matrix as roots of its characteristic polynomial.

    Coefficients come from the Faddeev-LeVerrier recursion in high-precision
    complex arithmetic; roots from mpmath's polynomial solver.
    """
    with mpmath.workdps(dps):
        n = len(h)
        a = mpmath.matrix([[mpmath.mpc(complex(h[i][j])) for j in range(n)] for i in range(n)])
        coeffs = [mpmath.mpf(1)]
        m = mpmath.zeros(n, n)
        eye = mpmath.eye(n)
        for k in range(1, n + 1):
            m = a * m + coeffs[-1] * eye
            am = a * m
            tr = sum(am[i, i] for i in range(n))
            coeffs.append(-tr / k)
        roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
        return sorted(float(mpmath.re(r)) for r in roots)


def diagonal_fidelity(p, q):
    """Fidelity of commuting diagonal states: (sum_i sqrt(p_i q_i))^2."""
    return float(np.sum(np.sqrt(np.asarray(p) * np.asarray(q)))) ** 2


def pure_overlap_fidelity(psi, phi):
    return float(abs(np.vdot(psi, phi)) ** 2)


def bloch_from_pauli(rho):
    """Qubit Bloch vector (radius-1/2 convention) straight from Pauli traces."""
    sx = np.array([[0, 1], [1, 0]])
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.array([[1, 0], [0, -1]])
    rho = np.asarray(rho)
    return np.array([np.trace(rho @ s).real / 2 for s in (sx, sy, sz)])


def grid_min_qubit_fidelity(lam, per_axis=100):
    """Minimum of the qubit Bloch-vector fidelity formula over a spherical grid.

    ``per_axis**3`` points (radius, polar, azimuth) covering the closed ball of
    radius 1/2, target at ``(0, 0, lam)``.
    """
    r = np.linspace(0.0, 0.5, per_axis)
    th = np.linspace(0.0, np.pi, per_axis)
    ph = np.linspace(0.0, 2 * np.pi, per_axis, endpoint=False)
    R, T, P = np.meshgrid(r, th, ph, indexing="ij")
    x = R * np.sin(T) * np.cos(P)
    y = R * np.sin(T) * np.sin(P)
    z = R * np.cos(T)
    del x, y
    tgap = np.sqrt(max(0.25 - lam * lam, 0.0))
    gap = np.sqrt(np.clip(0.25 - R**2, 0.0, None))
    f = 0.5 + 2.0 * lam * z + 2.0 * tgap * gap
    i = np.unravel_index(np.argmin(f), f.shape)
    return float(f[i]), (float(R[i]), float(T[i]), float(P[i])), f.size


def gram_matrix(mats):
    """Tr[A_i A_j] for all pairs."""
    return np.array([[np.trace(a @ b) for b in mats] for a in mats])


def all_pairs(n):
    return list(itertools.combinations(range(n), 2))
