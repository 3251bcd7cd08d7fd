"""Equal-fidelity surfaces in qubit Bloch space.

For a target on the +z axis at Bloch length ``lam`` (0 <= lam <= 1/2), the
states with fidelity ``F`` to it lie on the oblate ellipsoid

    (x^2 + y^2) / (F(1-F)) + (z - (2F-1) lam)^2 / (F(1-F)(1 - 4 lam^2)) = 1

restricted to ``z <= (2F-1) / (4 lam)``. Ellipsoid points above that plane
come from extended Bloch vectors with a negative fourth component; they are
valid states but their fidelity with the target exceeds ``F``. Two limits are
special: ``lam = 0`` gives a full sphere, and ``lam = 1/2`` (pure target)
gives the flat disc ``z = F - 1/2``.

Points are parameterized by an azimuth ``phi`` and a polar parameter ``u``::

    x = a sin(u) cos(phi),  y = a sin(u) sin(phi),  z = c + b cos(u)

with ``a`` the semi-major axis, ``b`` the semi-minor axis and ``c`` the
centre height. Sampling is uniform in ``(phi, u)``, not in surface area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, NoSolution
from .linalg import random_uniforms

__all__ = [
    "SurfaceKind",
    "EqualFidelitySurface",
    "SurfacePoint",
    "equal_fidelity_surface",
    "contains",
    "sample_points",
    "sample_array",
    "cross_section_xz",
    "min_fidelity_state",
    "rotation_to_z",
]

PARAM_TOL = 1e-12


class SurfaceKind(str, Enum):
    ELLIPSOID = "ellipsoid"
    PLANE_DISC = "plane_disc"
    SPHERE = "sphere"


@dataclass(frozen=True)
class EqualFidelitySurface:
    lambda_t: float
    fidelity_level: float
    kind: SurfaceKind
    center_z: float
    semi_major: float
    semi_minor: float
    cutoff_z: float

    @property
    def target(self) -> np.ndarray:
        return np.array([0.0, 0.0, self.lambda_t])

    @property
    def axis_ratio(self) -> float:
        return math.sqrt(1.0 - 4.0 * self.lambda_t**2)

    @property
    def is_minimal(self) -> bool:
        """True at the lowest reachable level, where only (0, 0, -1/2) qualifies."""
        lam = self.lambda_t
        return lam > 0.0 and abs(self.fidelity_level - (0.5 - lam)) <= PARAM_TOL

    def residual(self, p) -> np.ndarray:
        """Left-hand side of the ellipsoid equation minus one, per point.

        Only meaningful when both semi-axes are nonzero.
        """
        p = np.atleast_2d(np.asarray(p, dtype=np.float64))
        a2 = self.semi_major**2
        b2 = self.semi_minor**2
        return (p[:, 0] ** 2 + p[:, 1] ** 2) / a2 + (p[:, 2] - self.center_z) ** 2 / b2 - 1.0


@dataclass(frozen=True)
class SurfacePoint:
    bloch: tuple
    spurious: bool


def equal_fidelity_surface(lambda_t: float, fidelity: float) -> EqualFidelitySurface:
    """Describe the set of qubit states at fidelity `fidelity` to ``(0, 0, lambda_t)``.

    Raises
    ------
    DomainError
        If `lambda_t` is outside [0, 1/2].
    NoSolution
        If `fidelity` is outside ``[1/2 - lambda_t, 1]``; below that range no
        state reaches the level.
    """
    lam = float(lambda_t)
    f = float(fidelity)
    if not (0.0 <= lam <= 0.5):
        raise DomainError(f"target Bloch length {lam!r} outside [0, 1/2]")
    if not (0.5 - lam - PARAM_TOL <= f <= 1.0 + PARAM_TOL):
        raise NoSolution(f"fidelity {f!r} unreachable for target length {lam!r}; "
                         f"range is [{0.5 - lam!r}, 1]")
    f = min(max(f, 0.5 - lam), 1.0)
    semi_major = math.sqrt(f * (1.0 - f))
    semi_minor = semi_major * math.sqrt(1.0 - 4.0 * lam * lam)
    center = (2.0 * f - 1.0) * lam
    if lam == 0.0:
        kind, cutoff = SurfaceKind.SPHERE, math.inf
    elif lam == 0.5:
        kind, cutoff = SurfaceKind.PLANE_DISC, f - 0.5
        center, semi_minor = cutoff, 0.0
    else:
        kind, cutoff = SurfaceKind.ELLIPSOID, (2.0 * f - 1.0) / (4.0 * lam)
    return EqualFidelitySurface(lam, f, kind, center, semi_major, semi_minor, cutoff)


def contains(surface: EqualFidelitySurface, p, tol: float = 1e-9) -> bool:
    """Whether Bloch point `p` is a genuine member of `surface`.

    For ellipsoids and spheres, `p` must satisfy the surface equation within
    `tol`, lie at or below the cutoff plane and inside the Bloch ball. Axis
    lengths are compared in distance units (``tol`` on the normalized radial
    coordinate scaled by the semi-major axis) so that small surfaces are not
    judged more leniently than large ones.
    """
    x, y, z = (float(c) for c in p)
    if math.sqrt(x * x + y * y + z * z) > 0.5 + tol:
        return False
    if z > surface.cutoff_z + tol:
        return False
    a, b, c = surface.semi_major, surface.semi_minor, surface.center_z
    if surface.kind is SurfaceKind.PLANE_DISC:
        return abs(z - c) <= tol and x * x + y * y <= a * a + tol
    if a == 0.0:
        return math.dist((x, y, z), (0.0, 0.0, c)) <= tol
    if b == 0.0:
        return abs(z - c) <= tol and abs(math.hypot(x, y) - a) <= tol
    # distance-like residual: a * (sqrt(q) - 1) where q is the quadratic form
    q = (x * x + y * y) / (a * a) + (z - c) ** 2 / (b * b)
    return abs(a * (math.sqrt(q) - 1.0)) <= tol


def _u_range(surface: EqualFidelitySurface, include_spurious: bool):
    """Polar-parameter interval that stays at or below the cutoff."""
    if include_spurious or math.isinf(surface.cutoff_z) or surface.semi_minor == 0.0:
        return 0.0, math.pi
    ratio = (surface.cutoff_z - surface.center_z) / surface.semi_minor
    if ratio >= 1.0:
        return 0.0, math.pi
    return math.acos(max(ratio, -1.0)), math.pi


def _points(surface, u, phi):
    a, b, c = surface.semi_major, surface.semi_minor, surface.center_z
    su = np.sin(u)
    pts = np.column_stack([a * su * np.cos(phi), a * su * np.sin(phi), c + b * np.cos(u)])
    return pts


def _flags(surface, pts):
    if surface.kind is SurfaceKind.PLANE_DISC:
        return np.zeros(len(pts), dtype=bool)
    return pts[:, 2] > surface.cutoff_z


def sample_array(surface: EqualFidelitySurface, n: int, seed: int = 42,
                 include_spurious: bool = False):
    """Array form of `sample_points`: ``(points of shape (n, 3), spurious flags)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if surface.is_minimal:
        pts = np.tile([0.0, 0.0, -0.5], (n, 1))
        return pts, np.zeros(n, dtype=bool)
    uni = random_uniforms(2 * n, seed)
    phi = 2.0 * np.pi * (uni[0::2] - 2.0**-53)
    lo, hi = _u_range(surface, include_spurious)
    if surface.kind is SurfaceKind.PLANE_DISC:
        # radial fraction sin(u) sweeps the full disc
        lo, hi = 0.0, 0.5 * math.pi
    # Drawing u uniformly on the admissible interval gives the same law as
    # drawing on [0, pi] and resampling rejected (spurious) candidates.
    u = lo + (hi - lo) * uni[1::2]
    pts = _points(surface, u, phi)
    if surface.kind is SurfaceKind.PLANE_DISC:
        pts[:, 2] = surface.center_z
    flags = _flags(surface, pts)
    if not include_spurious and flags.any():
        # boundary round-off at u == lo
        pts[flags, 2] = surface.cutoff_z
        flags[:] = False
    return pts, flags


def sample_points(surface: EqualFidelitySurface, n: int, seed: int = 42,
                  include_spurious: bool = False) -> list[SurfacePoint]:
    """Draw `n` seeded points from the surface parameterization.

    With ``include_spurious=False`` only points at or below the cutoff plane
    are returned. The output depends only on ``(surface, n, seed,
    include_spurious)``.
    """
    pts, flags = sample_array(surface, n, seed, include_spurious)
    return [SurfacePoint(tuple(map(float, p)), bool(s)) for p, s in zip(pts, flags)]


def cross_section_xz(surface: EqualFidelitySurface, n: int = 360) -> list[SurfacePoint]:
    """`n` points of the ``y = 0`` section, evenly spaced in the ellipse angle.

    The angle runs from the top of the ellipse (``t = 0``) through ``+x`` and
    back through ``-x``, so the points form a closed polyline in order. For a
    pure target the section collapses to the chord ``z = F - 1/2`` traced
    out and back.
    """
    if n < 8:
        raise ValueError("cross section needs at least 8 points")
    t = 2.0 * np.pi * np.arange(n) / n
    a, b, c = surface.semi_major, surface.semi_minor, surface.center_z
    pts = np.column_stack([a * np.sin(t), np.zeros(n), c + b * np.cos(t)])
    flags = _flags(surface, pts)
    return [SurfacePoint(tuple(map(float, p)), bool(s)) for p, s in zip(pts, flags)]


def min_fidelity_state(lambda_t: float):
    """Least-fidelity state for target ``(0, 0, lambda_t)`` and its fidelity.

    The antipodal pure state ``(0, 0, -1/2)`` is always the minimizer, with
    fidelity ``1/2 - lambda_t``.
    """
    lam = float(lambda_t)
    if not (0.0 <= lam <= 0.5):
        raise DomainError(f"target Bloch length {lam!r} outside [0, 1/2]")
    return np.array([0.0, 0.0, -0.5]), 0.5 - lam


def rotation_to_z(bloch) -> tuple[float, np.ndarray]:
    """Rotation taking a qubit Bloch vector onto the +z axis.

    Returns ``(length, R)`` with ``R @ bloch == (0, 0, length)``. Surfaces
    built for ``length`` map back to the original frame through ``R.T``.
    The matching state rotation is a unitary conjugation, which leaves
    fidelities unchanged.
    """
    v = np.asarray(bloch, dtype=np.float64).reshape(3)
    r = float(np.linalg.norm(v))
    if r == 0.0:
        return 0.0, np.eye(3)
    k = v / r
    z = np.array([0.0, 0.0, 1.0])
    axis = np.cross(k, z)
    s = float(np.linalg.norm(axis))
    c = float(k @ z)
    if s < 1e-15:
        return r, (np.eye(3) if c > 0 else np.diag([1.0, -1.0, -1.0]))
    axis /= s
    kx = np.array([[0.0, -axis[2], axis[1]], [axis[2], 0.0, -axis[0]], [-axis[1], axis[0], 0.0]])
    rot = np.eye(3) + s * kx + (1.0 - c) * (kx @ kx)
    return r, rot
