"""
Equal-fidelity surfaces of a qubit
==================================

The states at a fixed fidelity from a target on the +z axis form an oblate
ellipsoid, cut off by a plane above which the ellipsoid no longer describes
the level set. A maximally mixed target gives a sphere and a pure target a
flat disc.
"""

# %%
import math

import numpy as np

from blochgeom import (
    contains,
    cross_section_xz,
    equal_fidelity_surface,
    fidelity,
    from_bloch,
    min_fidelity_state,
)
from blochgeom.surfaces import sample_array

# %%
for lam in (0.0, 1 / 6, 2 / 5, 1 / 2):
    s = equal_fidelity_surface(lam, 0.9)
    print(f"{lam:.3f}", s.kind.value, round(s.center_z, 4), round(s.semi_major, 4),
          round(s.semi_minor, 4), s.cutoff_z)

# %%
# Sampled points reproduce the level through the full matrix fidelity.
s = equal_fidelity_surface(2 / 5, 0.6)
target = from_bloch([0, 0, 2 / 5])
pts, flags = sample_array(s, 500, seed=1, include_spurious=True)
genuine = [fidelity(target, from_bloch(p)) for p in pts[~flags]]
spurious = [fidelity(target, from_bloch(p)) for p in pts[flags]]
print(len(genuine), max(abs(f - 0.6) for f in genuine))
print(len(spurious), min(spurious))

# %%
# The semi-major axis depends only on F; the axis ratio only on the target.
for f in (0.6, 0.9, 0.99):
    s = equal_fidelity_surface(1 / 6, f)
    print(f, s.semi_major, math.sqrt(f * (1 - f)), s.semi_minor / s.semi_major)

# %%
# Two pure states with F = 0.99 are about 11.5 degrees apart on the sphere.
print(math.degrees(2 * math.acos(math.sqrt(0.99))))

# %%
# The antipodal pure state has the smallest fidelity, 1/2 - lam.
for lam in (0.0, 1 / 6, 2 / 5, 1 / 2):
    print(lam, min_fidelity_state(lam))

# %%
# Cross-sections in the xz plane; spurious arcs are drawn dotted.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 3, figsize=(12, 4))
    for ax, lam in zip(axes, (1 / 2, 2 / 5, 1 / 6)):
        ax.add_patch(plt.Circle((0, 0), 0.5, fill=False, color="0.6"))
        for f in (0.6, 0.9, 0.99):
            sec = cross_section_xz(equal_fidelity_surface(lam, f), 360)
            xz = np.array([(p.bloch[0], p.bloch[2]) for p in sec])
            spur = np.array([p.spurious for p in sec])
            ax.plot(*np.where(spur[:, None], np.nan, xz).T, "b-")
            ax.plot(*np.where(~spur[:, None], np.nan, xz).T, "b:")
        ax.plot(0, lam, "ko")
        ax.plot(*min_fidelity_state(lam)[0][[0, 2]], "k.")
        ax.set_aspect("equal")
        ax.set_title(f"lambda = {lam:.3f}")
    fig.savefig("equal_fidelity_sections.png", dpi=100)
    print("wrote equal_fidelity_sections.png")

# %%
print(contains(equal_fidelity_surface(0.0, 0.75), (math.sqrt(0.1875), 0, 0)))
