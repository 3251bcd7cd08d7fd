"""
Fidelity, super-fidelity and distances
======================================

Several routes to the same qubit fidelity, where they stop agreeing for
larger systems, and how the extended-vector distance relates to Bures.
"""

# %%
import numpy as np

from blochgeom import (
    bures_distance,
    compare,
    distance_dl,
    extend,
    fidelity,
    fidelity_eigsum,
    fidelity_extended,
    fidelity_qubit_bloch,
    inner_distance,
    super_fidelity,
    to_bloch,
)
from blochgeom.linalg import random_density

# %%
# For qubits every route gives the same number.
a, b = random_density(2, seed=10), random_density(2, seed=11)
la, lb = to_bloch(a), to_bloch(b)
print(fidelity(a, b))
print(fidelity_eigsum(a, b))
print(fidelity_qubit_bloch(la, lb))
print(fidelity_extended(extend(la), extend(lb)))
print(super_fidelity(a, b))

# %%
# Fidelity is one minus the squared distance between extended vectors.
print(1 - np.sum((extend(a).components - extend(b).components) ** 2))

# %%
# For a qutrit the super-fidelity is only an upper bound.
a, b = random_density(3, seed=10), random_density(3, seed=11)
print(fidelity(a, b), super_fidelity(a, b))

# %%
# Two diagonal qutrit states with different purities but (almost) the same
# fidelity to the maximally mixed state.
rho_t = np.eye(3) / 3
rho_a = np.diag([0.735, 0.1325, 0.1325])
rho_b = np.diag([0.04, 0.48, 0.48])
print(fidelity(rho_t, rho_a), fidelity(rho_t, rho_b))
print(np.sum(rho_a**2), np.sum(rho_b**2))

# %%
# Close to F = 1 the squared Bures distance and the squared extended distance
# both approach the infidelity.
for delta in (1e-2, 1e-3, 1e-4):
    half = np.arccos(np.sqrt(1 - delta))
    p = np.diag([1.0, 0.0])
    q = 0.5 * np.eye(2) + 0.5 * np.array(
        [[np.cos(2 * half), np.sin(2 * half)], [np.sin(2 * half), -np.cos(2 * half)]]
    )
    print(delta, bures_distance(p, q) ** 2 / delta, distance_dl(p, q) ** 2 / delta)

# %%
# The great-circle distance on the qubit hemisphere is the Bures angle.
a, b = random_density(2, seed=20), random_density(2, seed=21)
print(inner_distance(a, b), np.arccos(np.sqrt(fidelity(a, b))))

# %%
print(compare(np.eye(2) / 2, np.diag([1.0, 0.0])))
