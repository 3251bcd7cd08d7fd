"""
Bloch vectors for any dimension
===============================

Density matrices as real vectors over the SU(N) generators, and the extra
coordinate that puts every state on a sphere.
"""

# %%
import numpy as np

from blochgeom import extend, from_bloch, purity, su_generators, to_bloch
from blochgeom.linalg import random_density, random_pure_density
from blochgeom.states import pure_radius

# %%
# The qubit generators are the Pauli matrices, in x, y, z order.
for label, g in zip(su_generators(2).labels, su_generators(2)):
    print(label, g.real.tolist(), g.imag.tolist())

# %%
# A qutrit has eight: three symmetric, three antisymmetric, two diagonal.
print(su_generators(3).labels)
print(np.round(su_generators(3)[7].real, 4))

# %%
# Components are Tr[rho G_i] / 2, so the qubit ball has radius 1/2.
print(to_bloch(np.diag([1.0, 0.0])).components)
print(to_bloch(np.eye(2) / 2).components)

# %%
# Pure states sit exactly on the radius sqrt((N-1)/(2N)); mixed states inside.
for n in (2, 3, 4):
    pure = to_bloch(random_pure_density(n, seed=1)).norm
    mixed = to_bloch(random_density(n, seed=1)).norm
    print(n, pure_radius(n), pure, mixed)

# %%
# Purity is 1/N + 2|b|^2, and the map back to matrices is exact.
rho = random_density(4, seed=3)
b = to_bloch(rho)
print(purity(rho), 1 / 4 + 2 * b.norm**2)
print(np.max(np.abs(from_bloch(b).matrix - rho.matrix)))

# %%
# Inside the radius is not enough for N > 2: this vector is shorter than the
# pure radius but gives a negative eigenvalue.
vec = np.zeros(8)
vec[6] = -0.5
try:
    from_bloch(vec)
except ValueError as exc:
    print(type(exc).__name__, exc)

# %%
# The extended vector appends sqrt((1 - Tr[rho^2]) / 2). Every state now has
# the same length; pure states have last component 0.
for rho in (np.eye(3) / 3, random_density(3, 5).matrix, random_pure_density(3, 5).matrix):
    ext = extend(rho)
    print(np.linalg.norm(ext.components), ext.last)
