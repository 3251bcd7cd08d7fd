import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from blochgeom.errors import DimensionError, DomainError, InvalidState
from blochgeom.linalg import eigh, random_density, random_pure_density
from blochgeom.states import (
    BlochVector,
    DensityMatrix,
    extend,
    from_bloch,
    pure_radius,
    purity,
    su_generators,
    to_bloch,
)

from oracles import bloch_from_pauli, gram_matrix

PAULI = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


class TestGenerators:
    def test_qubit_is_pauli(self):
        gens = su_generators(2)
        assert gens.labels == ("u12", "v12", "w1")
        for g, s in zip(gens, PAULI):
            np.testing.assert_array_equal(g, s)

    def test_qutrit(self):
        gens = su_generators(3)
        assert len(gens) == 8
        assert gens.labels == ("u12", "u13", "u23", "v12", "v13", "v23", "w1", "w2")
        np.testing.assert_allclose(gens[7], np.sqrt(1 / 3) * np.diag([1, 1, -2]), atol=1e-16)
        np.testing.assert_allclose(gens[6], np.diag([1, -1, 0]), atol=1e-16)
        expected = np.zeros((3, 3), dtype=complex)
        expected[0, 2], expected[2, 0] = -1j, 1j
        np.testing.assert_array_equal(gens[4], expected)

    @pytest.mark.parametrize("dim", range(2, 8))
    def test_relations(self, dim):
        gens = su_generators(dim)
        n_off = dim * (dim - 1) // 2
        assert len(gens) == dim**2 - 1 == 2 * n_off + dim - 1
        for g in gens:
            assert np.max(np.abs(g - g.conj().T)) < 1e-14
            assert abs(np.trace(g)) < 1e-14
        np.testing.assert_allclose(gram_matrix(gens.generators), 2 * np.eye(dim**2 - 1), atol=1e-12)

    def test_rejects_small_dim(self):
        with pytest.raises(DimensionError):
            su_generators(1)

    def test_generators_immutable(self):
        with pytest.raises(ValueError):
            su_generators(2)[0][0, 0] = 5


class TestDensityMatrix:
    def test_accepts_states(self):
        assert DensityMatrix(np.diag([0.3, 0.7])).dim == 2

    @pytest.mark.parametrize(
        "m, word",
        [
            (np.diag([0.5, 0.6]), "trace"),
            (np.diag([1.2, -0.2]), "positive"),
            (np.array([[0.5, 0.1], [0.3, 0.5]]), "Hermitian"),
        ],
    )
    def test_reports_violation(self, m, word):
        with pytest.raises(InvalidState, match=word):
            DensityMatrix(m)

    def test_conjugation(self):
        rho = DensityMatrix(np.diag([1.0, 0.0]))
        flipped = rho.conjugate_by(PAULI[0])
        np.testing.assert_allclose(flipped.matrix, np.diag([0.0, 1.0]))


class TestToBloch:
    def test_ground_state(self):
        np.testing.assert_array_equal(to_bloch(np.diag([1.0, 0.0])).components, [0, 0, 0.5])

    @pytest.mark.parametrize("dim", [2, 3])
    def test_maximally_mixed(self, dim):
        np.testing.assert_array_equal(to_bloch(np.eye(dim) / dim).components, 0.0)

    def test_matches_pauli_traces(self):
        for seed in range(20):
            rho = random_density(2, seed)
            np.testing.assert_allclose(
                to_bloch(rho).components, bloch_from_pauli(rho.matrix), atol=1e-15
            )


class TestFromBloch:
    def test_ground_state(self):
        np.testing.assert_array_equal(from_bloch([0, 0, 0.5]).matrix, np.diag([1.0, 0.0]))

    def test_qutrit_origin(self):
        np.testing.assert_allclose(from_bloch(np.zeros(8)).matrix, np.eye(3) / 3, atol=1e-16)

    def test_qutrit_invalid_inside_radius(self):
        # I/3 - 0.5 w1 has eigenvalues 1/3 - 1/2, 1/3 + 1/2, 1/3
        vec = np.zeros(8)
        vec[6] = -0.5
        assert 0.5 < pure_radius(3)
        w = eigh(np.eye(3) / 3 - 0.5 * np.diag([1, -1, 0])).eigenvalues
        assert w[0] == pytest.approx(1 / 3 - 0.5)
        with pytest.raises(InvalidState):
            from_bloch(vec)

    def test_overlong_qubit(self):
        with pytest.raises(InvalidState):
            from_bloch([0, 0, 0.6])

    def test_wrong_component_count(self):
        with pytest.raises(DimensionError):
            from_bloch([0.1, 0.2])

    @pytest.mark.parametrize("dim", [2, 3, 4, 5])
    def test_round_trip_and_purity_identity(self, dim):
        for seed in range(100):
            rho = random_density(dim, seed)
            vec = to_bloch(rho)
            back = from_bloch(vec)
            assert np.max(np.abs(back.matrix - rho.matrix)) < 1e-12
            assert np.max(np.abs(to_bloch(back).components - vec.components)) < 1e-12
            assert abs(purity(rho) - (1 / dim + 2 * vec.norm**2)) < 1e-12
            assert vec.norm <= pure_radius(dim) + 1e-12

    @pytest.mark.parametrize("dim", [2, 3, 4, 5])
    def test_pure_states_saturate(self, dim):
        for seed in range(50):
            assert abs(to_bloch(random_pure_density(dim, seed)).norm - pure_radius(dim)) < 1e-10


class TestExtend:
    def test_qubit_examples(self):
        np.testing.assert_array_equal(extend([0, 0, 0]).components, [0, 0, 0, 0.5])
        np.testing.assert_array_equal(extend([0, 0, 0.5]).components, [0, 0, 0.5, 0])

    def test_qutrit_origin(self):
        ext = extend(np.zeros(8))
        assert ext.last == pytest.approx(0.577350, abs=1e-6)
        assert ext.last == pytest.approx(np.sqrt(1 / 3), abs=1e-15)

    def test_accepts_state(self):
        np.testing.assert_array_equal(extend(np.eye(2) / 2).components, [0, 0, 0, 0.5])

    def test_roundoff_clamped(self):
        assert extend([0, 0, 0.5 + 1e-15]).last == 0.0

    def test_rejects_overlong(self):
        with pytest.raises(DomainError):
            extend([0, 0, 0.6])

    @pytest.mark.parametrize("dim", [2, 3, 4, 5])
    def test_norm_and_last_component(self, dim):
        for seed in range(50):
            rho = random_density(dim, seed)
            ext = extend(rho)
            assert abs(np.linalg.norm(ext.components) - pure_radius(dim)) < 1e-12
            assert abs(ext.last - np.sqrt((1 - purity(rho)) / 2)) < 1e-12
            assert ext.last >= 0


class TestPurity:
    def test_examples(self):
        assert purity(np.diag([1.0, 0.0, 0.0])) == 1.0
        assert purity(np.eye(4) / 4) == pytest.approx(0.25, abs=1e-15)
        assert purity(np.diag([0.735, 0.1325, 0.1325])) == pytest.approx(0.575338, abs=1e-6)
        # direct sum of squares
        assert purity(np.diag([0.735, 0.1325, 0.1325])) == pytest.approx(
            0.735**2 + 2 * 0.1325**2, abs=1e-15
        )


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2**32 - 1), st.floats(0.0, 1.0))
def test_bloch_is_affine_in_mixtures(dim, seed, t):
    a, b = random_density(dim, seed), random_density(dim, seed + 1)
    mix = DensityMatrix(t * a.matrix + (1 - t) * b.matrix)
    np.testing.assert_allclose(
        to_bloch(mix).components,
        t * to_bloch(a).components + (1 - t) * to_bloch(b).components,
        atol=1e-14,
    )


def test_bloch_vector_infers_dim():
    assert BlochVector.from_components(np.zeros(15)).dim == 4
    with pytest.raises(DimensionError):
        BlochVector.from_components(np.zeros(5))
