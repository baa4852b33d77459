"""Eigensolver contract, block-vector lifting, and ground manifolds."""

import numpy as np
import pytest

from xxring.basis import enumerate_sector, rotate, translation_orbits
from xxring.hamiltonian import (Coupling, FieldSetting, apply_hamiltonian,
                                build_momentum_block, build_sector_hamiltonian,
                               )
from xxring.spectra import (GroundManifold, eigh, ground_manifold,
                            lift_block_vector)

FERRO = Coupling(-1.0)
ANTIFERRO = Coupling(1.0)


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


class TestEigh:
    def test_diagonal_matrix(self):
        spectrum = eigh(np.diag([3.0, -1.0, 2.0]))
        np.testing.assert_allclose(spectrum.values, [-1.0, 2.0, 3.0])

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            eigh(np.array([[0.0, 1.0], [0.5, 0.0]]))

    def test_residual_and_orthonormality(self):
        rng = np.random.default_rng(11)
        for dim in (2, 5, 17, 40):
            h = random_hermitian(rng, dim)
            spectrum = eigh(h)
            scale = np.linalg.norm(h)
            for i in range(dim):
                residual = np.linalg.norm(h @ spectrum.vectors[:, i]
                                          - spectrum.values[i] * spectrum.vectors[:, i])
                assert residual <= 1e-10 * scale
            gram = spectrum.vectors.conj().T @ spectrum.vectors
            assert np.abs(gram - np.eye(dim)).max() <= 1e-10

    def test_phase_convention_and_determinism(self):
        rng = np.random.default_rng(3)
        h = random_hermitian(rng, 9)
        first, second = eigh(h), eigh(h)
        np.testing.assert_array_equal(first.vectors, second.vectors)
        for col in range(9):
            lead = first.vectors[np.argmax(np.abs(first.vectors[:, col])), col]
            assert abs(lead.imag) <= 1e-12 and lead.real > 0

    def test_six_site_half_filling_minimum(self):
        h = build_sector_hamiltonian(enumerate_sector(6, 3), ANTIFERRO)
        np.testing.assert_allclose(eigh(h).values[0], -4.0, atol=1e-10)

    def test_seven_site_minimum(self):
        # -2*(1 + 2*cos(2*pi/7)); pinned against the 2^7 brute-force path
        h = build_sector_hamiltonian(enumerate_sector(7, 3), FERRO)
        np.testing.assert_allclose(eigh(h).values[0],
                                   -2 * (1 + 2 * np.cos(2 * np.pi / 7)), atol=1e-10)


class TestLiftBlockVector:
    def test_four_site_ground_amplitudes(self):
        basis = enumerate_sector(4, 2)
        orbits = translation_orbits(basis)
        block = build_momentum_block(basis, orbits, 0, FERRO)
        spectrum = eigh(block.matrix)
        lifted = lift_block_vector(block, spectrum.vectors[:, 0])
        np.testing.assert_allclose(np.linalg.norm(lifted), 1.0, atol=1e-12)
        by_config = dict(zip(basis.configs, lifted))
        for c in (0b0011, 0b0110, 0b1100, 0b1001):
            np.testing.assert_allclose(by_config[c], 1 / (2 * np.sqrt(2)), atol=1e-12)
        for c in (0b0101, 0b1010):
            np.testing.assert_allclose(by_config[c], 0.5, atol=1e-12)

    def test_single_representative_block_is_momentum_state(self):
        basis = enumerate_sector(3, 1)
        orbits = translation_orbits(basis)
        block = build_momentum_block(basis, orbits, 1, FERRO)
        assert block.dim == 1
        lifted = lift_block_vector(block, np.array([1.0]))
        expected = np.exp(-2j * np.pi * np.arange(3) / 3) / np.sqrt(3)
        np.testing.assert_allclose(lifted, expected, atol=1e-12)

    def test_orbit_constant_magnitudes(self):
        for n, k, m in [(6, 3, 0), (6, 3, 3), (8, 4, 2), (7, 3, 5)]:
            basis = enumerate_sector(n, k)
            orbits = translation_orbits(basis)
            block = build_momentum_block(basis, orbits, m, FERRO)
            spectrum = eigh(block.matrix)
            for col in range(block.dim):
                lifted = lift_block_vector(block, spectrum.vectors[:, col])
                for orbit in orbits:
                    if (m * orbit.period) % n:
                        continue
                    mags = [abs(lifted[basis.index_of(c)]) for c in orbit.members]
                    assert max(mags) - min(mags) <= 1e-10

    def test_six_site_orbit_weights(self):
        basis = enumerate_sector(6, 3)
        orbits = translation_orbits(basis)
        block = build_momentum_block(basis, orbits, 0, FERRO)
        spectrum = eigh(block.matrix)
        lifted = lift_block_vector(block, spectrum.vectors[:, 0])
        probs = sorted(abs(lifted[basis.index_of(o.members[0])]) ** 2 for o in orbits)
        np.testing.assert_allclose(probs, [1 / 72, 1 / 18, 1 / 18, 1 / 8], atol=1e-12)

    def test_dimension_mismatch(self):
        basis = enumerate_sector(4, 2)
        block = build_momentum_block(basis, translation_orbits(basis), 0, FERRO)
        with pytest.raises(ValueError):
            lift_block_vector(block, np.ones(3))


class TestGroundManifold:
    def test_four_site_unique_ground(self):
        manifold = ground_manifold(4, FERRO)
        assert manifold.degeneracy == 1
        np.testing.assert_allclose(manifold.energy, -2 * np.sqrt(2), atol=1e-10)
        assert manifold.states[0].k == 2 and manifold.states[0].momentum == 0

    def test_three_site_degeneracies(self):
        ferro = ground_manifold(3, FERRO)
        assert ferro.degeneracy == 2 and ferro.energy == pytest.approx(-2.0)
        assert [(s.k, s.momentum) for s in ferro.states] == [(1, 0), (2, 0)]
        anti = ground_manifold(3, ANTIFERRO)
        assert anti.degeneracy == 4 and anti.energy == pytest.approx(-1.0)
        assert [(s.k, s.momentum) for s in anti.states] == [(1, 1), (1, 2), (2, 1), (2, 2)]

    @pytest.mark.parametrize("n", list(range(2, 13, 2)))
    def test_even_rings_nondegenerate(self, n):
        for coupling in (FERRO, ANTIFERRO):
            manifold = ground_manifold(n, coupling)
            assert manifold.degeneracy == 1
            assert manifold.sectors() == (n // 2,)

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_odd_rings_degenerate(self, n):
        ferro = ground_manifold(n, FERRO)
        assert ferro.degeneracy == 2
        anti = ground_manifold(n, ANTIFERRO)
        assert anti.degeneracy == 4
        for manifold in (ferro, anti):
            assert manifold.sectors() == ((n - 1) // 2, (n + 1) // 2)

    def test_block_path_matches_dense_scan(self):
        for n in range(2, 13):
            for coupling in (FERRO, ANTIFERRO):
                dense_minimum = min(
                    np.linalg.eigvalsh(
                        build_sector_hamiltonian(enumerate_sector(n, k), coupling))[0]
                    for k in range(n + 1))
                manifold = ground_manifold(n, coupling)
                np.testing.assert_allclose(manifold.energy, dense_minimum, atol=1e-10)

    def test_states_are_orthonormal_eigenstates(self):
        manifold = ground_manifold(5, ANTIFERRO)
        states = manifold.states
        for i, state in enumerate(states):
            np.testing.assert_allclose(np.linalg.norm(state.amplitudes), 1.0, atol=1e-12)
            image = apply_hamiltonian(state.basis, ANTIFERRO, state.amplitudes)
            rayleigh = np.vdot(state.amplitudes, image).real
            np.testing.assert_allclose(rayleigh, manifold.energy, atol=1e-10)
            for other in states[i + 1:]:
                if other.basis.k == state.basis.k:
                    overlap = abs(np.vdot(state.amplitudes, other.amplitudes))
                    assert overlap <= 1e-10

    def test_field_selects_single_sector(self):
        manifold = ground_manifold(3, FERRO, FieldSetting(b=0.1))
        assert manifold.degeneracy == 1
        assert manifold.states[0].k == 2
        np.testing.assert_allclose(manifold.energy, -2.05, atol=1e-12)

    def test_threaded_scan_is_identical(self):
        serial = ground_manifold(7, ANTIFERRO)
        threaded = ground_manifold(7, ANTIFERRO, threads=4)
        assert serial.energy == threaded.energy
        assert serial.degeneracy == threaded.degeneracy
        for a, b in zip(serial.states, threaded.states):
            assert (a.k, a.momentum) == (b.k, b.momentum)
            np.testing.assert_array_equal(a.amplitudes, b.amplitudes)
