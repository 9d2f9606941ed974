import numpy as np
import pytest
import scipy.linalg as sla

from conftest import random_density_matrix, random_hermitian
from enaqt.errors import DimensionMismatch, NonPhysicalState
from enaqt.lindblad import (
    ChannelSet,
    annihilation_op,
    apply_liouvillian,
    build_liouvillian,
    check_density_matrix,
    dissipator,
    number_op,
    vec,
)
from enaqt.network import Uniform, generate_geometry


def trace_functional(d):
    tr = np.zeros(d * d, dtype=complex)
    tr[:: d + 1] = 1.0
    return tr


class TestDissipator:
    def test_zero_rate_is_zero(self):
        V = annihilation_op(3, 2)
        assert np.array_equal(dissipator(V, 0.0), np.zeros((9, 9)))

    def test_dephasing_fixes_diagonal_states(self):
        d = 4
        D = sum(dissipator(number_op(d, s), 2.0) for s in range(1, d))
        rho = np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex)
        assert np.max(np.abs(D @ vec(rho))) < 1e-15

    def test_extraction_on_occupied_single_site(self):
        # hand evaluation on the 2x2 case: population moves to the vacuum
        gamma = 1.7
        V = annihilation_op(2, 1)
        rho = np.diag([0.0, 1.0]).astype(complex)
        drho = (dissipator(V, gamma) @ vec(rho)).reshape((2, 2), order="F")
        assert drho[0, 0] == pytest.approx(gamma, abs=1e-15)
        assert drho[1, 1] == pytest.approx(-gamma, abs=1e-15)

    def test_rejects_non_square(self):
        with pytest.raises(DimensionMismatch):
            dissipator(np.zeros((2, 3)), 1.0)


@pytest.fixture(scope="module")
def chain2():
    spec = generate_geometry("chain", 2, Uniform(0.0), Uniform(1.0), inject={1}, extract={2})
    return spec


class TestBuild:
    def test_closed_system_spectrum_is_imaginary(self, symmetric_chain):
        spec, H = symmetric_chain
        L = build_liouvillian(H, ChannelSet(0, 0, 0), spec)
        ev = np.linalg.eigvals(L)
        assert np.max(np.abs(ev.real)) < 1e-10

    @pytest.mark.parametrize("gd", [0.0, 5.0, 1000.0])
    def test_trace_preservation_on_every_basis_matrix(self, symmetric_chain, gd):
        spec, H = symmetric_chain
        L = build_liouvillian(H, ChannelSet(5.0, 5.0, gd), spec)
        residual = trace_functional(spec.dim) @ L
        assert np.max(np.abs(residual)) < 1e-12

    def test_trace_preservation_grid(self):
        spec = generate_geometry("grid", (4, 4), Uniform(2316.9), Uniform(11.3),
                                 inject={1}, extract={16})
        from enaqt.network import assemble_hamiltonian
        L = build_liouvillian(assemble_hamiltonian(spec), ChannelSet(5, 5, 100), spec)
        assert np.max(np.abs(trace_functional(spec.dim) @ L)) < 1e-12

    def test_chain2_steady_occupations_match_null_space(self, chain2):
        from enaqt.network import assemble_hamiltonian
        H = assemble_hamiltonian(chain2)
        L = build_liouvillian(H, ChannelSet(1.0, 1.0, 0.0), chain2)
        ns = sla.null_space(L)
        assert ns.shape[1] == 1
        rho = ns[:, 0].reshape((3, 3), order="F")
        rho = 0.5 * (rho + rho.conj().T)
        rho /= np.trace(rho).real
        occ = np.real(np.diag(rho))
        assert occ[1] == pytest.approx(5 / 13, abs=1e-12)
        assert occ[2] == pytest.approx(4 / 13, abs=1e-12)

    def test_additivity_in_dephasing_rate(self, symmetric_chain):
        spec, H = symmetric_chain
        def L(gd):
            return build_liouvillian(H, ChannelSet(5, 5, gd), spec)
        lhs = L(0.3) + L(0.7) - L(0.0)
        scale = np.max(np.abs(lhs))
        assert np.max(np.abs(lhs - L(1.0))) < 1e-12 * scale

    def test_contractive_spectrum(self, asymmetric_chain):
        spec, H = asymmetric_chain
        for gd in (0.0, 5.0, 100.0):
            ev = np.linalg.eigvals(build_liouvillian(H, ChannelSet(5, 5, gd), spec))
            assert ev.real.max() <= 1e-10

    def test_dimension_mismatch(self, chain2):
        with pytest.raises(DimensionMismatch):
            build_liouvillian(np.zeros((5, 5)), ChannelSet(1, 1, 1), chain2)

    def test_sparse_storage_round_trip(self, chain2):
        from enaqt.network import assemble_hamiltonian
        H = assemble_hamiltonian(chain2)
        dense = build_liouvillian(H, ChannelSet(1, 2, 3), chain2)
        sparse = build_liouvillian(H, ChannelSet(1, 2, 3), chain2, sparse=True)
        assert np.max(np.abs(sparse.toarray() - dense)) == 0.0


class TestApply:
    def test_matches_materialized_on_random_states(self, asymmetric_chain):
        spec, H = asymmetric_chain
        channels = ChannelSet(5.0, 5.0, 7.0)
        L = build_liouvillian(H, channels, spec)
        rng = np.random.default_rng(1)
        for _ in range(5):
            rho = random_hermitian(rng, spec.dim)
            direct = apply_liouvillian(H, channels, spec, rho)
            mat = (L @ vec(rho)).reshape((spec.dim, spec.dim), order="F")
            scale = np.max(np.abs(mat))
            assert np.max(np.abs(direct - mat)) < 1e-12 * scale

    @pytest.mark.parametrize("kind,params,sinks", [
        ("ring", 6, {3, 4}),
        ("pyramid", None, {5}),
        ("full_graph", 5, {2, 4}),
    ])
    def test_matches_materialized_across_geometries(self, kind, params, sinks):
        from enaqt.network import RandomUniform, assemble_hamiltonian
        spec = generate_geometry(
            kind, params, RandomUniform(0.0, 50.0), RandomUniform(1.0, 10.0),
            inject={1}, extract=sinks, seed=6,
        )
        H = assemble_hamiltonian(spec)
        channels = ChannelSet(1.5, 2.5, 3.5)
        L = build_liouvillian(H, channels, spec)
        rng = np.random.default_rng(8)
        rho = random_hermitian(rng, spec.dim)
        direct = apply_liouvillian(H, channels, spec, rho)
        mat = (L @ vec(rho)).reshape((spec.dim, spec.dim), order="F")
        assert np.max(np.abs(direct - mat)) < 1e-12 * np.max(np.abs(mat))

    def test_steady_state_is_annihilated(self, asymmetric_chain):
        from enaqt.solver import steady_state
        spec, H = asymmetric_chain
        channels = ChannelSet(5.0, 5.0, 3.0)
        sol = steady_state(build_liouvillian(H, channels, spec))
        assert np.max(np.abs(apply_liouvillian(H, channels, spec, sol.rho))) < 1e-9

    def test_pure_dephasing_decay_rates(self, symmetric_chain):
        spec, H0 = symmetric_chain
        channels = ChannelSet(0.0, 0.0, 4.0)
        H = np.zeros_like(H0)
        d = spec.dim
        # site-site coherence decays at gamma_deph
        rho = np.zeros((d, d), dtype=complex)
        rho[2, 5] = 1.0
        drho = apply_liouvillian(H, channels, spec, rho)
        assert drho[2, 5] == pytest.approx(-4.0, abs=1e-15)
        # site-vacuum coherence decays at gamma_deph / 2
        rho = np.zeros((d, d), dtype=complex)
        rho[0, 3] = 1.0
        drho = apply_liouvillian(H, channels, spec, rho)
        assert drho[0, 3] == pytest.approx(-2.0, abs=1e-15)
        # vacuum population is untouched by dephasing
        rho = np.zeros((d, d), dtype=complex)
        rho[0, 0] = 1.0
        assert np.max(np.abs(apply_liouvillian(H, channels, spec, rho))) == 0.0

    def test_hermiticity_preservation(self, asymmetric_chain):
        spec, H = asymmetric_chain
        channels = ChannelSet(2.0, 3.0, 4.0)
        rng = np.random.default_rng(7)
        X = rng.normal(size=(spec.dim, spec.dim)) + 1j * rng.normal(size=(spec.dim, spec.dim))
        a = apply_liouvillian(H, channels, spec, X.conj().T)
        b = apply_liouvillian(H, channels, spec, X).conj().T
        assert np.max(np.abs(a - b)) < 1e-12 * np.max(np.abs(b))

    def test_dimension_mismatch(self, chain2):
        with pytest.raises(DimensionMismatch):
            apply_liouvillian(np.zeros((3, 3)), ChannelSet(), chain2, np.zeros((4, 4)))


class TestChannelSet:
    def test_rejects_negative_rate(self):
        with pytest.raises(ValueError):
            ChannelSet(gamma_inj=-1.0)

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            ChannelSet(gamma_deph=float("nan"))


class TestDensityMatrixChecks:
    def test_valid_state_passes(self):
        rho = random_density_matrix(np.random.default_rng(0), 5)
        assert check_density_matrix(rho) is rho

    def test_non_hermitian_rejected(self):
        rho = np.diag([0.5, 0.5]).astype(complex)
        rho[0, 1] = 0.1
        with pytest.raises(NonPhysicalState):
            check_density_matrix(rho)

    def test_bad_trace_rejected(self):
        with pytest.raises(NonPhysicalState):
            check_density_matrix(np.diag([0.6, 0.6]).astype(complex))

    def test_negative_eigenvalue_rejected(self):
        with pytest.raises(NonPhysicalState):
            check_density_matrix(np.diag([1.2, -0.2]).astype(complex))
