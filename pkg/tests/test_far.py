import cmath
import math

import numpy as np
import pytest

from susyjc.errors import (DegenerateCouplings, FactorizationMismatch,
                           NotConverged)
from susyjc.far import (FarParams, constraint_check, far_from_alphas,
                        far_hamiltonian, far_spectrum_shape)
from susyjc.hilbert import HilbertConfig, ModelParams, build_hamiltonian
from susyjc.oracle import EigenSolution, certify_truncation, diagonalize


def test_parameter_map_anchor():
    fp = far_from_alphas(1.0, 2.0, 1.0)
    assert fp.omega == 2.5
    assert fp.omega0 == 1.5
    assert fp.lam == 2.0
    assert fp.mu == 1.0
    assert fp.omega_c == 1.0 + 1.25
    assert fp.phi_lambda == 0.0 and fp.phi_mu == 0.0
    # the detuning the map enforces
    assert fp.omega0 - fp.omega == -abs(fp.alpha_r) ** 2


def test_parameter_map_phases():
    fp = far_from_alphas(0.01 * cmath.exp(0.3j), cmath.exp(-0.9j),
                         0.5 * cmath.exp(1.2j))
    assert abs(fp.phi_lambda - 1.2) < 1e-15
    assert abs(fp.phi_mu - (-0.9)) < 1e-15
    assert abs(fp.lam - 0.01) < 1e-17
    assert abs(fp.mu - 0.005) < 1e-17


def test_equal_magnitudes_refused():
    with pytest.raises(DegenerateCouplings):
        far_from_alphas(0.5, 1.0, -1.0)
    with pytest.raises(DegenerateCouplings):
        far_from_alphas(0.5, 1.0, cmath.exp(0.4j))


def test_all_couplings_zero_is_a_constant():
    fp = far_from_alphas(0.7, 0.0, 0.0)
    cfg = HilbertConfig(6)
    h = far_hamiltonian(cfg, fp)
    assert np.abs(h - 0.49 * np.eye(cfg.dim)).max() < 1e-15


def test_factorized_and_explicit_forms_agree():
    rng = np.random.default_rng(11)
    cfg = HilbertConfig(40)
    for _ in range(10):
        mags = rng.uniform(0.05, 1.5, size=3)
        phases = rng.uniform(-math.pi, math.pi, size=3)
        if abs(mags[1] - mags[2]) < 1e-3:
            mags[2] *= 1.5
        a0, aq, ar = (m * cmath.exp(1j * p) for m, p in zip(mags, phases))
        fp = far_from_alphas(a0, aq, ar)
        h = far_hamiltonian(cfg, fp)  # raises FactorizationMismatch on defect
        # anticommutator of an operator with its adjoint: nonnegative
        assert np.linalg.eigvalsh(h).min() > -1e-10
        assert np.abs(h - h.conj().T).max() < 1e-14


def test_hand_built_params_are_caught():
    fp = far_from_alphas(0.3, 1.0, 0.4)
    bad = FarParams(alpha0=fp.alpha0, alpha_q=fp.alpha_q, alpha_r=fp.alpha_r,
                    omega=fp.omega, omega0=fp.omega0 + 0.05, lam=fp.lam,
                    mu=fp.mu, phi_lambda=fp.phi_lambda, phi_mu=fp.phi_mu,
                    omega_c=fp.omega_c)
    with pytest.raises(FactorizationMismatch):
        far_hamiltonian(HilbertConfig(20), bad)
    checks = constraint_check(bad)
    assert checks["detuning_residual"] > 1e-3
    good = constraint_check(fp)
    assert good["detuning_residual"] < 1e-15
    assert good["exceptional_residual"] < 1e-15


def test_pure_rotating_limit_is_a_shifted_resonant_jc():
    # alphaR = 0 collapses the model onto a JC Hamiltonian at resonance,
    # displaced by the constant omega_c
    fp = far_from_alphas(0.4, 1.2, 0.0)
    cfg = HilbertConfig(40)
    assert fp.omega == fp.omega0 and fp.mu == 0.0
    h = far_hamiltonian(cfg, fp)
    jc_params = ModelParams(omega=fp.omega, omega0=fp.omega, lam=fp.lam)
    h_jc = build_hamiltonian(cfg, jc_params, "jc") + fp.omega_c * np.eye(cfg.dim)
    # entrywise identical away from the cutoff edge, where the factorized
    # ladder product loses its top diagonal entry
    keep = cfg.boson_index() < cfg.n_max
    assert np.abs((h - h_jc)[np.ix_(keep, keep)]).max() < 1e-13


def test_spectrum_shape_on_synthetic_ladders():
    ideal = np.array([0.0, 1.0, 1.0, 2.0, 2.0, 3.0, 3.0])
    sol = EigenSolution(ideal, np.eye(7, dtype=complex), 7, 99)
    shape = far_spectrum_shape(sol)
    assert shape.has_unique_ground
    assert shape.is_equidistant
    assert shape.degeneracies == (1, 2, 2, 2)
    assert abs(shape.spacing - 1.0) < 1e-15
    assert shape.ground_energy == 0.0
    # a split pair is not silently merged
    split = np.array([0.0, 1.0, 1.2, 2.0, 2.2, 3.0, 3.2])
    shape = far_spectrum_shape(EigenSolution(split, np.eye(7, dtype=complex), 7, 99))
    assert shape.degeneracies == (1, 1, 1, 1, 1, 1, 1)
    assert not shape.is_equidistant
    flat = np.zeros(5)
    shape = far_spectrum_shape(EigenSolution(flat, np.eye(5, dtype=complex), 5, 99))
    assert not shape.has_unique_ground
    assert shape.spacing == 0.0


def test_spectrum_shape_requires_certification():
    sol = diagonalize(far_hamiltonian(HilbertConfig(30), far_from_alphas(0.1, 1.0, 0.2)))
    with pytest.raises(NotConverged):
        far_spectrum_shape(sol)


def test_certified_shape_of_a_weakly_coupled_model():
    fp = far_from_alphas(0.01, 1.0, 3.0)
    builder = lambda n: far_hamiltonian(HilbertConfig(n), fp, check_tol=1e-11)
    sol = certify_truncation(builder, k_levels=9)
    shape = far_spectrum_shape(sol)
    assert shape.has_unique_ground
    assert shape.ground_energy > 0.0
    # excited levels come in near-degenerate pairs whose internal gap is
    # |alphaQ|^2, far above the detector tolerance, so they are reported as
    # split singlets rather than merged pairs
    assert shape.degeneracies[0] == 1
    assert not shape.is_equidistant
    evs = sol.eigenvalues[:9]
    pair_gaps = evs[2::2] - evs[1::2]
    assert np.abs(pair_gaps - 1.0).max() < 0.05
    mids = 0.5 * (evs[2::2] + evs[1::2])
    spac = np.diff(mids)
    assert np.ptp(spac) / spac.mean() < 1e-10
