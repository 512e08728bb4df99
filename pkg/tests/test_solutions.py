import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elliptica.elliptic_core import complete_K
from elliptica.solutions import (ConfigError, Family, FieldConfig, OffShellError, WaveFrame,
                                 amplitude, dispersion, eom_residual, eom_scale, evaluate,
                                 hamiltonian_density, modulus, potential_force, profile,
                                 vacuum_values)

positive = st.floats(min_value=0.05, max_value=5.0)


class TestConfig:
    @pytest.mark.parametrize("kwargs", [
        dict(kind="massless", mu0=1.0, mu=1.0),
        dict(kind="ssb", mu0=0.0),
        dict(kind="massive", mu0=1.0, lam=0.0),
        dict(kind="massive", mu0=-1.0),
        dict(kind="massive", mu0=0.0, mu=0.0),
        dict(kind="massive", mu0=np.nan),
        dict(kind="cubic", mu0=1.0),
    ])
    def test_rejects(self, kwargs):
        with pytest.raises((ConfigError, ValueError)):
            FieldConfig(**kwargs)

    @given(positive, positive)
    def test_v_relation(self, mu0, lam):
        cfg = FieldConfig(Family.SSB, mu0=mu0, lam=lam)
        assert lam * cfg.v**2 / 2 == pytest.approx(mu0**2 / 3, rel=1e-14)

    @given(positive, positive, positive)
    def test_effective_mass_bounds(self, mu0, mu, lam):
        cfg = FieldConfig(Family.MASSIVE, mu0=mu0, mu=mu, lam=lam)
        assert cfg.effective_mass >= mu0


class TestDispersion:
    def test_massive(self, massive):
        assert dispersion(massive) == pytest.approx(2.0, rel=1e-15)

    def test_massless_free(self):
        assert dispersion(FieldConfig(Family.MASSLESS, mu=0.0, lam=2.0)) == 0.0

    def test_ssb(self, ssb):
        assert ssb.v == pytest.approx(1.0, rel=1e-15)
        assert dispersion(ssb) == pytest.approx(1.0, rel=1e-15)

    def test_massless_limit_is_continuous(self):
        a = dispersion(FieldConfig(Family.MASSIVE, mu0=1e-8, mu=1.3, lam=0.7))
        b = dispersion(FieldConfig(Family.MASSLESS, mu=1.3, lam=0.7))
        assert abs(a - b) / b < 1e-10

    def test_vanishes_with_interaction(self):
        # mu0 = 0: p^2 = mu^2 sqrt(lam/2) -> 0 as lam -> 0
        assert dispersion(FieldConfig(Family.MASSLESS, mu=1.0, lam=1e-12)) < 1e-5


class TestModulus:
    def test_fixed_families(self, massless, ssb):
        assert modulus(massless).m == -1.0
        assert modulus(ssb).m == -1.0

    def test_massive_value(self, massive):
        assert modulus(massive).m == pytest.approx(-0.5, rel=1e-15)

    def test_linear_limit(self):
        assert abs(modulus(FieldConfig(Family.MASSIVE, mu0=1e6, mu=1.0, lam=2.0)).m) < 1e-11

    @given(positive, positive, positive)
    def test_range(self, mu0, mu, lam):
        m = modulus(FieldConfig(Family.MASSIVE, mu0=mu0, mu=mu, lam=lam)).m
        assert -1.0 < m < 0.0


class TestWaveFrame:
    def test_phase_metric(self):
        frame = WaveFrame((2.0, 0.5, 0.0, -1.0), theta=0.25)
        x = np.array([1.0, 2.0, 3.0, 4.0])
        assert frame.phase(x) == pytest.approx(2.0 - 1.0 + 4.0 + 0.25)
        assert frame.p_squared == pytest.approx(4.0 - 0.25 - 1.0)

    def test_boost_is_on_shell(self, any_config):
        frame = WaveFrame.moving(any_config, [0.5, 0.2, -0.6])
        assert frame.p_squared == pytest.approx(dispersion(any_config), rel=1e-12)

    def test_superluminal(self, massive):
        with pytest.raises(ValueError):
            WaveFrame.moving(massive, [1.0, 0.0, 0.0])

    def test_off_shell_rejected(self, massive):
        with pytest.raises(OffShellError):
            evaluate(massive, WaveFrame((1.5, 0, 0, 0)), np.zeros(4))

    def test_bad_length(self):
        with pytest.raises(ValueError):
            WaveFrame((1.0, 0.0))


class TestEvaluate:
    def test_zero_phase(self, any_config):
        frame = WaveFrame.rest(any_config)
        val = evaluate(any_config, frame, np.zeros(4))
        expected = any_config.v if any_config.kind is Family.SSB else 0.0
        assert val == pytest.approx(expected, abs=1e-15)

    def test_peak(self, massless):
        frame = WaveFrame.rest(massless, theta=complete_K(-1.0))
        A = massless.mu * (2 / massless.lam) ** 0.25
        assert evaluate(massless, frame, np.zeros(4)) == pytest.approx(A, rel=1e-14)
        assert evaluate(massless, frame, np.zeros(4), branch=-1) == pytest.approx(-A, rel=1e-14)

    def test_z2_pairing_exact(self, any_config, rng):
        frame = WaveFrame.moving(any_config, [0.1, 0.2, 0.3], theta=0.7)
        x = rng.uniform(-4, 4, (200, 4))
        np.testing.assert_array_equal(evaluate(any_config, frame, x, -1),
                                      -evaluate(any_config, frame, x, 1))

    def test_ssb_never_zero(self, ssb, rng):
        u = rng.uniform(-30, 30, 5000)
        phi = profile(ssb, u)
        assert np.all(phi >= ssb.v * (1 - 1e-14))
        assert np.all(phi <= np.sqrt(2) * ssb.v * (1 + 1e-14))

    def test_bad_branch(self, massive):
        with pytest.raises(ValueError):
            profile(massive, 0.0, branch=2)


class TestEom:
    def test_three_families(self, any_config, rng):
        frame = WaveFrame.moving(any_config, [0.3, -0.2, 0.1], theta=0.4)
        x = rng.uniform(-5, 5, (1000, 4))
        r = eom_residual(any_config, frame, x, h=1e-3)
        assert np.abs(r).max() < 1e-5 * eom_scale(any_config)

    @settings(max_examples=25, deadline=None)
    @given(positive, positive, positive, st.floats(-0.9, 0.9))
    def test_random_parameters(self, mu0, mu, lam, vx):
        cfg = FieldConfig(Family.MASSIVE, mu0=mu0, mu=mu, lam=lam)
        frame = WaveFrame.moving(cfg, [vx, 0.0, 0.0])
        x = np.random.default_rng(1).uniform(-3, 3, (50, 4))
        assert np.abs(eom_residual(cfg, frame, x)).max() < 1e-5 * eom_scale(cfg)

    def test_residual_converges_at_fourth_order(self, massive):
        frame = WaveFrame.rest(massive, theta=0.3)
        x = np.array([0.41, 0, 0, 0])
        r1 = abs(eom_residual(massive, frame, x, h=0.1))
        r2 = abs(eom_residual(massive, frame, x, h=0.05))
        assert r1 / r2 == pytest.approx(16, rel=0.1)

    def test_wrong_dispersion_detected(self, any_config, rng):
        frame = WaveFrame.moving(any_config, [0.3, 0.0, 0.0])
        p = list(frame.p)
        p[0] = np.sqrt(p[0] ** 2 + 0.01 * frame.p_squared)
        bad = WaveFrame(tuple(p))
        x = rng.uniform(-5, 5, (200, 4))
        with pytest.raises(OffShellError):
            eom_residual(any_config, bad, x)
        r = eom_residual(any_config, bad, x, strict=False)
        assert np.abs(r).max() > 1e-3 * eom_scale(any_config)

    def test_ssb_uniform_vacua(self, ssb):
        for phi in vacuum_values(ssb):
            assert potential_force(ssb, phi) == pytest.approx(0.0, abs=1e-14)

    def test_massless_weak_coupling(self, rng):
        # amplitude grows like lam^(-1/4); relative residual stays small
        cfg = FieldConfig(Family.MASSLESS, mu=1.0, lam=1e-6)
        assert amplitude(cfg) == pytest.approx((2 / 1e-6) ** 0.25)
        frame = WaveFrame.rest(cfg)
        x = rng.uniform(-50, 50, (100, 4))
        assert np.abs(eom_residual(cfg, frame, x, h=1e-1)).max() < 1e-5 * eom_scale(cfg)

    def test_bad_step(self, massive):
        with pytest.raises(ValueError):
            eom_residual(massive, WaveFrame.rest(massive), np.zeros(4), h=0.0)


class TestHamiltonian:
    def test_origin_rest_frame(self, massless):
        frame = WaveFrame.rest(massless)
        A = amplitude(massless)
        m = frame.p[0]
        assert hamiltonian_density(massless, frame, np.zeros(4)) == pytest.approx(0.5 * A**2 * m**2)

    def test_vacuum(self):
        cfg = FieldConfig(Family.MASSLESS, mu=0.0, lam=2.0)
        frame = WaveFrame.rest(cfg)
        x = np.random.default_rng(0).uniform(-3, 3, (20, 4))
        assert np.all(hamiltonian_density(cfg, frame, x) == 0.0)

    def test_periodic(self, any_config):
        frame = WaveFrame.rest(any_config)
        T = 4 * modulus(any_config).K / frame.p[0]
        t = np.linspace(0, T, 50)
        x0 = np.stack([t, 0 * t, 0 * t, 0 * t], axis=-1)
        x1 = x0.copy()
        x1[:, 0] += T
        np.testing.assert_allclose(hamiltonian_density(any_config, frame, x0),
                                   hamiltonian_density(any_config, frame, x1), atol=1e-10)

    def test_conserved_along_rest_frame(self, any_config):
        # time-only dependence: the density is the conserved mechanical energy
        frame = WaveFrame.rest(any_config)
        t = np.linspace(0, 10, 200)
        x = np.stack([t, 0 * t, 0 * t, 0 * t], axis=-1)
        h = hamiltonian_density(any_config, frame, x)
        assert np.ptp(h) < 1e-12 * max(1.0, abs(h).max())
