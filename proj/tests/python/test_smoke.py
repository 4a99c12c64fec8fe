import math

import numpy as np
import pytest

import jcq


def test_constants_and_beta():
    assert jcq.HBAR == pytest.approx(658.2119569)
    assert jcq.thermal_beta(30.0) == pytest.approx(0.38681727072485284, rel=1e-14)
    with pytest.raises(ValueError):
        jcq.thermal_beta(-1.0)


def test_bath_functions():
    bath = jcq.BathModel()
    assert jcq.spectral_density(bath, 0.078698) == pytest.approx(1.6019306617757931e-3, rel=1e-12)
    g0 = jcq.response_function(bath, 0.0)
    assert g0.imag == 0.0 and g0.real > 0.0
    t, re, im = jcq.response_samples(bath, 50.0, 500)
    assert t.shape == (501,) and re.shape == (501,) and im.shape == (501,)
    assert jcq.memory_time(bath) == pytest.approx(1.4)
    with pytest.raises(jcq.SaturationError):
        jcq.memory_time(bath, 1e-6)
    with pytest.raises(ValueError):
        jcq.BathModel(alpha=-1.0)


def test_eta_table():
    eta = jcq.eta_coefficients(jcq.BathModel(), 12.707, 2)
    assert eta["self_interior"] == pytest.approx(0.02735399871156821 - 0.4079593873463076j, rel=1e-7)
    assert len(eta["interior"]) == 2


def test_bloch_times():
    tau1, tau2 = jcq.bloch_times(jcq.QubitParameters(), jcq.BathModel())
    assert tau2 == pytest.approx(2.0 * tau1)
    assert abs(tau2 / 1.61966 - 1.0) < 0.02
    with pytest.raises(ValueError):
        jcq.bloch_times(jcq.QubitParameters(n_g=0.4), jcq.BathModel())
    with pytest.raises(jcq.InfiniteTimeError):
        jcq.bloch_times(jcq.QubitParameters(), jcq.BathModel(alpha=0.0))


def test_free_simulation_is_unitary():
    traj = jcq.simulate(jcq.QubitParameters(), jcq.BathModel(alpha=0.0),
                        jcq.ItmSettings(t_max=12.707 * 200, sample_every=1), "zero")
    w0 = 51.8 / jcq.HBAR
    assert np.max(np.abs(traj["rho00"] - 0.5 * (1 + np.cos(w0 * traj["t_ps"])))) < 1e-8
    assert np.max(np.abs(traj["rho00"] + traj["rho11"] - 1.0)) < 1e-12


def test_oracle_and_capacity():
    q, b = jcq.QubitParameters(), jcq.BathModel()
    assert jcq.oracle_deviation(q, b, n_steps=4) < 1e-10
    with pytest.raises(jcq.CapacityError):
        jcq.oracle_deviation(q, b, n_steps=11)


def test_fit_recovers_synthetic_decay():
    t = np.linspace(0.0, 3e6, 300)
    y = 0.1 + 0.4 * np.exp(-t / 1e6)
    fit = jcq.fit_exponential(t, y)
    assert fit["tau_us"] == pytest.approx(1.0, rel=1e-6)
    assert fit["c_inf"] == pytest.approx(0.1, abs=1e-6)
    with pytest.raises(jcq.NoDecayError):
        jcq.fit_exponential(t, np.full_like(t, 0.3))


def test_compare_short_run():
    r = jcq.compare(jcq.QubitParameters(), jcq.BathModel(), jcq.ItmSettings(t_max=4e5, sample_every=16))
    assert r["ratio"] == pytest.approx(r["tau2_itm_us"] / r["tau2_bloch_us"])
    assert math.isfinite(r["tau2_itm_us"])
