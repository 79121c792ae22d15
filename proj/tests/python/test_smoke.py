"""Smoke tests for the Python bindings."""

import math

import pytest

import qlink


def test_defaults_table():
    p = qlink.defaults(qlink.Wavelength.NM785)
    assert p.wavelength_m == pytest.approx(785e-9)
    assert p.a_atm_vertical_db == 1.0
    assert p.eta_mem == 0.5
    p1550 = qlink.defaults(qlink.Wavelength.NM1550)
    assert p1550.a_atm_vertical_db == 0.5


def test_geometry_basics():
    assert qlink.orbital_velocity(qlink.CircularOrbit(600e3)) == pytest.approx(7561.733, rel=1e-6)
    assert qlink.slant_range(600e3, math.pi / 2) == pytest.approx(600e3)
    geom, feasible = qlink.symmetric_double_link(600e3, 4000e3)
    assert feasible
    assert geom.elevation_rad > 0

    orbit = qlink.EllipticalOrbit(600e3, 40000e3)
    assert orbit.eccentricity() == pytest.approx(0.7386, abs=1e-3)
    assert 2 * qlink.time_from_perigee(orbit, math.pi) / 60 == pytest.approx(722.5, abs=1.0)


def test_headline_budget_and_rate():
    report = qlink.geo_teleport_headline()
    assert 38.0 < report.per_link_db < 41.0
    assert 0.009 < report.rate_spdc_per_s < 0.036
    assert 10.0 <= report.sps_to_spdc_ratio <= 15.0 + 1e-9


def test_attenuation_breakdown():
    chain = qlink.OpticalChain()
    chain.tx_aperture_m = 0.5
    chain.rx_aperture_m = 2.0
    geom = qlink.link_geometry_at_elevation(3.6e7, math.pi / 2)
    budget = qlink.attenuation_db(
        qlink.LinkKind.Downlink, chain, 785e-9, geom, 0.075, qlink.AbsorptionTable.standard()
    )
    assert budget.total_db == pytest.approx(
        budget.geometric_db + budget.optics_db + budget.atmosphere_db + budget.additional_db
    )


def test_qkd_time():
    hw = qlink.HardwareParams.from_defaults(qlink.defaults(qlink.Wavelength.NM785))
    hw.rep_rate_hz = 1e9
    assert qlink.qkd_time_required(0.0, qlink.QkdProtocol.DecoyWCP, hw) == 1e-4


def test_monte_carlo_reproducible():
    cfg = qlink.TrialConfig()
    cfg.trials = 20000
    cfg.seed = 11
    cfg.p = 0.25
    a = qlink.simulate_ndif(cfg)
    b = qlink.simulate_ndif(cfg)
    assert a.decay.mean == b.decay.mean
    assert a.pmf[0] == pytest.approx(qlink.ndif_pmf(0.25, 0), abs=4 * a.decay.std_error + 0.01)


def test_sweep_preset_rows_sorted():
    result = qlink.run_sweep(qlink.make_preset("teleport-leo-eps1"))
    values = [row.sweep_value for row in result.rows]
    assert values == sorted(values)
    assert any(row.infeasible_horizon for row in result.rows)
    csv_text = result.to_csv()
    assert csv_text.splitlines()[0].startswith("scenario,sweep_variable")


def test_qkd_grid_and_static_table():
    hw = qlink.HardwareParams.from_defaults(qlink.defaults(qlink.Wavelength.NM785))
    spec = qlink.QkdGridSpec()
    spec.orbits = ["leo"]
    spec.db_max = 20.0
    rows = qlink.qkd_feasibility_grid(spec, hw)
    assert rows and all(r.window_s == 120.0 for r in rows)
    assert all(r.feasible for r in rows)  # 20 dB is easy at 1 GHz

    cells = qlink.static_aperture_table(qlink.ApertureTableSpec())
    kinds = {c.kind for c in cells}
    assert qlink.LinkKind.Intersatellite in kinds
    assert any(not c.feasible for c in cells)


def test_fried_parameter():
    r0 = qlink.fried_r0(qlink.HVProfile(), 785e-9, 0.0)
    assert 0.05 < r0 < 0.12
