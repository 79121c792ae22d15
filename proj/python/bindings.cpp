#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlink/atmosphere.hpp"
#include "qlink/constants.hpp"
#include "qlink/geometry.hpp"
#include "qlink/link_budget.hpp"
#include "qlink/oracle.hpp"
#include "qlink/rates.hpp"
#include "qlink/scenario.hpp"
#include "qlink/version.hpp"

#include <sstream>

namespace py = pybind11;
using namespace qlink;

PYBIND11_MODULE(_qlink, m) {
    m.doc() = "Free-space optical link budgets and entanglement-distribution rates";
    m.attr("__version__") = kToolVersion;

    // constants ------------------------------------------------------------
    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def_readwrite("earth_radius_m", &PhysicalConstants::earth_radius_m)
        .def_readwrite("earth_mu_m3s2", &PhysicalConstants::earth_mu_m3s2)
        .def_readwrite("light_speed_ms", &PhysicalConstants::light_speed_ms);

    py::enum_<Wavelength>(m, "Wavelength")
        .value("NM785", Wavelength::NM785)
        .value("NM1550", Wavelength::NM1550);

    py::class_<DefaultParams>(m, "DefaultParams")
        .def(py::init<>())
        .def_readwrite("wavelength_m", &DefaultParams::wavelength_m)
        .def_readwrite("rep_rate_hz", &DefaultParams::rep_rate_hz)
        .def_readwrite("eta_sps", &DefaultParams::eta_sps)
        .def_readwrite("eta_det", &DefaultParams::eta_det)
        .def_readwrite("eta_mem", &DefaultParams::eta_mem)
        .def_readwrite("eta_qnd", &DefaultParams::eta_qnd)
        .def_readwrite("t1_s", &DefaultParams::t1_s)
        .def_readwrite("trans_tx", &DefaultParams::trans_tx)
        .def_readwrite("trans_rx", &DefaultParams::trans_rx)
        .def_readwrite("pointing_loss", &DefaultParams::pointing_loss)
        .def_readwrite("pointing_loss_intersat", &DefaultParams::pointing_loss_intersat)
        .def_readwrite("optical_loss_db", &DefaultParams::optical_loss_db)
        .def_readwrite("a_atm_vertical_db", &DefaultParams::a_atm_vertical_db)
        .def_readwrite("fried_r0_m", &DefaultParams::fried_r0_m)
        .def_readwrite("leo_alt_m", &DefaultParams::leo_alt_m)
        .def_readwrite("meo_alt_m", &DefaultParams::meo_alt_m)
        .def_readwrite("geo_alt_m", &DefaultParams::geo_alt_m)
        .def_readwrite("heo_perigee_m", &DefaultParams::heo_perigee_m)
        .def_readwrite("heo_apogee_m", &DefaultParams::heo_apogee_m);

    m.def("defaults", &defaults, py::arg("wavelength"));
    m.def("wavelength_m", &wavelength_m, py::arg("wavelength"));
    m.def("memory_split_efficiency", &memory_split_efficiency, py::arg("params"));

    // geometry ---------------------------------------------------------------
    py::class_<CircularOrbit>(m, "CircularOrbit")
        .def(py::init<double>(), py::arg("altitude_m"))
        .def_readwrite("altitude_m", &CircularOrbit::altitude_m);

    py::class_<EllipticalOrbit>(m, "EllipticalOrbit")
        .def(py::init<double, double>(), py::arg("perigee_alt_m"), py::arg("apogee_alt_m"))
        .def_readwrite("perigee_alt_m", &EllipticalOrbit::perigee_alt_m)
        .def_readwrite("apogee_alt_m", &EllipticalOrbit::apogee_alt_m)
        .def("semi_major_m", [](const EllipticalOrbit& o) { return o.semi_major_m(); })
        .def("eccentricity", [](const EllipticalOrbit& o) { return o.eccentricity(); });

    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def(py::init<>())
        .def_readwrite("slant_range_m", &LinkGeometry::slant_range_m)
        .def_readwrite("zenith_angle_rad", &LinkGeometry::zenith_angle_rad)
        .def_readwrite("elevation_rad", &LinkGeometry::elevation_rad)
        .def_readwrite("ground_central_angle_rad", &LinkGeometry::ground_central_angle_rad);

    m.def(
        "orbital_velocity",
        [](const CircularOrbit& o) { return orbital_velocity(o); }, py::arg("orbit"));
    m.def(
        "slant_range",
        [](double altitude_m, double elevation_rad) { return slant_range(altitude_m, elevation_rad); },
        py::arg("altitude_m"), py::arg("elevation_rad"));
    m.def(
        "elevation_from_central_angle",
        [](double altitude_m, double alpha_rad) {
            return elevation_from_central_angle(altitude_m, alpha_rad);
        },
        py::arg("altitude_m"), py::arg("alpha_rad"));
    m.def(
        "central_angle_from_elevation",
        [](double altitude_m, double elevation_rad) {
            return central_angle_from_elevation(altitude_m, elevation_rad);
        },
        py::arg("altitude_m"), py::arg("elevation_rad"));
    m.def(
        "link_geometry_at_elevation",
        [](double altitude_m, double elevation_rad) {
            return link_geometry_at_elevation(altitude_m, elevation_rad);
        },
        py::arg("altitude_m"), py::arg("elevation_rad"));
    m.def(
        "symmetric_double_link",
        [](double altitude_m, double ground_distance_m) {
            const DoubleLink d = symmetric_double_link(altitude_m, ground_distance_m);
            return py::make_tuple(d.per_link, d.feasible);
        },
        py::arg("altitude_m"), py::arg("ground_distance_m"),
        "Per-side geometry and feasibility of the satellite-in-the-middle double link");
    m.def(
        "min_altitude_for_double_link",
        [](double ground_distance_m, double min_elevation_rad) {
            return min_altitude_for_double_link(ground_distance_m, min_elevation_rad);
        },
        py::arg("ground_distance_m"), py::arg("min_elevation_rad"));
    m.def(
        "pass_duration_circular",
        [](const CircularOrbit& o, double max_zenith_rad) {
            return pass_duration_circular(o, max_zenith_rad);
        },
        py::arg("orbit"), py::arg("max_zenith_rad"));
    m.def(
        "time_from_perigee",
        [](const EllipticalOrbit& o, double true_anomaly_rad) {
            return time_from_perigee(o, true_anomaly_rad);
        },
        py::arg("orbit"), py::arg("true_anomaly_rad"));
    m.def(
        "orbital_period", [](const EllipticalOrbit& o) { return orbital_period(o); },
        py::arg("orbit"));
    m.def(
        "heo_dwell_above_station",
        [](const EllipticalOrbit& o, double max_zenith_rad) {
            return heo_dwell_above_station(o, max_zenith_rad);
        },
        py::arg("orbit"), py::arg("max_zenith_rad"));
    m.def(
        "max_zenith_between_orbits",
        [](const CircularOrbit& lo, const CircularOrbit& hi) {
            return max_zenith_between_orbits(lo, hi);
        },
        py::arg("lower"), py::arg("higher"));
    m.def(
        "intersatellite_pass_duration",
        [](const CircularOrbit& lo, const CircularOrbit& hi, double max_zenith_rad) {
            return intersatellite_pass_duration(lo, hi, max_zenith_rad);
        },
        py::arg("lower"), py::arg("higher"), py::arg("max_zenith_rad"));
    m.def(
        "intersatellite_window_static_partner",
        [](const CircularOrbit& lo, const EllipticalOrbit& hi) {
            return intersatellite_pass_duration(lo, hi);
        },
        py::arg("lower"), py::arg("higher_static"));

    // atmosphere -------------------------------------------------------------
    py::class_<HVProfile>(m, "HVProfile")
        .def(py::init<>())
        .def_readwrite("wind_rms_ms", &HVProfile::wind_rms_ms)
        .def_readwrite("ground_cn2", &HVProfile::ground_cn2);

    py::class_<AbsorptionTable>(m, "AbsorptionTable")
        .def_static("standard", &AbsorptionTable::standard)
        .def("vertical_db", &AbsorptionTable::vertical_db, py::arg("wavelength_m"))
        .def_readwrite("max_slant_zenith_rad", &AbsorptionTable::max_slant_zenith_rad);

    m.def("cn2", &cn2, py::arg("profile"), py::arg("altitude_m"));
    m.def("mu0", &mu0, py::arg("profile"), py::arg("h0_m"), py::arg("h_top_m"));
    m.def("fried_r0", &fried_r0, py::arg("profile"), py::arg("wavelength_m"),
          py::arg("zenith_rad"), py::arg("h0_m") = 0.0, py::arg("h_top_m") = 100e3);
    m.def("slant_absorption_db", &slant_absorption_db, py::arg("table"), py::arg("wavelength_m"),
          py::arg("zenith_rad"));

    // link budget ------------------------------------------------------------
    py::enum_<LinkKind>(m, "LinkKind")
        .value("Uplink", LinkKind::Uplink)
        .value("Downlink", LinkKind::Downlink)
        .value("Intersatellite", LinkKind::Intersatellite);

    py::class_<OpticalChain>(m, "OpticalChain")
        .def(py::init<>())
        .def_readwrite("tx_aperture_m", &OpticalChain::tx_aperture_m)
        .def_readwrite("rx_aperture_m", &OpticalChain::rx_aperture_m)
        .def_readwrite("trans_tx", &OpticalChain::trans_tx)
        .def_readwrite("trans_rx", &OpticalChain::trans_rx)
        .def_readwrite("pointing_loss", &OpticalChain::pointing_loss)
        .def_readwrite("additional_loss_db", &OpticalChain::additional_loss_db);

    py::class_<LinkBudget>(m, "LinkBudget")
        .def_readonly("geometric_db", &LinkBudget::geometric_db)
        .def_readonly("optics_db", &LinkBudget::optics_db)
        .def_readonly("atmosphere_db", &LinkBudget::atmosphere_db)
        .def_readonly("additional_db", &LinkBudget::additional_db)
        .def_readonly("total_db", &LinkBudget::total_db)
        .def_readonly("far_field_ok", &LinkBudget::far_field_ok)
        .def_readonly("geometric_clamped", &LinkBudget::geometric_clamped)
        .def_readonly("absorption_clamped", &LinkBudget::absorption_clamped);

    m.def("attenuation_db", &attenuation_db, py::arg("kind"), py::arg("chain"),
          py::arg("wavelength_m"), py::arg("geometry"), py::arg("r0_m"), py::arg("absorption"),
          py::arg("clamp_absorption") = false);
    m.def("transmission_probability",
          py::overload_cast<double>(&transmission_probability), py::arg("total_db"));
    m.def("double_link_probability", py::overload_cast<double>(&double_link_probability),
          py::arg("per_link_db"));

    py::enum_<FixedSide>(m, "FixedSide")
        .value("TxFixed", FixedSide::TxFixed)
        .value("RxFixed", FixedSide::RxFixed);

    py::class_<ApertureBounds>(m, "ApertureBounds")
        .def(py::init<double, double>(), py::arg("min_m"), py::arg("max_m"))
        .def_readwrite("min_m", &ApertureBounds::min_m)
        .def_readwrite("max_m", &ApertureBounds::max_m);

    m.def("solve_min_aperture", &solve_min_aperture, py::arg("kind"), py::arg("fixed_side"),
          py::arg("fixed_aperture_m"), py::arg("target_db"), py::arg("wavelength_m"),
          py::arg("geometry"), py::arg("r0_m"), py::arg("absorption"), py::arg("bounds"),
          py::arg("base_chain"));

    // rates --------------------------------------------------------------------
    py::class_<HardwareParams>(m, "HardwareParams")
        .def(py::init<>())
        .def_static("from_defaults", &HardwareParams::from_defaults, py::arg("params"),
                    py::arg("eta_eps") = 1.0)
        .def_readwrite("rep_rate_hz", &HardwareParams::rep_rate_hz)
        .def_readwrite("eta_eps", &HardwareParams::eta_eps)
        .def_readwrite("eta_sps", &HardwareParams::eta_sps)
        .def_readwrite("eta_det", &HardwareParams::eta_det)
        .def_readwrite("eta_store", &HardwareParams::eta_store)
        .def_readwrite("eta_retrieve", &HardwareParams::eta_retrieve)
        .def_readwrite("eta_qnd", &HardwareParams::eta_qnd)
        .def_readwrite("t1_s", &HardwareParams::t1_s)
        .def_readwrite("multiplex_factor", &HardwareParams::multiplex_factor);

    py::class_<ClassicalComms>(m, "ClassicalComms")
        .def(py::init<double>(), py::arg("ground_distance_m"))
        .def_readwrite("ground_distance_m", &ClassicalComms::ground_distance_m)
        .def("dt0_s", [](const ClassicalComms& c) { return c.dt0_s(); })
        .def("dt1_s", [](const ClassicalComms& c) { return c.dt1_s(); });

    py::enum_<SchemeKind>(m, "SchemeKind")
        .value("Memoryless", SchemeKind::Memoryless)
        .value("OneMemoryAlice", SchemeKind::OneMemoryAlice)
        .value("OneMemoryBob", SchemeKind::OneMemoryBob)
        .value("TwoMemory", SchemeKind::TwoMemory)
        .value("TwoLinkRepeater", SchemeKind::TwoLinkRepeater);

    m.def("bsm_probability", &bsm_probability, py::arg("hw"), py::arg("halved") = false);
    m.def(
        "teleportation_rate",
        [](SchemeKind scheme, const HardwareParams& hw, double p_ave, const ClassicalComms& comms) {
            return teleportation_rate(scheme, hw, p_ave, comms);
        },
        py::arg("scheme"), py::arg("hw"), py::arg("p_ave"), py::arg("comms"));
    m.def("ndif_pmf", &ndif_pmf, py::arg("p"), py::arg("n"));
    m.def("decay_expectation", &decay_expectation, py::arg("p"), py::arg("t0_s"), py::arg("t1_s"));
    m.def("decay_expectation_by_summation", &decay_expectation_by_summation, py::arg("p"),
          py::arg("t0_s"), py::arg("t1_s"), py::arg("rel_tail") = 1e-12);
    m.def("swap_probability", &swap_probability, py::arg("hw"), py::arg("p"), py::arg("t0_s"));

    py::class_<RepeaterRate>(m, "RepeaterRate")
        .def_readonly("n_min_mean", &RepeaterRate::n_min_mean)
        .def_readonly("n_max_mean", &RepeaterRate::n_max_mean)
        .def_readonly("swap_prob", &RepeaterRate::swap_prob)
        .def_readonly("t_lower_s", &RepeaterRate::t_lower_s)
        .def_readonly("t_upper_s", &RepeaterRate::t_upper_s)
        .def_readonly("t_mid_s", &RepeaterRate::t_mid_s)
        .def_readonly("rate_lower_per_s", &RepeaterRate::rate_lower_per_s)
        .def_readonly("rate_upper_per_s", &RepeaterRate::rate_upper_per_s)
        .def_readonly("rate_mid_per_s", &RepeaterRate::rate_mid_per_s)
        .def_readonly("teleport_rate_per_s", &RepeaterRate::teleport_rate_per_s);

    m.def(
        "repeater_rate_bounds",
        [](const HardwareParams& hw, double p, const ClassicalComms& comms) {
            return repeater_rate_bounds(hw, p, comms);
        },
        py::arg("hw"), py::arg("p"), py::arg("comms"));
    m.def("time_for_events", &time_for_events, py::arg("rate_per_s"), py::arg("n_events"));

    py::enum_<QkdProtocol>(m, "QkdProtocol")
        .value("DecoyWCP", QkdProtocol::DecoyWCP)
        .value("EPSorSPS", QkdProtocol::EPSorSPS);

    m.def("qkd_detections_required", &qkd_detections_required, py::arg("protocol"));
    m.def("qkd_time_required", &qkd_time_required, py::arg("total_link_db"), py::arg("protocol"),
          py::arg("hw"));

    // oracle -------------------------------------------------------------------
    py::class_<TrialConfig>(m, "TrialConfig")
        .def(py::init<>())
        .def_readwrite("trials", &TrialConfig::trials)
        .def_readwrite("seed", &TrialConfig::seed)
        .def_readwrite("p", &TrialConfig::p)
        .def_readwrite("t0_s", &TrialConfig::t0_s)
        .def_readwrite("t1_s", &TrialConfig::t1_s);

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("mean", &Estimate::mean)
        .def_readonly("std_error", &Estimate::std_error);

    py::class_<NdifSimResult>(m, "NdifSimResult")
        .def_readonly("pmf", &NdifSimResult::pmf)
        .def_readonly("tail_prob", &NdifSimResult::tail_prob)
        .def_readonly("decay", &NdifSimResult::decay)
        .def_readonly("seed", &NdifSimResult::seed)
        .def_readonly("trials", &NdifSimResult::trials);

    py::class_<OrderStatsResult>(m, "OrderStatsResult")
        .def_readonly("n_min", &OrderStatsResult::n_min)
        .def_readonly("n_max", &OrderStatsResult::n_max)
        .def_readonly("seed", &OrderStatsResult::seed)
        .def_readonly("trials", &OrderStatsResult::trials);

    py::class_<RepeaterSimResult>(m, "RepeaterSimResult")
        .def_readonly("t_r_s", &RepeaterSimResult::t_r_s)
        .def_readonly("rate_per_s", &RepeaterSimResult::rate_per_s)
        .def_readonly("seed", &RepeaterSimResult::seed)
        .def_readonly("trials", &RepeaterSimResult::trials);

    m.def("simulate_ndif", &simulate_ndif, py::arg("cfg"));
    m.def("simulate_order_stats", &simulate_order_stats, py::arg("cfg"));
    m.def("simulate_two_link_repeater", &simulate_two_link_repeater, py::arg("cfg"), py::arg("hw"));

    // scenario -------------------------------------------------------------------
    py::enum_<SweepVariable>(m, "SweepVariable")
        .value("Elevation", SweepVariable::Elevation)
        .value("GroundDistance", SweepVariable::GroundDistance)
        .value("TotalDb", SweepVariable::TotalDb);

    py::enum_<ScenarioMode>(m, "ScenarioMode")
        .value("Teleport", ScenarioMode::Teleport)
        .value("Qkd", ScenarioMode::Qkd);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("variable", &SweepSpec::variable)
        .def_readwrite("min", &SweepSpec::min)
        .def_readwrite("max", &SweepSpec::max)
        .def_readwrite("steps", &SweepSpec::steps);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("name", &Scenario::name)
        .def_readwrite("mode", &Scenario::mode)
        .def_readwrite("link_kind", &Scenario::link_kind)
        .def_readwrite("altitude_m", &Scenario::altitude_m)
        .def_readwrite("higher_altitude_m", &Scenario::higher_altitude_m)
        .def_readwrite("wavelength_m", &Scenario::wavelength_m)
        .def_readwrite("chain", &Scenario::chain)
        .def_readwrite("hw", &Scenario::hw)
        .def_readwrite("fried_r0_m", &Scenario::fried_r0_m)
        .def_readwrite("absorption", &Scenario::absorption)
        .def_readwrite("scheme", &Scenario::scheme)
        .def_readwrite("sweep", &Scenario::sweep);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("sweep_value", &SweepRow::sweep_value)
        .def_readonly("elevation_deg", &SweepRow::elevation_deg)
        .def_readonly("zenith_deg", &SweepRow::zenith_deg)
        .def_readonly("slant_range_m", &SweepRow::slant_range_m)
        .def_readonly("link_db", &SweepRow::link_db)
        .def_readonly("total_db", &SweepRow::total_db)
        .def_readonly("p_ave", &SweepRow::p_ave)
        .def_readonly("rate_memoryless", &SweepRow::rate_memoryless)
        .def_readonly("rate_one_memory_alice", &SweepRow::rate_one_memory_alice)
        .def_readonly("rate_one_memory_bob", &SweepRow::rate_one_memory_bob)
        .def_readonly("rate_two_memory", &SweepRow::rate_two_memory)
        .def_readonly("rate_repeater", &SweepRow::rate_repeater)
        .def_readonly("time_1000_memoryless_s", &SweepRow::time_1000_memoryless_s)
        .def_readonly("time_1000_one_memory_alice_s", &SweepRow::time_1000_one_memory_alice_s)
        .def_readonly("time_1000_one_memory_bob_s", &SweepRow::time_1000_one_memory_bob_s)
        .def_readonly("time_1000_two_memory_s", &SweepRow::time_1000_two_memory_s)
        .def_readonly("time_1000_repeater_s", &SweepRow::time_1000_repeater_s)
        .def_readonly("qkd_time_wcp_s", &SweepRow::qkd_time_wcp_s)
        .def_readonly("qkd_time_eps_s", &SweepRow::qkd_time_eps_s)
        .def_readonly("infeasible_horizon", &SweepRow::infeasible_horizon)
        .def_readonly("low_elevation_shaded", &SweepRow::low_elevation_shaded)
        .def_readonly("clamped", &SweepRow::clamped);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("scenario", &SweepResult::scenario)
        .def_readonly("tool_version", &SweepResult::tool_version)
        .def_readonly("rows", &SweepResult::rows)
        .def("to_csv",
             [](const SweepResult& r) {
                 std::ostringstream out;
                 write_csv(r, out);
                 return out.str();
             })
        .def("to_json", [](const SweepResult& r) {
            std::ostringstream out;
            write_json(r, out);
            return out.str();
        });

    m.def("run_sweep", &run_sweep, py::arg("scenario"));
    m.def("parse_scenario_file", &parse_scenario_file, py::arg("path"));
    m.def("preset_names", &preset_names);
    m.def("make_preset", &make_preset, py::arg("name"));

    py::class_<QkdGridRow>(m, "QkdGridRow")
        .def_readonly("orbit", &QkdGridRow::orbit)
        .def_readonly("window_s", &QkdGridRow::window_s)
        .def_readonly("protocol", &QkdGridRow::protocol)
        .def_readonly("total_db", &QkdGridRow::total_db)
        .def_readonly("time_s", &QkdGridRow::time_s)
        .def_readonly("feasible", &QkdGridRow::feasible);

    py::class_<QkdGridSpec>(m, "QkdGridSpec")
        .def(py::init<>())
        .def_readwrite("orbits", &QkdGridSpec::orbits)
        .def_readwrite("protocols", &QkdGridSpec::protocols)
        .def_readwrite("db_min", &QkdGridSpec::db_min)
        .def_readwrite("db_max", &QkdGridSpec::db_max)
        .def_readwrite("db_step", &QkdGridSpec::db_step);

    m.def("pass_window_s", &pass_window_s, py::arg("orbit"));
    m.def("qkd_feasibility_grid", &qkd_feasibility_grid, py::arg("spec"), py::arg("hw"));

    py::class_<HeadlineReport>(m, "HeadlineReport")
        .def_readonly("per_link_db", &HeadlineReport::per_link_db)
        .def_readonly("p_ave", &HeadlineReport::p_ave)
        .def_readonly("rate_spdc_per_s", &HeadlineReport::rate_spdc_per_s)
        .def_readonly("time_1000_spdc_s", &HeadlineReport::time_1000_spdc_s)
        .def_readonly("rate_sps_per_s", &HeadlineReport::rate_sps_per_s)
        .def_readonly("time_1000_sps_s", &HeadlineReport::time_1000_sps_s)
        .def_readonly("sps_to_spdc_ratio", &HeadlineReport::sps_to_spdc_ratio)
        .def_readonly("budget", &HeadlineReport::budget);

    m.def("geo_teleport_headline", &geo_teleport_headline);

    py::class_<ApertureCell>(m, "ApertureCell")
        .def_readonly("orbit", &ApertureCell::orbit)
        .def_readonly("range_m", &ApertureCell::range_m)
        .def_readonly("kind", &ApertureCell::kind)
        .def_readonly("wavelength_m", &ApertureCell::wavelength_m)
        .def_readonly("target_db", &ApertureCell::target_db)
        .def_readonly("fixed_aperture_m", &ApertureCell::fixed_aperture_m)
        .def_readonly("solved_aperture_m", &ApertureCell::solved_aperture_m)
        .def_readonly("feasible", &ApertureCell::feasible);

    py::class_<ApertureTableSpec>(m, "ApertureTableSpec")
        .def(py::init<>())
        .def_readwrite("downlink_target_db", &ApertureTableSpec::downlink_target_db)
        .def_readwrite("uplink_target_db", &ApertureTableSpec::uplink_target_db)
        .def_readwrite("intersat_target_db", &ApertureTableSpec::intersat_target_db)
        .def_readwrite("space_cap_m", &ApertureTableSpec::space_cap_m)
        .def_readwrite("ground_cap_m", &ApertureTableSpec::ground_cap_m)
        .def_readwrite("min_aperture_m", &ApertureTableSpec::min_aperture_m)
        .def_readwrite("wavelengths", &ApertureTableSpec::wavelengths);

    m.def("static_aperture_table", &static_aperture_table, py::arg("spec"));
}
