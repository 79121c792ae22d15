#include "qlink/atmosphere.hpp"
#include "qlink/constants.hpp"
#include "qlink/errors.hpp"
#include "qlink/geometry.hpp"
#include "qlink/link_budget.hpp"
#include "qlink/oracle.hpp"
#include "qlink/rates.hpp"
#include "qlink/scenario.hpp"
#include "qlink/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace qlink;

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string num_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// flags shared by every command: wavelength choice, output format, and
// overrides named after the parameter-table fields
struct Common {
    int wavelength_nm = 785;
    std::string format = "table";
    std::optional<double> rep_rate_hz, eta_eps, eta_sps, eta_det, eta_mem, eta_qnd, t1_s,
        trans_tx, trans_rx, pointing_loss, optical_loss_db, a_atm_vertical_db, fried_r0_m;
    std::optional<int> multiplex_factor;

    void attach(CLI::App* cmd) {
        cmd->add_option("--wavelength", wavelength_nm, "Wavelength in nm")
            ->check(CLI::IsMember({785, 1550}));
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--rep_rate_hz", rep_rate_hz, "Source repetition rate [Hz]");
        cmd->add_option("--eta_eps", eta_eps, "Pair probability per pulse");
        cmd->add_option("--eta_sps", eta_sps, "Single-photon source efficiency");
        cmd->add_option("--eta_det", eta_det, "Detector efficiency");
        cmd->add_option("--eta_mem", eta_mem, "Memory efficiency (storage*retrieval)");
        cmd->add_option("--eta_qnd", eta_qnd, "QND efficiency");
        cmd->add_option("--t1_s", t1_s, "Memory lifetime [s]");
        cmd->add_option("--trans_tx", trans_tx, "Transmitter optics transmittance");
        cmd->add_option("--trans_rx", trans_rx, "Receiver optics transmittance");
        cmd->add_option("--pointing_loss", pointing_loss, "Pointing loss fraction");
        cmd->add_option("--optical_loss_db", optical_loss_db, "Additional optical loss [dB]");
        cmd->add_option("--a_atm_vertical_db", a_atm_vertical_db, "Vertical absorption [dB]");
        cmd->add_option("--fried_r0_m", fried_r0_m, "Atmospheric coherence diameter [m]");
        cmd->add_option("--multiplex", multiplex_factor, "Channel multiplexing factor")
            ->check(CLI::PositiveNumber);
    }

    Wavelength wavelength() const {
        return wavelength_nm == 785 ? Wavelength::NM785 : Wavelength::NM1550;
    }

    DefaultParams params() const {
        DefaultParams p = defaults(wavelength());
        if (rep_rate_hz) p.rep_rate_hz = *rep_rate_hz;
        if (eta_sps) p.eta_sps = *eta_sps;
        if (eta_det) p.eta_det = *eta_det;
        if (eta_mem) p.eta_mem = *eta_mem;
        if (eta_qnd) p.eta_qnd = *eta_qnd;
        if (t1_s) p.t1_s = *t1_s;
        if (trans_tx) p.trans_tx = *trans_tx;
        if (trans_rx) p.trans_rx = *trans_rx;
        if (pointing_loss) p.pointing_loss = *pointing_loss;
        if (optical_loss_db) p.optical_loss_db = *optical_loss_db;
        if (a_atm_vertical_db) p.a_atm_vertical_db = *a_atm_vertical_db;
        if (fried_r0_m) p.fried_r0_m = *fried_r0_m;
        validate(p);
        return p;
    }

    HardwareParams hardware() const {
        HardwareParams hw = HardwareParams::from_defaults(params(), eta_eps.value_or(1.0));
        if (multiplex_factor) hw.multiplex_factor = *multiplex_factor;
        validate(hw);
        return hw;
    }

    AbsorptionTable absorption() const {
        AbsorptionTable table = AbsorptionTable::standard();
        if (a_atm_vertical_db)
            table.rows = {{wavelength_m(wavelength()), *a_atm_vertical_db}};
        return table;
    }

    bool json_output() const { return format == "json"; }
};

LinkKind parse_kind(const std::string& s) {
    if (s == "uplink") return LinkKind::Uplink;
    if (s == "downlink") return LinkKind::Downlink;
    if (s == "intersatellite") return LinkKind::Intersatellite;
    throw std::invalid_argument("unknown link kind: " + s);
}

SchemeKind parse_scheme_name(const std::string& s) {
    if (s == "memoryless") return SchemeKind::Memoryless;
    if (s == "one-memory-alice") return SchemeKind::OneMemoryAlice;
    if (s == "one-memory-bob") return SchemeKind::OneMemoryBob;
    if (s == "two-memory") return SchemeKind::TwoMemory;
    if (s == "repeater") return SchemeKind::TwoLinkRepeater;
    throw std::invalid_argument("unknown scheme: " + s);
}

// ---------------------------------------------------------------------- budget

struct BudgetArgs {
    Common common;
    std::string kind = "downlink";
    double altitude_m = 6e5;
    std::optional<double> higher_altitude_m;
    double elevation_deg = 90.0;
    double tx_aperture_m = 0.25;
    double rx_aperture_m = 2.0;
};

int run_budget(const BudgetArgs& a) {
    const DefaultParams p = a.common.params();
    const LinkKind kind = parse_kind(a.kind);

    OpticalChain chain;
    chain.tx_aperture_m = a.tx_aperture_m;
    chain.rx_aperture_m = a.rx_aperture_m;
    chain.trans_tx = p.trans_tx;
    chain.trans_rx = p.trans_rx;
    chain.pointing_loss = a.common.pointing_loss
                              ? *a.common.pointing_loss
                              : (kind == LinkKind::Intersatellite ? p.pointing_loss_intersat
                                                                  : p.pointing_loss);
    chain.additional_loss_db = p.optical_loss_db;

    LinkGeometry geom;
    if (kind == LinkKind::Intersatellite) {
        if (!a.higher_altitude_m)
            throw std::invalid_argument("intersatellite budgets need --higher-altitude-m");
        const CircularOrbit lower{a.altitude_m};
        const CircularOrbit higher{*a.higher_altitude_m};
        const double rel =
            intersatellite_angle_from_elevation(lower, higher, a.elevation_deg * kDegToRad);
        geom = intersatellite_geometry(lower, higher, rel);
    } else {
        geom = link_geometry_at_elevation(a.altitude_m, a.elevation_deg * kDegToRad);
    }

    const LinkBudget b = attenuation_db(kind, chain, p.wavelength_m, geom, p.fried_r0_m,
                                        a.common.absorption());
    if (a.common.json_output()) {
        json j{{"kind", to_string(kind)},
               {"wavelength_m", p.wavelength_m},
               {"slant_range_m", geom.slant_range_m},
               {"zenith_deg", geom.zenith_angle_rad / kDegToRad},
               {"elevation_deg", geom.elevation_rad / kDegToRad},
               {"geometric_db", b.geometric_db},
               {"optics_db", b.optics_db},
               {"atmosphere_db", b.atmosphere_db},
               {"additional_db", b.additional_db},
               {"total_db", b.total_db},
               {"transmission_probability", transmission_probability(b)},
               {"double_link_probability", double_link_probability(b)},
               {"far_field_ok", b.far_field_ok},
               {"geometric_clamped", b.geometric_clamped}};
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "link budget (" << to_string(kind) << ", " << num(p.wavelength_m * 1e9)
              << " nm)\n"
              << "  slant range   " << num(geom.slant_range_m) << " m\n"
              << "  zenith angle  " << num(geom.zenith_angle_rad / kDegToRad) << " deg\n"
              << "  geometric     " << num(b.geometric_db) << " dB"
              << (b.geometric_clamped ? "  (clamped)" : "") << "\n"
              << "  optics        " << num(b.optics_db) << " dB\n"
              << "  atmosphere    " << num(b.atmosphere_db) << " dB\n"
              << "  additional    " << num(b.additional_db) << " dB\n"
              << "  total         " << num(b.total_db) << " dB\n"
              << "  far field     " << (b.far_field_ok ? "yes" : "violated") << "\n";
    return 0;
}

// ------------------------------------------------------------------------ rate

struct RateArgs {
    Common common;
    std::string scheme = "memoryless";
    std::optional<double> link_db;
    std::optional<double> p_ave;
    double ground_distance_m = 0.0;
};

int run_rate(const RateArgs& a) {
    const SchemeKind scheme = parse_scheme_name(a.scheme);
    const HardwareParams hw = a.common.hardware();
    if (!a.link_db && !a.p_ave) throw std::invalid_argument("need --link-db or --p-ave");
    const double p_ave = a.p_ave ? *a.p_ave : double_link_probability(*a.link_db);
    const ClassicalComms comms{a.ground_distance_m};

    double rate = 0.0;
    json extra;
    if (scheme == SchemeKind::TwoLinkRepeater) {
        // per-link dB is the elementary (half-distance) link here
        const double p_elem = p_ave * hw.eta_eps;
        const RepeaterRate r = repeater_rate_bounds(hw, p_elem, comms);
        rate = r.teleport_rate_per_s;
        extra = json{{"elementary_p", p_elem},
                     {"n_min_mean", r.n_min_mean},
                     {"n_max_mean", r.n_max_mean},
                     {"swap_probability", r.swap_prob},
                     {"t_lower_s", r.t_lower_s},
                     {"t_upper_s", r.t_upper_s},
                     {"rate_mid_per_s", r.rate_mid_per_s}};
    } else {
        rate = teleportation_rate(scheme, hw, p_ave, comms);
    }

    if (a.common.json_output()) {
        json j{{"scheme", to_string(scheme)},
               {"p_ave", p_ave},
               {"ground_distance_m", a.ground_distance_m},
               {"rate_per_s", rate},
               {"time_1000_events_s", rate > 0.0 ? json(1000.0 / rate) : json(nullptr)}};
        if (!extra.is_null()) j["repeater"] = extra;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "scheme         " << to_string(scheme) << "\n"
              << "rate           " << num(rate) << " /s\n";
    if (rate > 0.0)
        std::cout << "time for 1000  " << num(1000.0 / rate) << " s ("
                  << num(1000.0 / rate / 3600.0) << " h)\n";
    return 0;
}

// ----------------------------------------------------------------------- sweep

struct SweepArgs {
    Common common;
    std::string scenario_path;
    std::string preset;
    std::string csv_path;
    std::string json_path;
};

int run_sweep_cmd(const SweepArgs& a) {
    if (a.scenario_path.empty() == a.preset.empty())
        throw std::invalid_argument("give exactly one of --scenario or --preset");
    const Scenario scenario =
        a.preset.empty() ? parse_scenario_file(a.scenario_path) : make_preset(a.preset);
    const SweepResult result = run_sweep(scenario);

    if (!a.csv_path.empty()) {
        std::ofstream out(a.csv_path);
        if (!out) throw std::runtime_error("cannot write " + a.csv_path);
        write_csv(result, out);
    }
    if (!a.json_path.empty()) {
        std::ofstream out(a.json_path);
        if (!out) throw std::runtime_error("cannot write " + a.json_path);
        write_json(result, out);
    }
    if (a.csv_path.empty() && a.json_path.empty()) {
        if (a.common.json_output())
            write_json(result, std::cout);
        else
            write_csv(result, std::cout);
    } else {
        std::cerr << "wrote " << result.rows.size() << " rows for '" << scenario.name << "'\n";
    }
    return 0;
}

// ------------------------------------------------------------------------- qkd

struct QkdArgs {
    Common common;
    std::optional<double> db;
    std::string protocol = "wcp";
    std::optional<double> rate_hz;
    std::string orbit;
    bool grid = false;
    double db_min = 0.0, db_max = 80.0, db_step = 5.0;
};

int run_qkd(const QkdArgs& a) {
    HardwareParams hw = a.common.hardware();
    if (a.rate_hz) hw.rep_rate_hz = *a.rate_hz;
    const QkdProtocol protocol = a.protocol == "wcp" ? QkdProtocol::DecoyWCP
                                                     : QkdProtocol::EPSorSPS;
    if (a.protocol != "wcp" && a.protocol != "eps")
        throw std::invalid_argument("protocol must be wcp or eps");

    if (a.grid) {
        QkdGridSpec spec;
        spec.db_min = a.db_min;
        spec.db_max = a.db_max;
        spec.db_step = a.db_step;
        if (!a.orbit.empty()) spec.orbits = {a.orbit};
        const auto rows = qkd_feasibility_grid(spec, hw);
        if (a.common.json_output()) {
            json j = json::array();
            for (const auto& r : rows)
                j.push_back({{"orbit", r.orbit},
                             {"protocol", to_string(r.protocol)},
                             {"total_db", r.total_db},
                             {"time_s", r.time_s},
                             {"window_s", r.window_s},
                             {"feasible", r.feasible}});
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "orbit protocol total_db time_s window_s feasible\n";
            for (const auto& r : rows)
                std::cout << r.orbit << ' ' << to_string(r.protocol) << ' ' << num(r.total_db)
                          << ' ' << num(r.time_s) << ' ' << num(r.window_s) << ' '
                          << (r.feasible ? "yes" : "no") << '\n';
        }
        return 0;
    }

    if (!a.db) throw std::invalid_argument("need --db (or --grid)");
    const double time_s = qkd_time_required(*a.db, protocol, hw);
    std::optional<bool> verdict;
    std::optional<double> window;
    if (!a.orbit.empty()) {
        window = pass_window_s(a.orbit);
        verdict = time_s <= *window;
    }

    if (a.common.json_output()) {
        json j{{"total_db", *a.db},
               {"protocol", to_string(protocol)},
               {"detections_required", qkd_detections_required(protocol)},
               {"time_required_s", time_s}};
        if (verdict) {
            j["orbit"] = a.orbit;
            j["window_s"] = *window;
            j["feasible"] = *verdict;
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "time_required_s = " << num_full(time_s) << "\n";
    if (verdict)
        std::cout << "window_s        = " << num(*window) << "\n"
                  << "feasible        = " << (*verdict ? "yes" : "no") << "\n";
    return 0;
}

// ----------------------------------------------------------------- static-table

struct StaticTableArgs {
    Common common;
    ApertureTableSpec spec;
};

int run_static_table(const StaticTableArgs& a) {
    const auto cells = static_aperture_table(a.spec);
    if (a.common.json_output()) {
        json j = json::array();
        for (const auto& c : cells)
            j.push_back({{"orbit", c.orbit},
                         {"kind", to_string(c.kind)},
                         {"wavelength_nm", c.wavelength_m * 1e9},
                         {"range_m", c.range_m},
                         {"target_db", c.target_db},
                         {"fixed_aperture_m", c.fixed_aperture_m},
                         {"solved_aperture_m",
                          c.feasible ? json(c.solved_aperture_m) : json(nullptr)},
                         {"feasible", c.feasible}});
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "orbit    kind            nm    range_m   target_db  min_aperture_m\n";
    for (const auto& c : cells) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-8s %-15s %-5.0f %-9.3g %-10.0f %s", c.orbit.c_str(),
                      to_string(c.kind), c.wavelength_m * 1e9, c.range_m, c.target_db,
                      c.feasible ? num(c.solved_aperture_m).c_str() : "infeasible");
        std::cout << line << '\n';
    }
    return 0;
}

// -------------------------------------------------------------------- headline

int run_headline(const Common& common) {
    const HeadlineReport r = geo_teleport_headline();
    if (common.json_output()) {
        json j{{"per_link_db", r.per_link_db},
               {"p_ave", r.p_ave},
               {"rate_spdc_per_s", r.rate_spdc_per_s},
               {"time_1000_spdc_s", r.time_1000_spdc_s},
               {"time_1000_spdc_h", r.time_1000_spdc_s / 3600.0},
               {"rate_sps_per_s", r.rate_sps_per_s},
               {"time_1000_sps_s", r.time_1000_sps_s},
               {"time_1000_sps_h", r.time_1000_sps_s / 3600.0},
               {"sps_to_spdc_ratio", r.sps_to_spdc_ratio}};
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "source at 36,000 km, 0.5 m -> 2.0 m apertures, 810 nm, 1 GHz clock\n"
              << "  per-link attenuation   " << num(r.per_link_db) << " dB\n"
              << "  4-fold rate (SPDC 5%)  " << num(r.rate_spdc_per_s) << " /s\n"
              << "  1000 events            " << num(r.time_1000_spdc_s) << " s ("
              << num(r.time_1000_spdc_s / 3600.0) << " h)\n"
              << "  deterministic source   " << num(r.rate_sps_per_s) << " /s, 1000 events in "
              << num(r.time_1000_sps_s / 3600.0) << " h\n"
              << "  rate gain              " << num(r.sps_to_spdc_ratio) << "x\n";
    return 0;
}

// -------------------------------------------------------------------- validate

struct ValidateArgs {
    Common common;
    std::uint64_t seed = 42;
    std::int64_t trials = 1'000'000;
};

struct CheckOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

int run_validate(const ValidateArgs& a) {
    if (a.trials < 10'000) throw std::invalid_argument("validation needs at least 1e4 trials");
    std::vector<CheckOutcome> outcomes;
    std::uint64_t seed = a.seed;

    const auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        outcomes.push_back({name, pass, detail});
    };

    // attempt-difference pmf against the closed form
    {
        TrialConfig cfg{a.trials, seed++, 0.1, 1e-9, 0.1};
        const NdifSimResult sim = simulate_ndif(cfg);
        bool pass = true;
        std::string detail;
        for (std::int64_t n = 0; n <= 5; ++n) {
            const double expect = ndif_pmf(cfg.p, n);
            const double se = std::sqrt(expect * (1.0 - expect) / cfg.trials);
            const double got = sim.pmf[static_cast<std::size_t>(n)];
            if (std::abs(got - expect) > 3.0 * se) {
                pass = false;
                detail += " n=" + std::to_string(n) + " off";
            }
        }
        record("ndif_pmf vs simulation (p=0.1)", pass,
               "P(0) sim " + num(sim.pmf[0]) + " vs " + num(ndif_pmf(0.1, 0)) + detail);
    }

    // order statistics of two geometric draws
    {
        TrialConfig cfg{a.trials, seed++, 0.5, 1e-9, 0.1};
        const OrderStatsResult sim = simulate_order_stats(cfg);
        const double n_min = 4.0 / 3.0, n_max = 8.0 / 3.0;
        const bool pass = std::abs(sim.n_min.mean - n_min) <= 3.0 * sim.n_min.std_error &&
                          std::abs(sim.n_max.mean - n_max) <= 3.0 * sim.n_max.std_error;
        record("order statistics (p=0.5)", pass,
               "n_min " + num(sim.n_min.mean) + " vs 4/3, n_max " + num(sim.n_max.mean) +
                   " vs 8/3");
    }

    // closed-form decay expectation: summation route and Monte Carlo
    {
        bool pass = true;
        std::string detail;
        for (double p : {0.9, 0.5, 0.1}) {
            for (double ratio : {1e-4, 1e-2, 1.0}) {
                const double closed = decay_expectation(p, ratio, 1.0);
                const double summed = decay_expectation_by_summation(p, ratio, 1.0);
                if (std::abs(closed - summed) > 1e-10 * closed) {
                    pass = false;
                    detail += " summation off at p=" + num(p);
                }
                TrialConfig cfg{a.trials / 10, seed++, p, ratio, 1.0};
                const NdifSimResult sim = simulate_ndif(cfg);
                if (std::abs(sim.decay.mean - closed) > 3.0 * sim.decay.std_error) {
                    pass = false;
                    detail += " MC off at p=" + num(p) + ",t0/t1=" + num(ratio);
                }
            }
        }
        record("decay expectation closed form", pass,
               detail.empty() ? "summation to 1e-10, Monte Carlo at 3 sigma" : detail);
    }

    // two-link repeater time against the analytic band; the renewal mean
    // sits at the upper edge, so the band check carries 3-sigma slack
    {
        HardwareParams hw = HardwareParams::from_defaults(defaults(Wavelength::NM785));
        bool pass = true;
        std::string detail;
        for (double p : {0.8, 0.5, 0.1}) {
            for (double ratio : {1e-3, 1e-2, 1e-1}) {
                TrialConfig cfg{std::min<std::int64_t>(a.trials, 20'000), seed++, p, 1.0,
                                1.0 / ratio};
                hw.rep_rate_hz = 1.0; // T0 = 1 for the normalized grid
                hw.t1_s = cfg.t1_s;
                const RepeaterSimResult sim = simulate_two_link_repeater(cfg, hw);
                const RepeaterRate bounds = repeater_rate_bounds(hw, p, ClassicalComms{0.0});
                const double slack = 3.0 * sim.t_r_s.std_error;
                if (sim.t_r_s.mean < bounds.t_lower_s - slack ||
                    sim.t_r_s.mean > bounds.t_upper_s + slack) {
                    pass = false;
                    detail += " outside at p=" + num(p) + ",t0/t1=" + num(ratio);
                }
            }
        }
        record("repeater time within analytic band", pass,
               detail.empty() ? "9-point grid inside [lower, upper] at 3 sigma" : detail);
    }

    bool all_pass = true;
    if (a.common.json_output()) {
        json j = json::array();
        for (const auto& o : outcomes) {
            j.push_back({{"check", o.name}, {"pass", o.pass}, {"detail", o.detail}});
            all_pass = all_pass && o.pass;
        }
        std::cout << json{{"seed", a.seed}, {"trials", a.trials}, {"checks", j}}.dump(2) << '\n';
    } else {
        std::cout << "seed " << a.seed << ", trials " << a.trials << "\n";
        for (const auto& o : outcomes) {
            std::cout << (o.pass ? "ok   " : "FAIL ") << o.name << " (" << o.detail << ")\n";
            all_pass = all_pass && o.pass;
        }
    }
    return all_pass ? 0 : 2;
}

// -------------------------------------------------------------------- defaults

int run_defaults(const Common& common) {
    const DefaultParams p = common.params();
    if (common.json_output()) {
        json j{{"wavelength_m", p.wavelength_m},
               {"rep_rate_hz", p.rep_rate_hz},
               {"eta_sps", p.eta_sps},
               {"eta_det", p.eta_det},
               {"eta_mem", p.eta_mem},
               {"eta_store", memory_split_efficiency(p)},
               {"eta_retrieve", memory_split_efficiency(p)},
               {"eta_qnd", p.eta_qnd},
               {"t1_s", p.t1_s},
               {"trans_tx", p.trans_tx},
               {"trans_rx", p.trans_rx},
               {"pointing_loss", p.pointing_loss},
               {"pointing_loss_intersat", p.pointing_loss_intersat},
               {"optical_loss_db", p.optical_loss_db},
               {"a_atm_vertical_db", p.a_atm_vertical_db},
               {"fried_r0_m", p.fried_r0_m},
               {"hap_alt_m", {p.hap_alt_min_m, p.hap_alt_max_m}},
               {"leo_alt_m", p.leo_alt_m},
               {"meo_alt_m", p.meo_alt_m},
               {"geo_alt_m", p.geo_alt_m},
               {"heo_alt_m", {p.heo_perigee_m, p.heo_apogee_m}}};
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "wavelength_m            " << num_full(p.wavelength_m) << "\n"
              << "rep_rate_hz             " << num(p.rep_rate_hz) << "\n"
              << "eta_sps                 " << num(p.eta_sps) << "\n"
              << "eta_det                 " << num(p.eta_det) << "\n"
              << "eta_mem                 " << num(p.eta_mem) << "\n"
              << "eta_qnd                 " << num(p.eta_qnd) << "\n"
              << "t1_s                    " << num(p.t1_s) << "\n"
              << "trans_tx                " << num(p.trans_tx) << "\n"
              << "trans_rx                " << num(p.trans_rx) << "\n"
              << "pointing_loss           " << num(p.pointing_loss) << "\n"
              << "pointing_loss_intersat  " << num(p.pointing_loss_intersat) << "\n"
              << "optical_loss_db         " << num(p.optical_loss_db) << "\n"
              << "a_atm_vertical_db       " << num(p.a_atm_vertical_db) << "\n"
              << "fried_r0_m              " << num(p.fried_r0_m) << "\n"
              << "altitudes_m             hap " << num(p.hap_alt_min_m) << "-"
              << num(p.hap_alt_max_m) << ", leo " << num(p.leo_alt_m) << ", meo "
              << num(p.meo_alt_m) << ", geo " << num(p.geo_alt_m) << ", heo "
              << num(p.heo_perigee_m) << "-" << num(p.heo_apogee_m) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free-space optical link budgets and entanglement-distribution rates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qlink::kToolVersion);

    BudgetArgs budget_args;
    auto* budget_cmd = app.add_subcommand("budget", "Single-link attenuation breakdown");
    budget_args.common.attach(budget_cmd);
    budget_cmd->add_option("--kind", budget_args.kind, "uplink|downlink|intersatellite")
        ->check(CLI::IsMember({"uplink", "downlink", "intersatellite"}));
    budget_cmd->add_option("--altitude-m", budget_args.altitude_m, "Platform altitude [m]");
    budget_cmd->add_option("--higher-altitude-m", budget_args.higher_altitude_m,
                           "Partner altitude for intersatellite links [m]");
    budget_cmd->add_option("--elevation-deg", budget_args.elevation_deg, "Elevation [deg]");
    budget_cmd->add_option("--tx-aperture-m", budget_args.tx_aperture_m, "Transmit aperture [m]");
    budget_cmd->add_option("--rx-aperture-m", budget_args.rx_aperture_m, "Receive aperture [m]");

    RateArgs rate_args;
    auto* rate_cmd = app.add_subcommand("rate", "Teleportation rate for one scheme");
    rate_args.common.attach(rate_cmd);
    rate_cmd->add_option("--scheme", rate_args.scheme,
                         "memoryless|one-memory-alice|one-memory-bob|two-memory|repeater");
    rate_cmd->add_option("--link-db", rate_args.link_db, "Per-link attenuation [dB]");
    rate_cmd->add_option("--p-ave", rate_args.p_ave, "Double-link survival probability");
    rate_cmd->add_option("--ground-distance-m", rate_args.ground_distance_m,
                         "Station separation [m]");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a scenario sweep");
    sweep_args.common.attach(sweep_cmd);
    sweep_cmd->add_option("--scenario", sweep_args.scenario_path, "Scenario file path");
    sweep_cmd->add_option("--preset", sweep_args.preset, "Built-in preset name");
    sweep_cmd->add_option("--csv", sweep_args.csv_path, "CSV output path");
    sweep_cmd->add_option("--json", sweep_args.json_path, "JSON output path");

    Common presets_common;
    auto* presets_cmd = app.add_subcommand("presets", "List built-in scenario presets");
    presets_common.attach(presets_cmd);

    QkdArgs qkd_args;
    auto* qkd_cmd = app.add_subcommand("qkd", "Time to accumulate a key at a given loss");
    qkd_args.common.attach(qkd_cmd);
    qkd_cmd->add_option("--db", qkd_args.db, "End-to-end attenuation [dB]");
    qkd_cmd->add_option("--protocol", qkd_args.protocol, "wcp|eps")
        ->check(CLI::IsMember({"wcp", "eps"}));
    qkd_cmd->add_option("--rate-hz", qkd_args.rate_hz, "Source clock rate [Hz]");
    qkd_cmd->add_option("--orbit", qkd_args.orbit, "hap|leo|meo|geo|heo for the pass verdict");
    qkd_cmd->add_flag("--grid", qkd_args.grid, "Emit the full feasibility grid");
    qkd_cmd->add_option("--db-min", qkd_args.db_min, "Grid start [dB]");
    qkd_cmd->add_option("--db-max", qkd_args.db_max, "Grid end [dB]");
    qkd_cmd->add_option("--db-step", qkd_args.db_step, "Grid step [dB]");

    StaticTableArgs static_args;
    auto* static_cmd =
        app.add_subcommand("static-table", "Minimum apertures for fixed loss targets");
    static_args.common.attach(static_cmd);
    static_cmd->add_option("--downlink-target-db", static_args.spec.downlink_target_db);
    static_cmd->add_option("--uplink-target-db", static_args.spec.uplink_target_db);
    static_cmd->add_option("--intersat-target-db", static_args.spec.intersat_target_db);
    static_cmd->add_option("--space-cap-m", static_args.spec.space_cap_m);
    static_cmd->add_option("--ground-cap-m", static_args.spec.ground_cap_m);

    Common headline_common;
    auto* headline_cmd = app.add_subcommand("headline", "Fixed feasibility report");
    headline_common.attach(headline_cmd);

    ValidateArgs validate_args;
    auto* validate_cmd =
        app.add_subcommand("validate", "Monte Carlo cross-checks of the closed forms");
    validate_args.common.attach(validate_cmd);
    validate_cmd->add_option("--seed", validate_args.seed, "Master seed");
    validate_cmd->add_option("--trials", validate_args.trials, "Trials per check");

    Common defaults_common;
    auto* defaults_cmd = app.add_subcommand("defaults", "Dump the parameter table");
    defaults_common.attach(defaults_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // error message to standard error
        std::cerr << app.help();
        return 1;
    }

    try {
        if (budget_cmd->parsed()) return run_budget(budget_args);
        if (rate_cmd->parsed()) return run_rate(rate_args);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_args);
        if (presets_cmd->parsed()) {
            if (presets_common.json_output()) {
                std::cout << json(qlink::preset_names()).dump(2) << '\n';
            } else {
                for (const std::string& name : qlink::preset_names()) std::cout << name << '\n';
            }
            return 0;
        }
        if (qkd_cmd->parsed()) return run_qkd(qkd_args);
        if (static_cmd->parsed()) return run_static_table(static_args);
        if (headline_cmd->parsed()) return run_headline(headline_common);
        if (validate_cmd->parsed()) return run_validate(validate_args);
        if (defaults_cmd->parsed()) return run_defaults(defaults_common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
