#include "qlink/scenario.hpp"

#include "qlink/errors.hpp"
#include "qlink/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace qlink {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kShadeElevationDeg = 20.0;

// locale-independent full-precision formatting (dot decimal separator)
std::string format_full(double v) {
    char buf[40];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                         std::chars_format::general, 17);
    return std::string(buf, end);
}

} // namespace

const char* to_string(SweepVariable v) {
    switch (v) {
    case SweepVariable::Elevation: return "elevation";
    case SweepVariable::GroundDistance: return "ground_distance";
    case SweepVariable::TotalDb: return "total_db";
    }
    return "?";
}

const char* to_string(ScenarioMode m) {
    return m == ScenarioMode::Teleport ? "teleport" : "qkd";
}

const char* to_string(LinkKind k) {
    switch (k) {
    case LinkKind::Uplink: return "uplink";
    case LinkKind::Downlink: return "downlink";
    case LinkKind::Intersatellite: return "intersatellite";
    }
    return "?";
}

const char* to_string(SchemeKind s) {
    switch (s) {
    case SchemeKind::Memoryless: return "memoryless";
    case SchemeKind::OneMemoryAlice: return "one_memory_alice";
    case SchemeKind::OneMemoryBob: return "one_memory_bob";
    case SchemeKind::TwoMemory: return "two_memory";
    case SchemeKind::TwoLinkRepeater: return "two_link_repeater";
    }
    return "?";
}

const char* to_string(QkdProtocol p) {
    return p == QkdProtocol::DecoyWCP ? "wcp" : "eps";
}

namespace {

void validate_scenario(const Scenario& s) {
    if (s.sweep.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    if (!(s.sweep.max > s.sweep.min)) throw std::invalid_argument("sweep range is empty");
    if (!(s.altitude_m > 0.0)) throw std::invalid_argument("altitude must be > 0");
    if (s.mode == ScenarioMode::Teleport) {
        if (s.sweep.variable != SweepVariable::GroundDistance)
            throw std::invalid_argument("teleport scenarios sweep ground_distance");
        if (s.link_kind == LinkKind::Intersatellite)
            throw std::invalid_argument("teleport scenarios link the satellite to ground stations");
        if (!(s.sweep.min >= 0.0)) throw std::invalid_argument("ground distance must be >= 0");
    } else {
        if (s.sweep.variable == SweepVariable::GroundDistance)
            throw std::invalid_argument("qkd scenarios sweep elevation or total_db");
        if (!(s.sweep.min >= 0.0))
            throw std::invalid_argument("sweep minimum must be >= 0");
        if (s.sweep.variable == SweepVariable::Elevation && s.sweep.max > 90.0)
            throw std::invalid_argument("elevation sweeps are bounded by 90 deg");
    }
    if (s.link_kind == LinkKind::Intersatellite) {
        if (!s.higher_altitude_m || !(*s.higher_altitude_m > s.altitude_m))
            throw std::invalid_argument(
                "intersatellite scenarios need higher_altitude_m above altitude_m");
    } else if (s.sweep.variable != SweepVariable::TotalDb) {
        s.absorption.vertical_db(s.wavelength_m); // throws for unknown wavelengths
    }
    validate(s.hw);
    if (!(s.fried_r0_m > 0.0)) throw std::invalid_argument("fried_r0_m must be > 0");
}

bool scheme_selected(const Scenario& s, SchemeKind k) {
    return !s.scheme || *s.scheme == k;
}

void fill_teleport_rates(const Scenario& s, SweepRow& row, double ground_distance_m) {
    const ClassicalComms comms{ground_distance_m};
    const auto rate_for = [&](SchemeKind k) {
        return scheme_selected(s, k) ? teleportation_rate(k, s.hw, row.p_ave, comms) : kNaN;
    };
    row.rate_memoryless = rate_for(SchemeKind::Memoryless);
    row.rate_one_memory_alice = rate_for(SchemeKind::OneMemoryAlice);
    row.rate_one_memory_bob = rate_for(SchemeKind::OneMemoryBob);
    row.rate_two_memory = rate_for(SchemeKind::TwoMemory);

    row.rate_repeater = kNaN;
    if (scheme_selected(s, SchemeKind::TwoLinkRepeater)) {
        // elementary links span half the ground separation, each fed by its
        // own satellite double-downlink
        const DoubleLink half = symmetric_double_link(s.altitude_m, ground_distance_m / 2.0);
        const LinkBudget half_budget = attenuation_db(s.link_kind, s.chain, s.wavelength_m,
                                                      half.per_link, s.fried_r0_m, s.absorption,
                                                      /*clamp_absorption=*/true);
        const double p_elem = double_link_probability(half_budget) * s.hw.eta_eps;
        row.rate_repeater =
            p_elem > 0.0 ? repeater_rate_bounds(s.hw, p_elem, comms).teleport_rate_per_s : 0.0;
    }

    row.time_1000_memoryless_s = 1000.0 / row.rate_memoryless;
    row.time_1000_one_memory_alice_s = 1000.0 / row.rate_one_memory_alice;
    row.time_1000_one_memory_bob_s = 1000.0 / row.rate_one_memory_bob;
    row.time_1000_two_memory_s = 1000.0 / row.rate_two_memory;
    row.time_1000_repeater_s = 1000.0 / row.rate_repeater;
    row.qkd_time_wcp_s = kNaN;
    row.qkd_time_eps_s = kNaN;
}

void fill_qkd_times(const Scenario& s, SweepRow& row) {
    row.rate_memoryless = kNaN;
    row.rate_one_memory_alice = kNaN;
    row.rate_one_memory_bob = kNaN;
    row.rate_two_memory = kNaN;
    row.rate_repeater = kNaN;
    row.time_1000_memoryless_s = kNaN;
    row.time_1000_one_memory_alice_s = kNaN;
    row.time_1000_one_memory_bob_s = kNaN;
    row.time_1000_two_memory_s = kNaN;
    row.time_1000_repeater_s = kNaN;
    row.qkd_time_wcp_s = qkd_time_required(row.total_db, QkdProtocol::DecoyWCP, s.hw);
    row.qkd_time_eps_s = qkd_time_required(row.total_db, QkdProtocol::EPSorSPS, s.hw);
}

SweepRow evaluate_point(const Scenario& s, double value) {
    SweepRow row;
    row.sweep_value = value;

    if (s.sweep.variable == SweepVariable::TotalDb) {
        row.elevation_deg = kNaN;
        row.zenith_deg = kNaN;
        row.slant_range_m = kNaN;
        row.link_db = kNaN;
        row.total_db = value;
        row.p_ave = transmission_probability(value);
        fill_qkd_times(s, row);
        return row;
    }

    LinkGeometry geom;
    if (s.sweep.variable == SweepVariable::GroundDistance) {
        geom = symmetric_double_link(s.altitude_m, value).per_link;
    } else if (s.link_kind == LinkKind::Intersatellite) {
        const CircularOrbit lower{s.altitude_m};
        const CircularOrbit higher{*s.higher_altitude_m};
        const double rel =
            intersatellite_angle_from_elevation(lower, higher, value / kDegPerRad);
        geom = intersatellite_geometry(lower, higher, rel);
    } else {
        geom = link_geometry_at_elevation(s.altitude_m, value / kDegPerRad);
    }

    row.elevation_deg = geom.elevation_rad * kDegPerRad;
    row.zenith_deg = geom.zenith_angle_rad * kDegPerRad;
    row.slant_range_m = geom.slant_range_m;
    row.infeasible_horizon = geom.elevation_rad < 0.0;
    row.low_elevation_shaded = row.elevation_deg < kShadeElevationDeg;

    const LinkBudget budget = attenuation_db(s.link_kind, s.chain, s.wavelength_m, geom,
                                             s.fried_r0_m, s.absorption,
                                             /*clamp_absorption=*/true);
    row.clamped = budget.geometric_clamped || budget.absorption_clamped;
    row.link_db = budget.total_db;

    if (s.mode == ScenarioMode::Teleport) {
        row.total_db = 2.0 * budget.total_db; // both pair photons, symmetric links
        row.p_ave = double_link_probability(budget);
        fill_teleport_rates(s, row, value);
    } else {
        row.total_db = budget.total_db;
        row.p_ave = transmission_probability(budget);
        fill_qkd_times(s, row);
    }
    return row;
}

} // namespace

SweepResult run_sweep(const Scenario& scenario) {
    validate_scenario(scenario);
    SweepResult result;
    result.scenario = scenario;
    result.tool_version = kToolVersion;
    result.rows.reserve(scenario.sweep.steps);
    for (int i = 0; i < scenario.sweep.steps; ++i) {
        const double value = scenario.sweep.min +
                             (scenario.sweep.max - scenario.sweep.min) * i /
                                 (scenario.sweep.steps - 1);
        result.rows.push_back(evaluate_point(scenario, value));
    }
    return result;
}

// ---------------------------------------------------------------------------
// scenario file parsing

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid number for '" + key + "': " + value);
    }
}

LinkKind parse_link_kind(const std::string& value) {
    if (value == "uplink") return LinkKind::Uplink;
    if (value == "downlink") return LinkKind::Downlink;
    if (value == "intersatellite") return LinkKind::Intersatellite;
    throw ParseError("unknown link_kind: " + value);
}

SweepVariable parse_variable(const std::string& value) {
    if (value == "elevation") return SweepVariable::Elevation;
    if (value == "ground_distance") return SweepVariable::GroundDistance;
    if (value == "total_db") return SweepVariable::TotalDb;
    throw ParseError("unknown sweep variable: " + value);
}

std::optional<SchemeKind> parse_scheme(const std::string& value) {
    if (value == "all") return std::nullopt;
    if (value == "memoryless") return SchemeKind::Memoryless;
    if (value == "one_memory_alice") return SchemeKind::OneMemoryAlice;
    if (value == "one_memory_bob") return SchemeKind::OneMemoryBob;
    if (value == "two_memory") return SchemeKind::TwoMemory;
    if (value == "two_link_repeater") return SchemeKind::TwoLinkRepeater;
    throw ParseError("unknown scheme: " + value);
}

} // namespace

Scenario parse_scenario(std::istream& in) {
    Scenario s;
    std::string section;
    std::string line;
    int line_no = 0;

    bool have_mode = false, have_tx = false, have_rx = false, have_pointing = false;
    bool have_variable = false, have_min = false, have_max = false, have_steps = false;
    std::optional<double> eta_mem, eta_store, eta_retrieve, a_atm_override;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("malformed section at line " + std::to_string(line_no));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "optics" && section != "hardware" &&
                section != "sweep")
                throw ParseError("unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value' at line " + std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) throw ParseError("key outside any section: " + key);

        if (section == "scenario") {
            if (key == "name") s.name = value;
            else if (key == "mode") {
                if (value == "teleport") s.mode = ScenarioMode::Teleport;
                else if (value == "qkd") s.mode = ScenarioMode::Qkd;
                else throw ParseError("unknown mode: " + value);
                have_mode = true;
            } else if (key == "link_kind") s.link_kind = parse_link_kind(value);
            else if (key == "altitude_m") s.altitude_m = parse_number(value, key);
            else if (key == "higher_altitude_m") s.higher_altitude_m = parse_number(value, key);
            else if (key == "wavelength_m") s.wavelength_m = parse_number(value, key);
            else if (key == "scheme") s.scheme = parse_scheme(value);
            else throw ParseError("unknown key in [scenario]: " + key);
        } else if (section == "optics") {
            if (key == "tx_aperture_m") { s.chain.tx_aperture_m = parse_number(value, key); have_tx = true; }
            else if (key == "rx_aperture_m") { s.chain.rx_aperture_m = parse_number(value, key); have_rx = true; }
            else if (key == "trans_tx") s.chain.trans_tx = parse_number(value, key);
            else if (key == "trans_rx") s.chain.trans_rx = parse_number(value, key);
            else if (key == "pointing_loss") { s.chain.pointing_loss = parse_number(value, key); have_pointing = true; }
            else if (key == "additional_loss_db") s.chain.additional_loss_db = parse_number(value, key);
            else if (key == "fried_r0_m") s.fried_r0_m = parse_number(value, key);
            else if (key == "a_atm_vertical_db") a_atm_override = parse_number(value, key);
            else throw ParseError("unknown key in [optics]: " + key);
        } else if (section == "hardware") {
            if (key == "rep_rate_hz") s.hw.rep_rate_hz = parse_number(value, key);
            else if (key == "eta_eps") s.hw.eta_eps = parse_number(value, key);
            else if (key == "eta_sps") s.hw.eta_sps = parse_number(value, key);
            else if (key == "eta_det") s.hw.eta_det = parse_number(value, key);
            else if (key == "eta_mem") eta_mem = parse_number(value, key);
            else if (key == "eta_store") eta_store = parse_number(value, key);
            else if (key == "eta_retrieve") eta_retrieve = parse_number(value, key);
            else if (key == "eta_qnd") s.hw.eta_qnd = parse_number(value, key);
            else if (key == "t1_s") s.hw.t1_s = parse_number(value, key);
            else if (key == "multiplex_factor") {
                const double m = parse_number(value, key);
                if (m < 1.0 || m != std::floor(m))
                    throw ParseError("multiplex_factor must be a positive integer");
                s.hw.multiplex_factor = static_cast<int>(m);
            } else throw ParseError("unknown key in [hardware]: " + key);
        } else { // sweep
            if (key == "variable") { s.sweep.variable = parse_variable(value); have_variable = true; }
            else if (key == "min") { s.sweep.min = parse_number(value, key); have_min = true; }
            else if (key == "max") { s.sweep.max = parse_number(value, key); have_max = true; }
            else if (key == "steps") {
                const double n = parse_number(value, key);
                if (n < 2.0 || n != std::floor(n)) throw ParseError("steps must be an integer >= 2");
                s.sweep.steps = static_cast<int>(n);
                have_steps = true;
            } else throw ParseError("unknown key in [sweep]: " + key);
        }
    }

    if (!have_variable || !have_min || !have_max || !have_steps)
        throw ParseError("[sweep] must set variable, min, max and steps");
    if (!have_tx || !have_rx)
        throw ParseError("[optics] must set tx_aperture_m and rx_aperture_m");
    if (!have_mode)
        s.mode = s.sweep.variable == SweepVariable::GroundDistance ? ScenarioMode::Teleport
                                                                   : ScenarioMode::Qkd;
    if (!have_pointing && s.link_kind == LinkKind::Intersatellite)
        s.chain.pointing_loss = defaults(Wavelength::NM785).pointing_loss_intersat;

    if (eta_store || eta_retrieve) {
        if (!(eta_store && eta_retrieve))
            throw ParseError("eta_store and eta_retrieve must be given together");
        s.hw.eta_store = *eta_store;
        s.hw.eta_retrieve = *eta_retrieve;
    } else if (eta_mem) {
        s.hw.eta_store = std::sqrt(*eta_mem);
        s.hw.eta_retrieve = std::sqrt(*eta_mem);
    }

    if (s.link_kind != LinkKind::Intersatellite) {
        const bool known_785 = std::abs(s.wavelength_m - 785e-9) <= 1e-12;
        const bool known_1550 = std::abs(s.wavelength_m - 1550e-9) <= 1e-12;
        if (!known_785 && !known_1550 && !a_atm_override)
            throw ParseError("wavelength_m outside the absorption table needs a_atm_vertical_db");
        if (a_atm_override)
            s.absorption.rows = {{s.wavelength_m, *a_atm_override}};
    }

    validate_scenario(s);
    return s;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    return parse_scenario(in);
}

// ---------------------------------------------------------------------------
// presets

namespace {

Scenario teleport_preset(const std::string& name, double altitude_m, double eta_eps,
                         double d_max_m, int steps) {
    Scenario s;
    s.name = name;
    s.mode = ScenarioMode::Teleport;
    s.link_kind = LinkKind::Downlink;
    s.altitude_m = altitude_m;
    s.wavelength_m = 785e-9;
    s.chain.tx_aperture_m = 0.40;
    s.chain.rx_aperture_m = 2.00;
    s.hw = HardwareParams::from_defaults(defaults(Wavelength::NM785), eta_eps);
    s.sweep = {SweepVariable::GroundDistance, 0.0, d_max_m, steps};
    return s;
}

Scenario pass_preset(const std::string& name, LinkKind kind, double altitude_m,
                     double platform_aperture_m) {
    Scenario s;
    s.name = name;
    s.mode = ScenarioMode::Qkd;
    s.link_kind = kind;
    s.altitude_m = altitude_m;
    s.wavelength_m = 785e-9;
    const double ground_aperture_m = 2.0;
    if (kind == LinkKind::Downlink) {
        s.chain.tx_aperture_m = platform_aperture_m;
        s.chain.rx_aperture_m = ground_aperture_m;
    } else {
        s.chain.tx_aperture_m = ground_aperture_m;
        s.chain.rx_aperture_m = platform_aperture_m;
    }
    s.hw = HardwareParams::from_defaults(defaults(Wavelength::NM785));
    s.sweep = {SweepVariable::Elevation, 45.0, 90.0, 46};
    return s;
}

Scenario isl_preset(const std::string& name, double lower_m, double higher_m,
                    double tx_aperture_m, double rx_aperture_m) {
    Scenario s;
    s.name = name;
    s.mode = ScenarioMode::Qkd;
    s.link_kind = LinkKind::Intersatellite;
    s.altitude_m = lower_m;
    s.higher_altitude_m = higher_m;
    s.wavelength_m = 785e-9;
    s.chain.tx_aperture_m = tx_aperture_m;
    s.chain.rx_aperture_m = rx_aperture_m;
    s.chain.pointing_loss = defaults(Wavelength::NM785).pointing_loss_intersat;
    s.hw = HardwareParams::from_defaults(defaults(Wavelength::NM785));

    // sweep from the +-45 deg bound (or the lower-orbit horizon, if nearer)
    const double bound = std::min(std::numbers::pi / 4.0,
                                  max_zenith_between_orbits({lower_m}, {higher_m}));
    const LinkGeometry at_bound = intersatellite_geometry({lower_m}, {higher_m}, bound);
    const double min_elev_deg = std::max(0.0, at_bound.elevation_rad * kDegPerRad);
    s.sweep = {SweepVariable::Elevation, min_elev_deg, 90.0, 46};
    return s;
}

const DefaultParams& table785() {
    static const DefaultParams p = defaults(Wavelength::NM785);
    return p;
}

std::vector<Scenario> build_presets() {
    const DefaultParams& p = table785();
    const double hap = 0.5 * (p.hap_alt_min_m + p.hap_alt_max_m);
    std::vector<Scenario> all;
    all.push_back(teleport_preset("teleport-leo-eps1", p.leo_alt_m, 0.01, 5.6e6, 141));
    all.push_back(teleport_preset("teleport-leo-eps50", p.leo_alt_m, 0.50, 5.6e6, 141));
    all.push_back(teleport_preset("teleport-meo-eps1", p.meo_alt_m, 0.01, 1.7e7, 171));
    all.push_back(teleport_preset("teleport-meo-eps50", p.meo_alt_m, 0.50, 1.7e7, 171));
    all.push_back(teleport_preset("teleport-geo-eps1", p.geo_alt_m, 0.01, 1.8e7, 181));
    all.push_back(teleport_preset("teleport-geo-eps50", p.geo_alt_m, 0.50, 1.8e7, 181));

    all.push_back(pass_preset("downlink-hap", LinkKind::Downlink, hap, 0.15));
    all.push_back(pass_preset("uplink-hap", LinkKind::Uplink, hap, 0.15));
    all.push_back(pass_preset("downlink-leo", LinkKind::Downlink, p.leo_alt_m, 0.25));
    all.push_back(pass_preset("uplink-leo", LinkKind::Uplink, p.leo_alt_m, 0.25));
    all.push_back(pass_preset("downlink-meo", LinkKind::Downlink, p.meo_alt_m, 0.50));
    all.push_back(pass_preset("uplink-meo", LinkKind::Uplink, p.meo_alt_m, 0.50));
    all.push_back(pass_preset("downlink-geo", LinkKind::Downlink, p.geo_alt_m, 0.50));
    all.push_back(pass_preset("uplink-geo", LinkKind::Uplink, p.geo_alt_m, 0.50));
    all.push_back(pass_preset("downlink-heo", LinkKind::Downlink, p.heo_apogee_m, 0.50));
    all.push_back(pass_preset("uplink-heo", LinkKind::Uplink, p.heo_apogee_m, 0.50));

    all.push_back(isl_preset("isl-hap-leo", hap, p.leo_alt_m, 0.25, 0.15));
    all.push_back(isl_preset("isl-leo-meo", p.leo_alt_m, p.meo_alt_m, 0.50, 0.25));
    all.push_back(isl_preset("isl-leo-geo", p.leo_alt_m, p.geo_alt_m, 0.50, 0.25));
    all.push_back(isl_preset("isl-meo-geo", p.meo_alt_m, p.geo_alt_m, 0.50, 0.50));
    all.push_back(isl_preset("isl-leo-heo", p.leo_alt_m, p.heo_apogee_m, 0.50, 0.25));
    return all;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const Scenario& s : build_presets()) names.push_back(s.name);
    return names;
}

Scenario make_preset(const std::string& name) {
    for (Scenario& s : build_presets())
        if (s.name == name) return s;
    throw ParseError("unknown preset: " + name);
}

// ---------------------------------------------------------------------------
// result files

namespace {

const char* const kColumns[] = {
    "scenario",
    "sweep_variable",
    "sweep_value",
    "elevation_deg",
    "zenith_deg",
    "slant_range_m",
    "link_db",
    "total_db",
    "p_ave",
    "rate_memoryless_per_s",
    "rate_one_memory_alice_per_s",
    "rate_one_memory_bob_per_s",
    "rate_two_memory_per_s",
    "rate_repeater_per_s",
    "time_1000_memoryless_s",
    "time_1000_one_memory_alice_s",
    "time_1000_one_memory_bob_s",
    "time_1000_two_memory_s",
    "time_1000_repeater_s",
    "qkd_time_wcp_s",
    "qkd_time_eps_s",
    "infeasible_horizon",
    "low_elevation_shaded",
    "clamped",
};

std::vector<double> numeric_cells(const SweepRow& r) {
    return {r.sweep_value,
            r.elevation_deg,
            r.zenith_deg,
            r.slant_range_m,
            r.link_db,
            r.total_db,
            r.p_ave,
            r.rate_memoryless,
            r.rate_one_memory_alice,
            r.rate_one_memory_bob,
            r.rate_two_memory,
            r.rate_repeater,
            r.time_1000_memoryless_s,
            r.time_1000_one_memory_alice_s,
            r.time_1000_one_memory_bob_s,
            r.time_1000_two_memory_s,
            r.time_1000_repeater_s,
            r.qkd_time_wcp_s,
            r.qkd_time_eps_s};
}

nlohmann::json scenario_json(const Scenario& s) {
    nlohmann::json j;
    j["name"] = s.name;
    j["mode"] = to_string(s.mode);
    j["link_kind"] = to_string(s.link_kind);
    j["altitude_m"] = s.altitude_m;
    if (s.higher_altitude_m) j["higher_altitude_m"] = *s.higher_altitude_m;
    j["wavelength_m"] = s.wavelength_m;
    j["optics"] = {{"tx_aperture_m", s.chain.tx_aperture_m},
                   {"rx_aperture_m", s.chain.rx_aperture_m},
                   {"trans_tx", s.chain.trans_tx},
                   {"trans_rx", s.chain.trans_rx},
                   {"pointing_loss", s.chain.pointing_loss},
                   {"additional_loss_db", s.chain.additional_loss_db},
                   {"fried_r0_m", s.fried_r0_m}};
    nlohmann::json absorption = nlohmann::json::array();
    for (const auto& row : s.absorption.rows)
        absorption.push_back({{"wavelength_m", row.wavelength_m}, {"vertical_db", row.vertical_db}});
    j["absorption"] = absorption;
    j["hardware"] = {{"rep_rate_hz", s.hw.rep_rate_hz},
                     {"eta_eps", s.hw.eta_eps},
                     {"eta_sps", s.hw.eta_sps},
                     {"eta_det", s.hw.eta_det},
                     {"eta_store", s.hw.eta_store},
                     {"eta_retrieve", s.hw.eta_retrieve},
                     {"eta_qnd", s.hw.eta_qnd},
                     {"t1_s", s.hw.t1_s},
                     {"multiplex_factor", s.hw.multiplex_factor}};
    j["scheme"] = s.scheme ? to_string(*s.scheme) : "all";
    j["sweep"] = {{"variable", to_string(s.sweep.variable)},
                  {"min", s.sweep.min},
                  {"max", s.sweep.max},
                  {"steps", s.sweep.steps}};
    return j;
}

} // namespace

std::string csv_header() {
    std::string header;
    for (const char* col : kColumns) {
        if (!header.empty()) header += ',';
        header += col;
    }
    return header;
}

void write_csv(const SweepResult& result, std::ostream& out) {
    out << csv_header() << '\n';
    for (const SweepRow& row : result.rows) {
        out << result.scenario.name << ',' << to_string(result.scenario.sweep.variable);
        for (double v : numeric_cells(row)) {
            out << ',';
            if (std::isfinite(v)) out << format_full(v);
        }
        out << ',' << (row.infeasible_horizon ? 1 : 0) << ',' << (row.low_elevation_shaded ? 1 : 0)
            << ',' << (row.clamped ? 1 : 0) << '\n';
    }
}

void write_json(const SweepResult& result, std::ostream& out) {
    nlohmann::json j;
    j["tool_version"] = result.tool_version;
    j["scenario"] = scenario_json(result.scenario);
    nlohmann::json columns = nlohmann::json::array();
    for (const char* col : kColumns) columns.push_back(col);
    j["columns"] = std::move(columns);
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& row : result.rows) {
        nlohmann::json cells = nlohmann::json::array();
        cells.push_back(result.scenario.name);
        cells.push_back(to_string(result.scenario.sweep.variable));
        for (double v : numeric_cells(row)) {
            if (std::isfinite(v))
                cells.push_back(v);
            else
                cells.push_back(nullptr);
        }
        cells.push_back(row.infeasible_horizon);
        cells.push_back(row.low_elevation_shaded);
        cells.push_back(row.clamped);
        rows.push_back(std::move(cells));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// feasibility reports

double pass_window_s(const std::string& orbit) {
    if (orbit == "leo") return 120.0;
    if (orbit == "meo") return 1200.0;
    if (orbit == "geo" || orbit == "heo" || orbit == "hap") return 3600.0;
    throw std::invalid_argument("unknown orbit class: " + orbit);
}

std::vector<QkdGridRow> qkd_feasibility_grid(const QkdGridSpec& spec, const HardwareParams& hw) {
    if (!(spec.db_step > 0.0) || !(spec.db_max >= spec.db_min))
        throw std::invalid_argument("bad dB range");
    std::vector<QkdGridRow> rows;
    for (const std::string& orbit : spec.orbits) {
        const double window = pass_window_s(orbit);
        for (QkdProtocol protocol : spec.protocols) {
            for (double db = spec.db_min; db <= spec.db_max + 1e-9; db += spec.db_step) {
                QkdGridRow row;
                row.orbit = orbit;
                row.window_s = window;
                row.protocol = protocol;
                row.total_db = db;
                row.time_s = qkd_time_required(db, protocol, hw);
                row.feasible = row.time_s <= window;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

HeadlineReport geo_teleport_headline() {
    HeadlineReport report;

    Scenario preset;
    preset.name = "geo-teleport-headline";
    preset.mode = ScenarioMode::Teleport;
    preset.link_kind = LinkKind::Downlink;
    preset.altitude_m = 3.6e7;
    preset.wavelength_m = 810e-9;
    preset.chain.tx_aperture_m = 0.5;
    preset.chain.rx_aperture_m = 2.0;
    preset.absorption.rows = {{810e-9, 1.0}};
    preset.hw = HardwareParams::from_defaults(defaults(Wavelength::NM785), /*eta_eps=*/0.05);
    preset.hw.eta_sps = 0.05; // probabilistic input source on the ground
    preset.sweep = {SweepVariable::GroundDistance, 0.0, 1.0, 2};

    const LinkGeometry zenith_pass = link_geometry_at_central_angle(preset.altitude_m, 0.0);
    report.budget = attenuation_db(preset.link_kind, preset.chain, preset.wavelength_m,
                                   zenith_pass, preset.fried_r0_m, preset.absorption);
    report.per_link_db = report.budget.total_db;
    report.p_ave = double_link_probability(report.budget);

    const ClassicalComms comms{0.0};
    report.rate_spdc_per_s =
        teleportation_rate(SchemeKind::Memoryless, preset.hw, report.p_ave, comms);
    report.time_1000_spdc_s = time_for_events(report.rate_spdc_per_s, 1000);

    HardwareParams sps = preset.hw;
    sps.eta_sps = table785().eta_sps; // deterministic source at the table efficiency
    report.rate_sps_per_s = teleportation_rate(SchemeKind::Memoryless, sps, report.p_ave, comms);
    report.time_1000_sps_s = time_for_events(report.rate_sps_per_s, 1000);
    report.sps_to_spdc_ratio = report.rate_sps_per_s / report.rate_spdc_per_s;

    report.preset = preset;
    return report;
}

std::vector<ApertureCell> static_aperture_table(const ApertureTableSpec& spec) {
    struct Platform {
        const char* name;
        double altitude_m;
    };
    const DefaultParams& p = table785();
    const Platform platforms[] = {{"hap", 0.5 * (p.hap_alt_min_m + p.hap_alt_max_m)},
                                  {"leo", p.leo_alt_m},
                                  {"meo", p.meo_alt_m},
                                  {"geo", p.geo_alt_m},
                                  {"heo", p.heo_apogee_m}};
    struct IslPair {
        const char* name;
        double lower_m;
        double higher_m;
    };
    const IslPair isl_pairs[] = {{"hap-leo", 0.5 * (p.hap_alt_min_m + p.hap_alt_max_m), p.leo_alt_m},
                                 {"leo-meo", p.leo_alt_m, p.meo_alt_m},
                                 {"leo-geo", p.leo_alt_m, p.geo_alt_m},
                                 {"meo-geo", p.meo_alt_m, p.geo_alt_m},
                                 {"leo-heo", p.leo_alt_m, p.heo_apogee_m}};

    std::vector<ApertureCell> cells;
    const auto solve_cell = [&](const std::string& orbit, double range_m, LinkKind kind,
                                Wavelength w) {
        ApertureCell cell;
        cell.orbit = orbit;
        cell.range_m = range_m;
        cell.kind = kind;
        cell.wavelength_m = wavelength_m(w);
        const DefaultParams params = defaults(w);

        OpticalChain base;
        base.trans_tx = params.trans_tx;
        base.trans_rx = params.trans_rx;
        base.pointing_loss = kind == LinkKind::Intersatellite ? params.pointing_loss_intersat
                                                              : params.pointing_loss;
        base.additional_loss_db = params.optical_loss_db;
        base.tx_aperture_m = spec.space_cap_m;
        base.rx_aperture_m = spec.space_cap_m;

        // static model: one platform at the zenith of the other
        LinkGeometry geom;
        geom.slant_range_m = range_m;
        geom.zenith_angle_rad = 0.0;
        geom.elevation_rad = std::numbers::pi / 2.0;

        FixedSide fixed_side = FixedSide::TxFixed;
        ApertureBounds bounds{spec.min_aperture_m, spec.ground_cap_m};
        switch (kind) {
        case LinkKind::Downlink:
            cell.target_db = spec.downlink_target_db;
            fixed_side = FixedSide::TxFixed; // space transmitter pinned at its cap
            break;
        case LinkKind::Uplink:
            cell.target_db = spec.uplink_target_db;
            fixed_side = FixedSide::RxFixed; // space receiver pinned at its cap
            break;
        case LinkKind::Intersatellite:
            cell.target_db = spec.intersat_target_db;
            fixed_side = FixedSide::TxFixed;
            bounds.max_m = spec.space_cap_m;
            break;
        }
        cell.fixed_aperture_m = spec.space_cap_m;

        try {
            cell.solved_aperture_m = solve_min_aperture(
                kind, fixed_side, spec.space_cap_m, cell.target_db, cell.wavelength_m, geom,
                params.fried_r0_m, AbsorptionTable::standard(), bounds, base);
            cell.feasible = true;
        } catch (const UnachievableError&) {
            cell.solved_aperture_m = kNaN;
            cell.feasible = false;
        }
        cells.push_back(cell);
    };

    for (Wavelength w : spec.wavelengths) {
        for (const Platform& platform : platforms) {
            solve_cell(platform.name, platform.altitude_m, LinkKind::Downlink, w);
            solve_cell(platform.name, platform.altitude_m, LinkKind::Uplink, w);
        }
        for (const IslPair& pair : isl_pairs)
            solve_cell(pair.name, pair.higher_m - pair.lower_m, LinkKind::Intersatellite, w);
    }
    return cells;
}

} // namespace qlink
