#include <doctest.h>

#include "qlink/errors.hpp"
#include "qlink/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace qlink;

namespace {

const char* kSampleScenario = R"(# sample double-downlink sweep
[scenario]
name = custom
link_kind = downlink
mode = teleport
altitude_m = 6e5
wavelength_m = 785e-9

[optics]
tx_aperture_m = 0.4
rx_aperture_m = 2.0

[hardware]
eta_eps = 0.01

[sweep]
variable = ground_distance
min = 0
max = 2e6
steps = 5
)";

Scenario sample_scenario() {
    std::istringstream in(kSampleScenario);
    return parse_scenario(in);
}

} // namespace

TEST_CASE("scenario files parse with table defaults filled in") {
    const Scenario s = sample_scenario();
    CHECK(s.name == "custom");
    CHECK(s.mode == ScenarioMode::Teleport);
    CHECK(s.link_kind == LinkKind::Downlink);
    CHECK(s.altitude_m == 6e5);
    CHECK(s.chain.trans_tx == 0.80);
    CHECK(s.chain.pointing_loss == 0.20);
    CHECK(s.chain.additional_loss_db == 6.0);
    CHECK(s.hw.eta_eps == 0.01);
    CHECK(s.hw.eta_sps == 0.75);
    CHECK(s.hw.eta_store == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(s.fried_r0_m == 0.075);
    CHECK(s.sweep.steps == 5);
}

TEST_CASE("parser fails closed") {
    SUBCASE("unknown key") {
        std::string text = kSampleScenario;
        text.insert(text.find("[hardware]"), "beam_quality = 2\n");
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_scenario(in), ParseError);
    }
    SUBCASE("unknown section") {
        std::string text = std::string(kSampleScenario) + "[plotting]\nstyle = 1\n";
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_scenario(in), ParseError);
    }
    SUBCASE("missing sweep") {
        std::string text = kSampleScenario;
        text = text.substr(0, text.find("[sweep]"));
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_scenario(in), ParseError);
    }
    SUBCASE("missing apertures") {
        std::string text = kSampleScenario;
        const auto pos = text.find("tx_aperture_m = 0.4\n");
        text.erase(pos, std::string("tx_aperture_m = 0.4\n").size());
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_scenario(in), ParseError);
    }
    SUBCASE("memory split needs both explicit factors") {
        std::string text = kSampleScenario;
        text.insert(text.find("[sweep]"), "eta_store = 0.8\n");
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_scenario(in), ParseError);
    }
}

TEST_CASE("teleport sweep reproduces the scheme identities row by row") {
    const SweepResult result = run_sweep(sample_scenario());
    REQUIRE(result.rows.size() == 5);
    const Scenario& s = result.scenario;
    const double mem = s.hw.eta_store * s.hw.eta_retrieve * s.hw.eta_qnd;
    for (const SweepRow& row : result.rows) {
        const double decay0 = std::exp(-(row.sweep_value / kEarth.light_speed_ms) / s.hw.t1_s);
        CHECK(row.rate_two_memory ==
              doctest::Approx(row.rate_one_memory_bob * mem * decay0).epsilon(1e-12));
        CHECK(row.p_ave == doctest::Approx(std::pow(10.0, -row.total_db / 10.0)).epsilon(1e-12));
        CHECK(row.total_db == doctest::Approx(2.0 * row.link_db).epsilon(1e-12));
    }
}

TEST_CASE("sweep rows are ordered and deterministic") {
    const SweepResult a = run_sweep(sample_scenario());
    const SweepResult b = run_sweep(sample_scenario());
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].sweep_value == b.rows[i].sweep_value);
        CHECK(a.rows[i].rate_memoryless == b.rows[i].rate_memoryless);
        if (i > 0) CHECK(a.rows[i].sweep_value > a.rows[i - 1].sweep_value);
    }

    // identical scenario, bit-identical result files
    std::ostringstream csv_a, csv_b, json_a, json_b;
    write_csv(a, csv_a);
    write_csv(b, csv_b);
    write_json(a, json_a);
    write_json(b, json_b);
    CHECK(csv_a.str() == csv_b.str());
    CHECK(json_a.str() == json_b.str());
}

TEST_CASE("shipped scenario files stay in sync with the presets") {
    const Scenario file = parse_scenario_file(std::string(QLINK_SOURCE_DIR) +
                                              "/scenarios/teleport_leo_eps1.scn");
    const Scenario preset = make_preset("teleport-leo-eps1");
    CHECK(file.altitude_m == preset.altitude_m);
    CHECK(file.chain.tx_aperture_m == preset.chain.tx_aperture_m);
    CHECK(file.chain.rx_aperture_m == preset.chain.rx_aperture_m);
    CHECK(file.hw.eta_eps == preset.hw.eta_eps);
    CHECK(file.sweep.max == preset.sweep.max);
    CHECK(file.sweep.steps == preset.sweep.steps);

    std::ostringstream from_file, from_preset;
    write_csv(run_sweep(file), from_file);
    write_csv(run_sweep(preset), from_preset);
    CHECK(from_file.str() == from_preset.str());

    CHECK_NOTHROW(run_sweep(parse_scenario_file(std::string(QLINK_SOURCE_DIR) +
                                                "/scenarios/qkd_downlink_leo.scn")));
    CHECK_NOTHROW(run_sweep(parse_scenario_file(std::string(QLINK_SOURCE_DIR) +
                                                "/scenarios/isl_leo_geo.scn")));
}

TEST_CASE("pair-source efficiency scales the scheme rates linearly") {
    Scenario one = sample_scenario();
    Scenario fifty = sample_scenario();
    fifty.hw.eta_eps = 0.50;
    const SweepResult r1 = run_sweep(one);
    const SweepResult r50 = run_sweep(fifty);
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
        CHECK(r50.rows[i].rate_memoryless ==
              doctest::Approx(50.0 * r1.rows[i].rate_memoryless).epsilon(1e-12));
        CHECK(r50.rows[i].rate_two_memory ==
              doctest::Approx(50.0 * r1.rows[i].rate_two_memory).epsilon(1e-12));
    }
}

TEST_CASE("the horizon cuts the double link near 5325 km at 600 km altitude") {
    Scenario s = sample_scenario();
    s.sweep = {SweepVariable::GroundDistance, 5.0e6, 5.6e6, 61};
    const SweepResult result = run_sweep(s);
    double last_feasible = 0.0;
    double first_infeasible = 0.0;
    for (const SweepRow& row : result.rows) {
        if (!row.infeasible_horizon)
            last_feasible = row.sweep_value;
        else if (first_infeasible == 0.0)
            first_infeasible = row.sweep_value;
    }
    CHECK(last_feasible == doctest::Approx(5.32e6).epsilon(0.01));
    CHECK(first_infeasible == doctest::Approx(5.33e6).epsilon(0.01));
    // the low-elevation shading kicks in much earlier
    CHECK(result.rows.front().low_elevation_shaded);
}

TEST_CASE("scheme filter blanks the other columns") {
    Scenario s = sample_scenario();
    s.scheme = SchemeKind::Memoryless;
    const SweepResult result = run_sweep(s);
    CHECK(std::isfinite(result.rows[0].rate_memoryless));
    CHECK(std::isnan(result.rows[0].rate_two_memory));
    CHECK(std::isnan(result.rows[0].rate_repeater));
}

TEST_CASE("qkd elevation sweep fills the time-to-key columns") {
    const Scenario s = make_preset("downlink-leo");
    const SweepResult result = run_sweep(s);
    REQUIRE(!result.rows.empty());
    for (const SweepRow& row : result.rows) {
        CHECK(std::isnan(row.rate_memoryless));
        CHECK(std::isfinite(row.qkd_time_wcp_s));
        CHECK(row.qkd_time_wcp_s ==
              doctest::Approx(10.0 * row.qkd_time_eps_s).epsilon(1e-12));
        CHECK(row.link_db == row.total_db);
    }
    // higher elevation, shorter path, less loss
    CHECK(result.rows.front().link_db > result.rows.back().link_db);
}

TEST_CASE("intersatellite sweeps carry no absorption term") {
    const Scenario s = make_preset("isl-leo-geo");
    const SweepResult result = run_sweep(s);
    const SweepRow& top = result.rows.back(); // 90 deg: radial alignment
    const LinkGeometry radial =
        intersatellite_geometry({s.altitude_m}, {*s.higher_altitude_m}, 0.0);
    const LinkBudget direct = attenuation_db(LinkKind::Intersatellite, s.chain, s.wavelength_m,
                                             radial, s.fried_r0_m, s.absorption);
    CHECK(top.link_db == doctest::Approx(direct.total_db).epsilon(1e-12));
    CHECK(direct.atmosphere_db == 0.0);
    CHECK(s.chain.pointing_loss == 0.30);
}

TEST_CASE("every built-in preset runs") {
    for (const std::string& name : preset_names()) {
        const SweepResult result = run_sweep(make_preset(name));
        CHECK(!result.rows.empty());
    }
    CHECK_THROWS_AS(make_preset("no-such-preset"), ParseError);
}

TEST_CASE("csv and json outputs round-trip at full precision") {
    Scenario s = sample_scenario();
    s.sweep.steps = 3;
    const SweepResult result = run_sweep(s);

    std::ostringstream csv;
    write_csv(result, csv);
    const std::string text = csv.str();
    CHECK(text.rfind(csv_header(), 0) == 0);

    // re-read the first data row and compare a high-precision column
    std::istringstream lines(text);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row_in(row);
    while (std::getline(row_in, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() >= 9);
    CHECK(std::strtod(cells[8].c_str(), nullptr) == result.rows[0].p_ave);

    std::ostringstream json_out;
    write_json(result, json_out);
    const nlohmann::json j = nlohmann::json::parse(json_out.str());
    CHECK(j["tool_version"].get<std::string>() == result.tool_version);
    CHECK(j["rows"].size() == result.rows.size());
    CHECK(j["columns"].size() == 24);
    CHECK(j["scenario"]["hardware"]["eta_eps"].get<double>() == s.hw.eta_eps);
    // not-applicable cells are nulls, matching the CSV's empty cells
    CHECK(j["rows"][0][19].is_null()); // qkd_time_wcp_s in a teleport sweep
}

TEST_CASE("qkd feasibility grid") {
    const HardwareParams hw = HardwareParams::from_defaults(defaults(Wavelength::NM785));
    QkdGridSpec spec;
    spec.orbits = {"leo", "geo"};
    spec.db_min = 0.0;
    spec.db_max = 60.0;
    spec.db_step = 5.0;
    const auto rows = qkd_feasibility_grid(spec, hw);
    REQUIRE(!rows.empty());

    SUBCASE("windows follow the orbit class") {
        CHECK(pass_window_s("leo") == 120.0);
        CHECK(pass_window_s("meo") == 1200.0);
        CHECK(pass_window_s("geo") == 3600.0);
        CHECK_THROWS_AS(pass_window_s("lunar"), std::invalid_argument);
    }
    SUBCASE("lower loss never flips a feasible cell infeasible") {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].orbit == rows[i - 1].orbit && rows[i].protocol == rows[i - 1].protocol) {
                CHECK(rows[i].total_db > rows[i - 1].total_db);
                CHECK((rows[i - 1].feasible || !rows[i].feasible));
            }
        }
    }
    SUBCASE("protocols differ by exactly ten in time") {
        for (const auto& row : rows) {
            if (row.protocol != QkdProtocol::DecoyWCP) continue;
            for (const auto& other : rows) {
                if (other.orbit == row.orbit && other.protocol == QkdProtocol::EPSorSPS &&
                    other.total_db == row.total_db)
                    CHECK(row.time_s == doctest::Approx(10.0 * other.time_s).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("feasibility headline") {
    const HeadlineReport r = geo_teleport_headline();
    CHECK(r.per_link_db == doctest::Approx(39.203050783160435).epsilon(1e-12));
    CHECK(r.per_link_db > 38.0);
    CHECK(r.per_link_db < 41.0);
    CHECK(r.rate_spdc_per_s == doctest::Approx(0.014614530745357561).epsilon(1e-12));
    // within a factor of two of the quoted 0.018/s working point
    CHECK(r.rate_spdc_per_s > 0.009);
    CHECK(r.rate_spdc_per_s < 0.036);
    CHECK(r.sps_to_spdc_ratio == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(r.time_1000_spdc_s / 3600.0 == doctest::Approx(19.0).epsilon(0.01));
    CHECK(r.time_1000_sps_s / 3600.0 == doctest::Approx(1.267).epsilon(0.01));
}

TEST_CASE("static aperture table") {
    ApertureTableSpec spec;
    const auto cells = static_aperture_table(spec);
    REQUIRE(!cells.empty());

    const auto find_cell = [&](const std::string& orbit, LinkKind kind, double wl) {
        for (const auto& c : cells)
            if (c.orbit == orbit && c.kind == kind && std::abs(c.wavelength_m - wl) < 1e-12)
                return c;
        FAIL("missing cell");
        return cells.front();
    };

    SUBCASE("near platforms reach the targets, distant uplinks do not") {
        CHECK(find_cell("leo", LinkKind::Downlink, 785e-9).feasible);
        CHECK(find_cell("hap", LinkKind::Uplink, 785e-9).feasible);
        CHECK(find_cell("leo", LinkKind::Uplink, 785e-9).feasible);
        CHECK_FALSE(find_cell("geo", LinkKind::Uplink, 785e-9).feasible);
        CHECK_FALSE(find_cell("heo", LinkKind::Uplink, 785e-9).feasible);
    }
    SUBCASE("longer wavelengths need apertures at least as large") {
        for (const auto& c : cells) {
            if (std::abs(c.wavelength_m - 785e-9) > 1e-12 || !c.feasible) continue;
            for (const auto& d : cells) {
                if (d.orbit == c.orbit && d.kind == c.kind &&
                    std::abs(d.wavelength_m - 1550e-9) < 1e-12 && d.feasible)
                    CHECK(d.solved_aperture_m >= c.solved_aperture_m - 1e-3);
            }
        }
    }
    SUBCASE("intersatellite cells are capped at the space aperture") {
        for (const auto& c : cells) {
            if (c.kind != LinkKind::Intersatellite || !c.feasible) continue;
            CHECK(c.solved_aperture_m <= spec.space_cap_m + 1e-9);
        }
    }
}
