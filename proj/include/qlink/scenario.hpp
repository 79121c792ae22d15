#pragma once

#include "qlink/link_budget.hpp"
#include "qlink/rates.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qlink {

enum class SweepVariable { Elevation, GroundDistance, TotalDb };

/// Teleport scenarios evaluate a symmetric double downlink and the
/// scheme rates; Qkd scenarios evaluate a single link and the
/// time-to-key figures.
enum class ScenarioMode { Teleport, Qkd };

struct SweepSpec {
    SweepVariable variable = SweepVariable::GroundDistance;
    double min = 0.0; // metres, radians(elevation expressed in degrees in files), or dB
    double max = 0.0;
    int steps = 2;
};

struct Scenario {
    std::string name;
    ScenarioMode mode = ScenarioMode::Teleport;
    LinkKind link_kind = LinkKind::Downlink;
    double altitude_m = 6.0e5;            // platform of interest (lower one for intersatellite)
    std::optional<double> higher_altitude_m; // intersatellite partner
    double wavelength_m = 785e-9;
    OpticalChain chain;
    HardwareParams hw;
    double fried_r0_m = 0.075;
    AbsorptionTable absorption = AbsorptionTable::standard();
    std::optional<SchemeKind> scheme; // empty: evaluate every scheme
    SweepSpec sweep;
};

/// One sweep point. Quantities that do not apply to the scenario mode are
/// NaN (empty cells in CSV, null in JSON).
struct SweepRow {
    double sweep_value = 0.0;
    double elevation_deg = 0.0;
    double zenith_deg = 0.0;
    double slant_range_m = 0.0;
    double link_db = 0.0;  // per link
    double total_db = 0.0; // end to end
    double p_ave = 0.0;
    double rate_memoryless = 0.0;
    double rate_one_memory_alice = 0.0;
    double rate_one_memory_bob = 0.0;
    double rate_two_memory = 0.0;
    double rate_repeater = 0.0;
    double time_1000_memoryless_s = 0.0;
    double time_1000_one_memory_alice_s = 0.0;
    double time_1000_one_memory_bob_s = 0.0;
    double time_1000_two_memory_s = 0.0;
    double time_1000_repeater_s = 0.0;
    double qkd_time_wcp_s = 0.0;
    double qkd_time_eps_s = 0.0;
    bool infeasible_horizon = false;
    bool low_elevation_shaded = false; // elevation below 20 deg
    bool clamped = false;
};

struct SweepResult {
    Scenario scenario; // fully resolved parameter snapshot
    std::string tool_version;
    std::vector<SweepRow> rows; // sorted by sweep value
};

SweepResult run_sweep(const Scenario& scenario);

/// Line-oriented scenario file with [scenario], [optics], [hardware] and
/// [sweep] sections; unknown keys or sections are a parse error.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);

std::vector<std::string> preset_names();
Scenario make_preset(const std::string& name); // throws ParseError for unknown names

/// Fixed column order, full precision, UTF-8, dot decimal separator.
void write_csv(const SweepResult& result, std::ostream& out);
void write_json(const SweepResult& result, std::ostream& out);
std::string csv_header();

struct QkdGridRow {
    std::string orbit;
    double window_s = 0.0;
    QkdProtocol protocol = QkdProtocol::DecoyWCP;
    double total_db = 0.0;
    double time_s = 0.0;
    bool feasible = false;
};

struct QkdGridSpec {
    std::vector<std::string> orbits = {"hap", "leo", "meo", "geo", "heo"};
    std::vector<QkdProtocol> protocols = {QkdProtocol::DecoyWCP, QkdProtocol::EPSorSPS};
    double db_min = 0.0;
    double db_max = 80.0;
    double db_step = 5.0;
};

/// Pass windows: LEO 120 s, MEO 20 min, GEO and similar (HEO, HAP) 1 h.
double pass_window_s(const std::string& orbit);

std::vector<QkdGridRow> qkd_feasibility_grid(const QkdGridSpec& spec, const HardwareParams& hw);

struct HeadlineReport {
    double per_link_db = 0.0;
    double p_ave = 0.0;
    double rate_spdc_per_s = 0.0;   // probabilistic input source
    double time_1000_spdc_s = 0.0;
    double rate_sps_per_s = 0.0;    // deterministic input source
    double time_1000_sps_s = 0.0;
    double sps_to_spdc_ratio = 0.0;
    LinkBudget budget;
    Scenario preset;
};

/// The fixed feasibility preset: source at 36,000 km, 0.5 m transmit and
/// 2 m receive apertures, 810 nm, SPDC pair probability 5%, 1 GHz clock.
HeadlineReport geo_teleport_headline();

struct ApertureCell {
    std::string orbit;
    double range_m = 0.0;
    LinkKind kind = LinkKind::Downlink;
    double wavelength_m = 785e-9;
    double target_db = 0.0;
    double fixed_aperture_m = 0.0; // space side, pinned at its cap
    double solved_aperture_m = 0.0;
    bool feasible = false;
};

struct ApertureTableSpec {
    double downlink_target_db = 40.0;
    double uplink_target_db = 50.0;
    double intersat_target_db = 40.0;
    double space_cap_m = 0.25;
    double ground_cap_m = 2.0;
    double min_aperture_m = 0.01;
    std::vector<Wavelength> wavelengths = {Wavelength::NM785, Wavelength::NM1550};
};

/// Static model: the satellite sits at the zenith of the other station;
/// the space-side aperture is pinned at its cap and the other side is
/// solved for, or the cell is marked infeasible.
std::vector<ApertureCell> static_aperture_table(const ApertureTableSpec& spec);

const char* to_string(SweepVariable v);
const char* to_string(ScenarioMode m);
const char* to_string(LinkKind k);
const char* to_string(SchemeKind s);
const char* to_string(QkdProtocol p);

} // namespace qlink
