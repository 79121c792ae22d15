#pragma once

#include <stdexcept>

namespace qlink {

/// Universal constants. The Earth values are the IERS/CODATA conventional
/// ones; every module takes them as an argument so a test can substitute
/// its own set.
struct PhysicalConstants {
    double earth_radius_m = 6.371e6;       // mean radius
    double earth_mu_m3s2 = 3.986004418e14; // geocentric GM
    double light_speed_ms = 2.99792458e8;
};

inline constexpr PhysicalConstants kEarth{};

enum class Wavelength { NM785, NM1550 };

double wavelength_m(Wavelength w);

/// Baseline free-space-link parameter set. All efficiencies are linear
/// factors in (0,1]; losses are dB >= 0; lengths are metres.
struct DefaultParams {
    double wavelength_m = 785e-9;
    double rep_rate_hz = 1e9;
    double eta_sps = 0.75;
    double eta_det = 0.90;
    double eta_mem = 0.50; // storage*retrieval product
    double eta_qnd = 0.90;
    double t1_s = 0.100;
    double trans_tx = 0.80;
    double trans_rx = 0.80;
    double pointing_loss = 0.20;
    double pointing_loss_intersat = 0.30;
    double optical_loss_db = 6.0;
    double a_atm_vertical_db = 1.0; // wavelength dependent, see defaults()
    double fried_r0_m = 0.075;
    double hap_alt_min_m = 2.0e4;
    double hap_alt_max_m = 3.0e4;
    double leo_alt_m = 6.0e5;
    double meo_alt_m = 2.0e7;
    double geo_alt_m = 3.6e7;
    double heo_perigee_m = 6.0e5;
    double heo_apogee_m = 4.0e7;
};

/// Parameter-table row for the chosen wavelength. Pure: repeated calls
/// return identical values.
DefaultParams defaults(Wavelength w);

/// Symmetric split of the memory-efficiency product: the table only pins
/// eta_st*eta_r, so eta_st = eta_r = sqrt(eta_mem) wherever the factors
/// enter separately.
double memory_split_efficiency(const DefaultParams& p);

/// Throws std::invalid_argument when a field violates its range.
void validate(const DefaultParams& p);

} // namespace qlink
