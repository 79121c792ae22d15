#pragma once

#include "qlink/atmosphere.hpp"
#include "qlink/geometry.hpp"

namespace qlink {

/// Per-kind channel rules:
///   Uplink         turbulence divergence lambda/r0, slant absorption
///   Downlink       no turbulence divergence, slant absorption
///   Intersatellite no turbulence divergence, no absorption, pointing 0.30
enum class LinkKind { Uplink, Downlink, Intersatellite };

struct OpticalChain {
    double tx_aperture_m = 0.0;
    double rx_aperture_m = 0.0;
    double trans_tx = 0.80;          // T_T in (0,1]
    double trans_rx = 0.80;          // T_R in (0,1]
    double pointing_loss = 0.20;     // L_P in [0,1)
    double additional_loss_db = 6.0; // A_add >= 0
};

/// Attenuation breakdown in dB. total_db is the sum of the components;
/// every component is >= 0.
struct LinkBudget {
    double geometric_db = 0.0;  // diffraction spread vs receive aperture
    double optics_db = 0.0;     // transmittances and pointing
    double atmosphere_db = 0.0; // slant absorption
    double additional_db = 0.0;
    double total_db = 0.0;
    bool far_field_ok = true;       // H >= 10 D_T^2 / lambda
    bool geometric_clamped = false; // beam smaller than the receive aperture
    bool absorption_clamped = false; // zenith beyond the table bound, sec clamped
};

/// The geometric/optics factor H^2 (theta_T^2 + theta_atm^2) / D_R^2
/// * 1/(T_T (1-L_P) T_R) enters in dB via 10 log10; when the
/// diffraction-limited spot is smaller than the receive aperture the
/// geometric ratio is clamped at 1 and flagged. r0_m is only read for
/// uplinks. With clamp_absorption set, a zenith angle past the table
/// bound uses sec(bound) and sets the flag instead of throwing.
LinkBudget attenuation_db(LinkKind kind, const OpticalChain& chain, double wavelength_m,
                          const LinkGeometry& geometry, double r0_m,
                          const AbsorptionTable& absorption, bool clamp_absorption = false);

/// Single-link survival probability 10^(-total_db/10).
double transmission_probability(double total_db);
double transmission_probability(const LinkBudget& budget);

/// Probability that both photons of a pair survive two independent links
/// of per_link_db each: 10^(-2 per_link_db / 10).
double double_link_probability(double per_link_db);
double double_link_probability(const LinkBudget& per_link_budget);

enum class FixedSide { TxFixed, RxFixed };

struct ApertureBounds {
    double min_m = 0.01;
    double max_m = 2.0;
};

/// Smallest free aperture keeping the attenuation at or below target_db,
/// the other side pinned at fixed_aperture_m. Bisection to 1 mm. Throws
/// UnachievableError when even the largest allowed aperture exceeds the
/// target.
double solve_min_aperture(LinkKind kind, FixedSide fixed_side, double fixed_aperture_m,
                          double target_db, double wavelength_m, const LinkGeometry& geometry,
                          double r0_m, const AbsorptionTable& absorption, ApertureBounds bounds,
                          const OpticalChain& base_chain);

} // namespace qlink
