#pragma once

#include <vector>

namespace qlink {

/// Hufnagel-Valley turbulence profile parameters.
struct HVProfile {
    double wind_rms_ms = 21.0;   // RMS wind speed V
    double ground_cn2 = 1.7e-14; // ground-level structure constant A', m^(-2/3)
};

/// Vertical absorption per wavelength plus the slant-scaling validity
/// bound. The secant air-mass scaling is only trusted up to 70 deg.
struct AbsorptionTable {
    struct Row {
        double wavelength_m;
        double vertical_db;
    };
    std::vector<Row> rows;
    double max_slant_zenith_rad = 1.2217304763960306; // 70 deg

    static AbsorptionTable standard(); // 785 nm -> 1.0 dB, 1550 nm -> 0.5 dB

    /// Throws UnknownWavelengthError when the wavelength is not tabulated.
    double vertical_db(double wavelength_m) const;
};

/// Refractive-index structure constant C_n^2(h) in m^(-2/3):
///   0.00594 (V/27)^2 (1e-5 h)^10 e^(-h/1000)
/// + 2.7e-16 e^(-h/1500) + A' e^(-h/100)
double cn2(const HVProfile& profile, double altitude_m);

/// Integrated turbulence mu0 = int_{h0}^{h_top} C_n^2(h) dh by adaptive
/// quadrature (the integrand spans ~12 orders of magnitude). Relative
/// accuracy well below 1e-6.
double mu0(const HVProfile& profile, double h0_m, double h_top_m);

/// Atmospheric coherence diameter r0 = (0.423 mu0 k^2 sec z)^(-3/5) with
/// k = 2 pi / lambda. Throws std::invalid_argument beyond the 70 deg
/// weak-fluctuation validity bound.
double fried_r0(const HVProfile& profile, double wavelength_m, double zenith_rad,
                double h0_m = 0.0, double h_top_m = 100e3);

/// Slant-path absorption sec(z) * A_vertical in dB.
double slant_absorption_db(const AbsorptionTable& table, double wavelength_m, double zenith_rad);

} // namespace qlink
