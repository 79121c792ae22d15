#include "qlink/atmosphere.hpp"

#include "qlink/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qlink {

namespace {

constexpr double kZenithBoundRad = 70.0 * std::numbers::pi / 180.0;

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

} // namespace

AbsorptionTable AbsorptionTable::standard() {
    AbsorptionTable t;
    t.rows = {{785e-9, 1.0}, {1550e-9, 0.5}};
    t.max_slant_zenith_rad = kZenithBoundRad;
    return t;
}

double AbsorptionTable::vertical_db(double wavelength) const {
    for (const Row& row : rows) {
        if (std::abs(row.wavelength_m - wavelength) <= 1e-12)
            return row.vertical_db;
    }
    throw UnknownWavelengthError("wavelength not in absorption table");
}

double cn2(const HVProfile& profile, double altitude_m) {
    if (!(profile.wind_rms_ms > 0.0 && profile.ground_cn2 > 0.0))
        throw std::invalid_argument("H-V profile parameters must be > 0");
    if (!(altitude_m >= 0.0)) throw std::invalid_argument("altitude must be >= 0");
    const double h = altitude_m;
    const double wind = profile.wind_rms_ms / 27.0;
    const double high = 0.00594 * wind * wind * std::pow(1e-5 * h, 10.0) * std::exp(-h / 1000.0);
    const double mid = 2.7e-16 * std::exp(-h / 1500.0);
    const double ground = profile.ground_cn2 * std::exp(-h / 100.0);
    return high + mid + ground;
}

double mu0(const HVProfile& profile, double h0_m, double h_top_m) {
    if (!(h0_m >= 0.0) || !(h_top_m >= h0_m))
        throw std::invalid_argument("integration bounds require h_top >= h0 >= 0");
    if (h_top_m == h0_m) return 0.0;
    const auto f = [&](double h) { return cn2(profile, h); };
    // split at the scale heights so the adaptive pass starts well-conditioned
    const double knots[] = {100.0, 1000.0, 1500.0, 5000.0, 20000.0, 40000.0};
    double total = 0.0;
    double lo = h0_m;
    for (double knot : knots) {
        if (knot <= lo || knot >= h_top_m) continue;
        total += integrate(f, lo, knot, 1e-13 * cn2(profile, 0.0) * (knot - lo));
        lo = knot;
    }
    total += integrate(f, lo, h_top_m, 1e-13 * cn2(profile, 0.0) * (h_top_m - lo));
    return total;
}

double fried_r0(const HVProfile& profile, double wavelength_m, double zenith_rad, double h0_m,
                double h_top_m) {
    if (!(wavelength_m > 0.0)) throw std::invalid_argument("wavelength must be > 0");
    if (!(zenith_rad >= 0.0 && zenith_rad <= kZenithBoundRad + 1e-12))
        throw std::invalid_argument("zenith beyond the 70 deg validity bound");
    const double k = 2.0 * std::numbers::pi / wavelength_m;
    const double integrated = mu0(profile, h0_m, h_top_m);
    return std::pow(0.423 * integrated * k * k / std::cos(zenith_rad), -3.0 / 5.0);
}

double slant_absorption_db(const AbsorptionTable& table, double wavelength_m, double zenith_rad) {
    if (!(zenith_rad >= 0.0 && zenith_rad <= table.max_slant_zenith_rad + 1e-12))
        throw std::invalid_argument("zenith beyond the slant-scaling validity bound");
    return table.vertical_db(wavelength_m) / std::cos(zenith_rad);
}

} // namespace qlink
