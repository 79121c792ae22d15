#include "qlink/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qlink {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

// Elevation of a target at radius r_target seen from a station at radius
// r_station when their central angle is alpha. Negative below the local
// horizon.
double elevation_from_radii(double r_station, double r_target, double alpha) {
    return std::atan2(r_target * std::cos(alpha) - r_station, r_target * std::sin(alpha));
}

double range_from_radii(double r_station, double r_target, double alpha) {
    return std::sqrt(r_station * r_station + r_target * r_target -
                     2.0 * r_station * r_target * std::cos(alpha));
}

} // namespace

double EllipticalOrbit::semi_major_m(const PhysicalConstants& c) const {
    return c.earth_radius_m + 0.5 * (perigee_alt_m + apogee_alt_m);
}

double EllipticalOrbit::eccentricity(const PhysicalConstants& c) const {
    const double rp = c.earth_radius_m + perigee_alt_m;
    const double ra = c.earth_radius_m + apogee_alt_m;
    require(perigee_alt_m > 0.0 && apogee_alt_m >= perigee_alt_m,
            "elliptical orbit requires apogee >= perigee > 0");
    return (ra - rp) / (ra + rp);
}

double orbital_velocity(const CircularOrbit& orbit, const PhysicalConstants& c) {
    require(orbit.altitude_m > 0.0, "altitude must be > 0");
    return std::sqrt(c.earth_mu_m3s2 / (c.earth_radius_m + orbit.altitude_m));
}

double slant_range(double altitude_m, double elevation_rad, const PhysicalConstants& c) {
    require(altitude_m > 0.0, "altitude must be > 0");
    require(elevation_rad >= 0.0 && elevation_rad <= kPi / 2.0 + 1e-12,
            "elevation must be in [0, pi/2]");
    const double r = c.earth_radius_m;
    const double rc = r * std::cos(elevation_rad);
    return std::sqrt((r + altitude_m) * (r + altitude_m) - rc * rc) - r * std::sin(elevation_rad);
}

double elevation_from_central_angle(double altitude_m, double alpha_rad,
                                    const PhysicalConstants& c) {
    require(altitude_m > 0.0, "altitude must be > 0");
    require(alpha_rad >= 0.0, "central angle must be >= 0");
    return elevation_from_radii(c.earth_radius_m, c.earth_radius_m + altitude_m, alpha_rad);
}

double central_angle_from_elevation(double altitude_m, double elevation_rad,
                                    const PhysicalConstants& c) {
    require(altitude_m > 0.0, "altitude must be > 0");
    require(elevation_rad >= 0.0 && elevation_rad <= kPi / 2.0 + 1e-12,
            "elevation must be in [0, pi/2]");
    const double r = c.earth_radius_m;
    return std::acos(r * std::cos(elevation_rad) / (r + altitude_m)) - elevation_rad;
}

LinkGeometry link_geometry_at_central_angle(double altitude_m, double alpha_rad,
                                            const PhysicalConstants& c) {
    LinkGeometry g;
    g.ground_central_angle_rad = alpha_rad;
    g.elevation_rad = elevation_from_central_angle(altitude_m, alpha_rad, c);
    g.zenith_angle_rad = kPi / 2.0 - g.elevation_rad;
    g.slant_range_m = range_from_radii(c.earth_radius_m, c.earth_radius_m + altitude_m, alpha_rad);
    return g;
}

LinkGeometry link_geometry_at_elevation(double altitude_m, double elevation_rad,
                                        const PhysicalConstants& c) {
    return link_geometry_at_central_angle(
        altitude_m, central_angle_from_elevation(altitude_m, elevation_rad, c), c);
}

DoubleLink symmetric_double_link(double altitude_m, double ground_distance_m,
                                 const PhysicalConstants& c) {
    require(ground_distance_m >= 0.0, "ground distance must be >= 0");
    const double alpha = ground_distance_m / (2.0 * c.earth_radius_m);
    DoubleLink d;
    d.per_link = link_geometry_at_central_angle(altitude_m, alpha, c);
    d.feasible = d.per_link.elevation_rad >= 0.0;
    return d;
}

double min_altitude_for_double_link(double ground_distance_m, double min_elevation_rad,
                                    const PhysicalConstants& c) {
    require(min_elevation_rad > 0.0 && min_elevation_rad < kPi / 2.0,
            "min elevation must be in (0, pi/2)");
    require(ground_distance_m >= 0.0, "ground distance must be >= 0");
    const double alpha = ground_distance_m / (2.0 * c.earth_radius_m);
    // (R+H) cos(alpha) - R = tan(eps) (R+H) sin(alpha)
    const double denom = std::cos(alpha) - std::sin(alpha) * std::tan(min_elevation_rad);
    if (denom <= 0.0)
        throw std::invalid_argument(
            "no altitude satisfies the elevation constraint at this ground distance");
    return c.earth_radius_m / denom - c.earth_radius_m;
}

double pass_duration_circular(const CircularOrbit& orbit, double max_zenith_rad,
                              const PhysicalConstants& c) {
    require(max_zenith_rad > 0.0 && max_zenith_rad <= kPi / 2.0,
            "max zenith must be in (0, pi/2]");
    const double r = c.earth_radius_m + orbit.altitude_m;
    const double gamma = std::asin(c.earth_radius_m * std::sin(max_zenith_rad) / r);
    const double alpha = max_zenith_rad - gamma;
    return 2.0 * alpha * r / orbital_velocity(orbit, c);
}

double time_from_perigee(const EllipticalOrbit& orbit, double true_anomaly_rad,
                         const PhysicalConstants& c) {
    require(true_anomaly_rad >= 0.0 && true_anomaly_rad < 2.0 * kPi,
            "true anomaly must be in [0, 2pi)");
    const double a = orbit.semi_major_m(c);
    const double e = orbit.eccentricity(c);
    // branch-corrected eccentric anomaly, continuous and increasing on [0, 2pi)
    double ecc_anom = 2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(true_anomaly_rad / 2.0),
                                       std::sqrt(1.0 + e) * std::cos(true_anomaly_rad / 2.0));
    if (ecc_anom < 0.0) ecc_anom += 2.0 * kPi;
    const double mean_anom = ecc_anom - e * std::sin(ecc_anom);
    return std::sqrt(a * a * a / c.earth_mu_m3s2) * mean_anom;
}

double orbital_period(const EllipticalOrbit& orbit, const PhysicalConstants& c) {
    const double a = orbit.semi_major_m(c);
    orbit.eccentricity(c); // validates perigee/apogee
    return 2.0 * kPi * std::sqrt(a * a * a / c.earth_mu_m3s2);
}

namespace {

// Zenith angle at a station fixed under apogee when the satellite is at
// the given true anomaly.
double heo_zenith_at(const EllipticalOrbit& orbit, double true_anomaly_rad,
                     const PhysicalConstants& c) {
    const double a = orbit.semi_major_m(c);
    const double e = orbit.eccentricity(c);
    const double r = a * (1.0 - e * e) / (1.0 + e * std::cos(true_anomaly_rad));
    const double delta = std::abs(true_anomaly_rad - kPi);
    return kPi / 2.0 - elevation_from_radii(c.earth_radius_m, r, delta);
}

} // namespace

double heo_dwell_above_station(const EllipticalOrbit& orbit, double max_zenith_rad,
                               const PhysicalConstants& c) {
    require(max_zenith_rad > 0.0 && max_zenith_rad <= kPi / 2.0,
            "max zenith must be in (0, pi/2]");
    const double period = orbital_period(orbit, c);
    const double t_apogee = time_from_perigee(orbit, kPi, c);

    // scan outward from apogee for the first bound violation, then bisect
    const int scan_steps = 4096;
    double lo = kPi;
    double hi = kPi;
    bool crossed = false;
    for (int i = 1; i <= scan_steps; ++i) {
        const double phi = kPi + (kPi - 1e-9) * i / scan_steps;
        if (heo_zenith_at(orbit, phi, c) > max_zenith_rad) {
            hi = phi;
            crossed = true;
            break;
        }
        lo = phi;
    }
    if (!crossed) return period; // never leaves the cone

    while (time_from_perigee(orbit, hi, c) - time_from_perigee(orbit, lo, c) > 0.5) {
        const double mid = 0.5 * (lo + hi);
        if (heo_zenith_at(orbit, mid, c) > max_zenith_rad)
            hi = mid;
        else
            lo = mid;
    }
    return 2.0 * (time_from_perigee(orbit, 0.5 * (lo + hi), c) - t_apogee);
}

double max_zenith_between_orbits(const CircularOrbit& lower, const CircularOrbit& higher,
                                 const PhysicalConstants& c) {
    if (!(higher.altitude_m > lower.altitude_m))
        throw std::invalid_argument("higher orbit must be above the lower one");
    const double r_lo = c.earth_radius_m + lower.altitude_m;
    const double r_hi = c.earth_radius_m + higher.altitude_m;
    return std::acos(r_lo / r_hi);
}

double intersatellite_pass_duration(const CircularOrbit& lower, const CircularOrbit& higher,
                                    double max_zenith_rad, const PhysicalConstants& c) {
    if (lower.altitude_m == higher.altitude_m)
        throw std::invalid_argument("identical orbits have no relative motion");
    require(max_zenith_rad > 0.0 && max_zenith_rad <= kPi / 2.0,
            "max zenith must be in (0, pi/2]");
    const double bound = std::min(max_zenith_rad, max_zenith_between_orbits(lower, higher, c));
    const double r_lo = c.earth_radius_m + lower.altitude_m;
    const double r_hi = c.earth_radius_m + higher.altitude_m;
    const double w_lo = std::sqrt(c.earth_mu_m3s2 / (r_lo * r_lo * r_lo));
    const double w_hi = std::sqrt(c.earth_mu_m3s2 / (r_hi * r_hi * r_hi));
    return 2.0 * bound / std::abs(w_lo - w_hi);
}

double intersatellite_pass_duration(const CircularOrbit& lower, const EllipticalOrbit& higher_static,
                                    const PhysicalConstants& c) {
    higher_static.eccentricity(c); // validates
    const double r_lo = c.earth_radius_m + lower.altitude_m;
    const double w_lo = std::sqrt(c.earth_mu_m3s2 / (r_lo * r_lo * r_lo));
    return kPi / w_lo; // half the lower period, distant-static partner
}

LinkGeometry intersatellite_geometry(const CircularOrbit& lower, const CircularOrbit& higher,
                                     double relative_angle_rad, const PhysicalConstants& c) {
    if (!(higher.altitude_m > lower.altitude_m))
        throw std::invalid_argument("higher orbit must be above the lower one");
    require(relative_angle_rad >= 0.0, "relative angle must be >= 0");
    const double r_lo = c.earth_radius_m + lower.altitude_m;
    const double r_hi = c.earth_radius_m + higher.altitude_m;
    LinkGeometry g;
    g.ground_central_angle_rad = relative_angle_rad;
    g.elevation_rad = elevation_from_radii(r_lo, r_hi, relative_angle_rad);
    g.zenith_angle_rad = kPi / 2.0 - g.elevation_rad;
    g.slant_range_m = range_from_radii(r_lo, r_hi, relative_angle_rad);
    return g;
}

double intersatellite_angle_from_elevation(const CircularOrbit& lower, const CircularOrbit& higher,
                                           double elevation_rad, const PhysicalConstants& c) {
    if (!(higher.altitude_m > lower.altitude_m))
        throw std::invalid_argument("higher orbit must be above the lower one");
    require(elevation_rad >= 0.0 && elevation_rad <= kPi / 2.0 + 1e-12,
            "elevation must be in [0, pi/2]");
    const double r_lo = c.earth_radius_m + lower.altitude_m;
    const double r_hi = c.earth_radius_m + higher.altitude_m;
    return std::acos(r_lo * std::cos(elevation_rad) / r_hi) - elevation_rad;
}

} // namespace qlink
