#pragma once

#include "qlink/constants.hpp"

namespace qlink {

// Spherical Earth, no rotation, coplanar orbits throughout. Angles in
// radians, lengths in metres, times in seconds.

struct CircularOrbit {
    double altitude_m = 0.0;
};

struct EllipticalOrbit {
    double perigee_alt_m = 0.0;
    double apogee_alt_m = 0.0;

    double semi_major_m(const PhysicalConstants& c = kEarth) const;
    double eccentricity(const PhysicalConstants& c = kEarth) const;
};

struct LinkGeometry {
    double slant_range_m = 0.0;
    double zenith_angle_rad = 0.0;
    double elevation_rad = 0.0;
    double ground_central_angle_rad = 0.0;
};

struct DoubleLink {
    LinkGeometry per_link; // identical on both sides by symmetry
    bool feasible = false; // both elevations >= 0
};

double orbital_velocity(const CircularOrbit& orbit, const PhysicalConstants& c = kEarth);

/// Line-of-sight distance from a surface station to a satellite at the
/// given elevation.
double slant_range(double altitude_m, double elevation_rad, const PhysicalConstants& c = kEarth);

/// Elevation seen from a station whose ground central angle to the
/// sub-satellite point is alpha. Negative when the satellite is below the
/// local horizon; the caller decides feasibility.
double elevation_from_central_angle(double altitude_m, double alpha_rad,
                                    const PhysicalConstants& c = kEarth);

/// Inverse of the above; requires elevation in [0, pi/2].
double central_angle_from_elevation(double altitude_m, double elevation_rad,
                                    const PhysicalConstants& c = kEarth);

LinkGeometry link_geometry_at_central_angle(double altitude_m, double alpha_rad,
                                            const PhysicalConstants& c = kEarth);

LinkGeometry link_geometry_at_elevation(double altitude_m, double elevation_rad,
                                        const PhysicalConstants& c = kEarth);

/// One satellite between two stations, equal link lengths and elevations
/// on both sides: the ground distance splits into two equal central
/// angles alpha = d / (2R).
DoubleLink symmetric_double_link(double altitude_m, double ground_distance_m,
                                 const PhysicalConstants& c = kEarth);

/// Smallest altitude for which the symmetric double link keeps both
/// elevations at or above min_elevation. Closed form
/// R + H = R / (cos(alpha) - sin(alpha) tan(eps)); throws
/// std::invalid_argument when no altitude can satisfy the constraint.
double min_altitude_for_double_link(double ground_distance_m, double min_elevation_rad,
                                    const PhysicalConstants& c = kEarth);

/// Overflight time between -max_zenith and +max_zenith over a station.
double pass_duration_circular(const CircularOrbit& orbit, double max_zenith_rad,
                              const PhysicalConstants& c = kEarth);

/// Flight time from perigee to the given true anomaly via the eccentric
/// and mean anomalies. The eccentric anomaly branch is corrected so the
/// result is continuous and increasing over [0, 2pi).
double time_from_perigee(const EllipticalOrbit& orbit, double true_anomaly_rad,
                         const PhysicalConstants& c = kEarth);

double orbital_period(const EllipticalOrbit& orbit, const PhysicalConstants& c = kEarth);

/// Time the satellite spends within +-max_zenith of a station placed
/// directly under apogee. Bisection on the true anomaly, resolved to 1 s.
double heo_dwell_above_station(const EllipticalOrbit& orbit, double max_zenith_rad,
                               const PhysicalConstants& c = kEarth);

/// Largest relative central angle between two coplanar circular orbits
/// for which the higher satellite stays at or above the lower one's local
/// horizon (the link line tangent to the lower orbit): acos(r_lo/r_hi).
/// Callers implementing the +-45 deg sweep cap it there.
double max_zenith_between_orbits(const CircularOrbit& lower, const CircularOrbit& higher,
                                 const PhysicalConstants& c = kEarth);

/// Time for the relative central angle of two same-direction coplanar
/// circular orbits to sweep from -bound to +bound, where
/// bound = min(max_zenith_rad, max_zenith_between_orbits).
double intersatellite_pass_duration(const CircularOrbit& lower, const CircularOrbit& higher,
                                    double max_zenith_rad, const PhysicalConstants& c = kEarth);

/// Window for a link against a quasi-static highly elliptical partner
/// near apogee: the partner is treated as fixed and distant, so the
/// window is half the lower orbit's period.
double intersatellite_pass_duration(const CircularOrbit& lower, const EllipticalOrbit& higher_static,
                                    const PhysicalConstants& c = kEarth);

/// Geometry of the link between two coplanar circular orbits separated by
/// the given relative central angle. Elevation/zenith are at the lower
/// satellite.
LinkGeometry intersatellite_geometry(const CircularOrbit& lower, const CircularOrbit& higher,
                                     double relative_angle_rad,
                                     const PhysicalConstants& c = kEarth);

/// Relative central angle at which the lower satellite sees the higher
/// one at the given elevation.
double intersatellite_angle_from_elevation(const CircularOrbit& lower, const CircularOrbit& higher,
                                           double elevation_rad,
                                           const PhysicalConstants& c = kEarth);

} // namespace qlink
