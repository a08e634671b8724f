#pragma once

// Independent reference computations for tests. These deliberately take
// different routes than the library: matrix-form rotation instead of the
// two-term update, law-of-cosines elevation instead of the zenith projection,
// and closed-form inversions where the library iterates.

#include <array>
#include <cmath>

#include "leosim/orbital.hpp"
#include "leosim/vec3.hpp"

namespace oracles {

using leosim::Vec3;

// Full rotation-matrix form: R = cos(a) I + sin(a) [n]_x + (1 - cos(a)) n n^T.
inline Vec3 rotate_about_axis(const Vec3& v, const Vec3& axis, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    const double k = 1.0 - c;
    const std::array<std::array<double, 3>, 3> m{{
        {c + k * axis.x * axis.x, k * axis.x * axis.y - s * axis.z, k * axis.x * axis.z + s * axis.y},
        {k * axis.y * axis.x + s * axis.z, c + k * axis.y * axis.y, k * axis.y * axis.z - s * axis.x},
        {k * axis.z * axis.x - s * axis.y, k * axis.z * axis.y + s * axis.x, c + k * axis.z * axis.z},
    }};
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

inline Vec3 propagate_matrix(const leosim::SatelliteEphemeris& eph, double t_s) {
    return rotate_about_axis(eph.r0, eph.n, eph.omega_rad_s * t_s);
}

inline double kepler_period_s(double altitude_km, double earth_radius_km, double mu_m3s2) {
    const double a = (earth_radius_km + altitude_km) * 1000.0;
    return 2.0 * leosim::kPi * std::sqrt(a * a * a / mu_m3s2);
}

// Elevation from the Earth-center triangle: the angle at the user between
// nadir and the satellite is acos((ru^2 + d^2 - rs^2) / (2 ru d)), elevation
// is that minus 90 degrees.
inline double elevation_law_of_cosines_deg(const Vec3& user, const Vec3& sat) {
    const double ru = leosim::norm(user);
    const double rs = leosim::norm(sat);
    const double d = leosim::norm(sat - user);
    double c = (ru * ru + d * d - rs * rs) / (2.0 * ru * d);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return leosim::rad_to_deg(std::acos(c)) - 90.0;
}

// Earth-central angle of the visibility cone edge at elevation theta:
// lambda = acos(R cos(theta) / (R + h)) - theta.
inline double central_angle_deg(double elevation_deg, double altitude_km, double earth_radius_km) {
    const double th = leosim::deg_to_rad(elevation_deg);
    const double ratio = earth_radius_km * std::cos(th) / (earth_radius_km + altitude_km);
    return leosim::rad_to_deg(std::acos(ratio) - th);
}

// Inverse of central_angle_deg by bisection (it is strictly decreasing).
inline double elevation_for_central_angle_deg(double lambda_deg, double altitude_km,
                                              double earth_radius_km) {
    double lo = 0.0, hi = 90.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (central_angle_deg(mid, altitude_km, earth_radius_km) > lambda_deg)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Slant range via the law of cosines on the Earth-center triangle.
inline double slant_range_from_central_angle_km(double lambda_deg, double altitude_km,
                                                double earth_radius_km) {
    const double r = earth_radius_km;
    const double rs = earth_radius_km + altitude_km;
    const double lam = leosim::deg_to_rad(lambda_deg);
    return std::sqrt(r * r + rs * rs - 2.0 * r * rs * std::cos(lam));
}

}  // namespace oracles
