#pragma once

#include <vector>

#include "leosim/vec3.hpp"

namespace leosim {

// Walker shell parameters. Angles in degrees, distances in km, mu in m^3/s^2.
struct ConstellationConfig {
    int num_planes = 1;
    int sats_per_plane = 1;
    double inclination_deg = 53.0;
    double altitude_km = 550.0;
    int phase_factor = 0;
    double raan_spread_deg = 360.0;
    double earth_radius_km = 6371.0;
    double mu_m3s2 = 3.986004418e14;
    // When set, ground positions rotate at the sidereal rate while the
    // constellation frame stays inertial. Off by default: with a fixed ground
    // point the shell geometry seen by the user is periodic in one orbital
    // period, which is what makes a single-period scan window sufficient.
    bool earth_rotation = false;
};

// Circular-orbit state for one satellite. r0 already includes the initial
// mean anomaly, so propagation is a single rotation about n.
struct SatelliteEphemeris {
    int sat_id = 0;       // plane_index * sats_per_plane + slot_index
    int plane_index = 0;
    int slot_index = 0;
    Vec3 r0;              // km, |r0| = earth radius + altitude
    Vec3 n;               // unit orbital-plane normal, right-hand sense of motion
    double omega_rad_s = 0.0;
    double m0_rad = 0.0;  // initial mean anomaly from the ascending node
};

struct Constellation {
    ConstellationConfig config;
    std::vector<SatelliteEphemeris> sats;
};

// omega = sqrt(mu / a^3), a in meters.
double orbital_angular_rate(double altitude_km, double earth_radius_km, double mu_m3s2);

double orbital_period_s(const ConstellationConfig& config);

// Throws std::invalid_argument naming the offending field.
std::vector<SatelliteEphemeris> build_constellation(const ConstellationConfig& config);

Constellation make_constellation(const ConstellationConfig& config);

// r(t) = r0 cos(wt) + (n x r0) sin(wt)
Vec3 propagate(const SatelliteEphemeris& eph, double t_s);

constexpr double kEarthRotationRadS = 7.2921159e-5;

}  // namespace leosim
