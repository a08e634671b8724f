#pragma once

#include <vector>

#include "leosim/orbital.hpp"
#include "leosim/vec3.hpp"

namespace leosim {

struct GeodeticPosition {
    double lat_deg = 0.0;   // [-90, 90]
    double lon_deg = 0.0;   // [-180, 180)
    double alt_km = 0.0;    // above the sphere, >= 0
};

struct VisibilityRecord {
    double t_s = 0.0;
    int sat_id = 0;
    double elevation_deg = 0.0;
    double slant_range_km = 0.0;
};

// Throws std::invalid_argument naming the offending field.
void validate_geodetic(const GeodeticPosition& pos);

Vec3 geodetic_to_cartesian(const GeodeticPosition& pos, double earth_radius_km);

// Ground position in the constellation frame at time t. Identity unless the
// config enables earth rotation.
Vec3 ground_position_at(const GeodeticPosition& pos, const ConstellationConfig& config, double t_s);

// arcsin(d . u_hat / |d|) in degrees, where d = sat - user and u_hat is the
// local zenith of the sphere. Negative below the horizon plane.
double elevation_angle_deg(const Vec3& user_xyz, const Vec3& sat_xyz);

// Closed form on the spherical Earth: sqrt(R^2 sin^2 e + 2Rh + h^2) - R sin e.
double slant_range_km(double elevation_deg, double altitude_km, double earth_radius_km);

// sat_ids (ascending) with elevation >= eat_deg at time t. Boundary inclusive.
std::vector<int> visible_set(const Vec3& user_xyz, const std::vector<SatelliteEphemeris>& sats,
                             double t_s, double eat_deg);

}  // namespace leosim
