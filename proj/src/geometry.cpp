#include "leosim/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace leosim {

void validate_geodetic(const GeodeticPosition& pos) {
    if (pos.lat_deg < -90.0 || pos.lat_deg > 90.0)
        throw std::invalid_argument("invalid position: lat_deg must be in [-90, 90]");
    if (pos.lon_deg < -180.0 || pos.lon_deg >= 180.0)
        throw std::invalid_argument("invalid position: lon_deg must be in [-180, 180)");
    if (pos.alt_km < 0.0)
        throw std::invalid_argument("invalid position: alt_km must be >= 0");
}

Vec3 geodetic_to_cartesian(const GeodeticPosition& pos, double earth_radius_km) {
    validate_geodetic(pos);
    const double r = earth_radius_km + pos.alt_km;
    const double lat = deg_to_rad(pos.lat_deg);
    const double lon = deg_to_rad(pos.lon_deg);
    return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon), r * std::sin(lat)};
}

Vec3 ground_position_at(const GeodeticPosition& pos, const ConstellationConfig& config, double t_s) {
    const Vec3 base = geodetic_to_cartesian(pos, config.earth_radius_km);
    if (!config.earth_rotation) return base;
    return rotate_z(base, kEarthRotationRadS * t_s);
}

double elevation_angle_deg(const Vec3& user_xyz, const Vec3& sat_xyz) {
    const Vec3 d = sat_xyz - user_xyz;
    const double dist = norm(d);
    if (dist < 1e-9) throw std::invalid_argument("elevation_angle: degenerate geometry, |sat - user| < 1e-9 km");
    const Vec3 zenith = normalized(user_xyz);
    double s = dot(d, zenith) / dist;
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
    return rad_to_deg(std::asin(s));
}

double slant_range_km(double elevation_deg, double altitude_km, double earth_radius_km) {
    const double se = std::sin(deg_to_rad(elevation_deg));
    const double r = earth_radius_km;
    const double h = altitude_km;
    return std::sqrt(r * r * se * se + 2.0 * r * h + h * h) - r * se;
}

std::vector<int> visible_set(const Vec3& user_xyz, const std::vector<SatelliteEphemeris>& sats,
                             double t_s, double eat_deg) {
    std::vector<int> out;
    for (const auto& eph : sats) {
        if (elevation_angle_deg(user_xyz, propagate(eph, t_s)) >= eat_deg) out.push_back(eph.sat_id);
    }
    return out;
}

}  // namespace leosim
