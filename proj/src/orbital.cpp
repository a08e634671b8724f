#include "leosim/orbital.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace leosim {

namespace {

void validate(const ConstellationConfig& c) {
    auto fail = [](const std::string& field, const std::string& what) {
        throw std::invalid_argument("invalid constellation config: " + field + " " + what);
    };
    if (c.num_planes < 1) fail("num_planes", "must be >= 1");
    if (c.sats_per_plane < 1) fail("sats_per_plane", "must be >= 1");
    if (c.inclination_deg < 0.0 || c.inclination_deg > 180.0) fail("inclination_deg", "must be in [0, 180]");
    if (!(c.altitude_km > 0.0)) fail("altitude_km", "must be > 0");
    if (c.phase_factor < 0 || c.phase_factor >= c.num_planes) fail("phase_factor", "must be in [0, num_planes)");
    if (!(c.raan_spread_deg > 0.0) || c.raan_spread_deg > 360.0) fail("raan_spread_deg", "must be in (0, 360]");
    if (!(c.earth_radius_km > 0.0)) fail("earth_radius_km", "must be > 0");
    if (!(c.mu_m3s2 > 0.0)) fail("mu_m3s2", "must be > 0");
}

}  // namespace

double orbital_angular_rate(double altitude_km, double earth_radius_km, double mu_m3s2) {
    if (!(altitude_km > 0.0)) throw std::invalid_argument("orbital_angular_rate: altitude_km must be > 0");
    const double a_m = (earth_radius_km + altitude_km) * 1000.0;
    return std::sqrt(mu_m3s2 / (a_m * a_m * a_m));
}

double orbital_period_s(const ConstellationConfig& config) {
    return 2.0 * kPi / orbital_angular_rate(config.altitude_km, config.earth_radius_km, config.mu_m3s2);
}

std::vector<SatelliteEphemeris> build_constellation(const ConstellationConfig& config) {
    validate(config);

    const int planes = config.num_planes;
    const int per_plane = config.sats_per_plane;
    const double radius = config.earth_radius_km + config.altitude_km;
    const double incl = deg_to_rad(config.inclination_deg);
    const double omega = orbital_angular_rate(config.altitude_km, config.earth_radius_km, config.mu_m3s2);
    const double sin_i = std::sin(incl);
    const double cos_i = std::cos(incl);

    std::vector<SatelliteEphemeris> sats;
    sats.reserve(static_cast<size_t>(planes) * per_plane);

    for (int k = 0; k < planes; ++k) {
        const double raan = deg_to_rad(static_cast<double>(k) * config.raan_spread_deg / planes);
        const double sin_raan = std::sin(raan);
        const double cos_raan = std::cos(raan);

        // Ascending-node direction and in-plane quadrature axis; the normal
        // follows the right-hand sense so motion at the node heads northeast
        // for inclinations below 90 degrees.
        const Vec3 node{cos_raan, sin_raan, 0.0};
        const Vec3 normal{sin_i * sin_raan, -sin_i * cos_raan, cos_i};
        const Vec3 quad = cross(normal, node);

        for (int j = 0; j < per_plane; ++j) {
            const double m0_deg = j * (360.0 / per_plane) +
                                  k * config.phase_factor * 360.0 / (static_cast<double>(planes) * per_plane);
            const double m0 = deg_to_rad(m0_deg);

            SatelliteEphemeris eph;
            eph.sat_id = k * per_plane + j;
            eph.plane_index = k;
            eph.slot_index = j;
            eph.r0 = radius * (std::cos(m0) * node + std::sin(m0) * quad);
            eph.n = normal;
            eph.omega_rad_s = omega;
            eph.m0_rad = m0;
            sats.push_back(eph);
        }
    }
    return sats;
}

Constellation make_constellation(const ConstellationConfig& config) {
    return Constellation{config, build_constellation(config)};
}

Vec3 propagate(const SatelliteEphemeris& eph, double t_s) {
    const double psi = eph.omega_rad_s * t_s;
    const double c = std::cos(psi);
    const double s = std::sin(psi);
    const Vec3 w = cross(eph.n, eph.r0);
    return {eph.r0.x * c + w.x * s, eph.r0.y * c + w.y * s, eph.r0.z * c + w.z * s};
}

}  // namespace leosim
