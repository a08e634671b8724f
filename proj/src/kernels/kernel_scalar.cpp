#include <cmath>

#include "leosim/kernels.hpp"

namespace leosim {

SatArrays SatArrays::from(std::span<const SatelliteEphemeris> sats) {
    SatArrays a;
    const size_t n = sats.size();
    a.r0x.resize(n);
    a.r0y.resize(n);
    a.r0z.resize(n);
    a.wx.resize(n);
    a.wy.resize(n);
    a.wz.resize(n);
    a.omega.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& e = sats[i];
        const Vec3 w = cross(e.n, e.r0);
        a.r0x[i] = e.r0.x;
        a.r0y[i] = e.r0.y;
        a.r0z[i] = e.r0.z;
        a.wx[i] = w.x;
        a.wy[i] = w.y;
        a.wz[i] = w.z;
        a.omega[i] = e.omega_rad_s;
    }
    return a;
}

void elevation_kernel_scalar(const SatArrays& sats, size_t begin, size_t end,
                             double cs, double sn, const Vec3& user, const Vec3& zenith,
                             double* sin_elev, double* range_km) {
    for (size_t i = begin; i < end; ++i) {
        const double px = sats.r0x[i] * cs + sats.wx[i] * sn;
        const double py = sats.r0y[i] * cs + sats.wy[i] * sn;
        const double pz = sats.r0z[i] * cs + sats.wz[i] * sn;
        const double dx = px - user.x;
        const double dy = py - user.y;
        const double dz = pz - user.z;
        const double d2 = dx * dx + dy * dy + dz * dz;
        const double d = std::sqrt(d2);
        const double proj = dx * zenith.x + dy * zenith.y + dz * zenith.z;
        sin_elev[i] = proj / d;
        range_km[i] = d;
    }
}

}  // namespace leosim
