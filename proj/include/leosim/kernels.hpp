#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "leosim/orbital.hpp"
#include "leosim/vec3.hpp"

namespace leosim {

// Structure-of-arrays constellation layout for the elevation/range inner loop.
// w = n x r0, so position at phase angle psi is r0*cos(psi) + w*sin(psi).
struct SatArrays {
    std::vector<double> r0x, r0y, r0z;
    std::vector<double> wx, wy, wz;
    std::vector<double> omega;

    size_t size() const { return r0x.size(); }

    static SatArrays from(std::span<const SatelliteEphemeris> sats);
};

// Computes, for satellites [begin, end) sharing the phase angle (cs, sn):
//   sin_elev[i]  = sine of the elevation of sat i seen from `user`
//   range_km[i]  = slant range in km
// `zenith` must be the unit vector user/|user|.
using ElevationKernelFn = void (*)(const SatArrays& sats, size_t begin, size_t end,
                                   double cs, double sn, const Vec3& user, const Vec3& zenith,
                                   double* sin_elev, double* range_km);

// Reference implementation; SIMD variants must match it within 1e-12 relative.
void elevation_kernel_scalar(const SatArrays& sats, size_t begin, size_t end,
                             double cs, double sn, const Vec3& user, const Vec3& zenith,
                             double* sin_elev, double* range_km);

struct KernelInfo {
    std::string name;
    ElevationKernelFn fn;
};

// Kernels usable on this machine, scalar first.
const std::vector<KernelInfo>& available_kernels();

// Active kernel, chosen at first use: widest available SIMD variant, or the
// one named by the LEOSIM_KERNEL environment variable.
ElevationKernelFn active_kernel();
const std::string& active_kernel_name();

// Force a kernel by name ("scalar", "avx2", "neon", "auto"). Returns false if
// the name is unknown or unsupported here.
bool set_active_kernel(const std::string& name);

// Per-sample view of the sky: positions reduced to elevation sine and range
// against one user point. Satellites are grouped by angular rate so cos/sin
// of the phase angle is computed once per group.
class SkyView {
  public:
    explicit SkyView(std::span<const SatelliteEphemeris> sats);

    size_t size() const { return soa_.size(); }

    // sin_elev and range_km must have size() elements.
    void sample(double t_s, const Vec3& user, std::span<double> sin_elev,
                std::span<double> range_km) const;

  private:
    SatArrays soa_;
    std::vector<std::pair<size_t, size_t>> omega_groups_;
};

}  // namespace leosim
