#pragma once

// Internal declarations for the SIMD kernel translation units. Each variant is
// compiled in its own TU with the matching ISA flags and only ever invoked
// after the runtime feature check in dispatch.cpp.

#include "leosim/kernels.hpp"

namespace leosim {

#ifdef LEOSIM_HAVE_AVX2
void elevation_kernel_avx2(const SatArrays& sats, size_t begin, size_t end,
                           double cs, double sn, const Vec3& user, const Vec3& zenith,
                           double* sin_elev, double* range_km);
#endif

#ifdef LEOSIM_HAVE_NEON
void elevation_kernel_neon(const SatArrays& sats, size_t begin, size_t end,
                           double cs, double sn, const Vec3& user, const Vec3& zenith,
                           double* sin_elev, double* range_km);
#endif

}  // namespace leosim
