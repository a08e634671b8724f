#ifdef LEOSIM_HAVE_NEON

#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace leosim {

// 2-wide double-precision variant for aarch64.
void elevation_kernel_neon(const SatArrays& sats, size_t begin, size_t end,
                           double cs, double sn, const Vec3& user, const Vec3& zenith,
                           double* sin_elev, double* range_km) {
    const float64x2_t vcs = vdupq_n_f64(cs);
    const float64x2_t vsn = vdupq_n_f64(sn);
    const float64x2_t ux = vdupq_n_f64(user.x);
    const float64x2_t uy = vdupq_n_f64(user.y);
    const float64x2_t uz = vdupq_n_f64(user.z);
    const float64x2_t zx = vdupq_n_f64(zenith.x);
    const float64x2_t zy = vdupq_n_f64(zenith.y);
    const float64x2_t zz = vdupq_n_f64(zenith.z);

    size_t i = begin;
    for (; i + 2 <= end; i += 2) {
        const float64x2_t px = vfmaq_f64(vmulq_f64(vld1q_f64(&sats.r0x[i]), vcs), vld1q_f64(&sats.wx[i]), vsn);
        const float64x2_t py = vfmaq_f64(vmulq_f64(vld1q_f64(&sats.r0y[i]), vcs), vld1q_f64(&sats.wy[i]), vsn);
        const float64x2_t pz = vfmaq_f64(vmulq_f64(vld1q_f64(&sats.r0z[i]), vcs), vld1q_f64(&sats.wz[i]), vsn);
        const float64x2_t dx = vsubq_f64(px, ux);
        const float64x2_t dy = vsubq_f64(py, uy);
        const float64x2_t dz = vsubq_f64(pz, uz);
        const float64x2_t d2 = vfmaq_f64(vfmaq_f64(vmulq_f64(dx, dx), dy, dy), dz, dz);
        const float64x2_t d = vsqrtq_f64(d2);
        const float64x2_t proj = vfmaq_f64(vfmaq_f64(vmulq_f64(dx, zx), dy, zy), dz, zz);
        vst1q_f64(&sin_elev[i], vdivq_f64(proj, d));
        vst1q_f64(&range_km[i], d);
    }
    if (i < end) elevation_kernel_scalar(sats, i, end, cs, sn, user, zenith, sin_elev, range_km);
}

}  // namespace leosim

#endif  // LEOSIM_HAVE_NEON
