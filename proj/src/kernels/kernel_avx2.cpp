#ifdef LEOSIM_HAVE_AVX2

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace leosim {

// 4-wide double-precision variant of elevation_kernel_scalar. Same operation
// order per lane (mul/add chains map to FMA), tail lanes fall back to scalar.
void elevation_kernel_avx2(const SatArrays& sats, size_t begin, size_t end,
                           double cs, double sn, const Vec3& user, const Vec3& zenith,
                           double* sin_elev, double* range_km) {
    const __m256d vcs = _mm256_set1_pd(cs);
    const __m256d vsn = _mm256_set1_pd(sn);
    const __m256d ux = _mm256_set1_pd(user.x);
    const __m256d uy = _mm256_set1_pd(user.y);
    const __m256d uz = _mm256_set1_pd(user.z);
    const __m256d zx = _mm256_set1_pd(zenith.x);
    const __m256d zy = _mm256_set1_pd(zenith.y);
    const __m256d zz = _mm256_set1_pd(zenith.z);

    size_t i = begin;
    for (; i + 4 <= end; i += 4) {
        const __m256d px = _mm256_fmadd_pd(_mm256_loadu_pd(&sats.wx[i]), vsn,
                                           _mm256_mul_pd(_mm256_loadu_pd(&sats.r0x[i]), vcs));
        const __m256d py = _mm256_fmadd_pd(_mm256_loadu_pd(&sats.wy[i]), vsn,
                                           _mm256_mul_pd(_mm256_loadu_pd(&sats.r0y[i]), vcs));
        const __m256d pz = _mm256_fmadd_pd(_mm256_loadu_pd(&sats.wz[i]), vsn,
                                           _mm256_mul_pd(_mm256_loadu_pd(&sats.r0z[i]), vcs));
        const __m256d dx = _mm256_sub_pd(px, ux);
        const __m256d dy = _mm256_sub_pd(py, uy);
        const __m256d dz = _mm256_sub_pd(pz, uz);
        const __m256d d2 =
            _mm256_fmadd_pd(dz, dz, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dx, dx)));
        const __m256d d = _mm256_sqrt_pd(d2);
        const __m256d proj =
            _mm256_fmadd_pd(dz, zz, _mm256_fmadd_pd(dy, zy, _mm256_mul_pd(dx, zx)));
        _mm256_storeu_pd(&sin_elev[i], _mm256_div_pd(proj, d));
        _mm256_storeu_pd(&range_km[i], d);
    }
    if (i < end) elevation_kernel_scalar(sats, i, end, cs, sn, user, zenith, sin_elev, range_km);
}

}  // namespace leosim

#endif  // LEOSIM_HAVE_AVX2
