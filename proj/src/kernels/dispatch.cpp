#include <cmath>
#include <cstdlib>
#include <mutex>

#include "kernels_impl.hpp"

namespace leosim {

namespace {

std::vector<KernelInfo> probe_kernels() {
    std::vector<KernelInfo> kernels;
    kernels.push_back({"scalar", &elevation_kernel_scalar});
#ifdef LEOSIM_HAVE_AVX2
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        kernels.push_back({"avx2", &elevation_kernel_avx2});
#endif
#ifdef LEOSIM_HAVE_NEON
    kernels.push_back({"neon", &elevation_kernel_neon});
#endif
    return kernels;
}

struct Dispatch {
    std::vector<KernelInfo> kernels = probe_kernels();
    KernelInfo active;

    Dispatch() {
        active = kernels.back();  // widest variant probes last
        if (const char* env = std::getenv("LEOSIM_KERNEL")) select(env);
    }

    bool select(const std::string& name) {
        if (name == "auto") {
            active = kernels.back();
            return true;
        }
        for (const auto& k : kernels) {
            if (k.name == name) {
                active = k;
                return true;
            }
        }
        return false;
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

std::mutex g_dispatch_mutex;

}  // namespace

const std::vector<KernelInfo>& available_kernels() { return dispatch().kernels; }

ElevationKernelFn active_kernel() { return dispatch().active.fn; }

const std::string& active_kernel_name() { return dispatch().active.name; }

bool set_active_kernel(const std::string& name) {
    std::lock_guard<std::mutex> lock(g_dispatch_mutex);
    return dispatch().select(name);
}

SkyView::SkyView(std::span<const SatelliteEphemeris> sats) : soa_(SatArrays::from(sats)) {
    // Contiguous runs of equal angular rate; a single Walker shell is one run.
    const size_t n = soa_.size();
    size_t begin = 0;
    for (size_t i = 1; i <= n; ++i) {
        if (i == n || soa_.omega[i] != soa_.omega[begin]) {
            omega_groups_.emplace_back(begin, i);
            begin = i;
        }
    }
}

void SkyView::sample(double t_s, const Vec3& user, std::span<double> sin_elev,
                     std::span<double> range_km) const {
    const Vec3 zenith = normalized(user);
    const ElevationKernelFn kernel = active_kernel();
    for (const auto& [begin, end] : omega_groups_) {
        const double psi = soa_.omega[begin] * t_s;
        kernel(soa_, begin, end, std::cos(psi), std::sin(psi), user, zenith,
               sin_elev.data(), range_km.data());
    }
}

}  // namespace leosim
