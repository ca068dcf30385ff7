#include "triclose/kernels.hpp"

#include <algorithm>

namespace triclose::kernels {

std::size_t intersect_count_scalar(std::span<const std::uint32_t> a,
                                   std::span<const std::uint32_t> b) {
    std::size_t n = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++n; ++i; ++j;
        }
    }
    return n;
}

namespace {

// Galloping intersection for strongly skewed sizes: binary-search each
// element of the small side in the large side.
std::size_t intersect_count_gallop(std::span<const std::uint32_t> small,
                                   std::span<const std::uint32_t> large) {
    std::size_t n = 0;
    auto lo = large.begin();
    for (std::uint32_t v : small) {
        lo = std::lower_bound(lo, large.end(), v);
        if (lo == large.end()) break;
        if (*lo == v) { ++n; ++lo; }
    }
    return n;
}

constexpr std::size_t kSkewFactor = 32;

} // namespace

std::size_t intersect_count(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b) {
    if (a.size() > b.size()) std::swap(a, b);
    if (a.empty()) return 0;
    if (b.size() / a.size() >= kSkewFactor)
        return intersect_count_gallop(a, b);
#if defined(__x86_64__)
    if (avx2_available())
        return intersect_count_avx2(a, b);
#elif defined(__ARM_NEON) || defined(__aarch64__)
    return intersect_count_neon(a, b);
#endif
    return intersect_count_scalar(a, b);
}

const char* active_kernel_name() {
#if defined(__x86_64__)
    if (avx2_available()) return "avx2";
#elif defined(__ARM_NEON) || defined(__aarch64__)
    return "neon";
#endif
    return "scalar";
}

} // namespace triclose::kernels
