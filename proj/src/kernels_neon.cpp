#if defined(__ARM_NEON) || defined(__aarch64__)

#include "triclose/kernels.hpp"

#include <arm_neon.h>

namespace triclose::kernels {

// 4-wide counterpart of the AVX2 block-compare kernel.
std::size_t intersect_count_neon(std::span<const std::uint32_t> a,
                                 std::span<const std::uint32_t> b) {
    std::size_t count = 0, i = 0, j = 0;
    const std::size_t na = a.size(), nb = b.size();

    if (na >= 4 && nb >= 4) {
        uint32x4_t va = vld1q_u32(a.data() + i);
        uint32x4_t vb = vld1q_u32(b.data() + j);
        while (true) {
            uint32x4_t acc = vceqq_u32(va, vb);
            uint32x4_t r = vextq_u32(vb, vb, 1);
            acc = vorrq_u32(acc, vceqq_u32(va, r));
            r = vextq_u32(vb, vb, 2);
            acc = vorrq_u32(acc, vceqq_u32(va, r));
            r = vextq_u32(vb, vb, 3);
            acc = vorrq_u32(acc, vceqq_u32(va, r));
            // each matched lane is 0xffffffff
            count += vaddvq_u32(vshrq_n_u32(acc, 31));

            const std::uint32_t amax = a[i + 3], bmax = b[j + 3];
            if (amax <= bmax) {
                i += 4;
                if (i + 4 > na) break;
                va = vld1q_u32(a.data() + i);
            }
            if (bmax <= amax) {
                j += 4;
                if (j + 4 > nb) break;
                vb = vld1q_u32(b.data() + j);
            }
        }
    }

    while (i < na && j < nb) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

} // namespace triclose::kernels

#endif // __ARM_NEON || __aarch64__
