#if defined(__x86_64__)

#include "triclose/kernels.hpp"

#include <immintrin.h>

namespace triclose::kernels {

bool avx2_available() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

// Block-compare intersection: load 8 elements from each side, compare a
// against all 8 rotations of b, advance the block whose max is smaller.
// Inputs are sorted and duplicate-free, so each element matches at most once
// and no (a-block, b-block) pair is visited twice.
std::size_t intersect_count_avx2(std::span<const std::uint32_t> a,
                                 std::span<const std::uint32_t> b) {
    std::size_t count = 0, i = 0, j = 0;
    const std::size_t na = a.size(), nb = b.size();

    if (na >= 8 && nb >= 8) {
        const __m256i rot1 = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
        while (true) {
            __m256i r = vb;
            __m256i acc = _mm256_cmpeq_epi32(va, r);
            for (int k = 1; k < 8; ++k) {
                r = _mm256_permutevar8x32_epi32(r, rot1);
                acc = _mm256_or_si256(acc, _mm256_cmpeq_epi32(va, r));
            }
            count += static_cast<std::size_t>(
                __builtin_popcount(static_cast<unsigned>(
                    _mm256_movemask_ps(_mm256_castsi256_ps(acc)))));

            const std::uint32_t amax = a[i + 7], bmax = b[j + 7];
            if (amax <= bmax) {
                i += 8;
                if (i + 8 > na) break;
                va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
            }
            if (bmax <= amax) {
                j += 8;
                if (j + 8 > nb) break;
                vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
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

#endif // __x86_64__
