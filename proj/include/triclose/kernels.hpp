#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace triclose::kernels {

// Number of common elements of two sorted, duplicate-free uint32 arrays.
// Scalar reference; always available.
std::size_t intersect_count_scalar(std::span<const std::uint32_t> a,
                                   std::span<const std::uint32_t> b);

#if defined(__x86_64__)
// AVX2 block-compare variant; call only when avx2_available().
std::size_t intersect_count_avx2(std::span<const std::uint32_t> a,
                                 std::span<const std::uint32_t> b);
bool avx2_available();
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
std::size_t intersect_count_neon(std::span<const std::uint32_t> a,
                                 std::span<const std::uint32_t> b);
#endif

// Runtime-dispatched entry point used by the counting paths. Falls back to
// galloping when the inputs are strongly skewed in size.
std::size_t intersect_count(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b);

// Name of the variant intersect_count dispatches to ("scalar", "avx2", "neon").
const char* active_kernel_name();

} // namespace triclose::kernels
