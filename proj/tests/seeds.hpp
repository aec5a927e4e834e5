#pragma once

// Test manifest: every randomized suite draws from one of the fixed seeds
// below so runs are reproducible bit for bit.

#include <cstdint>

namespace seeds {
inline constexpr std::uint64_t smith = 0x5eed0001;
inline constexpr std::uint64_t lattice = 0x5eed0002;
inline constexpr std::uint64_t factor = 0x5eed0003;
inline constexpr std::uint64_t subgroup = 0x5eed0004;
inline constexpr std::uint64_t complement = 0x5eed0005;
inline constexpr std::uint64_t invariant_subset = 0x5eed0006;
inline constexpr std::uint64_t trig = 0x5eed0007;
inline constexpr std::uint64_t fixed_points = 0x5eed0008;
inline constexpr std::uint64_t orbit = 0x5eed0009;
inline constexpr std::uint64_t window = 0x5eed000a;
inline constexpr std::uint64_t spectral = 0x5eed000b;
inline constexpr std::uint64_t invariance = 0x5eed000c;
inline constexpr std::uint64_t tangent = 0x5eed000d;
inline constexpr std::uint64_t endo_coset = 0x5eed000e;
}  // namespace seeds
