#pragma once

#include <cstdint>

namespace qmap {

/// Counter-based SplitMix64: output number `counter` (0-based) of the SplitMix64
/// stream whose initial state is `seed`. Any element of the stream can be
/// computed independently, so parallel partitions reproduce the serial stream.
constexpr uint64_t splitmix64_at(uint64_t seed, uint64_t counter) {
    uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Top 53 bits mapped to [0, 1).
constexpr double to_unit_double(uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace qmap
