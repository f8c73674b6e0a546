#pragma once

// Inline scalar predicates shared by the classifiers and the batch kernels.
// The SIMD kernels replicate these operation-for-operation so both paths
// round identically.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace qmap {

/// Region membership bits used by the batch kernels and the scan output.
enum RegionBit : uint8_t {
    kRegionPositive = 1,
    kRegionSchwarz = 2,
    kRegionCP = 4,
};

/// Slack of each Pauli-map inequality in eigenvalue coordinates (>= 0 inside).
struct PauliSlacks {
    double positive;  // 1 - max |l_k|
    double cp;        // min(1 + l3 - |l1 + l2|, 1 - l3 - |l1 - l2|)
    double fas;       // 2 (1 - l3)(1 + l3) - [(1 - l3)(l1 + l2)^2 + (1 + l3)(l1 - l2)^2]
};

inline PauliSlacks pauli_slacks(double l1, double l2, double l3) {
    double sum = l1 + l2;
    double diff = l1 - l2;
    double lo = 1 - l3;
    double hi = 1 + l3;
    PauliSlacks s;
    s.positive = 1 - std::max(std::max(std::abs(l1), std::abs(l2)), std::abs(l3));
    s.cp = std::min(hi - std::abs(sum), lo - std::abs(diff));
    s.fas = 2 * (lo * hi) - (lo * (sum * sum) + hi * (diff * diff));
    return s;
}

/// Eigenvalue-space region bits; Schwarz requires the positivity cube as well.
inline uint8_t pauli_region_code(double l1, double l2, double l3, double tol) {
    PauliSlacks s = pauli_slacks(l1, l2, l3);
    bool pos = s.positive >= -tol;
    uint8_t code = 0;
    if (pos) {
        code |= kRegionPositive;
    }
    if (pos && s.fas >= -tol) {
        code |= kRegionSchwarz;
    }
    if (s.cp >= -tol) {
        code |= kRegionCP;
    }
    return code;
}

}  // namespace qmap
