#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace qmap::kernels {

/// Instruction set of a kernel variant. Scalar is the reference; every other
/// variant must produce bit-identical results.
enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

/// Widest available variant. Setting QMAP_FORCE_SCALAR=1 pins the reference path.
Isa best_isa();

struct PauliRegionCounts {
    uint64_t positive = 0;
    uint64_t schwarz = 0;
    uint64_t cp = 0;

    PauliRegionCounts &operator+=(const PauliRegionCounts &o) {
        positive += o.positive;
        schwarz += o.schwarz;
        cp += o.cp;
        return *this;
    }
    bool operator==(const PauliRegionCounts &) const = default;
};

/// Counts eigenvalue triples (l1[i], l2[i], l3[i]) in the positivity cube, the
/// Schwarz region and the CP tetrahedron. All spans must have equal length.
PauliRegionCounts count_pauli_regions(std::span<const double> l1, std::span<const double> l2,
                                      std::span<const double> l3, double tol, Isa isa);
PauliRegionCounts count_pauli_regions(std::span<const double> l1, std::span<const double> l2,
                                      std::span<const double> l3, double tol);

/// Region bits (kRegionPositive | kRegionSchwarz | kRegionCP) of the unital maps
/// (a, b, lam[i], mu[i]) with lam, mu >= 0. Agrees with classify() on
/// MapParams::unital(a, b, lam[i], mu[i]).
void unital_region_codes(double a, double b, std::span<const double> lam, std::span<const double> mu,
                         std::span<uint8_t> out, double tol, Isa isa);
void unital_region_codes(double a, double b, std::span<const double> lam, std::span<const double> mu,
                         std::span<uint8_t> out, double tol);

}  // namespace qmap::kernels
