#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "qmap/classify.h"
#include "qmap/docmap.h"
#include "qmap/kernels.h"

namespace qmap {

/// Coefficients of Phi(X) = sum_alpha p_alpha sigma_alpha X sigma_alpha.
/// Trace preservation means sum p = 1; individual p_alpha may be negative.
struct PauliParams {
    std::array<double, 4> p{};
    bool operator==(const PauliParams &) const = default;
};

/// Eigenvalues (l1, l2, l3) of a trace-preserving Pauli map; l0 = 1 implicitly.
struct PauliEigenvalues {
    std::array<double, 3> lam{};
    bool operator==(const PauliEigenvalues &) const = default;
};

/// The 4x4 Hadamard matrix linking both pictures: lambda = H p, H H = 4 I.
constexpr std::array<std::array<int, 4>, 4> kHadamard{{
    {1, 1, 1, 1},
    {1, 1, -1, -1},
    {1, -1, 1, -1},
    {1, -1, -1, 1},
}};

/// Throws NotTracePreserving if |sum p - 1| > 1e-12.
PauliEigenvalues to_eigenvalues(const PauliParams &p);
PauliParams from_eigenvalues(const PauliEigenvalues &lam);

/// a = b = p0 + p3, lambda = p0 - p3, mu = p1 - p2.
MapParams to_map_params(const PauliParams &p);

/// Positive iff |l_k| <= 1; CP iff |l1 +- l2| <= 1 +- l3; Schwarz iff positive and
///   (1 - l3)(l1 + l2)^2 + (1 + l3)(l1 - l2)^2 <= 2 (1 - l3^2).
Classification classify_pauli(const PauliEigenvalues &lam);

/// Phi_alpha = (s1 X s1 + s2 X s2 + s3 X s3 - alpha X) / (3 - alpha).
/// Throws DegenerateDenominator at alpha = 3 and OutOfRange above it.
PauliParams phi_alpha(double alpha);

/// Both branches l1 l2 +- sqrt((1 - l1^2)(1 - l2^2)) of the Schwarz boundary.
/// Throws OutOfRange unless |l1|, |l2| <= 1.
std::pair<double, double> schwarz_boundary_lambda3(double l1, double l2);

/// Left side of the Schwarz ellipse in the (p0, p1) plane at fixed a = p0 + p3:
///   (p0 - a/2)^2 / (a/4) + (p1 - (1-a)/2)^2 / ((1-a)/4).
/// Throws OutOfRange unless a is in (0, 1) and p is consistent with it.
double ellipse_p0p1(const PauliParams &p, double a);

/// (p0 - p3)^2 / (p0 + p3) + (p1 - p2)^2 / (p1 + p2)
double pauli_schwarz_lhs(const PauliParams &p);

struct VolumeEstimate {
    uint64_t n = 0;
    uint64_t seed = 0;
    kernels::PauliRegionCounts counts;
    double v_pos = 0;
    double v_schwarz = 0;
    double v_cp = 0;
    double stderr_pos = 0;
    double stderr_schwarz = 0;
    double stderr_cp = 0;
};

/// Uniform Monte Carlo over the cube [-1, 1]^3 of eigenvalue triples. Sample i
/// uses SplitMix64 outputs 3i, 3i+1, 3i+2 of `seed`, so the result does not
/// depend on `workers`. Throws InvalidParams for n < 10^4.
VolumeEstimate estimate_volumes(uint64_t n, uint64_t seed, unsigned workers = 1);
VolumeEstimate estimate_volumes(uint64_t n, uint64_t seed, unsigned workers, kernels::Isa isa);

/// Vertices of the CP tetrahedron in eigenvalue space.
constexpr std::array<std::array<double, 3>, 4> kTetrahedronVertices{{
    {1, 1, 1},
    {1, -1, -1},
    {-1, 1, -1},
    {-1, -1, 1},
}};

}  // namespace qmap
