#include "qmap/pauli.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "qmap/errors.h"
#include "qmap/region_math.h"
#include "qmap/rng.h"

namespace qmap {

PauliEigenvalues to_eigenvalues(const PauliParams &p) {
    double total = p.p[0] + p.p[1] + p.p[2] + p.p[3];
    if (std::abs(total - 1) > 1e-12) {
        throw NotTracePreserving("to_eigenvalues: Pauli coefficients sum to " + std::to_string(total));
    }
    PauliEigenvalues out;
    for (size_t k = 1; k < 4; k++) {
        double v = 0;
        for (size_t j = 0; j < 4; j++) {
            v += kHadamard[k][j] * p.p[j];
        }
        out.lam[k - 1] = v;
    }
    return out;
}

PauliParams from_eigenvalues(const PauliEigenvalues &lam) {
    std::array<double, 4> full{1.0, lam.lam[0], lam.lam[1], lam.lam[2]};
    PauliParams out;
    for (size_t k = 0; k < 4; k++) {
        double v = 0;
        for (size_t j = 0; j < 4; j++) {
            v += kHadamard[k][j] * full[j];
        }
        out.p[k] = v / 4;
    }
    return out;
}

MapParams to_map_params(const PauliParams &p) {
    return pauli_channel(p.p[0], p.p[1], p.p[2], p.p[3]);
}

Classification classify_pauli(const PauliEigenvalues &lam) {
    PauliSlacks s = pauli_slacks(lam.lam[0], lam.lam[1], lam.lam[2]);
    uint8_t code = pauli_region_code(lam.lam[0], lam.lam[1], lam.lam[2], kSlackTol);
    Classification c;
    c.unital = true;
    c.positive = (code & kRegionPositive) != 0;
    c.schwarz = (code & kRegionSchwarz) != 0;
    c.completely_positive = (code & kRegionCP) != 0;
    c.margins.positive = s.positive;
    c.margins.schwarz = std::min(s.positive, s.fas);
    c.margins.completely_positive = s.cp;
    return c;
}

PauliParams phi_alpha(double alpha) {
    if (alpha == 3) {
        throw DegenerateDenominator("phi_alpha: alpha = 3");
    }
    if (alpha > 3) {
        throw OutOfRange("phi_alpha: alpha must be below 3");
    }
    double w = 1 / (3 - alpha);
    return PauliParams{{-alpha * w, w, w, w}};
}

std::pair<double, double> schwarz_boundary_lambda3(double l1, double l2) {
    if (!(std::abs(l1) <= 1 && std::abs(l2) <= 1)) {
        throw OutOfRange("schwarz_boundary_lambda3: |l1|, |l2| must not exceed 1");
    }
    double r = std::sqrt((1 - l1 * l1) * (1 - l2 * l2));
    return {l1 * l2 + r, l1 * l2 - r};
}

double ellipse_p0p1(const PauliParams &p, double a) {
    if (!(a > 0 && a < 1)) {
        throw OutOfRange("ellipse_p0p1: a must lie in (0, 1)");
    }
    if (std::abs(p.p[0] + p.p[3] - a) > 1e-12 || std::abs(p.p[1] + p.p[2] - (1 - a)) > 1e-12) {
        throw OutOfRange("ellipse_p0p1: p0 + p3 must equal a and p1 + p2 must equal 1 - a");
    }
    double u = p.p[0] - a / 2;
    double v = p.p[1] - (1 - a) / 2;
    return u * u / (a / 4) + v * v / ((1 - a) / 4);
}

double pauli_schwarz_lhs(const PauliParams &p) {
    double lam = p.p[0] - p.p[3];
    double mu = p.p[1] - p.p[2];
    return ellipse_ratio(lam, p.p[0] + p.p[3]) + ellipse_ratio(mu, p.p[1] + p.p[2]);
}

namespace {

kernels::PauliRegionCounts count_range(uint64_t begin, uint64_t end, uint64_t seed, kernels::Isa isa) {
    constexpr size_t kBlock = 4096;
    std::vector<double> l1(kBlock), l2(kBlock), l3(kBlock);
    kernels::PauliRegionCounts total;
    for (uint64_t start = begin; start < end; start += kBlock) {
        size_t len = static_cast<size_t>(std::min<uint64_t>(kBlock, end - start));
        for (size_t k = 0; k < len; k++) {
            uint64_t base = 3 * (start + k);
            l1[k] = 2 * to_unit_double(splitmix64_at(seed, base)) - 1;
            l2[k] = 2 * to_unit_double(splitmix64_at(seed, base + 1)) - 1;
            l3[k] = 2 * to_unit_double(splitmix64_at(seed, base + 2)) - 1;
        }
        total += kernels::count_pauli_regions({l1.data(), len}, {l2.data(), len}, {l3.data(), len}, kSlackTol, isa);
    }
    return total;
}

}  // namespace

VolumeEstimate estimate_volumes(uint64_t n, uint64_t seed, unsigned workers, kernels::Isa isa) {
    if (n < 10000) {
        throw InvalidParams("estimate_volumes: at least 10^4 samples required");
    }
    workers = std::max(1u, workers);
    std::vector<kernels::PauliRegionCounts> partial(workers);
    {
        std::vector<std::jthread> pool;
        uint64_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; w++) {
            uint64_t begin = std::min<uint64_t>(n, w * chunk);
            uint64_t end = std::min<uint64_t>(n, begin + chunk);
            pool.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end, seed, isa); });
        }
    }
    VolumeEstimate est;
    est.n = n;
    est.seed = seed;
    for (const auto &c : partial) {
        est.counts += c;
    }
    auto volume = [&](uint64_t hits, double &v, double &se) {
        double f = static_cast<double>(hits) / static_cast<double>(n);
        v = 8 * f;
        se = 8 * std::sqrt(f * (1 - f) / static_cast<double>(n));
    };
    volume(est.counts.positive, est.v_pos, est.stderr_pos);
    volume(est.counts.schwarz, est.v_schwarz, est.stderr_schwarz);
    volume(est.counts.cp, est.v_cp, est.stderr_cp);
    return est;
}

VolumeEstimate estimate_volumes(uint64_t n, uint64_t seed, unsigned workers) {
    return estimate_volumes(n, seed, workers, kernels::best_isa());
}

}  // namespace qmap
