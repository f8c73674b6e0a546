#include "qmap/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qmap/classify.h"
#include "qmap/errors.h"
#include "qmap/optimize.h"
#include "qmap/pauli.h"
#include "qmap/rng.h"

namespace qmap {

namespace {

constexpr int kGrid = 32;
constexpr int kRestarts = 20;
constexpr int kSeededRestarts = 8;
constexpr double kPi = std::numbers::pi;

struct Rescaled {
    MapParams p;
    bool unital;
    CMat2 s;
};

Rescaled rescale(const MapParams &p) {
    if (is_unital(p)) {
        return {p, true, CMat2::identity()};
    }
    return {p, false, sqrt_diag2(pinv_diag2(image_of_identity(p)))};
}

CMat2 defect(const Rescaled &r, const CMat2 &x) {
    CMat2 xd = x.adjoint();
    CMat2 m1 = apply(r.p, xd * x);
    CMat2 m2 = apply(r.p, xd);
    CMat2 m3 = apply(r.p, x);
    if (r.unital) {
        return m1 - m2 * m3;
    }
    const CMat2 &s = r.s;
    return s * m1 * s - (s * m2 * s) * (s * m3 * s);
}

TracelessX from_vector(std::span<const double> v) {
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3] + v[4] * v[4]);
    if (n == 0) {
        return {0, 1, 0};
    }
    return {v[0] / n, cplx(v[1], v[2]) / n, cplx(v[3], v[4]) / n};
}

double uniform(uint64_t seed, uint64_t counter, double lo, double hi) {
    return lo + (hi - lo) * to_unit_double(splitmix64_at(seed, counter));
}

// Indices of the k smallest values, in ascending value order.
std::vector<size_t> smallest(const std::vector<double> &vals, size_t k) {
    std::vector<size_t> idx(vals.size());
    for (size_t i = 0; i < idx.size(); i++) {
        idx[i] = i;
    }
    k = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](size_t x, size_t y) { return vals[x] < vals[y] || (vals[x] == vals[y] && x < y); });
    idx.resize(k);
    return idx;
}

}  // namespace

CMat2 TracelessX::matrix() const {
    return CMat2{{f, z1}, {z2, -f}};
}

CMat2 schwarz_defect_matrix(const MapParams &p, const CMat2 &x) {
    return defect(rescale(p), x);
}

SchwarzDefect schwarz_defect(const MapParams &p, const TracelessX &x, bool check_shift) {
    Rescaled r = rescale(p);
    CMat2 xm = x.matrix();
    CMat2 m = defect(r, xm);
    if (check_shift && r.unital) {
        const cplx c(0.37, -0.21);
        CMat2 shifted = defect(r, xm + CMat2::identity() * c);
        if (max_abs(shifted - m) > 1e-10 * std::max(1.0, max_abs(m))) {
            throw Error("schwarz_defect: M changed under X -> X + c 1 for a unital map");
        }
    }
    return {x, m, min_eig(m)};
}

SchwarzSearch schwarz_search(const MapParams &p, int budget, uint64_t seed) {
    Rescaled r = rescale(p);
    SchwarzSearch out;
    auto eval_x = [&](const TracelessX &x) {
        out.evaluations++;
        CMat2 m = defect(r, x.matrix());
        double v = min_eig(m);
        if (out.evaluations == 1 || v < out.best.min_eig) {
            out.best = {x, m, v};
        }
        return v;
    };

    std::vector<double> scan(kGrid * kGrid);
    std::vector<TracelessX> scan_x(kGrid * kGrid);
    for (int i = 0; i < kGrid; i++) {
        double th = (kPi / 2) * i / (kGrid - 1);
        for (int j = 0; j < kGrid; j++) {
            if (out.evaluations >= budget) {
                throw BudgetExhausted(out.evaluations ? out.best.min_eig : 0.0,
                                      "schwarz_search: budget smaller than the f = 0 scan");
            }
            double ph = 2 * kPi * j / kGrid;
            TracelessX x{0, std::cos(th), std::polar(std::sin(th), ph)};
            scan_x[i * kGrid + j] = x;
            scan[i * kGrid + j] = eval_x(x);
        }
    }

    std::vector<size_t> starts = smallest(scan, kSeededRestarts);
    auto objective = [&](std::span<const double> v) { return eval_x(from_vector(v)); };
    for (int k = 0; k < kRestarts && out.evaluations < budget; k++) {
        std::vector<double> v0(5);
        if (k < static_cast<int>(starts.size())) {
            const TracelessX &x = scan_x[starts[k]];
            v0 = {x.f, x.z1.real(), x.z1.imag(), x.z2.real(), x.z2.imag()};
        } else {
            std::mt19937_64 gen(splitmix64_at(seed, static_cast<uint64_t>(k)));
            std::normal_distribution<double> nd;
            for (auto &c : v0) {
                c = nd(gen);
            }
        }
        int remaining = budget - out.evaluations;
        int share = remaining / (kRestarts - k);
        if (share < 12) {
            share = remaining;
        }
        nelder_mead(objective, v0, 0.2, share);
        if (k > 0 && out.best.min_eig < -kViolationTol) {
            break;
        }
    }
    if (out.best.min_eig < -kViolationTol) {
        out.violation = out.best;
    }
    return out;
}

std::optional<SchwarzDefect> find_schwarz_violation(const MapParams &p, int budget, uint64_t seed) {
    return schwarz_search(p, budget, seed).violation;
}

BlockPositivity block_positivity(const ChoiMatrix &c, int budget, uint64_t seed, double tol) {
    if (!is_hermitian(c.m)) {
        throw NotHermitian("block_positivity: Choi matrix is not Hermitian");
    }
    BlockPositivity out;
    out.min_value = 0;
    auto contracted = [&](const std::array<cplx, 2> &x) {
        CMat2 k;
        for (size_t kk = 0; kk < 2; kk++) {
            for (size_t l = 0; l < 2; l++) {
                cplx s = 0;
                for (size_t i = 0; i < 2; i++) {
                    for (size_t j = 0; j < 2; j++) {
                        s += std::conj(x[i]) * x[j] * c.m(2 * i + kk, 2 * j + l);
                    }
                }
                k(kk, l) = s;
            }
        }
        // Exact Hermitian part; the contraction of a Hermitian C is Hermitian up to rounding.
        k(0, 0) = k(0, 0).real();
        k(1, 1) = k(1, 1).real();
        k(1, 0) = std::conj(k(0, 1));
        return k;
    };
    auto eval_angles = [&](double th, double ph) {
        out.evaluations++;
        std::array<cplx, 2> x{std::cos(th), std::polar(std::sin(th), ph)};
        CMat2 k = contracted(x);
        double v = min_eig(k);
        if (out.evaluations == 1 || v < out.min_value) {
            out.min_value = v;
            out.x = x;
            out.y = min_eigvec_hermitian2(k);
        }
        return v;
    };

    std::vector<double> scan(kGrid * kGrid);
    std::vector<std::array<double, 2>> scan_pt(kGrid * kGrid);
    for (int i = 0; i < kGrid; i++) {
        double th = (kPi / 2) * i / (kGrid - 1);
        for (int j = 0; j < kGrid; j++) {
            if (out.evaluations >= budget) {
                throw BudgetExhausted(out.evaluations ? out.min_value : 0.0,
                                      "block_positivity: budget smaller than the angle grid");
            }
            double ph = 2 * kPi * j / kGrid;
            scan_pt[i * kGrid + j] = {th, ph};
            scan[i * kGrid + j] = eval_angles(th, ph);
        }
    }

    std::vector<size_t> starts = smallest(scan, kSeededRestarts);
    auto objective = [&](std::span<const double> v) { return eval_angles(v[0], v[1]); };
    for (int k = 0; k < kRestarts && out.evaluations < budget; k++) {
        std::vector<double> v0(2);
        if (k < static_cast<int>(starts.size())) {
            v0 = {scan_pt[starts[k]][0], scan_pt[starts[k]][1]};
        } else {
            std::mt19937_64 gen(splitmix64_at(seed, static_cast<uint64_t>(k)));
            std::uniform_real_distribution<double> ud(0.0, 1.0);
            v0 = {ud(gen) * kPi / 2, ud(gen) * 2 * kPi};
        }
        int remaining = budget - out.evaluations;
        int share = remaining / (kRestarts - k);
        if (share < 6) {
            share = remaining;
        }
        nelder_mead(objective, v0, 0.05, share);
    }
    out.positive = out.min_value >= -tol;
    return out;
}

Decomposition woronowicz_decompose(const MapParams &p) {
    if (!is_positive(p).holds) {
        throw NotPositive("woronowicz_decompose: map is not positive");
    }
    ChoiMatrix c = choi(p);
    const double a = p.a11, ap = p.a12, bp = p.a21, b = p.a22;
    const double lam = std::abs(p.lambda), mu = std::abs(p.mu);
    const double alpha = std::arg(p.lambda), beta = std::arg(p.mu);
    const double sab = std::sqrt(a * b), sapbp = std::sqrt(ap * bp);
    Decomposition d;

    if (lam > sab && lam * lam > a * b) {
        double kappa = lam - sab;
        double x = 0, y = 0;
        if (mu != 0) {
            if (ap == 0 || bp == 0) {
                throw Degenerate("woronowicz_decompose: a' b' = 0 with mu != 0");
            }
            x = mu * std::sqrt(ap / bp);
            y = mu * std::sqrt(bp / ap);
        }
        d.a(0, 0) = a;
        d.a(3, 3) = b;
        d.a(0, 3) = std::polar(sab, alpha);
        d.a(3, 0) = std::polar(sab, -alpha);
        d.a(1, 1) = y;
        d.a(2, 2) = x;
        d.a(1, 2) = c.m(1, 2);
        d.a(2, 1) = c.m(2, 1);
        d.b(1, 1) = bp - y;
        d.b(2, 2) = ap - x;
        d.b(1, 2) = std::polar(kappa, alpha);
        d.b(2, 1) = std::polar(kappa, -alpha);
        return d;
    }
    if (mu > sapbp && mu * mu > ap * bp) {
        double kappa = mu - sapbp;
        double x = 0, y = 0;
        if (lam != 0) {
            if (a == 0 || b == 0) {
                throw Degenerate("woronowicz_decompose: a b = 0 with lambda != 0");
            }
            x = lam * std::sqrt(a / b);
            y = lam * std::sqrt(b / a);
        }
        d.a(0, 0) = x;
        d.a(3, 3) = y;
        d.a(0, 3) = c.m(0, 3);
        d.a(3, 0) = c.m(3, 0);
        d.a(1, 1) = bp;
        d.a(2, 2) = ap;
        d.a(1, 2) = std::polar(sapbp, -beta);
        d.a(2, 1) = std::polar(sapbp, beta);
        d.b(0, 0) = a - x;
        d.b(3, 3) = b - y;
        d.b(0, 3) = std::polar(kappa, -beta);
        d.b(3, 0) = std::polar(kappa, beta);
        return d;
    }
    d.a = c.m;
    return d;
}

std::string_view to_string(SweepKind k) {
    switch (k) {
        case SweepKind::Unital:
            return "unital";
        case SweepKind::NonUnital:
            return "nonunital";
        case SweepKind::Pauli:
            return "pauli";
    }
    return "?";
}

SweepKind parse_sweep_kind(std::string_view name) {
    for (SweepKind k : {SweepKind::Unital, SweepKind::NonUnital, SweepKind::Pauli}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw InvalidParams("unknown sweep kind: " + std::string(name));
}

MapParams sample_sweep_map(SweepKind kind, uint64_t seed, uint64_t index) {
    const uint64_t base = 8 * index;
    auto u = [&](int k, double lo, double hi) { return uniform(seed, base + static_cast<uint64_t>(k), lo, hi); };
    switch (kind) {
        case SweepKind::Unital: {
            double a = u(0, 0, 1), b = u(1, 0, 1);
            return MapParams::unital(a, b, std::polar(u(2, 0, 1), u(3, 0, 2 * kPi)),
                                     std::polar(u(4, 0, 1), u(5, 0, 2 * kPi)));
        }
        case SweepKind::NonUnital:
            return {u(0, 0, 1), u(1, 0, 1), u(2, 0, 1), u(3, 0, 1), std::polar(u(4, 0, 1), u(5, 0, 2 * kPi)),
                    std::polar(u(6, 0, 1), u(7, 0, 2 * kPi))};
        case SweepKind::Pauli:
            return to_map_params(from_eigenvalues({{u(0, -1, 1), u(1, -1, 1), u(2, -1, 1)}}));
    }
    throw InvalidParams("unknown sweep kind");
}

AgreementReport agreement_sweep(SweepKind kind, uint64_t n, uint64_t seed, int budget) {
    AgreementReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.seed = seed;
    rep.budget = budget;
    for (uint64_t i = 0; i < n; i++) {
        MapParams p = sample_sweep_map(kind, seed, i);
        Classification cl;
        if (kind == SweepKind::Pauli) {
            double l3 = p.a11 + p.a22 - 1;
            cl = classify_pauli({{p.lambda.real() + p.mu.real(), p.lambda.real() - p.mu.real(), l3}});
        } else {
            cl = classify(p);
        }
        const Margins &m = cl.margins;
        if (std::min({std::abs(m.positive), std::abs(m.schwarz), std::abs(m.completely_positive)}) < 0.01) {
            rep.excluded_near_boundary++;
            continue;
        }
        rep.checked++;
        rep.positive += cl.positive;
        rep.schwarz += cl.schwarz;
        rep.completely_positive += cl.completely_positive;

        SchwarzSearch s = schwarz_search(p, budget, seed + i);
        bool oracle_schwarz = !s.violation.has_value();
        if (oracle_schwarz != cl.schwarz) {
            rep.disagreements.push_back({i, "schwarz", p, cl.schwarz, oracle_schwarz, s.best.min_eig});
        }
        BlockPositivity bp = block_positivity(choi(p), std::max(budget, kBlockScanEvals + 1), seed + i);
        if (bp.positive != cl.positive) {
            rep.disagreements.push_back({i, "positive", p, cl.positive, bp.positive, bp.min_value});
        }
        double ce = min_eig(choi(p).m);
        bool oracle_cp = ce >= -1e-10;
        if (oracle_cp != cl.completely_positive) {
            rep.disagreements.push_back({i, "cp", p, cl.completely_positive, oracle_cp, ce});
        }
    }
    return rep;
}

}  // namespace qmap
