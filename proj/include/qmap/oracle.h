#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmap/docmap.h"

namespace qmap {

/// Schwarz violations must be below -kViolationTol.
inline constexpr double kViolationTol = 1e-8;

/// X = [[f, z1], [z2, -f]].
struct TracelessX {
    double f = 0;
    cplx z1 = 0;
    cplx z2 = 0;

    CMat2 matrix() const;
};

struct SchwarzDefect {
    TracelessX x;
    CMat2 m;
    double min_eig = 0;
};

/// M = Phi(X^dag X) - Phi(X^dag) Phi(X) for an arbitrary X. Non-unital maps are
/// first rescaled to S Phi(.) S with S = sqrt(pinv(Phi(1))).
CMat2 schwarz_defect_matrix(const MapParams &p, const CMat2 &x);

/// With `check_shift` set, also recomputes M for X + c 1 on unital maps and
/// throws Error if the two disagree beyond 1e-10.
SchwarzDefect schwarz_defect(const MapParams &p, const TracelessX &x, bool check_shift = false);

struct SchwarzSearch {
    std::optional<SchwarzDefect> violation;  // set iff best.min_eig < -kViolationTol
    SchwarzDefect best;
    int evaluations = 0;
};

/// Number of objective calls spent by the f = 0 scan (32 x 32 grid).
inline constexpr int kSchwarzScanEvals = 32 * 32;

/// Minimizes the smallest eigenvalue of M over unit-norm traceless X: a scan of
/// the f = 0 family (z1 real, z2/z1 = tan(theta) e^{i phi}) followed by 20
/// Nelder-Mead restarts over (f, z1, z2). Throws BudgetExhausted if `budget`
/// does not cover the scan.
SchwarzSearch schwarz_search(const MapParams &p, int budget = 10000, uint64_t seed = 0);

std::optional<SchwarzDefect> find_schwarz_violation(const MapParams &p, int budget = 10000, uint64_t seed = 0);

struct BlockPositivity {
    bool positive = false;
    double min_value = 0;
    std::array<cplx, 2> x{};
    std::array<cplx, 2> y{};
    int evaluations = 0;
};

inline constexpr int kBlockScanEvals = 32 * 32;

/// min <x (x) y| C |x (x) y> over unit x, y. The minimum over y is the smallest
/// eigenvalue of the contracted 2x2 block, so only x(theta, phi) is searched.
/// Throws NotHermitian, or BudgetExhausted if `budget` does not cover the grid.
BlockPositivity block_positivity(const ChoiMatrix &c, int budget = 4000, uint64_t seed = 0,
                                 double tol = kViolationTol);

/// C = A + partial_transpose(B) with A, B PSD.
struct Decomposition {
    CMat4 a;
    CMat4 b;
};

/// Explicit decomposition of the Choi matrix of a positive map. CP maps give
/// (C, 0). Throws NotPositive, or Degenerate when the construction would divide
/// by zero.
Decomposition woronowicz_decompose(const MapParams &p);

enum class SweepKind { Unital, NonUnital, Pauli };

std::string_view to_string(SweepKind k);
/// Throws InvalidParams for an unknown name.
SweepKind parse_sweep_kind(std::string_view name);

/// Map number `index` of the deterministic sweep stream.
MapParams sample_sweep_map(SweepKind kind, uint64_t seed, uint64_t index);

struct Disagreement {
    uint64_t index = 0;
    std::string check;  // "schwarz", "positive" or "cp"
    MapParams params;
    bool analytic = false;
    bool oracle = false;
    double oracle_value = 0;
};

struct AgreementReport {
    SweepKind kind = SweepKind::Unital;
    uint64_t n = 0;
    uint64_t seed = 0;
    int budget = 0;
    uint64_t excluded_near_boundary = 0;
    uint64_t checked = 0;
    uint64_t positive = 0;
    uint64_t schwarz = 0;
    uint64_t completely_positive = 0;
    std::vector<Disagreement> disagreements;
};

/// Maps within 0.01 of any analytic boundary are skipped. The rest are checked
/// three ways: Schwarz verdict vs schwarz_search, positivity vs
/// block_positivity, CP vs Choi PSD at 1e-10.
AgreementReport agreement_sweep(SweepKind kind, uint64_t n, uint64_t seed, int budget = 10000);

}  // namespace qmap
