#pragma once

#include <string>

#include "qmap/docmap.h"

namespace qmap {

/// Absolute tolerance on inequality slack. All regions are closed.
inline constexpr double kSlackTol = 1e-12;

/// An inequality verdict with its raw slack (positive = strictly inside).
struct Verdict {
    bool holds = false;
    double margin = 0;
};

struct Margins {
    double positive = 0;
    double schwarz = 0;
    double completely_positive = 0;
};

/// Positive / Schwarz / CP verdicts. `schwarz` means generalized Schwarz for
/// non-unital maps. Invariant: completely_positive => schwarz => positive.
struct Classification {
    bool positive = false;
    bool schwarz = false;
    bool completely_positive = false;
    bool unital = false;
    Margins margins;
};

/// c^2 / d with the closed-region convention for a vanishing semi-axis:
/// d <= 0 gives 0 when |c| <= kSlackTol and +inf otherwise.
double ellipse_ratio(double c, double d);

/// a_ij >= 0, |lambda| <= sqrt(a11 a22), |mu| <= sqrt(a12 a21).
Verdict is_completely_positive(const MapParams &p);

/// a_ij >= 0 and |lambda| + |mu| <= sqrt(a11 a22) + sqrt(a12 a21).
/// The margin is that slack, or min a_ij when some a_ij is negative.
Verdict is_positive(const MapParams &p);

/// Two-ellipse criterion for unital maps:
///   |lambda|^2/a + |mu|^2/(1-a) <= 1  and  |lambda|^2/b + |mu|^2/(1-b) <= 1.
/// Margin is 1 - max(lhs). Maps with a negative a_ij are reported non-Schwarz
/// with margin min a_ij. Throws NotUnital.
Verdict is_schwarz_unital(const MapParams &p);

/// Phase-covariant (mu = 0): |lambda| <= min(sqrt a, sqrt b).
/// Conjugate phase-covariant (lambda = 0): |mu| <= min(sqrt(1-a), sqrt(1-b)).
/// Throws NotUnital, or WrongSymmetry when neither lambda nor mu vanishes.
bool is_schwarz_phase_covariant(const MapParams &p);

/// Generalized Schwarz criterion with a = a11, a' = a12, b' = a21, b = a22,
/// A = a + a', B = b + b':
///   |lambda|^2/a + |mu|^2/a' <= B  and  |lambda|^2/b + |mu|^2/b' <= A.
/// Throws InvalidParams if some a_ij < -kSlackTol.
Verdict is_generalized_schwarz(const MapParams &p);

/// Generalized Schwarz criterion for the dual map, evaluated on the original parameters:
///   |lambda|^2/a + |mu|^2/b' <= b + a'  and  |lambda|^2/b + |mu|^2/a' <= a + b'.
Verdict is_dual_generalized_schwarz(const MapParams &p);

/// Outcome of the duality relations between Phi and its dual for one map.
struct DualityReport {
    enum class Case { Equal, APrimeGreater, APrimeSmaller };
    Case relation = Case::Equal;
    bool schwarz = false;
    bool dual_schwarz = false;
    bool violated = false;
    std::string detail;  // counterexample description when violated
};

/// a' = b': verdicts agree; a' > b': GS(Phi) => GS(dual); a' < b': GS(dual) => GS(Phi).
DualityReport check_duality_relations(const MapParams &p);

/// Necessary conditions |lambda| <= min(sqrt a, sqrt b), |mu| <= min(sqrt(1-a), sqrt(1-b)).
/// Throws NotUnital.
bool schwarz_necessary_bounds(const MapParams &p);

/// Replace lambda, mu by their moduli. Every classifier verdict is invariant under this.
MapParams abs_reduction(const MapParams &p);

/// Phi_-(X) = (1 Tr(AX) - X) / (Tr A - 1) with A = diag(alpha1, alpha2).
/// Throws DegenerateDenominator when alpha1 + alpha2 = 1.
MapParams ks_phi_minus(double alpha1, double alpha2);

/// Psi_+(X) = (1 Tr(AX) + X^T) / (Tr A + 1) with A = diag(alpha1, alpha2).
/// Throws DegenerateDenominator unless alpha1 + alpha2 > -1.
MapParams ks_psi_plus(double alpha1, double alpha2);

/// A invertible and ||A^{-1}||_inf <= (Tr A - 1) / Tr A.
bool ks_phi_minus_condition(double alpha1, double alpha2);

/// A >= 1 / (Tr A + 1).
bool ks_psi_plus_condition(double alpha1, double alpha2);

Classification classify(const MapParams &p);

}  // namespace qmap
