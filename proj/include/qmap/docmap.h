#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmap/linalg.h"

namespace qmap {

/// Parameters of a qubit map with diagonal orthogonal symmetry:
///
///   Phi(X) = sum_ij a_ij |i><j| X |j><i|
///          + (lambda P1 X P2 + conj(lambda) P2 X P1)
///          + (mu P1 X^T P2 + conj(mu) P2 X^T P1)
///
/// Real a_ij make the map Hermiticity preserving. Negative a_ij are allowed
/// (non-CP Pauli maps need them); the classifiers check the sign themselves.
struct MapParams {
    double a11 = 0;
    double a12 = 0;
    double a21 = 0;
    double a22 = 0;
    cplx lambda = 0;
    cplx mu = 0;

    bool operator==(const MapParams &) const = default;

    /// Unital shorthand: a-matrix [[a, 1-a], [1-b, b]].
    static MapParams unital(double a, double b, cplx lambda, cplx mu);

    double min_a() const;
};

/// The 4x4 Choi matrix sum_ij |i><j| (x) Phi(|i><j|), first factor indexing row blocks.
struct ChoiMatrix {
    CMat4 m;
};

enum class SymmetryType { PhaseCovariant, ConjugatePhaseCovariant, Both, OrthogonalOnly };

std::string_view to_string(SymmetryType s);

CMat2 apply(const MapParams &p, const CMat2 &x);

ChoiMatrix choi(const MapParams &p);

/// Inverse of choi(). Throws PatternViolation if an entry outside the eight
/// structural slots exceeds 1e-12 in magnitude, or NotHermitian.
MapParams from_choi(const ChoiMatrix &c);

/// Adjoint under the trace pairing: a_ij -> a_ji, lambda -> conj(lambda), mu unchanged.
MapParams dual(const MapParams &p);

SymmetryType symmetry_type(const MapParams &p);

/// Direct check of Phi(sz X sz) == sz Phi(X) sz on the matrix-unit basis.
bool commutes_with_sigma_z(const MapParams &p, double tol = 1e-12);

bool is_unital(const MapParams &p, double tol = 1e-12);
bool is_trace_preserving(const MapParams &p, double tol = 1e-12);

/// Phi(1) = diag(a11 + a12, a21 + a22).
CMat2 image_of_identity(const MapParams &p);

// Named members of the class. Probabilities and damping rates must lie in [0, 1].
MapParams identity_map();
MapParams amplitude_damping(double eta);
MapParams generalized_amplitude_damping(double p, double eta);
MapParams pauli_channel(double p0, double p1, double p2, double p3);
MapParams bit_flip(double p);
MapParams phase_flip(double p);
MapParams bit_phase_flip(double p);
MapParams choi_map();
MapParams transposition();
MapParams reduction();

/// Dispatch by name: amplitude_damping, generalized_amplitude_damping, pauli,
/// bit_flip, phase_flip, bit_phase_flip, choi_map, transposition, reduction, identity.
/// Throws OutOfRange for bad parameters and InvalidParams for an unknown name
/// or a wrong parameter count.
MapParams named_channel(std::string_view name, std::span<const double> params);

std::vector<std::string> named_channel_names();

}  // namespace qmap
