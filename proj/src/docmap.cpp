#include "qmap/docmap.h"

#include <cmath>
#include <string>

#include "qmap/errors.h"

namespace qmap {

namespace {

constexpr double kZero = 1e-12;

void require_unit_interval(double v, const char *what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw OutOfRange(std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
    }
}

bool is_structural_slot(size_t r, size_t c) {
    return r == c || r + c == 3;
}

}  // namespace

MapParams MapParams::unital(double a, double b, cplx lambda, cplx mu) {
    return MapParams{a, 1 - a, 1 - b, b, lambda, mu};
}

double MapParams::min_a() const {
    return std::min(std::min(a11, a12), std::min(a21, a22));
}

std::string_view to_string(SymmetryType s) {
    switch (s) {
        case SymmetryType::PhaseCovariant:
            return "phase_covariant";
        case SymmetryType::ConjugatePhaseCovariant:
            return "conjugate_phase_covariant";
        case SymmetryType::Both:
            return "both";
        case SymmetryType::OrthogonalOnly:
            return "orthogonal_only";
    }
    return "unknown";
}

CMat2 apply(const MapParams &p, const CMat2 &x) {
    CMat2 y;
    y(0, 0) = p.a11 * x(0, 0) + p.a12 * x(1, 1);
    y(1, 1) = p.a21 * x(0, 0) + p.a22 * x(1, 1);
    // P1 X^T P2 = X21 |1><2|, so mu multiplies X21 in the upper corner.
    y(0, 1) = p.lambda * x(0, 1) + p.mu * x(1, 0);
    y(1, 0) = std::conj(p.lambda) * x(1, 0) + std::conj(p.mu) * x(0, 1);
    return y;
}

ChoiMatrix choi(const MapParams &p) {
    ChoiMatrix c;
    c.m(0, 0) = p.a11;
    c.m(1, 1) = p.a21;
    c.m(2, 2) = p.a12;
    c.m(3, 3) = p.a22;
    c.m(0, 3) = p.lambda;
    c.m(3, 0) = std::conj(p.lambda);
    c.m(1, 2) = std::conj(p.mu);
    c.m(2, 1) = p.mu;
    return c;
}

MapParams from_choi(const ChoiMatrix &c) {
    for (size_t r = 0; r < 4; r++) {
        for (size_t col = 0; col < 4; col++) {
            if (!is_structural_slot(r, col) && std::abs(c.m(r, col)) > kZero) {
                throw PatternViolation(static_cast<int>(r), static_cast<int>(col),
                                       "from_choi: nonzero entry at (" + std::to_string(r) + ", " +
                                           std::to_string(col) + ") outside the map-class pattern");
            }
        }
    }
    if (!is_hermitian(c.m)) {
        throw NotHermitian("from_choi: Choi matrix is not Hermitian");
    }
    return MapParams{c.m(0, 0).real(), c.m(2, 2).real(), c.m(1, 1).real(), c.m(3, 3).real(), c.m(0, 3), c.m(2, 1)};
}

MapParams dual(const MapParams &p) {
    return MapParams{p.a11, p.a21, p.a12, p.a22, std::conj(p.lambda), p.mu};
}

SymmetryType symmetry_type(const MapParams &p) {
    bool lam_zero = std::abs(p.lambda) <= kZero;
    bool mu_zero = std::abs(p.mu) <= kZero;
    if (lam_zero && mu_zero) {
        return SymmetryType::Both;
    }
    if (mu_zero) {
        return SymmetryType::PhaseCovariant;
    }
    if (lam_zero) {
        return SymmetryType::ConjugatePhaseCovariant;
    }
    return SymmetryType::OrthogonalOnly;
}

bool commutes_with_sigma_z(const MapParams &p, double tol) {
    CMat2 sz{{1, 0}, {0, -1}};
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            CMat2 e;
            e(i, j) = 1;
            CMat2 lhs = apply(p, sz * e * sz);
            CMat2 rhs = sz * apply(p, e) * sz;
            if (max_abs(lhs - rhs) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_unital(const MapParams &p, double tol) {
    return std::abs(p.a11 + p.a12 - 1) <= tol && std::abs(p.a21 + p.a22 - 1) <= tol;
}

bool is_trace_preserving(const MapParams &p, double tol) {
    return std::abs(p.a11 + p.a21 - 1) <= tol && std::abs(p.a12 + p.a22 - 1) <= tol;
}

CMat2 image_of_identity(const MapParams &p) {
    return CMat2::diag({p.a11 + p.a12, p.a21 + p.a22});
}

MapParams identity_map() {
    return MapParams{1, 0, 0, 1, 1.0, 0.0};
}

MapParams amplitude_damping(double eta) {
    require_unit_interval(eta, "eta");
    return MapParams{1, 1 - eta, 0, eta, std::sqrt(eta), 0.0};
}

MapParams generalized_amplitude_damping(double p, double eta) {
    require_unit_interval(p, "p");
    require_unit_interval(eta, "eta");
    // Kraus set sqrt(p) diag(1, sqrt(eta)), sqrt(p) sqrt(1-eta) |1><2|,
    // sqrt(1-p) diag(sqrt(eta), 1), sqrt(1-p) sqrt(1-eta) |2><1|.
    return MapParams{p + (1 - p) * eta, p * (1 - eta), (1 - p) * (1 - eta), p * eta + (1 - p), std::sqrt(eta), 0.0};
}

MapParams pauli_channel(double p0, double p1, double p2, double p3) {
    double diag = p0 + p3;
    double off = p1 + p2;
    return MapParams{diag, off, off, diag, p0 - p3, p1 - p2};
}

MapParams bit_flip(double p) {
    require_unit_interval(p, "p");
    return pauli_channel(p, 1 - p, 0, 0);
}

MapParams phase_flip(double p) {
    require_unit_interval(p, "p");
    return pauli_channel(p, 0, 0, 1 - p);
}

MapParams bit_phase_flip(double p) {
    require_unit_interval(p, "p");
    return pauli_channel(p, 0, 1 - p, 0);
}

MapParams choi_map() {
    // Phi(X) = Tr(X) 1 / 4 + X^T / 2
    return MapParams{0.75, 0.25, 0.25, 0.75, 0.0, 0.5};
}

MapParams transposition() {
    return MapParams{1, 0, 0, 1, 0.0, 1.0};
}

MapParams reduction() {
    // R(X) = Tr(X) 1 - X
    return MapParams{0, 1, 1, 0, -1.0, 0.0};
}

std::vector<std::string> named_channel_names() {
    return {"amplitude_damping", "generalized_amplitude_damping", "pauli", "bit_flip", "phase_flip",
            "bit_phase_flip",    "choi_map",                      "transposition", "reduction", "identity"};
}

MapParams named_channel(std::string_view name, std::span<const double> params) {
    auto want = [&](size_t n) {
        if (params.size() != n) {
            throw InvalidParams("channel '" + std::string(name) + "' takes " + std::to_string(n) +
                                " parameter(s), got " + std::to_string(params.size()));
        }
    };
    if (name == "amplitude_damping") {
        want(1);
        return amplitude_damping(params[0]);
    }
    if (name == "generalized_amplitude_damping") {
        want(2);
        return generalized_amplitude_damping(params[0], params[1]);
    }
    if (name == "pauli") {
        want(4);
        return pauli_channel(params[0], params[1], params[2], params[3]);
    }
    if (name == "bit_flip") {
        want(1);
        return bit_flip(params[0]);
    }
    if (name == "phase_flip") {
        want(1);
        return phase_flip(params[0]);
    }
    if (name == "bit_phase_flip") {
        want(1);
        return bit_phase_flip(params[0]);
    }
    if (name == "choi_map") {
        want(0);
        return choi_map();
    }
    if (name == "transposition") {
        want(0);
        return transposition();
    }
    if (name == "reduction") {
        want(0);
        return reduction();
    }
    if (name == "identity") {
        want(0);
        return identity_map();
    }
    throw InvalidParams("unknown channel '" + std::string(name) + "'");
}

}  // namespace qmap
