#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace qmap {

using cplx = std::complex<double>;

/// Dense N x N complex matrix with value semantics, row-major storage.
template <size_t N>
struct CMat {
    std::array<cplx, N * N> data{};

    constexpr CMat() = default;
    CMat(std::initializer_list<std::initializer_list<cplx>> rows) {
        size_t r = 0;
        for (const auto &row : rows) {
            size_t c = 0;
            for (const auto &v : row) {
                data[r * N + c] = v;
                c++;
            }
            r++;
        }
    }

    static constexpr size_t size() {
        return N;
    }
    cplx &operator()(size_t r, size_t c) {
        return data[r * N + c];
    }
    const cplx &operator()(size_t r, size_t c) const {
        return data[r * N + c];
    }

    static CMat identity() {
        CMat m;
        for (size_t k = 0; k < N; k++) {
            m(k, k) = 1.0;
        }
        return m;
    }
    static CMat diag(const std::array<cplx, N> &d) {
        CMat m;
        for (size_t k = 0; k < N; k++) {
            m(k, k) = d[k];
        }
        return m;
    }

    CMat adjoint() const {
        CMat m;
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                m(c, r) = std::conj((*this)(r, c));
            }
        }
        return m;
    }
    CMat transpose() const {
        CMat m;
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                m(c, r) = (*this)(r, c);
            }
        }
        return m;
    }
    cplx trace() const {
        cplx t = 0;
        for (size_t k = 0; k < N; k++) {
            t += (*this)(k, k);
        }
        return t;
    }

    CMat &operator+=(const CMat &o) {
        for (size_t k = 0; k < N * N; k++) {
            data[k] += o.data[k];
        }
        return *this;
    }
    CMat &operator-=(const CMat &o) {
        for (size_t k = 0; k < N * N; k++) {
            data[k] -= o.data[k];
        }
        return *this;
    }
    CMat &operator*=(cplx s) {
        for (auto &v : data) {
            v *= s;
        }
        return *this;
    }
    friend CMat operator+(CMat a, const CMat &b) {
        return a += b;
    }
    friend CMat operator-(CMat a, const CMat &b) {
        return a -= b;
    }
    friend CMat operator*(CMat a, cplx s) {
        return a *= s;
    }
    friend CMat operator*(cplx s, CMat a) {
        return a *= s;
    }
    friend CMat operator*(const CMat &a, const CMat &b) {
        CMat m;
        for (size_t r = 0; r < N; r++) {
            for (size_t k = 0; k < N; k++) {
                cplx v = a(r, k);
                for (size_t c = 0; c < N; c++) {
                    m(r, c) += v * b(k, c);
                }
            }
        }
        return m;
    }
    bool operator==(const CMat &o) const = default;
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

/// Hermitian tolerance on entries (absolute).
inline constexpr double kHermTol = 1e-10;

/// Largest absolute entry.
template <size_t N>
double max_abs(const CMat<N> &m) {
    double r = 0;
    for (const auto &v : m.data) {
        r = std::max(r, std::abs(v));
    }
    return r;
}

/// max_{ij} |m_ij - conj(m_ji)|
template <size_t N>
double hermitian_defect(const CMat<N> &m) {
    double r = 0;
    for (size_t i = 0; i < N; i++) {
        for (size_t j = i; j < N; j++) {
            r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return r;
}

template <size_t N>
bool is_hermitian(const CMat<N> &m, double tol = kHermTol) {
    return hermitian_defect(m) <= tol;
}

/// Ascending eigenvalues of a Hermitian 2x2 matrix (closed form).
/// Throws NotHermitian if the input is not Hermitian within kHermTol.
std::array<double, 2> eig_hermitian2(const CMat2 &m);

/// Unit eigenvector for the smaller eigenvalue of a Hermitian 2x2 matrix.
std::array<cplx, 2> min_eigvec_hermitian2(const CMat2 &m);

struct Eigh4 {
    std::array<double, 4> values;  // ascending
    CMat4 vectors;                 // column k is the eigenvector of values[k]
};

/// Hermitian 4x4 eigendecomposition by cyclic complex Jacobi rotations.
/// Throws NotHermitian, or NoConvergence if the off-diagonal norm does not
/// fall below 1e-14 * ||m|| within 100 sweeps.
Eigh4 eigh4(const CMat4 &m);

/// Ascending eigenvalues only; see eigh4.
std::array<double, 4> eig_hermitian4(const CMat4 &m);

double min_eig(const CMat2 &m);
double min_eig(const CMat4 &m);

/// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const CMat2 &m, double tol);
bool is_psd(const CMat4 &m, double tol);

/// Kronecker product; index (2i + k, 2j + l) = a(i, j) * b(k, l).
CMat4 kron(const CMat2 &a, const CMat2 &b);

/// Transposes the second tensor factor: ((i,k),(j,l)) -> ((i,l),(j,k)).
CMat4 partial_transpose(const CMat4 &m);

/// Pseudoinverse of a diagonal matrix with non-negative real diagonal.
/// Diagonal entries d > tol map to 1/d, all others to 0. Throws NotDiagonal.
CMat2 pinv_diag2(const CMat2 &m, double tol = 1e-12);

/// Principal square root of a diagonal matrix with non-negative real diagonal.
CMat2 sqrt_diag2(const CMat2 &m);

}  // namespace qmap
