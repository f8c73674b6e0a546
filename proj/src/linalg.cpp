#include "qmap/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmap/errors.h"

namespace qmap {

namespace {

template <size_t N>
void require_hermitian(const CMat<N> &m, const char *who) {
    double d = hermitian_defect(m);
    if (d > kHermTol) {
        throw NotHermitian(std::string(who) + ": matrix is not Hermitian (defect " + std::to_string(d) + ")");
    }
}

template <size_t N>
double frobenius(const CMat<N> &m) {
    double s = 0;
    for (const auto &v : m.data) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double off_diagonal_norm(const CMat4 &m) {
    double s = 0;
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            if (i != j) {
                s += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

std::array<double, 2> eig_hermitian2(const CMat2 &m) {
    require_hermitian(m, "eig_hermitian2");
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    double mean = 0.5 * (a + d);
    double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - r, mean + r};
}

std::array<cplx, 2> min_eigvec_hermitian2(const CMat2 &m) {
    auto ev = eig_hermitian2(m);
    double lo = ev[0];
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    cplx b = m(0, 1);
    // Two candidate null vectors of (m - lo); keep the better conditioned one.
    std::array<cplx, 2> u{b, lo - a};
    std::array<cplx, 2> v{lo - d, std::conj(b)};
    double nu = std::sqrt(std::norm(u[0]) + std::norm(u[1]));
    double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    if (nu == 0 && nv == 0) {
        return {1.0, 0.0};
    }
    if (nu >= nv) {
        return {u[0] / nu, u[1] / nu};
    }
    return {v[0] / nv, v[1] / nv};
}

Eigh4 eigh4(const CMat4 &m) {
    require_hermitian(m, "eigh4");
    CMat4 a = m;
    for (size_t k = 0; k < 4; k++) {
        a(k, k) = a(k, k).real();
    }
    CMat4 v = CMat4::identity();
    double scale = frobenius(m);
    double target = 1e-14 * scale;

    bool converged = off_diagonal_norm(a) <= target;
    for (int sweep = 0; sweep < 100 && !converged; sweep++) {
        for (size_t p = 0; p < 3; p++) {
            for (size_t q = p + 1; q < 4; q++) {
                double babs = std::abs(a(p, q));
                if (babs == 0) {
                    continue;
                }
                cplx phase = a(p, q) / babs;  // e^{i phi}
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2 * babs);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                // Rotation R acting on columns p, q:
                //   R(p,p) = c, R(p,q) = s, R(q,p) = -s e^{-i phi}, R(q,q) = c e^{-i phi}
                cplx ephm = std::conj(phase);
                for (size_t k = 0; k < 4; k++) {
                    cplx akp = a(k, p);
                    cplx akq = a(k, q);
                    a(k, p) = c * akp - s * ephm * akq;
                    a(k, q) = s * akp + c * ephm * akq;
                }
                for (size_t k = 0; k < 4; k++) {
                    cplx apk = a(p, k);
                    cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (size_t k = 0; k < 4; k++) {
                    cplx vkp = v(k, p);
                    cplx vkq = v(k, q);
                    v(k, p) = c * vkp - s * ephm * vkq;
                    v(k, q) = s * vkp + c * ephm * vkq;
                }
            }
        }
        converged = off_diagonal_norm(a) <= target;
    }
    if (!converged) {
        throw NoConvergence("eigh4: Jacobi iteration did not converge in 100 sweeps");
    }

    std::array<size_t, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return a(x, x).real() < a(y, y).real(); });
    Eigh4 out;
    for (size_t k = 0; k < 4; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < 4; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::array<double, 4> eig_hermitian4(const CMat4 &m) {
    return eigh4(m).values;
}

double min_eig(const CMat2 &m) {
    return eig_hermitian2(m)[0];
}

double min_eig(const CMat4 &m) {
    return eig_hermitian4(m)[0];
}

bool is_psd(const CMat2 &m, double tol) {
    return min_eig(m) >= -tol;
}

bool is_psd(const CMat4 &m, double tol) {
    return min_eig(m) >= -tol;
}

CMat4 kron(const CMat2 &a, const CMat2 &b) {
    CMat4 m;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return m;
}

CMat4 partial_transpose(const CMat4 &m) {
    CMat4 out;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    out(2 * i + l, 2 * j + k) = m(2 * i + k, 2 * j + l);
                }
            }
        }
    }
    return out;
}

namespace {

void require_nonneg_diagonal(const CMat2 &m, const char *who) {
    if (m(0, 1) != cplx(0) || m(1, 0) != cplx(0)) {
        throw NotDiagonal(std::string(who) + ": matrix has nonzero off-diagonal entries");
    }
    for (size_t k = 0; k < 2; k++) {
        if (m(k, k).imag() != 0 || m(k, k).real() < 0) {
            throw NotDiagonal(std::string(who) + ": diagonal entries must be non-negative reals");
        }
    }
}

}  // namespace

CMat2 pinv_diag2(const CMat2 &m, double tol) {
    require_nonneg_diagonal(m, "pinv_diag2");
    CMat2 out;
    for (size_t k = 0; k < 2; k++) {
        double d = m(k, k).real();
        out(k, k) = d > tol ? 1.0 / d : 0.0;
    }
    return out;
}

CMat2 sqrt_diag2(const CMat2 &m) {
    require_nonneg_diagonal(m, "sqrt_diag2");
    CMat2 out;
    for (size_t k = 0; k < 2; k++) {
        out(k, k) = std::sqrt(m(k, k).real());
    }
    return out;
}

}  // namespace qmap
