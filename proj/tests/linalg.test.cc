#include "qmap/linalg.h"

#include <random>

#include "gtest/gtest.h"
#include "qmap/errors.h"
#include "test_util.h"

using namespace qmap;
using namespace qmap::testing;

namespace {

// Determinant by partial-pivot Gaussian elimination.
cplx det_lu(CMat4 m) {
    cplx det = 1;
    for (size_t c = 0; c < 4; c++) {
        size_t piv = c;
        for (size_t r = c + 1; r < 4; r++) {
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) {
                piv = r;
            }
        }
        if (m(piv, c) == cplx(0)) {
            return 0;
        }
        if (piv != c) {
            for (size_t k = 0; k < 4; k++) {
                std::swap(m(c, k), m(piv, k));
            }
            det = -det;
        }
        det *= m(c, c);
        for (size_t r = c + 1; r < 4; r++) {
            cplx f = m(r, c) / m(c, c);
            for (size_t k = c; k < 4; k++) {
                m(r, k) -= f * m(c, k);
            }
        }
    }
    return det;
}

// Determinant of the leading k x k block by cofactor expansion.
double leading_minor(const CMat4 &m, size_t k) {
    CMat4 sub = CMat4::identity();
    for (size_t r = 0; r < k; r++) {
        for (size_t c = 0; c < k; c++) {
            sub(r, c) = m(r, c);
        }
    }
    return det_lu(sub).real();
}

}  // namespace

TEST(linalg, eig_hermitian2_examples) {
    auto id = eig_hermitian2(CMat2::identity());
    EXPECT_EQ(id[0], 1);
    EXPECT_EQ(id[1], 1);

    double a = 0.5, f = 0.5;
    auto d = eig_hermitian2(CMat2::diag({a * (1 - a) * 4 * f * f, a * (1 - a) * 4 * f * f}));
    EXPECT_NEAR(d[0], 0.25, 1e-15);
    EXPECT_NEAR(d[1], 0.25, 1e-15);

    auto s1 = eig_hermitian2(CMat2{{0, 1}, {1, 0}});
    EXPECT_NEAR(s1[0], -1, 1e-15);
    EXPECT_NEAR(s1[1], 1, 1e-15);
}

TEST(linalg, eig_hermitian2_rejects_non_hermitian) {
    EXPECT_THROW(eig_hermitian2(CMat2{{0, 1}, {0, 0}}), NotHermitian);
    EXPECT_NO_THROW(eig_hermitian2(CMat2{{0, 1}, {1 + 1e-11, 0}}));
}

TEST(linalg, eig_hermitian2_trace_det) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 10000; k++) {
        CMat2 m = random_hermitian<2>(rng);
        auto e = eig_hermitian2(m);
        ASSERT_LE(e[0], e[1]);
        double tr = m.trace().real();
        double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
        double scale = std::max(1.0, max_abs(m) * max_abs(m));
        ASSERT_NEAR(e[0] + e[1], tr, 1e-12 * scale);
        ASSERT_NEAR(e[0] * e[1], det, 1e-12 * scale);
    }
}

TEST(linalg, min_eigvec_hermitian2) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 1000; k++) {
        CMat2 m = random_hermitian<2>(rng);
        auto v = min_eigvec_hermitian2(m);
        double lo = eig_hermitian2(m)[0];
        ASSERT_NEAR(std::norm(v[0]) + std::norm(v[1]), 1, 1e-12);
        for (size_t r = 0; r < 2; r++) {
            cplx mv = m(r, 0) * v[0] + m(r, 1) * v[1];
            ASSERT_NEAR(std::abs(mv - lo * v[r]), 0, 1e-10);
        }
    }
    auto v = min_eigvec_hermitian2(CMat2::diag({3, -1}));
    EXPECT_NEAR(std::abs(v[1]), 1, 1e-15);
}

TEST(linalg, eig_hermitian4_examples) {
    CMat4 ct;
    ct(0, 0) = 1;
    ct(3, 3) = 1;
    ct(1, 2) = 1;
    ct(2, 1) = 1;
    auto e = eig_hermitian4(ct);
    std::array<double, 4> want{-1, 1, 1, 1};
    for (size_t k = 0; k < 4; k++) {
        EXPECT_NEAR(e[k], want[k], 1e-14);
    }

    CMat4 cc;
    cc(0, 0) = 0.75;
    cc(3, 3) = 0.75;
    cc(1, 1) = 0.25;
    cc(2, 2) = 0.25;
    cc(1, 2) = 0.5;
    cc(2, 1) = 0.5;
    e = eig_hermitian4(cc);
    want = {-0.25, 0.75, 0.75, 0.75};
    for (size_t k = 0; k < 4; k++) {
        EXPECT_NEAR(e[k], want[k], 1e-14);
    }

    e = eig_hermitian4(CMat4::identity());
    for (double v : e) {
        EXPECT_EQ(v, 1);
    }
}

TEST(linalg, eig_hermitian4_trace_det_residual) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10000; k++) {
        CMat4 m = random_hermitian<4>(rng);
        Eigh4 eh = eigh4(m);
        double norm = std::max(1e-300, max_abs(m));
        for (size_t j = 0; j + 1 < 4; j++) {
            ASSERT_LE(eh.values[j], eh.values[j + 1]);
        }
        double sum = 0, prod = 1;
        for (double v : eh.values) {
            sum += v;
            prod *= v;
        }
        double tr = m.trace().real();
        ASSERT_NEAR(sum, tr, 1e-10 * std::max(1.0, std::abs(tr)));
        double det = det_lu(m).real();
        ASSERT_NEAR(prod, det, 1e-10 * std::max(1.0, std::abs(det)));
        for (size_t c = 0; c < 4; c++) {
            for (size_t r = 0; r < 4; r++) {
                cplx mv = 0;
                for (size_t j = 0; j < 4; j++) {
                    mv += m(r, j) * eh.vectors(j, c);
                }
                ASSERT_LE(std::abs(mv - eh.values[c] * eh.vectors(r, c)), 1e-10 * norm);
            }
        }
    }
}

TEST(linalg, eig_hermitian4_degenerate_and_diagonal) {
    EXPECT_NO_THROW(eig_hermitian4(CMat4{}));
    auto e = eig_hermitian4(CMat4::diag({3, -2, 0, 1}));
    EXPECT_EQ(e[0], -2);
    EXPECT_EQ(e[3], 3);
    CMat4 bad;
    bad(0, 1) = 1;
    EXPECT_THROW(eig_hermitian4(bad), NotHermitian);
}

TEST(linalg, is_psd_examples) {
    CMat4 id_choi;
    id_choi(0, 0) = 1;
    id_choi(0, 3) = 1;
    id_choi(3, 0) = 1;
    id_choi(3, 3) = 1;
    EXPECT_TRUE(is_psd(id_choi, 1e-10));

    CMat4 cr;
    cr(1, 1) = 1;
    cr(2, 2) = 1;
    cr(0, 3) = -1;
    cr(3, 0) = -1;
    EXPECT_FALSE(is_psd(cr, 1e-10));
    EXPECT_NEAR(min_eig(cr), -1, 1e-14);

    EXPECT_TRUE(is_psd(CMat4{}, 0));
    EXPECT_TRUE(is_psd(CMat2{}, 0));
    EXPECT_FALSE(is_psd(CMat2::diag({1, -1e-9}), 1e-10));
    EXPECT_TRUE(is_psd(CMat2::diag({1, -1e-11}), 1e-10));
}

TEST(linalg, is_psd_matches_leading_minors) {
    // Random Gram matrices shifted to straddle the PSD boundary.
    std::mt19937_64 rng(4);
    int agree_pos = 0, agree_neg = 0;
    for (int k = 0; k < 5000; k++) {
        CMat4 g = random_matrix<4>(rng);
        CMat4 m = g * g.adjoint() - CMat4::identity() * cplx(uniform(rng, 0, 0.5));
        bool minors = true;
        for (size_t j = 1; j <= 4; j++) {
            minors = minors && leading_minor(m, j) >= -1e-10;
        }
        double lo = min_eig(m);
        if (std::abs(lo) < 1e-6) {
            continue;
        }
        ASSERT_EQ(is_psd(m, 1e-10), minors) << "min eig " << lo;
        (minors ? agree_pos : agree_neg)++;
    }
    EXPECT_GT(agree_pos, 100);
    EXPECT_GT(agree_neg, 100);
}

TEST(linalg, kron_layout) {
    CMat2 a{{1, 2}, {3, 4}};
    CMat2 b{{0, cplx(0, 1)}, {5, 6}};
    CMat4 k = kron(a, b);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t r = 0; r < 2; r++) {
                for (size_t c = 0; c < 2; c++) {
                    EXPECT_EQ(k(2 * i + r, 2 * j + c), a(i, j) * b(r, c));
                }
            }
        }
    }
}

TEST(linalg, partial_transpose) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 1000; k++) {
        CMat4 m = random_matrix<4>(rng);
        ASSERT_EQ(partial_transpose(partial_transpose(m)), m);
        CMat4 h = random_hermitian<4>(rng);
        CMat4 hg = partial_transpose(h);
        ASSERT_EQ(hg.trace(), h.trace());
        ASSERT_EQ(hermitian_defect(hg), 0);
    }
    EXPECT_EQ(partial_transpose(CMat4::identity()), CMat4::identity());

    CMat2 a = random_matrix<2>(rng), b = random_matrix<2>(rng);
    EXPECT_EQ(partial_transpose(kron(a, b)), kron(a, b.transpose()));

    // kappa in the central block moves to the anti-diagonal corners.
    CMat4 blk;
    blk(1, 1) = 0.3;
    blk(2, 2) = 0.4;
    blk(1, 2) = 0.2;
    blk(2, 1) = 0.2;
    CMat4 g = partial_transpose(blk);
    EXPECT_EQ(g(0, 3), cplx(0.2));
    EXPECT_EQ(g(3, 0), cplx(0.2));
    EXPECT_EQ(g(1, 2), cplx(0));
    EXPECT_EQ(g(1, 1), cplx(0.3));
    EXPECT_EQ(g(2, 2), cplx(0.4));
}

TEST(linalg, pinv_diag2) {
    EXPECT_EQ(pinv_diag2(CMat2::diag({2, 0.5})), CMat2::diag({0.5, 2}));
    EXPECT_EQ(pinv_diag2(CMat2::diag({1, 0})), CMat2::diag({1, 0}));
    EXPECT_EQ(pinv_diag2(CMat2::diag({1, 1e-13})), CMat2::diag({1, 0}));
    double A = 0.3 + 0.5, B = 0.6 + 0.1;
    CMat2 p = pinv_diag2(CMat2::diag({A, B}));
    EXPECT_EQ(p(0, 0), 1 / A);
    EXPECT_EQ(p(1, 1), 1 / B);
    EXPECT_THROW(pinv_diag2(CMat2{{1, 0.1}, {0, 1}}), NotDiagonal);
    EXPECT_EQ(sqrt_diag2(CMat2::diag({4, 0.25})), CMat2::diag({2, 0.5}));
}
