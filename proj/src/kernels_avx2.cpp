// AVX2 variants of the batch kernels. Each function carries its own target
// attribute so no AVX2 code leaks into inline functions shared with the rest
// of the library; dispatch happens in kernels.cpp after a CPU check.

#include <immintrin.h>

#include <bit>
#include <cstring>
#include <limits>

#include "kernels_impl.h"

namespace qmap::kernels::avx2 {

namespace {

#define QMAP_AVX2 __attribute__((target("avx2")))

QMAP_AVX2 inline __m256d vabs(__m256d x) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

QMAP_AVX2 inline __m256d vmax(__m256d x, __m256d y) {
    // std::max(x, y) returns x unless x < y.
    return _mm256_blendv_pd(x, y, _mm256_cmp_pd(x, y, _CMP_LT_OQ));
}

QMAP_AVX2 inline __m256d vmin(__m256d x, __m256d y) {
    // std::min(x, y) returns x unless y < x.
    return _mm256_blendv_pd(x, y, _mm256_cmp_pd(y, x, _CMP_LT_OQ));
}

QMAP_AVX2 inline __m256d ge(__m256d x, __m256d bound) {
    return _mm256_cmp_pd(x, bound, _CMP_GE_OQ);
}

/// c^2 / d with the vanishing-semi-axis convention; d is uniform across lanes.
QMAP_AVX2 inline __m256d vratio(__m256d c, double d, double tol) {
    if (d <= 0) {
        __m256d small = _mm256_cmp_pd(vabs(c), _mm256_set1_pd(tol), _CMP_LE_OQ);
        return _mm256_blendv_pd(_mm256_set1_pd(std::numeric_limits<double>::infinity()), _mm256_setzero_pd(), small);
    }
    return _mm256_div_pd(_mm256_mul_pd(c, c), _mm256_set1_pd(d));
}

}  // namespace

QMAP_AVX2 PauliRegionCounts count_pauli_regions(const double *l1, const double *l2, const double *l3, size_t n,
                                                double tol) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d ntol = _mm256_set1_pd(-tol);
    PauliRegionCounts c;
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(l1 + i);
        __m256d y = _mm256_loadu_pd(l2 + i);
        __m256d z = _mm256_loadu_pd(l3 + i);
        __m256d sum = _mm256_add_pd(x, y);
        __m256d diff = _mm256_sub_pd(x, y);
        __m256d lo = _mm256_sub_pd(one, z);
        __m256d hi = _mm256_add_pd(one, z);

        __m256d pos_slack = _mm256_sub_pd(one, vmax(vmax(vabs(x), vabs(y)), vabs(z)));
        __m256d cp_slack = vmin(_mm256_sub_pd(hi, vabs(sum)), _mm256_sub_pd(lo, vabs(diff)));
        __m256d lhs = _mm256_add_pd(_mm256_mul_pd(lo, _mm256_mul_pd(sum, sum)),
                                    _mm256_mul_pd(hi, _mm256_mul_pd(diff, diff)));
        __m256d fas_slack = _mm256_sub_pd(_mm256_mul_pd(two, _mm256_mul_pd(lo, hi)), lhs);

        __m256d pos = ge(pos_slack, ntol);
        __m256d sch = _mm256_and_pd(pos, ge(fas_slack, ntol));
        __m256d cp = ge(cp_slack, ntol);
        c.positive += std::popcount(static_cast<unsigned>(_mm256_movemask_pd(pos)));
        c.schwarz += std::popcount(static_cast<unsigned>(_mm256_movemask_pd(sch)));
        c.cp += std::popcount(static_cast<unsigned>(_mm256_movemask_pd(cp)));
    }
    c += scalar::count_pauli_regions(l1 + i, l2 + i, l3 + i, n - i, tol);
    return c;
}

QMAP_AVX2 void unital_region_codes(double a, double b, const double *lam, const double *mu, uint8_t *out, size_t n,
                                   double tol) {
    UnitalSlice s = make_unital_slice(a, b, tol);
    const __m256d ntol = _mm256_set1_pd(-tol);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d sqrt_ab = _mm256_set1_pd(s.sqrt_ab);
    const __m256d sqrt_ab_c = _mm256_set1_pd(s.sqrt_ab_c);
    const __m256d sqrt_sum = _mm256_set1_pd(s.sqrt_sum);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d l = _mm256_loadu_pd(lam + i);
        __m256d m = _mm256_loadu_pd(mu + i);
        int cp = 0, pos = 0, sch = 0;
        if (s.cp_diag_ok) {
            cp = _mm256_movemask_pd(
                _mm256_and_pd(ge(_mm256_sub_pd(sqrt_ab, l), ntol), ge(_mm256_sub_pd(sqrt_ab_c, m), ntol)));
        }
        if (s.valid) {
            pos = _mm256_movemask_pd(ge(_mm256_sub_pd(_mm256_sub_pd(sqrt_sum, l), m), ntol));
            __m256d e1 = _mm256_sub_pd(one, _mm256_add_pd(vratio(l, s.a, tol), vratio(m, s.one_minus_a, tol)));
            __m256d e2 = _mm256_sub_pd(one, _mm256_add_pd(vratio(l, s.b, tol), vratio(m, s.one_minus_b, tol)));
            sch = _mm256_movemask_pd(_mm256_and_pd(ge(e1, ntol), ge(e2, ntol)));
        }
        for (int k = 0; k < 4; k++) {
            uint8_t code = 0;
            code |= (pos >> k & 1) ? 1 : 0;
            code |= (sch >> k & 1) ? 2 : 0;
            code |= (cp >> k & 1) ? 4 : 0;
            out[i + k] = code;
        }
    }
    scalar::unital_region_codes(a, b, lam + i, mu + i, out + i, n - i, tol);
}

}  // namespace qmap::kernels::avx2
