#include <algorithm>
#include <cmath>
#include <limits>

#include "kernels_impl.h"
#include "qmap/region_math.h"

namespace qmap::kernels {

UnitalSlice make_unital_slice(double a, double b, double tol) {
    UnitalSlice s;
    s.a = a;
    s.one_minus_a = 1 - a;
    s.b = b;
    s.one_minus_b = 1 - b;
    s.sqrt_ab = std::sqrt(std::max(0.0, s.a * s.b));
    s.sqrt_ab_c = std::sqrt(std::max(0.0, s.one_minus_a * s.one_minus_b));
    s.sqrt_sum = s.sqrt_ab + s.sqrt_ab_c;
    double min_a = std::min(std::min(s.a, s.one_minus_a), std::min(s.one_minus_b, s.b));
    s.valid = min_a >= -tol;
    s.cp_diag_ok = min_a >= -tol;
    return s;
}

namespace scalar {

namespace {

double ratio(double c, double d, double tol) {
    if (d <= 0) {
        return std::abs(c) <= tol ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return c * c / d;
}

}  // namespace

PauliRegionCounts count_pauli_regions(const double *l1, const double *l2, const double *l3, size_t n, double tol) {
    PauliRegionCounts c;
    for (size_t i = 0; i < n; i++) {
        uint8_t code = pauli_region_code(l1[i], l2[i], l3[i], tol);
        c.positive += (code & kRegionPositive) != 0;
        c.schwarz += (code & kRegionSchwarz) != 0;
        c.cp += (code & kRegionCP) != 0;
    }
    return c;
}

void unital_region_codes(double a, double b, const double *lam, const double *mu, uint8_t *out, size_t n,
                         double tol) {
    UnitalSlice s = make_unital_slice(a, b, tol);
    for (size_t i = 0; i < n; i++) {
        double l = lam[i];
        double m = mu[i];
        uint8_t code = 0;
        if (s.cp_diag_ok && s.sqrt_ab - l >= -tol && s.sqrt_ab_c - m >= -tol) {
            code |= kRegionCP;
        }
        if (s.valid) {
            if ((s.sqrt_sum - l) - m >= -tol) {
                code |= kRegionPositive;
            }
            double e1 = 1.0 - (ratio(l, s.a, tol) + ratio(m, s.one_minus_a, tol));
            double e2 = 1.0 - (ratio(l, s.b, tol) + ratio(m, s.one_minus_b, tol));
            if (e1 >= -tol && e2 >= -tol) {
                code |= kRegionSchwarz;
            }
        }
        out[i] = code;
    }
}

}  // namespace scalar
}  // namespace qmap::kernels
