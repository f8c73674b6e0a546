#pragma once

// Per-ISA kernel entry points. Raw pointers keep the target-specific
// translation units free of inline library code shared with other units.

#include <cstddef>
#include <cstdint>

#include "qmap/kernels.h"

namespace qmap::kernels {

namespace scalar {
PauliRegionCounts count_pauli_regions(const double *l1, const double *l2, const double *l3, size_t n, double tol);
void unital_region_codes(double a, double b, const double *lam, const double *mu, uint8_t *out, size_t n,
                         double tol);
}  // namespace scalar

#if defined(QMAP_HAVE_AVX2)
namespace avx2 {
PauliRegionCounts count_pauli_regions(const double *l1, const double *l2, const double *l3, size_t n, double tol);
void unital_region_codes(double a, double b, const double *lam, const double *mu, uint8_t *out, size_t n,
                         double tol);
}  // namespace avx2
#endif

/// Constants of a unital (a, b) slice, computed exactly as the classifiers do.
struct UnitalSlice {
    double a, one_minus_a, b, one_minus_b;
    double sqrt_ab;      // sqrt(max(0, a b))
    double sqrt_ab_c;    // sqrt(max(0, (1-a)(1-b)))
    double sqrt_sum;     // sqrt_ab + sqrt_ab_c
    bool valid;          // min a_ij >= -tol
    bool cp_diag_ok;     // min a_ij >= -tol, as a CP margin term
};

UnitalSlice make_unital_slice(double a, double b, double tol);

}  // namespace qmap::kernels
