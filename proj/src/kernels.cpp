#include "qmap/kernels.h"

#include <cstdlib>
#include <string>

#include "kernels_impl.h"
#include "qmap/errors.h"

namespace qmap::kernels {

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(QMAP_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa best_isa() {
    const char *force = std::getenv("QMAP_FORCE_SCALAR");
    if (force != nullptr && std::string(force) != "0" && std::string(force) != "") {
        return Isa::Scalar;
    }
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

namespace {

void require(Isa isa) {
    if (!isa_available(isa)) {
        throw InvalidParams("kernel variant '" + std::string(to_string(isa)) + "' is not available on this machine");
    }
}

}  // namespace

PauliRegionCounts count_pauli_regions(std::span<const double> l1, std::span<const double> l2,
                                      std::span<const double> l3, double tol, Isa isa) {
    if (l1.size() != l2.size() || l1.size() != l3.size()) {
        throw InvalidParams("count_pauli_regions: span lengths differ");
    }
    require(isa);
#if defined(QMAP_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        return avx2::count_pauli_regions(l1.data(), l2.data(), l3.data(), l1.size(), tol);
    }
#endif
    return scalar::count_pauli_regions(l1.data(), l2.data(), l3.data(), l1.size(), tol);
}

PauliRegionCounts count_pauli_regions(std::span<const double> l1, std::span<const double> l2,
                                      std::span<const double> l3, double tol) {
    return count_pauli_regions(l1, l2, l3, tol, best_isa());
}

void unital_region_codes(double a, double b, std::span<const double> lam, std::span<const double> mu,
                         std::span<uint8_t> out, double tol, Isa isa) {
    if (lam.size() != mu.size() || lam.size() != out.size()) {
        throw InvalidParams("unital_region_codes: span lengths differ");
    }
    require(isa);
#if defined(QMAP_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        avx2::unital_region_codes(a, b, lam.data(), mu.data(), out.data(), lam.size(), tol);
        return;
    }
#endif
    scalar::unital_region_codes(a, b, lam.data(), mu.data(), out.data(), lam.size(), tol);
}

void unital_region_codes(double a, double b, std::span<const double> lam, std::span<const double> mu,
                         std::span<uint8_t> out, double tol) {
    unital_region_codes(a, b, lam, mu, out, tol, best_isa());
}

}  // namespace qmap::kernels
