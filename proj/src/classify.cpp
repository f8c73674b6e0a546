#include "qmap/classify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qmap/errors.h"

namespace qmap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_sqrt(double v) {
    return std::sqrt(std::max(0.0, v));
}

void require_unital(const MapParams &p, const char *who) {
    if (!is_unital(p)) {
        throw NotUnital(std::string(who) + ": map is not unital");
    }
}

bool has_negative_a(const MapParams &p) {
    return p.min_a() < -kSlackTol;
}

/// min(rhs1 - (l^2/d1 + m^2/d2), rhs2 - (l^2/d3 + m^2/d4))
double ellipse_pair_margin(double l, double m, double d1, double d2, double rhs1, double d3, double d4,
                           double rhs2) {
    double s1 = rhs1 - (ellipse_ratio(l, d1) + ellipse_ratio(m, d2));
    double s2 = rhs2 - (ellipse_ratio(l, d3) + ellipse_ratio(m, d4));
    return std::min(s1, s2);
}

Verdict from_margin(double margin) {
    return Verdict{margin >= -kSlackTol, margin};
}

}  // namespace

double ellipse_ratio(double c, double d) {
    if (d <= 0) {
        return std::abs(c) <= kSlackTol ? 0.0 : kInf;
    }
    return c * c / d;
}

Verdict is_completely_positive(const MapParams &p) {
    double l = std::abs(p.lambda);
    double m = std::abs(p.mu);
    double margin = std::min({safe_sqrt(p.a11 * p.a22) - l, safe_sqrt(p.a12 * p.a21) - m, p.min_a()});
    return from_margin(margin);
}

Verdict is_positive(const MapParams &p) {
    if (has_negative_a(p)) {
        return Verdict{false, p.min_a()};
    }
    double slack = safe_sqrt(p.a11 * p.a22) + safe_sqrt(p.a12 * p.a21) - std::abs(p.lambda) - std::abs(p.mu);
    return from_margin(slack);
}

Verdict is_schwarz_unital(const MapParams &p) {
    require_unital(p, "is_schwarz_unital");
    if (has_negative_a(p)) {
        return Verdict{false, p.min_a()};
    }
    double l = std::abs(p.lambda);
    double m = std::abs(p.mu);
    // a = a11, 1 - a = a12, b = a22, 1 - b = a21
    return from_margin(ellipse_pair_margin(l, m, p.a11, p.a12, 1.0, p.a22, p.a21, 1.0));
}

bool is_schwarz_phase_covariant(const MapParams &p) {
    require_unital(p, "is_schwarz_phase_covariant");
    if (has_negative_a(p)) {
        return false;
    }
    double l = std::abs(p.lambda);
    double m = std::abs(p.mu);
    if (m <= kSlackTol) {
        return l <= std::min(safe_sqrt(p.a11), safe_sqrt(p.a22)) + kSlackTol;
    }
    if (l <= kSlackTol) {
        return m <= std::min(safe_sqrt(p.a12), safe_sqrt(p.a21)) + kSlackTol;
    }
    throw WrongSymmetry("is_schwarz_phase_covariant: neither lambda nor mu vanishes");
}

Verdict is_generalized_schwarz(const MapParams &p) {
    if (has_negative_a(p)) {
        throw InvalidParams("is_generalized_schwarz: a_ij must be non-negative");
    }
    double a = p.a11, ap = p.a12, bp = p.a21, b = p.a22;
    double l = std::abs(p.lambda);
    double m = std::abs(p.mu);
    return from_margin(ellipse_pair_margin(l, m, a, ap, b + bp, b, bp, a + ap));
}

Verdict is_dual_generalized_schwarz(const MapParams &p) {
    if (has_negative_a(p)) {
        throw InvalidParams("is_dual_generalized_schwarz: a_ij must be non-negative");
    }
    double a = p.a11, ap = p.a12, bp = p.a21, b = p.a22;
    double l = std::abs(p.lambda);
    double m = std::abs(p.mu);
    return from_margin(ellipse_pair_margin(l, m, a, bp, b + ap, b, ap, a + bp));
}

DualityReport check_duality_relations(const MapParams &p) {
    DualityReport r;
    r.schwarz = is_generalized_schwarz(p).holds;
    r.dual_schwarz = is_dual_generalized_schwarz(p).holds;
    double ap = p.a12, bp = p.a21;
    if (std::abs(ap - bp) <= kSlackTol) {
        r.relation = DualityReport::Case::Equal;
        r.violated = r.schwarz != r.dual_schwarz;
    } else if (ap > bp) {
        r.relation = DualityReport::Case::APrimeGreater;
        r.violated = r.schwarz && !r.dual_schwarz;
    } else {
        r.relation = DualityReport::Case::APrimeSmaller;
        r.violated = r.dual_schwarz && !r.schwarz;
    }
    if (r.violated) {
        std::ostringstream os;
        os.precision(17);
        os << "a=" << p.a11 << " a'=" << p.a12 << " b'=" << p.a21 << " b=" << p.a22 << " |lambda|=" << std::abs(p.lambda)
           << " |mu|=" << std::abs(p.mu) << " gs=" << r.schwarz << " gs_dual=" << r.dual_schwarz;
        r.detail = os.str();
    }
    return r;
}

bool schwarz_necessary_bounds(const MapParams &p) {
    require_unital(p, "schwarz_necessary_bounds");
    double l = std::abs(p.lambda);
    double m = std::abs(p.mu);
    return l <= std::min(safe_sqrt(p.a11), safe_sqrt(p.a22)) + kSlackTol &&
           m <= std::min(safe_sqrt(p.a12), safe_sqrt(p.a21)) + kSlackTol;
}

MapParams abs_reduction(const MapParams &p) {
    MapParams r = p;
    r.lambda = std::abs(p.lambda);
    r.mu = std::abs(p.mu);
    return r;
}

MapParams ks_phi_minus(double alpha1, double alpha2) {
    double den = alpha1 + alpha2 - 1;
    if (den == 0) {
        throw DegenerateDenominator("ks_phi_minus: alpha1 + alpha2 must differ from 1");
    }
    return MapParams{(alpha1 - 1) / den, alpha2 / den, alpha1 / den, (alpha2 - 1) / den, -1 / den, 0.0};
}

MapParams ks_psi_plus(double alpha1, double alpha2) {
    double den = alpha1 + alpha2 + 1;
    if (!(den > 0)) {
        throw DegenerateDenominator("ks_psi_plus: alpha1 + alpha2 must exceed -1");
    }
    return MapParams{(alpha1 + 1) / den, alpha2 / den, alpha1 / den, (alpha2 + 1) / den, 0.0, 1 / den};
}

bool ks_phi_minus_condition(double alpha1, double alpha2) {
    if (alpha1 == 0 || alpha2 == 0) {
        return false;
    }
    double tr = alpha1 + alpha2;
    double inv_norm = std::max(std::abs(1 / alpha1), std::abs(1 / alpha2));
    return inv_norm <= (tr - 1) / tr;
}

bool ks_psi_plus_condition(double alpha1, double alpha2) {
    return std::min(alpha1, alpha2) >= 1 / (alpha1 + alpha2 + 1);
}

Classification classify(const MapParams &p) {
    Classification c;
    c.unital = is_unital(p);
    Verdict cp = is_completely_positive(p);
    Verdict pos = is_positive(p);
    Verdict sch;
    if (c.unital) {
        sch = is_schwarz_unital(p);
    } else if (has_negative_a(p)) {
        sch = Verdict{false, p.min_a()};
    } else {
        sch = is_generalized_schwarz(p);
    }
    c.positive = pos.holds;
    c.schwarz = sch.holds;
    c.completely_positive = cp.holds;
    c.margins = Margins{pos.margin, sch.margin, cp.margin};
    return c;
}

}  // namespace qmap
