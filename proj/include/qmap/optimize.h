#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qmap {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int evaluations = 0;
};

/// Derivative-free simplex minimization. The initial simplex is x0 plus
/// `step` along each axis. Stops after `max_evals` objective calls or when the
/// spread of simplex values falls below `ftol`.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)> &f, std::vector<double> x0,
                             double step, int max_evals, double ftol = 1e-15);

}  // namespace qmap
