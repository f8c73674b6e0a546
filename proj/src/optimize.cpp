#include "qmap/optimize.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmap {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)> &f, std::vector<double> x0,
                             double step, int max_evals, double ftol) {
    const size_t dim = x0.size();
    int evals = 0;
    auto eval = [&](const std::vector<double> &x) {
        evals++;
        return f(x);
    };

    std::vector<std::vector<double>> pts(dim + 1, x0);
    std::vector<double> vals(dim + 1);
    for (size_t k = 0; k < dim; k++) {
        pts[k + 1][k] += step;
    }
    for (size_t k = 0; k <= dim && evals < max_evals; k++) {
        vals[k] = eval(pts[k]);
    }
    if (evals < static_cast<int>(dim + 1)) {
        return {pts[0], vals[0], evals};
    }

    std::vector<size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    auto lerp = [&](const std::vector<double> &from, const std::vector<double> &to, double t,
                    std::vector<double> &out) {
        for (size_t k = 0; k < dim; k++) {
            out[k] = from[k] + t * (to[k] - from[k]);
        }
    };

    while (evals < max_evals) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return vals[x] < vals[y]; });
        size_t best = order.front();
        size_t worst = order.back();
        size_t second = order[dim - 1];
        if (vals[worst] - vals[best] <= ftol) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t k = 0; k <= dim; k++) {
            if (k == worst) {
                continue;
            }
            for (size_t d = 0; d < dim; d++) {
                centroid[d] += pts[k][d] / static_cast<double>(dim);
            }
        }

        // reflection
        lerp(centroid, pts[worst], -1.0, trial);
        double fr = eval(trial);
        if (fr < vals[best]) {
            if (evals >= max_evals) {
                pts[worst] = trial;
                vals[worst] = fr;
                break;
            }
            lerp(centroid, pts[worst], -2.0, trial2);
            double fe = eval(trial2);
            if (fe < fr) {
                pts[worst] = trial2;
                vals[worst] = fe;
            } else {
                pts[worst] = trial;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = trial;
            vals[worst] = fr;
            continue;
        }
        if (evals >= max_evals) {
            break;
        }
        // contraction, outside or inside
        bool outside = fr < vals[worst];
        lerp(centroid, outside ? trial : pts[worst], 0.5, trial2);
        double fc = eval(trial2);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = trial2;
            vals[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        for (size_t k = 0; k <= dim && evals < max_evals; k++) {
            if (k == best) {
                continue;
            }
            lerp(pts[best], pts[k], 0.5, pts[k]);
            vals[k] = eval(pts[k]);
        }
    }

    size_t best = static_cast<size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], evals};
}

}  // namespace qmap
