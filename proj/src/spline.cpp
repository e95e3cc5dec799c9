#include "csq/spline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "csq/errors.hpp"

namespace csq {

double spline_eval(const Grid& grid, std::span<const double> samples, double t) {
    if (static_cast<int>(samples.size()) != grid.node_count())
        throw std::invalid_argument("spline_eval: expected " +
                                    std::to_string(grid.node_count()) +
                                    " samples, got " + std::to_string(samples.size()));
    const int k = grid.segment_of(t); // throws domain_error outside [-1,1]
    const double tk = grid.node(k);
    const double tk1 = grid.node(k + 1);
    const double h = grid.step(k);
    return ((tk1 - t) * samples[static_cast<size_t>(k)] +
            (t - tk) * samples[static_cast<size_t>(k) + 1]) / h;
}

double spline_error_bound(const FunctionClassSpec& cls, double h) {
    switch (cls.tag) {
    case ClassTag::holder:
        return cls.K * std::pow(0.5 * h, cls.alpha);
    case ClassTag::w1:
        return 0.5 * cls.M1 * h;
    case ClassTag::c1alpha_piecewise:
        return 0.25 * cls.K1 * std::pow(h, 1.0 + cls.alpha);
    case ClassTag::w2_piecewise:
        return 0.125 * cls.M2 * h * h;
    }
    return 0.0;
}

HolderModulus spline_error_modulus(const FunctionClassSpec& cls, double h) {
    switch (cls.tag) {
    case ClassTag::holder:
        return {cls.alpha, std::pow(2.0, 2.0 - cls.alpha) * cls.K};
    case ClassTag::w1:
        return {1.0, 2.0 * cls.M1};
    case ClassTag::c1alpha_piecewise:
        return {1.0, cls.K1 * std::pow(h, cls.alpha)};
    case ClassTag::w2_piecewise:
        return {1.0, cls.M2 * h};
    }
    return {1.0, 0.0};
}

} // namespace csq
