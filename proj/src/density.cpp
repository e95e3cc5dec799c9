#include "csq/density.hpp"

#include <cmath>
#include <stdexcept>

#include "csq/errors.hpp"

namespace csq {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0))
        throw std::invalid_argument(std::string("FunctionClassSpec: ") + name +
                                    " must be positive");
}

void require_alpha(double a) {
    if (!(a > 0.0 && a <= 1.0))
        throw std::invalid_argument("FunctionClassSpec: alpha must lie in (0,1]");
}

} // namespace

FunctionClassSpec FunctionClassSpec::holder(double alpha, double K) {
    require_alpha(alpha);
    require_positive(K, "K");
    FunctionClassSpec s;
    s.tag = ClassTag::holder;
    s.alpha = alpha;
    s.K = K;
    return s;
}

FunctionClassSpec FunctionClassSpec::w1(double M1) {
    require_positive(M1, "M1");
    FunctionClassSpec s;
    s.tag = ClassTag::w1;
    s.M1 = M1;
    return s;
}

FunctionClassSpec FunctionClassSpec::c1alpha_piecewise(double alpha, double K1) {
    require_alpha(alpha);
    require_positive(K1, "K1");
    FunctionClassSpec s;
    s.tag = ClassTag::c1alpha_piecewise;
    s.alpha = alpha;
    s.K1 = K1;
    return s;
}

FunctionClassSpec FunctionClassSpec::w2_piecewise(double M2) {
    require_positive(M2, "M2");
    FunctionClassSpec s;
    s.tag = ClassTag::w2_piecewise;
    s.M2 = M2;
    return s;
}

const char* to_string(ClassTag tag) {
    switch (tag) {
    case ClassTag::holder: return "holder";
    case ClassTag::w1: return "w1";
    case ClassTag::c1alpha_piecewise: return "c1alpha";
    case ClassTag::w2_piecewise: return "w2";
    }
    return "?";
}

const std::vector<DensityFunction>& builtin_densities() {
    static const std::vector<DensityFunction> corpus = {
        {"const1", [](double) { return 1.0; }, FunctionClassSpec::w1(1.0)},
        {"linear", [](double t) { return t; }, FunctionClassSpec::w1(1.0)},
        {"cheb2", [](double t) { return 2.0 * t * t - 1.0; },
         FunctionClassSpec::w2_piecewise(4.0)},
        {"expn", [](double t) { return std::exp(t); },
         FunctionClassSpec::w2_piecewise(std::exp(1.0))},
        {"holder-sqrt", [](double t) { return std::sqrt(std::abs(t)); },
         FunctionClassSpec::holder(0.5, 1.0), {0.0}},
        {"cusp32",
         [](double t) { return (2.0 / 3.0) * std::abs(t) * std::sqrt(std::abs(t)); },
         FunctionClassSpec::c1alpha_piecewise(0.5, 1.0), {0.0}},
        {"kink", [](double t) { return t * std::abs(t); },
         FunctionClassSpec::w2_piecewise(2.0), {0.0}},
    };
    return corpus;
}

const DensityFunction* find_density(std::string_view label) {
    for (const auto& d : builtin_densities())
        if (d.label == label) return &d;
    return nullptr;
}

const DensityFunction& density_by_label(std::string_view label) {
    const DensityFunction* d = find_density(label);
    if (!d)
        throw domain_error("unknown density '" + std::string(label) + "'");
    return *d;
}

std::vector<double> sample_nodes(const DensityFunction& density, const Grid& grid) {
    std::vector<double> values(static_cast<size_t>(grid.node_count()));
    for (int k = 0; k < grid.node_count(); ++k)
        values[static_cast<size_t>(k)] = density(grid.node(k));
    return values;
}

} // namespace csq
