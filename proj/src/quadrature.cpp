#include "csq/quadrature.hpp"

#include <stdexcept>
#include <string>

namespace csq {

namespace {

void check_sizes(size_t weights, size_t samples) {
    if (weights != samples)
        throw std::invalid_argument("apply_quadrature: " + std::to_string(weights) +
                                    " weights vs " + std::to_string(samples) +
                                    " samples");
}

} // namespace

double apply_quadrature(const RealQuadrature& rule, std::span<const double> samples) {
    check_sizes(rule.weights.size(), samples.size());
    double acc = 0.0;
    for (size_t k = 0; k < samples.size(); ++k) acc += rule.weights[k] * samples[k];
    return acc;
}

complex apply_quadrature(const ComplexQuadrature& rule, std::span<const double> samples) {
    check_sizes(rule.weights.size(), samples.size());
    complex acc{0.0, 0.0};
    for (size_t k = 0; k < samples.size(); ++k) acc += rule.weights[k] * samples[k];
    return acc;
}

double eval_singular(const Grid& grid, const DensityFunction& density, double x) {
    if (std::abs(x) == 1.0) return 0.0;
    return apply_quadrature(weights_real(grid, x), sample_nodes(density, grid));
}

complex eval_offcut(const Grid& grid, const DensityFunction& density, complex z) {
    return apply_quadrature(weights_complex(grid, z), sample_nodes(density, grid));
}

const RealQuadrature& WeightCache::at(double x) {
    auto it = real_.find(x);
    if (it == real_.end())
        it = real_.emplace(x, weights_real(*grid_, x)).first;
    return it->second;
}

const ComplexQuadrature& WeightCache::at(complex z) {
    const std::pair<double, double> key{z.real(), z.imag()};
    auto it = complex_.find(key);
    if (it == complex_.end())
        it = complex_.emplace(key, weights_complex(*grid_, z)).first;
    return it->second;
}

double WeightCache::eval(const DensityFunction& density, double x) {
    if (std::abs(x) == 1.0) return 0.0;
    return apply_quadrature(at(x), sample_nodes(density, *grid_));
}

complex WeightCache::eval(const DensityFunction& density, complex z) {
    return apply_quadrature(at(z), sample_nodes(density, *grid_));
}

} // namespace csq
