#pragma once

#include <map>
#include <span>
#include <utility>

#include "csq/density.hpp"
#include "csq/grid.hpp"
#include "csq/weights_complex.hpp"
#include "csq/weights_real.hpp"

namespace csq {

// Weighted sums over node samples; samples.size() must be N+1.
double apply_quadrature(const RealQuadrature& rule, std::span<const double> samples);
complex apply_quadrature(const ComplexQuadrature& rule, std::span<const double> samples);

// J(f,x) ~ sum_k A_k(x) f(t_k); exactly 0 at x = +-1.
double eval_singular(const Grid& grid, const DensityFunction& density, double x);

// Phi(f,z) ~ sum_k B_k(z) f(t_k); throws branch_error on the cut.
complex eval_offcut(const Grid& grid, const DensityFunction& density, complex z);

// Weight vectors keyed by evaluation point, so repeated densities at the same
// point reuse the O(N) transcendental assembly. Not internally synchronized:
// share per worker, or only across concurrent readers after warm-up.
class WeightCache {
public:
    explicit WeightCache(const Grid& grid) : grid_(&grid) {}

    const RealQuadrature& at(double x);
    const ComplexQuadrature& at(complex z);

    double eval(const DensityFunction& density, double x);
    complex eval(const DensityFunction& density, complex z);

    const Grid& grid() const { return *grid_; }
    size_t size() const { return real_.size() + complex_.size(); }

private:
    const Grid* grid_;
    std::map<double, RealQuadrature> real_;
    std::map<std::pair<double, double>, ComplexQuadrature> complex_;
};

} // namespace csq
