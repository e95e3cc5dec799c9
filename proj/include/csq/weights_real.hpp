#pragma once

#include <vector>

#include "csq/grid.hpp"

namespace csq {

// Quadrature weights A_0..A_N for the dominant singular integral
//   J(f,x) = sqrt(1-x^2)/pi * PV int_{-1}^{1} f(t) / (sqrt(1-t^2)(t-x)) dt
// bound to one singular point x in [-1,1]. Sum of the weights is zero;
// the weight vector is identically zero at x = +-1.
struct RealQuadrature {
    double x;
    std::vector<double> weights;
};

// g_k = (arcsin t_{k+1} - arcsin t_k) / (pi h_k); positive, finite.
double g_coeff(const Grid& grid, int k);

// G_k(x) = |(t_k sqrt(1-x^2) - x sqrt(1-t_k^2)) / (sqrt(1-x^2) + sqrt(1-t_k^2))|,
// evaluated cancellation-free; G = 0 iff t = x, G = 1 at t = +-1 and at x = +-1.
double G_value(double t, double x);

// Segment integral J(k,x) = int_{t_k}^{t_{k+1}} dt / (sqrt(1-t^2)(t-x))
//              = ln(G_{k+1}(x) / G_k(x)) / sqrt(1-x^2).
// Throws singular_eval_error when x coincides with t_k or t_{k+1}.
double segment_J(const Grid& grid, int k, double x);

// Weight vector at x. Node coincidence (|x - t_j| <= 1e-14 max(1,|t_j|)) is
// handled by the diagonal closed form; x = +-1 yields all zeros.
RealQuadrature weights_real(const Grid& grid, double x);

} // namespace csq
