#pragma once

#include <span>

#include "csq/density.hpp"
#include "csq/grid.hpp"

namespace csq {

// Linear interpolant of the node samples at t:
//   S_N(t) = [(t_{k+1}-t) f(t_k) + (t-t_k) f(t_{k+1})] / h_k,  t in [t_k,t_{k+1}].
// Exact at nodes. samples.size() must equal grid.node_count(); throws
// domain_error for t outside [-1,1].
double spline_eval(const Grid& grid, std::span<const double> samples, double t);

// Sup-norm bound on the interpolation error over a segment of length h:
//   holder            K (h/2)^alpha
//   w1                M1 h / 2
//   c1alpha_piecewise K1 h^(1+alpha) / 4
//   w2_piecewise      M2 h^2 / 8
double spline_error_bound(const FunctionClassSpec& cls, double h);

// Holder modulus of the interpolation error r_N = S_N - f:
// |r_N(t) - r_N(t')| <= constant * |t-t'|^alpha.
struct HolderModulus {
    double alpha;
    double constant;
};

// w1 -> (1, 2 M1); c1alpha_piecewise -> (1, K1 h^alpha); w2_piecewise -> (1, M2 h);
// holder -> (alpha, 2^(2-alpha) K).
HolderModulus spline_error_modulus(const FunctionClassSpec& cls, double h);

} // namespace csq
