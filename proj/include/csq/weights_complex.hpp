#pragma once

#include <complex>
#include <vector>

#include "csq/grid.hpp"

namespace csq {

using complex = std::complex<double>;

// Quadrature weights B_0..B_N for the off-cut integral
//   Phi(f,z) = -sqrt(z^2-1)/pi * int_{-1}^{1} f(t) / (sqrt(1-t^2)(t-z)) dt,
// z outside [-1,1]. Sum of the weights is one. near_cut flags evaluation
// points closer than 1e-3 to the cut, where accuracy starts to degrade.
struct ComplexQuadrature {
    complex z;
    std::vector<complex> weights;
    bool near_cut = false;
};

// Distance from z to the segment [-1,1].
double cut_distance(complex z);

// Single-valued branch of sqrt(z^2-1) with cut exactly on [-1,1] and
// sqrt(z^2-1) = z + O(1/z) at infinity in every direction. Throws
// branch_error on the cut.
complex sqrt_cut(complex z);

// F_k(z) = [arcsin((z t_{k+1}-1)/(z-t_{k+1})) - arcsin((z t_k-1)/(z-t_k))] / (pi h_k),
// principal arcsin branch (|Re| <= pi/2).
complex F_coeff(const Grid& grid, int k, complex z);

// Weight vector at z (off the cut):
//   B_0 = (t_1-z) F_0 + sqrt(z^2-1) g_0
//   B_k = (t_{k+1}-z) F_k + (z-t_{k-1}) F_{k-1} + sqrt(z^2-1)(g_k - g_{k-1})
//   B_N = (z-t_{N-1}) F_{N-1} - sqrt(z^2-1) g_{N-1}
ComplexQuadrature weights_complex(const Grid& grid, complex z);

// Warning threshold used for ComplexQuadrature::near_cut.
inline constexpr double near_cut_warn_distance = 1e-3;

} // namespace csq
