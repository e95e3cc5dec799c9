#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "csq/density.hpp"
#include "csq/grid.hpp"
#include "csq/weights_complex.hpp"

namespace csq {

// Reference evaluation of J(f,x) and Phi(f,z) by adaptive quadrature,
// independent of the closed-form weights it is used to validate.
//
// The substitution t = cos(theta) removes the endpoint weight 1/sqrt(1-t^2):
//   J(f,x)   = sqrt(1-x^2)/pi * int_0^pi (f(cos th) - f(x)) / (cos th - x) dth
//   Phi(f,z) = -sqrt(z^2-1)/pi * int_0^pi f(cos th) / (cos th - z) dth
// The subtracted f(x) term integrates to zero, so the first integrand is
// proper whenever f is Holder at x.

struct OracleConfig {
    double tolerance = 1e-10;      // target absolute error
    int max_refinement_depth = 48; // at most 60
};

// J(f,x). Returns exactly 0 at x = +-1; throws domain_error for |x| > 1 and
// convergence_error when the tolerance is not reached at max depth.
// For holder-class densities the tolerance is floored at 1e-8 (the integrand
// is only C^0 at the kink).
double pv_oracle(const DensityFunction& density, double x, OracleConfig config = {});

// Phi(f,z); throws branch_error on the cut.
complex offcut_oracle(const DensityFunction& density, complex z, OracleConfig config = {});

// The k-th nodal hat function on the grid, as an integrable density
// (kinks at its support nodes).
DensityFunction hat_density(const Grid& grid, int k);

// Exact k-th quadrature weight by definition: the oracle applied to the
// k-th hat function.
double hat_oracle(const Grid& grid, int k, double x, OracleConfig config = {});
complex hat_oracle(const Grid& grid, int k, complex z, OracleConfig config = {});

namespace detail {

// Globally adaptive Gauss7/Kronrod15 over the panels delimited by
// `breakpoints` (sorted, at least {a,b}). Splits the worst panel until the
// summed error estimate falls under tol or every offender is at max_depth.
struct AdaptiveOutcome {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};
struct AdaptiveOutcomeC {
    complex value{0.0, 0.0};
    double error = 0.0;
    bool converged = false;
};

AdaptiveOutcome integrate(const std::function<double(double)>& f,
                          std::span<const double> breakpoints, double tol,
                          int max_depth);
AdaptiveOutcomeC integrate(const std::function<complex(double)>& f,
                           std::span<const double> breakpoints, double tol,
                           int max_depth);

} // namespace detail

} // namespace csq
