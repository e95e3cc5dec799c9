#include "csq/weights_complex.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "csq/errors.hpp"
#include "csq/weights_real.hpp"

namespace csq {

namespace {

constexpr double pi = std::numbers::pi;

void check_off_cut(complex z, const char* who) {
    if (cut_distance(z) <= 0.0) {
        std::ostringstream os;
        os << who << ": z = " << z.real() << (z.imag() < 0 ? "-" : "+")
           << std::abs(z.imag()) << "i lies on the cut [-1,1]";
        throw branch_error(os.str());
    }
}

} // namespace

double cut_distance(complex z) {
    if (z.real() < -1.0) return std::abs(z - complex(-1.0, 0.0));
    if (z.real() > 1.0) return std::abs(z - complex(1.0, 0.0));
    return std::abs(z.imag());
}

complex sqrt_cut(complex z) {
    check_off_cut(z, "sqrt_cut");
    // principal square roots: the individual cuts on (-inf,1] and (-inf,-1]
    // cancel outside [-1,1], leaving the cut on [-1,1] and the z + O(1/z)
    // asymptote
    return std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
}

complex F_coeff(const Grid& grid, int k, complex z) {
    check_off_cut(z, "F_coeff");
    const double ta = grid.node(k);
    const double tb = grid.node(k + 1);
    const complex wa = (z * ta - 1.0) / (z - ta);
    const complex wb = (z * tb - 1.0) / (z - tb);
    return (std::asin(wb) - std::asin(wa)) / (pi * grid.step(k));
}

ComplexQuadrature weights_complex(const Grid& grid, complex z) {
    check_off_cut(z, "weights_complex");
    const int n = grid.segments();
    const complex sq = sqrt_cut(z);

    // arcsin((z t - 1)/(z - t)) per node; w(+-1) = +-1 exactly
    std::vector<complex> as(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double t = grid.node(j);
        as[static_cast<size_t>(j)] = std::asin((z * t - 1.0) / (z - t));
    }
    std::vector<complex> f(static_cast<size_t>(n));
    std::vector<double> g(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        f[static_cast<size_t>(k)] =
            (as[static_cast<size_t>(k) + 1] - as[static_cast<size_t>(k)]) /
            (pi * grid.step(k));
        g[static_cast<size_t>(k)] = g_coeff(grid, k);
    }

    std::vector<complex> b(static_cast<size_t>(n) + 1);
    b[0] = (grid.node(1) - z) * f[0] + sq * g[0];
    for (int k = 1; k < n; ++k)
        b[static_cast<size_t>(k)] =
            (grid.node(k + 1) - z) * f[static_cast<size_t>(k)] +
            (z - grid.node(k - 1)) * f[static_cast<size_t>(k) - 1] +
            sq * (g[static_cast<size_t>(k)] - g[static_cast<size_t>(k) - 1]);
    b[static_cast<size_t>(n)] = (z - grid.node(n - 1)) * f[static_cast<size_t>(n) - 1] -
                                sq * g[static_cast<size_t>(n) - 1];

    ComplexQuadrature q{z, std::move(b), cut_distance(z) < near_cut_warn_distance};
    return q;
}

} // namespace csq
