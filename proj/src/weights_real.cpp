#include "csq/weights_real.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "csq/errors.hpp"

namespace csq {

namespace {

constexpr double pi = std::numbers::pi;

// sqrt(1-u^2) without cancellation near |u| = 1
double chord(double u) { return std::sqrt((1.0 - u) * (1.0 + u)); }

bool at_node(double x, double t) {
    return std::abs(x - t) <= 1e-14 * std::max(1.0, std::abs(t));
}

void check_x_range(double x, const char* who) {
    if (std::isnan(x) || x < -1.0 || x > 1.0)
        throw domain_error(std::string(who) + ": x = " + std::to_string(x) +
                           " outside [-1,1]");
}

} // namespace

double g_coeff(const Grid& grid, int k) {
    return (std::asin(grid.node(k + 1)) - std::asin(grid.node(k))) /
           (pi * grid.step(k));
}

double G_value(double t, double x) {
    if (std::abs(x) == 1.0) return 1.0;
    const double sx = chord(x);
    const double st = chord(t);
    if (t * x > 0.0) {
        // conjugate form: |t^2 - x^2| / ((sx+st) |t sx + x st|); the plain
        // numerator t*sx - x*st cancels when t ~ x
        const double denom = (sx + st) * std::abs(t * sx + x * st);
        return std::abs((t - x) * (t + x)) / denom;
    }
    return std::abs(t * sx - x * st) / (sx + st);
}

double segment_J(const Grid& grid, int k, double x) {
    check_x_range(x, "segment_J");
    if (std::abs(x) == 1.0)
        throw domain_error("segment_J: x must lie strictly inside (-1,1)");
    if (at_node(x, grid.node(k)) || at_node(x, grid.node(k + 1)))
        throw singular_eval_error("segment_J: x coincides with a segment endpoint");
    return std::log(G_value(grid.node(k + 1), x) / G_value(grid.node(k), x)) / chord(x);
}

RealQuadrature weights_real(const Grid& grid, double x) {
    check_x_range(x, "weights_real");
    const int n = grid.segments();
    std::vector<double> a(static_cast<size_t>(n) + 1, 0.0);
    if (std::abs(x) == 1.0) return {x, std::move(a)}; // A_k(+-1) = 0

    const double sx = chord(x);

    // ln G_j(x); exactly 0 at the endpoints and at a node coinciding with x
    // (every occurrence of that log carries a coefficient vanishing at t_j,
    // so dropping it realizes the 0 * log limit and the diagonal closed form).
    std::vector<double> ln_g(static_cast<size_t>(n) + 1, 0.0);
    for (int j = 1; j < n; ++j) {
        const double tj = grid.node(j);
        if (at_node(x, tj)) continue;
        ln_g[static_cast<size_t>(j)] = std::log(G_value(tj, x));
    }

    std::vector<double> g(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) g[static_cast<size_t>(k)] = g_coeff(grid, k);

    // A_0 and A_N carry one log each (G_0 = G_N = 1 drops the other)
    a[0] = (grid.node(1) - x) / (pi * grid.step(0)) * ln_g[1] - sx * g[0];
    a[static_cast<size_t>(n)] =
        (grid.node(n - 1) - x) / (pi * grid.step(n - 1)) * ln_g[static_cast<size_t>(n) - 1] +
        sx * g[static_cast<size_t>(n) - 1];

    for (int k = 1; k < n; ++k) {
        const double up = (grid.node(k + 1) - x) / (pi * grid.step(k));
        const double dn = (x - grid.node(k - 1)) / (pi * grid.step(k - 1));
        // coefficient of ln G_k is dn - up; it vanishes linearly at x = t_k,
        // which tames the logarithm for x near the node
        a[static_cast<size_t>(k)] =
            up * ln_g[static_cast<size_t>(k) + 1] +
            (dn - up) * ln_g[static_cast<size_t>(k)] -
            dn * ln_g[static_cast<size_t>(k) - 1] -
            sx * (g[static_cast<size_t>(k)] - g[static_cast<size_t>(k) - 1]);
    }
    return {x, std::move(a)};
}

} // namespace csq
