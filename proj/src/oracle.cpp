#include "csq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "csq/errors.hpp"

namespace csq {

namespace {

constexpr double pi = std::numbers::pi;

// Gauss 7 / Kronrod 15 on [-1,1] (positive abscissae; rule is symmetric).
// Even indices are the embedded Gauss nodes.
constexpr double gk_x[8] = {
    0.99145537112081263920685469752632851664204433837033,
    0.94910791234275852452618968404785126240077093767062,
    0.86486442335976907278971278864092620121097230707409,
    0.74153118559939443986386477328078840707414764714139,
    0.58608723546769113029414483825872959843678075060436,
    0.40584515137739716690660641207696146334738201409937,
    0.20778495500789846760068940377324491347978440714517,
    0.0};
constexpr double gk_wk[8] = {
    0.02293532201052922496373200805896959199356081127575,
    0.06309209262997855329070066318920428666507115721155,
    0.10479001032225018383987632254151801744375665421383,
    0.14065325971552591874518959051023792039988975724800,
    0.16900472663926790282658342659855028410624490030294,
    0.20443294007529889241416199923464908471651760418072,
    0.20948214108472782801299917489171426369776208022370};
constexpr double gk_wg[4] = {
    0.12948496616886969327061143267908201832858740225995,
    0.27970539148927666790146777142377958248692506522659,
    0.38183005050511894495036977548897513387836508353386,
    0.41795918367346938775510204081632653061224489795918};

template <class T, class F>
void gk15(const F& f, double a, double b, T& value, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T f0 = f(mid);
    T kronrod = gk_wk[7] * f0;
    T gauss = gk_wg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * gk_x[i];
        const T fi = f(mid + dx) + f(mid - dx);
        kronrod += gk_wk[i] * fi;
        if (i % 2 == 1) gauss += gk_wg[i / 2] * fi;
    }
    value = half * kronrod;
    err = std::abs(half * (kronrod - gauss));
}

template <class T, class F>
void adaptive(const F& f, std::span<const double> breakpoints, double tol,
              int max_depth, T& total, double& err_total, bool& converged) {
    struct Panel {
        double a, b;
        T value;
        double err;
        int depth;
    };
    std::vector<Panel> panels;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] > breakpoints[i])) continue;
        Panel p{breakpoints[i], breakpoints[i + 1], T{}, 0.0, 0};
        gk15(f, p.a, p.b, p.value, p.err);
        panels.push_back(p);
    }
    if (panels.empty())
        throw std::invalid_argument("adaptive integrate: empty interval");

    auto sum_err = [&] {
        double e = 0.0;
        for (const auto& p : panels) e += p.err;
        return e;
    };

    const size_t panel_limit = 20000;
    double e = sum_err();
    size_t since_resync = 0;
    while (e > tol && panels.size() < panel_limit) {
        size_t worst = panels.size();
        double worst_err = 0.0;
        for (size_t i = 0; i < panels.size(); ++i) {
            if (panels[i].depth >= max_depth) continue;
            if (panels[i].err > worst_err) {
                worst_err = panels[i].err;
                worst = i;
            }
        }
        if (worst == panels.size()) break; // every offender at max depth
        Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) { // interval exhausted in FP
            panels[worst].depth = max_depth;
            continue;
        }
        Panel left{p.a, mid, T{}, 0.0, p.depth + 1};
        Panel right{mid, p.b, T{}, 0.0, p.depth + 1};
        gk15(f, left.a, left.b, left.value, left.err);
        gk15(f, right.a, right.b, right.value, right.err);
        panels[worst] = left;
        panels.push_back(right);
        e += left.err + right.err - p.err;
        if (++since_resync == 256) { // shed accumulated rounding in e
            e = sum_err();
            since_resync = 0;
        }
    }
    e = sum_err();

    total = T{};
    for (const auto& p : panels) total += p.value;
    err_total = e;
    converged = e <= tol;
}

std::vector<double> theta_breaks(std::span<const double> kinks_t,
                                 std::initializer_list<double> extra_t) {
    std::set<double> pts{0.0, pi};
    auto add = [&](double t) {
        if (t > -1.0 && t < 1.0) pts.insert(std::acos(t));
    };
    for (double t : kinks_t) add(t);
    for (double t : extra_t) add(t);
    return {pts.begin(), pts.end()};
}

void check_config(const OracleConfig& cfg) {
    if (!(cfg.tolerance > 0.0))
        throw std::invalid_argument("OracleConfig: tolerance must be positive");
    if (cfg.max_refinement_depth < 1 || cfg.max_refinement_depth > 60)
        throw std::invalid_argument("OracleConfig: max_refinement_depth must be in [1,60]");
}

} // namespace

namespace detail {

AdaptiveOutcome integrate(const std::function<double(double)>& f,
                          std::span<const double> breakpoints, double tol,
                          int max_depth) {
    AdaptiveOutcome out;
    adaptive(f, breakpoints, tol, max_depth, out.value, out.error, out.converged);
    return out;
}

AdaptiveOutcomeC integrate(const std::function<complex(double)>& f,
                           std::span<const double> breakpoints, double tol,
                           int max_depth) {
    AdaptiveOutcomeC out;
    adaptive(f, breakpoints, tol, max_depth, out.value, out.error, out.converged);
    return out;
}

} // namespace detail

double pv_oracle(const DensityFunction& density, double x, OracleConfig config) {
    check_config(config);
    if (std::isnan(x) || std::abs(x) > 1.0)
        throw domain_error("pv_oracle: x = " + std::to_string(x) + " outside [-1,1]");
    if (std::abs(x) == 1.0) return 0.0; // endpoint law: J(f,+-1) = 0

    double tol = config.tolerance;
    if (density.cls.tag == ClassTag::holder) tol = std::max(tol, 1e-8);

    const double fx = density(x);
    auto g = [&](double th) {
        const double c = std::cos(th);
        if (c == x) return 0.0; // removable point; its true limit is immaterial
        return (density(c) - fx) / (c - x);
    };
    const auto breaks = theta_breaks(density.kinks, {x});
    detail::AdaptiveOutcome r;
    adaptive(g, std::span<const double>(breaks), tol, config.max_refinement_depth,
             r.value, r.error, r.converged);
    const double scale = std::sqrt((1.0 - x) * (1.0 + x)) / pi;
    if (!r.converged) {
        std::ostringstream os;
        os << "pv_oracle(" << density.label << ", x=" << x
           << "): tolerance " << tol << " not reached (error bound " << r.error << ")";
        throw convergence_error(os.str(), scale * r.value, scale * r.error);
    }
    return scale * r.value;
}

complex offcut_oracle(const DensityFunction& density, complex z, OracleConfig config) {
    check_config(config);
    const complex sq = sqrt_cut(z); // throws branch_error on the cut

    // scale the integration target so the final value meets config.tolerance
    const double prefactor = std::abs(sq) / pi;
    double tol = config.tolerance / std::max(1.0, prefactor);
    if (density.cls.tag == ClassTag::holder) tol = std::max(tol, 1e-8);

    auto g = [&](double th) -> complex {
        const double c = std::cos(th);
        return density(c) / (c - z);
    };
    // anchor the near-cut peak under the projection of z
    const double peak = std::clamp(z.real(), -1.0, 1.0);
    const auto breaks = theta_breaks(density.kinks, {peak});
    detail::AdaptiveOutcomeC r;
    adaptive(g, std::span<const double>(breaks), tol, config.max_refinement_depth,
             r.value, r.error, r.converged);
    const complex value = -sq / pi * r.value;
    if (!r.converged) {
        std::ostringstream os;
        os << "offcut_oracle(" << density.label << ", z=" << z.real() << "+"
           << z.imag() << "i): tolerance not reached (error bound "
           << prefactor * r.error << ")";
        throw convergence_error(os.str(), std::abs(value), prefactor * r.error);
    }
    return value;
}

DensityFunction hat_density(const Grid& grid, int k) {
    if (k < 0 || k > grid.segments())
        throw std::invalid_argument("hat_density: node index out of range");
    const double tm = grid.node(std::max(k - 1, 0));
    const double tc = grid.node(k);
    const double tp = grid.node(std::min(k + 1, grid.segments()));
    auto f = [tm, tc, tp](double t) {
        if (t < tm || t > tp) return 0.0;
        if (t == tc) return 1.0;
        if (t < tc) return (t - tm) / (tc - tm);
        return (tp - t) / (tp - tc);
    };
    double min_h = tp - tc;
    if (k > 0) min_h = std::min(min_h, tc - tm);
    DensityFunction d{"hat", std::move(f), FunctionClassSpec::w1(1.0 / min_h),
                      {tm, tc, tp}};
    return d;
}

double hat_oracle(const Grid& grid, int k, double x, OracleConfig config) {
    return pv_oracle(hat_density(grid, k), x, config);
}

complex hat_oracle(const Grid& grid, int k, complex z, OracleConfig config) {
    return offcut_oracle(hat_density(grid, k), z, config);
}

} // namespace csq
