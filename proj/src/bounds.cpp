#include "csq/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "csq/errors.hpp"

namespace csq {

namespace {

constexpr double pi = std::numbers::pi;

void check_args(double gamma, int n) {
    if (!(gamma >= 2.0))
        throw std::invalid_argument("error bound: gamma must be >= 2, got " +
                                    std::to_string(gamma));
    if (n < 3)
        throw std::invalid_argument("error bound: N must be >= 3, got " +
                                    std::to_string(n));
}

double finish(ErrorBudget& b, double ln_n, int n, bool starred) {
    b.value = (starred ? b.L_star : b.L) * ln_n / std::pow(n, b.beta);
    return b.value;
}

} // namespace

ErrorBudget bound_thm1(const FunctionClassSpec& cls, double gamma, int n) {
    check_args(gamma, n);
    const double ln_n = std::log(n);
    ErrorBudget b;
    switch (cls.tag) {
    case ClassTag::w1:
        b.beta = 1.0;
        b.L = 4.0 * gamma * cls.M1 / pi * (1.0 + pi * std::sqrt(2.0) / (2.0 * gamma * ln_n));
        break;
    case ClassTag::c1alpha_piecewise:
        b.beta = 1.0 + cls.alpha;
        b.L = 2.0 * std::pow(gamma, 1.0 + cls.alpha) * cls.K1 / pi *
              (1.0 + pi * std::sqrt(2.0) / (2.0 * gamma * ln_n));
        break;
    case ClassTag::w2_piecewise:
        b.beta = 2.0;
        b.L = gamma * gamma * cls.M2 / pi * (1.0 + pi * std::sqrt(2.0) / (gamma * ln_n));
        break;
    case ClassTag::holder:
        throw unsupported_class_error(
            "bound_thm1: no row for the holder class; use bound_thm3");
    }
    b.L_star = b.L;
    finish(b, ln_n, n, false);
    return b;
}

ErrorBudget bound_thm2(const FunctionClassSpec& cls, double gamma, int n) {
    ErrorBudget b = bound_thm1(cls, gamma, n); // also validates args, rejects holder
    const double ln_n = std::log(n);
    switch (cls.tag) {
    case ClassTag::w1:
        b.L1 = cls.M1 * gamma / (2.0 * pi);
        break;
    case ClassTag::c1alpha_piecewise:
        b.L1 = cls.K1 * std::pow(gamma, 1.0 + cls.alpha) / (4.0 * pi);
        break;
    case ClassTag::w2_piecewise:
        b.L1 = cls.M2 * gamma * gamma / (8.0 * pi);
        break;
    case ClassTag::holder:
        break; // unreachable
    }
    b.L_star = std::sqrt(b.L * b.L + (b.L1 / ln_n) * (b.L1 / ln_n));
    finish(b, ln_n, n, true);
    return b;
}

ErrorBudget bound_thm3(const FunctionClassSpec& cls, double gamma, int n) {
    check_args(gamma, n);
    const double ln_n = std::log(n);
    ErrorBudget b;
    switch (cls.tag) {
    case ClassTag::holder: {
        const double a = cls.alpha;
        b.beta = a;
        b.L = std::pow(2.0, 2.0 - a) * std::pow(gamma, a) * cls.K / pi *
              (1.0 + (2.0 + 1.0 / a) * std::pow(2.0, 2.0 - 2.0 * a) /
                         (std::pow(gamma, a) * ln_n));
        break;
    }
    case ClassTag::w1:
        b.beta = 1.0;
        b.L = 2.0 * gamma * cls.M1 / pi * (1.0 + 12.0 * pi / (gamma * ln_n));
        break;
    case ClassTag::c1alpha_piecewise:
        b.beta = 1.0 + cls.alpha;
        b.L = std::pow(gamma, 1.0 + cls.alpha) * cls.K1 / pi *
              (1.0 + 12.0 * pi / (gamma * ln_n));
        break;
    case ClassTag::w2_piecewise:
        b.beta = 2.0;
        b.L = gamma * gamma * cls.M2 / (2.0 * pi) *
              (1.0 + pi * std::sqrt(24.0 * pi) / (gamma * ln_n));
        break;
    }
    b.L_star = b.L;
    finish(b, ln_n, n, false);
    return b;
}

} // namespace csq
