#pragma once

#include "csq/density.hpp"

namespace csq {

// Error budget L * ln(N) / N^beta for the quadrature error, with the leading
// constants per function class. For the off-cut rule the constant is
// L* = sqrt(L^2 + (L1/lnN)^2).
struct ErrorBudget {
    double beta = 0.0;
    double L = 0.0;      // leading constant of the real-axis estimate
    double L1 = 0.0;     // secondary off-cut constant (0 when not applicable)
    double L_star = 0.0; // combined off-cut constant (== L when not applicable)
    double value = 0.0;  // the bound at this N
};

// Real-axis bound, classes w1 / c1alpha_piecewise / w2_piecewise:
//   w1      beta = 1,       L = (4 g M1/pi) (1 + pi sqrt2 / (2 g lnN))
//   c1alpha beta = 1+alpha, L = (2 g^(1+a) K1/pi) (1 + pi sqrt2 / (2 g lnN))
//   w2      beta = 2,       L = (g^2 M2/pi) (1 + pi sqrt2 / (g lnN))
// Throws unsupported_class_error for holder (see bound_thm3).
ErrorBudget bound_thm1(const FunctionClassSpec& cls, double gamma, int n);

// Off-cut bound: same L plus
//   w1 L1 = M1 g / (2 pi);  c1alpha L1 = K1 g^(1+a) / (4 pi);  w2 L1 = M2 g^2 / (8 pi)
// value = L* lnN / N^beta.
ErrorBudget bound_thm2(const FunctionClassSpec& cls, double gamma, int n);

// Real-axis bound covering holder as well; for the other three classes the
// leading constant is half of bound_thm1's:
//   holder  beta = alpha, L2 = (2^(2-a) g^a K/pi)(1 + (2+1/a) 2^(2-2a)/(g^a lnN))
//   w1      beta = 1,     L2 = (2 g M1/pi)(1 + 12 pi/(g lnN))
//   c1alpha beta = 1+a,   L2 = (g^(1+a) K1/pi)(1 + 12 pi/(g lnN))
//   w2      beta = 2,     L2 = (g^2 M2/(2 pi))(1 + pi sqrt(24 pi)/(g lnN))
ErrorBudget bound_thm3(const FunctionClassSpec& cls, double gamma, int n);

} // namespace csq
