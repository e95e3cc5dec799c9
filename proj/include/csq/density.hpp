#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csq/grid.hpp"

namespace csq {

// Smoothness classes of the density f on [-1,1]:
//   holder            |f(t)-f(t')| <= K |t-t'|^alpha
//   w1                f absolutely continuous, ess sup |f'| <= M1
//   c1alpha_piecewise f continuous, f' alpha-Holder(K1) on each grid segment
//   w2_piecewise      f continuous, ess sup |f''| <= M2 on each grid segment
enum class ClassTag { holder, w1, c1alpha_piecewise, w2_piecewise };

struct FunctionClassSpec {
    ClassTag tag;
    double alpha = 0.0; // holder / c1alpha_piecewise
    double K = 0.0;     // holder
    double M1 = 0.0;    // w1
    double K1 = 0.0;    // c1alpha_piecewise
    double M2 = 0.0;    // w2_piecewise

    static FunctionClassSpec holder(double alpha, double K);
    static FunctionClassSpec w1(double M1);
    static FunctionClassSpec c1alpha_piecewise(double alpha, double K1);
    static FunctionClassSpec w2_piecewise(double M2);
};

const char* to_string(ClassTag tag);

// Evaluatable density with its declared class. `kinks` lists abscissas where
// f or f' is not smooth; the oracle splits its integration there.
struct DensityFunction {
    std::string label;
    std::function<double(double)> f;
    FunctionClassSpec cls;
    std::vector<double> kinks{};

    double operator()(double t) const { return f(t); }
};

// Built-in corpus, one representative per class (labels usable from the CLI):
//   const1      f = 1            w1, M1 = 1
//   linear      f = t            w1, M1 = 1
//   cheb2       f = 2t^2 - 1     w2_piecewise, M2 = 4
//   expn        f = e^t          w2_piecewise, M2 = e
//   holder-sqrt f = |t|^(1/2)    holder, alpha = 1/2, K = 1
//   cusp32      f = (2/3)|t|^(3/2)  c1alpha_piecewise, alpha = 1/2, K1 = 1
//   kink        f = t|t|         w2_piecewise, M2 = 2
const std::vector<DensityFunction>& builtin_densities();

// nullptr when the label is unknown.
const DensityFunction* find_density(std::string_view label);

// Throws domain_error when the label is unknown.
const DensityFunction& density_by_label(std::string_view label);

// f(t_k) for k = 0..N.
std::vector<double> sample_nodes(const DensityFunction& density, const Grid& grid);

} // namespace csq
