#pragma once

#include <stdexcept>
#include <string>

namespace csq {

// Base for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Node list violates the partition contract (-1 = t_0 < ... < t_N = 1, N >= 2).
class invalid_grid_error : public error {
public:
    using error::error;
};

// Argument outside the domain of the operation (e.g. t outside [-1,1]).
class domain_error : public error {
public:
    using error::error;
};

// Evaluation point coincides with a segment endpoint where the closed form
// is singular; use the weight assembly instead.
class singular_eval_error : public error {
public:
    using error::error;
};

// z lies on the branch cut [-1,1].
class branch_error : public error {
public:
    using error::error;
};

// Requested theorem has no row for this function class.
class unsupported_class_error : public error {
public:
    using error::error;
};

// Too few usable data points for a fit.
class insufficient_data_error : public error {
public:
    using error::error;
};

// Adaptive integration did not reach the requested tolerance; carries the
// best estimate and its error bound.
class convergence_error : public error {
public:
    convergence_error(const std::string& what, double best, double bound)
        : error(what), best_estimate(best), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

// File I/O failure, message includes the path.
class io_error : public error {
public:
    using error::error;
};

} // namespace csq
