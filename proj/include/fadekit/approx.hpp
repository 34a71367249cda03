#ifndef FADEKIT_APPROX_HPP
#define FADEKIT_APPROX_HPP

#include <functional>
#include <span>
#include <vector>

#include "fadekit/errors.hpp"

namespace fadekit {

enum class ApproxTarget {
    qa_sqrt,       // approximates Q_a(sqrt(x))
    log2_capacity, // approximates log2(1 + gamma)
};

struct ExpSumTerm {
    double delta;
    double sigma; // >= 0
};

/// Finite exponential sum  f(x) ~= sum_i delta_i * exp(-sigma_i * x).
/// Deltas may be negative; no monotonicity or range is implied.
struct ExpSumApprox {
    std::vector<ExpSumTerm> terms;
    ApproxTarget target = ApproxTarget::qa_sqrt;
    double shape_a = 2.0; // meaningful for qa_sqrt targets

    double eval(double x) const;
    void validate() const;
};

/// Verbatim tabulated coefficients. Tabulated shapes: a in {0.5, 1, 1.5, 2, 2.5}.
/// Note: the tabulated rows approximate the *scaled* tail
/// Lambda0^(2/a-1) * Q_a(sqrt(x)); only a = 2 has unit scale. Use
/// qa_sqrt_preset_unit_variance for coefficients consistent with q_a.
ExpSumApprox qa_sqrt_preset(double a);

/// Tabulated rows rescaled to the unit-variance Q_a (delta / Lambda0^(2/a-1)).
ExpSumApprox qa_sqrt_preset_unit_variance(double a);

/// Coefficients for log2(1+gamma): delta = [9.331, -2.635, -4.032, -2.388],
/// sigma = [0.000, 0.037, 0.004, 0.274].
ExpSumApprox capacity_preset();

const std::vector<double>& tabulated_qa_shapes();

struct FitOptions {
    int multi_starts = 32;
    int max_iterations = 200;
    double sigma_start_min = 0.01;
    double sigma_start_max = 20.0;
};

struct FitResult {
    ExpSumApprox approx;
    double max_abs_residual; // on the fitting grid
    double sum_squared_residual;
    bool converged;
    int best_start;
};

/// Damped Gauss-Newton least squares with deterministic multi-start over sigma
/// initializations log-spaced in [sigma_start_min, sigma_start_max].
/// Requires grid.size() >= 4 * n_terms. Best local optimum by sum of squares;
/// ties resolved by lowest start index.
FitResult fit_exp_sum(const std::function<double(double)>& target,
                      std::span<const double> grid, int n_terms,
                      const FitOptions& options = {},
                      const ExpSumApprox* init = nullptr);

/// 400 log-spaced abscissas on [1e-2, 36], the default fitting grid.
std::vector<double> default_fit_grid();

} // namespace fadekit

#endif
