#ifndef FADEKIT_QUADRATURE_HPP
#define FADEKIT_QUADRATURE_HPP

#include <functional>

#include "fadekit/errors.hpp"

namespace fadekit::oracle {

enum class TailPolicy {
    transform_to_finite, // gamma = t/(1-t), integrate t on [0,1)
    truncate,            // integrate [0, truncate_multiple * scale]
};

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    int max_subdivisions = 4000;
    TailPolicy tail = TailPolicy::transform_to_finite;
    double truncate_multiple = 40.0; // >= 30 when the truncation policy is used

    void validate() const;
};

struct QuadResult {
    double value;
    double error_bound;
    int subdivisions;
};

/// Globally adaptive Gauss-Kronrod (G7, K15) on [a, b]: repeatedly bisects the
/// segment with the largest embedded error estimate until the total estimate
/// meets max(abs_tol, rel_tol * |integral|). Throws accuracy_error (carrying
/// the best estimate) when the subdivision budget runs out.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec = {});

/// Integral over [0, inf) of f, using the spec's tail policy. `scale` sets the
/// truncation length (ignored by the transform policy).
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadratureSpec& spec, double scale);

} // namespace fadekit::oracle

#endif
