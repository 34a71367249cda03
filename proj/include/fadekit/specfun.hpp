#ifndef FADEKIT_SPECFUN_HPP
#define FADEKIT_SPECFUN_HPP

#include "fadekit/accuracy.hpp"

namespace fadekit::specfun {

/// A real number stored as sign * exp(log_abs). sign is -1, 0 or +1;
/// for sign == 0, log_abs is -inf. Survives magnitudes far beyond double range.
struct SignedLog {
    double log_abs;
    int sign;

    double value() const; // exponentiates; throws range_error on overflow
};

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s,x)/Gamma(s), s > 0, x >= 0.
/// Monotone non-increasing in x, Q(s,0) = 1.
double upper_gamma_reg(double s, double x, const Accuracy& acc = {});

/// Confluent hypergeometric 1F1(a; b; z). b must not be a non-positive integer.
/// Overflows double for large positive z; use kummer_1f1_ln there.
double kummer_1f1(double a, double b, double z, const Accuracy& acc = {});

/// log-domain 1F1 for a, b > 0 and z >= 0 (the regime where all series terms are
/// positive). Exact power-of-two rescaling keeps the accumulation lossless for
/// arguments like a ~ 1e5 or z ~ 1e4 whose value dwarfs double range.
SignedLog kummer_1f1_ln(double a, double b, double z, const Accuracy& acc = {});

/// Gauss hypergeometric 2F1(a, b; c; z) for z < 1.
double gauss_2f1(double a, double b, double c, double z, const Accuracy& acc = {});

/// Humbert Phi2(b1, b2; c; x, y) = sum_{j,k} (b1)_j (b2)_k x^j y^k / ((c)_{j+k} j! k!).
/// Throws accuracy_error outside the attempt envelope |x|,|y| <= 50 or when the
/// alternating double series loses too much precision to honor acc.rel_tol
/// (callers fall back to quadrature).
double humbert_phi2(double b1, double b2, double c, double x, double y,
                    const Accuracy& acc = {});

/// Non-throwing Phi2 used by the distribution code to decide on fallback.
struct Phi2Result {
    double value;
    bool converged;
    long terms;
};
Phi2Result humbert_phi2_checked(double b1, double b2, double c, double x, double y,
                                const Accuracy& acc = {}) noexcept;

/// Modified Bessel function of the first kind, nu >= 0, x >= 0.
double bessel_i(double nu, double x);

/// exp(-x) * I_nu(x): overflow-safe for large x.
double bessel_i_scaled(double nu, double x);

} // namespace fadekit::specfun

#endif
