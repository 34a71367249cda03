#ifndef FADEKIT_NOISE_HPP
#define FADEKIT_NOISE_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "fadekit/errors.hpp"

namespace fadekit {

/// Additive white generalized Gaussian noise, normalized to unit variance.
/// Shape a interpolates gamma (a = 0.5), Laplacian (a = 1) and Gaussian (a = 2).
/// The scale constant Lambda0 = sqrt(Gamma(3/a)/Gamma(1/a)) enforces unit variance.
class NoiseModel {
  public:
    static NoiseModel with_shape(double a);

    static NoiseModel gamma() { return with_shape(0.5); }
    static NoiseModel laplacian() { return with_shape(1.0); }
    static NoiseModel gaussian() { return with_shape(2.0); }

    // a = 0 and a = inf are labels from the family table, not constructible
    // distributions under the unit-variance parameterization.
    [[noreturn]] static NoiseModel impulsive() {
        throw unsupported_limit_error(
            "impulsive noise (a = 0) is a limit label, not a constructible model");
    }
    [[noreturn]] static NoiseModel uniform() {
        throw unsupported_limit_error(
            "uniform noise (a = inf) is a limit label, not a constructible model");
    }

    double shape() const noexcept { return a_; }
    double lambda0() const noexcept { return lambda0_; }

  private:
    NoiseModel(double a, double lambda0) : a_(a), lambda0_(lambda0) {}
    double a_;
    double lambda0_;
};

/// Upper-tail probability Q_a(x) of the unit-variance generalized Gaussian.
/// Q_a(0) = 1/2, strictly decreasing, Q_a(-x) = 1 - Q_a(x).
double q_a(double x, const NoiseModel& noise);

/// Unit-variance generalized Gaussian density; even in x, integrates to 1.
double ggn_pdf(double x, const NoiseModel& noise);

/// n i.i.d. draws: |X| = G^(1/a)/Lambda0 with G ~ Gamma(1/a, 1), sign uniform.
std::vector<double> sample_ggn(std::mt19937_64& rng, const NoiseModel& noise,
                               std::size_t n);

} // namespace fadekit

#endif
