#ifndef FADEKIT_ORACLE_HPP
#define FADEKIT_ORACLE_HPP

#include <cstdint>

#include "fadekit/metrics.hpp"
#include "fadekit/noise.hpp"
#include "fadekit/quadrature.hpp"

namespace fadekit::oracle {

/// Average error rate by adaptive quadrature of the defining integral
///   integral_0^inf pdf(gamma) * A * Q_a(sqrt(B * gamma)) dgamma
/// with the exact generalized Q-function.
double aber_quadrature(const ModulationSpec& mod, const NoiseModel& noise,
                       const MrcChannel& ch, const QuadratureSpec& spec = {});

/// Same integral with the exponential-sum surrogate eval(approx, B*gamma) in
/// place of the exact Q (the integrand the closed form reproduces).
double aber_quadrature(const ModulationSpec& mod, const ExpSumApprox& approx,
                       const MrcChannel& ch, const QuadratureSpec& spec = {});

enum class CapacityIntegrand {
    exact_log,  // log2(1 + gamma)
    approx_log, // the exponential-sum surrogate of log2(1 + gamma)
};

double acc_quadrature(const MrcChannel& ch, const QuadratureSpec& spec = {},
                      CapacityIntegrand integrand = CapacityIntegrand::exact_log);
double acc_quadrature(const MrcChannel& ch, const ExpSumApprox& approx,
                      const QuadratureSpec& spec = {});

enum class SimMode {
    semi_analytic, // average A*Q_a(sqrt(B*gamma_i)) over sampled fading states
    bit_level,     // antipodal transmission + sampled noise; BPSK with a = 2 only
};

struct SimResult {
    double estimate;
    double std_error;
    std::uint64_t samples;
};

/// Monte Carlo link evaluation. Work is split over a fixed number of
/// sub-streams (independent of any threading), so results are reproducible for
/// a given seed.
SimResult simulate_error_rate(const ModulationSpec& mod, const NoiseModel& noise,
                              const MrcChannel& ch, std::uint64_t n,
                              std::uint64_t seed, SimMode mode);

} // namespace fadekit::oracle

#endif
