#ifndef FADEKIT_METRICS_HPP
#define FADEKIT_METRICS_HPP

#include <string>

#include "fadekit/approx.hpp"
#include "fadekit/fading.hpp"

namespace fadekit {

/// Coherent-modulation error-rate constants: conditional error rate in
/// generalized Gaussian noise is A * Q_a(sqrt(B * gamma)).
struct ModulationSpec {
    std::string name;
    double a_coeff; // A
    double b_coeff; // B

    static ModulationSpec bfsk();
    static ModulationSpec bpsk();
    static ModulationSpec qpsk();                // also 4-QAM
    static ModulationSpec pam(int m);            // M-PAM, M >= 2
    static ModulationSpec psk(int m);            // M-PSK, M power of 2, M >= 4
    static ModulationSpec rect_qam(int m);       // rectangular M-QAM
    static ModulationSpec nonrect_qam(int m);    // non-rectangular M-QAM
};

/// Raw closed-form output plus a range flag. Values are never clamped: the
/// exponential-sum surrogate admits small negative or > A/2 artifacts at
/// extreme SNR, and clamping would hide approximation regressions.
struct MetricValue {
    double value;
    bool in_range; // aber: value in [0,1]; acc: value >= 0
};

/// Average error rate, elementary closed form: for each surrogate term,
///   A * delta_i * psi * Gamma(mu_eff)
///     * (beta + sigma_i B)^(m_eff - mu_eff) * (beta + sigma_i B - zeta)^(-m_eff),
/// evaluated in log domain. approx.target must be qa_sqrt.
MetricValue aber_closed_form(const ModulationSpec& mod, const ExpSumApprox& approx,
                             const MrcChannel& ch);

/// Same sum through the Gauss-hypergeometric route
/// Psi_i * 2F1(m_eff, mu_eff; mu_eff; 1/beta~_i); cross-check path only.
double aber_closed_form_2f1(const ModulationSpec& mod, const ExpSumApprox& approx,
                            const MrcChannel& ch, const Accuracy& acc = {});

/// Average channel capacity (bits/s/Hz): the same elementary sum with
/// A = B = 1 and the log2 capacity coefficients.
MetricValue acc_closed_form(const MrcChannel& ch);
MetricValue acc_closed_form(const MrcChannel& ch, const ExpSumApprox& approx);

} // namespace fadekit

#endif
