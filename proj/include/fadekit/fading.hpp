#ifndef FADEKIT_FADING_HPP
#define FADEKIT_FADING_HPP

#include <cstddef>
#include <random>
#include <variant>
#include <vector>

#include "fadekit/accuracy.hpp"
#include "fadekit/errors.hpp"

namespace fadekit {

/// One kappa-mu shadowed branch: dominant-to-scattered power ratio kappa,
/// number of multipath clusters mu (non-integer allowed), Nakagami-m shadowing
/// severity m, and mean SNR per branch (linear).
struct FadingParams {
    double kappa;
    double mu;
    double m;
    double mean_snr;

    void validate() const;
};

// ---- named special cases of the family ----

struct KappaMu {
    double kappa;
    double mu;
};
struct EtaMu {
    double eta; // in (0, 1]
    double mu;
};
struct RicianShadowed {
    double k_factor;
    double m;
};
struct Hoyt {
    double q; // in (0, 1]
};
struct Rician {
    double k_factor;
};
struct NakagamiM {
    double m;
};
struct Rayleigh {};
struct OneSidedGaussian {};

using SpecialCaseModel = std::variant<KappaMu, EtaMu, RicianShadowed, Hoyt, Rician,
                                      NakagamiM, Rayleigh, OneSidedGaussian>;

struct SpecialCase {
    SpecialCaseModel model;
    double mean_snr = 1.0;
};

/// Finite surrogates standing in for the table's limit entries:
/// m -> inf becomes m = 1e4 * (mu + 1), kappa -> 0 becomes kappa = 1e-9.
inline constexpr double kKappaZeroSurrogate = 1e-9;
inline double m_infinity_surrogate(double mu) { return 1e4 * (mu + 1.0); }

/// Mapping result; the flags record which fields are surrogate-realized limits.
struct MappedParams {
    FadingParams params;
    bool m_is_surrogate = false;
    bool kappa_is_surrogate = false;
};

MappedParams map_special_case(const SpecialCase& sc);

/// L-branch maximal-ratio combining over i.i.d. kappa-mu shadowed branches.
/// The combined SNR stays in the family with effective parameters
/// mu_eff = L*mu, m_eff = L*m, eta_eff = L*mean_snr; the PDF is
///   psi * gamma^(mu_eff-1) * exp(-beta*gamma) * 1F1(m_eff; mu_eff; zeta*gamma)
/// with beta = mu_eff(1+kappa)/eta_eff and
/// zeta = mu_eff^2 kappa(1+kappa)/((mu_eff kappa + m_eff) eta_eff).
/// All coefficients are kept in log domain; beta/zeta are L-invariant and are
/// computed from per-branch values so the MGF product property is exact.
class MrcChannel {
  public:
    MrcChannel(const FadingParams& params, int branches);

    const FadingParams& params() const noexcept { return params_; }
    int branches() const noexcept { return branches_; }

    double mu_eff() const noexcept { return mu_eff_; }
    double m_eff() const noexcept { return m_eff_; }
    double eta_eff() const noexcept { return eta_eff_; }

    double beta() const noexcept { return beta_; }
    double zeta() const noexcept { return zeta_; }
    /// zeta/beta = mu_eff*kappa/(mu_eff*kappa + m_eff), in [0, 1).
    double pole_ratio() const noexcept { return ratio_; }
    double log_psi() const noexcept { return log_psi_; }

    struct Density {
        double value;
        bool underflowed; // true when log-density < -745 and 0.0 was returned
    };

    double pdf(double gamma, const Accuracy& acc = {}) const;
    Density pdf_checked(double gamma, const Accuracy& acc = {}) const;
    double log_pdf(double gamma, const Accuracy& acc = {}) const;

    /// Distribution function; closed bivariate-series form inside its
    /// convergence envelope, transparent adaptive quadrature of pdf outside.
    double cdf(double gamma, const Accuracy& acc = {}) const;

    /// Moment generating function E[exp(s*gamma)], s < beta - zeta (strict).
    double mgf(double s) const;
    /// log MGF; computed as branches * (single-branch log MGF).
    double mgf_log(double s) const;

    /// i.i.d. draws of the combined SNR via the conditional mixture
    /// xi2 ~ Gamma(m_eff, 1/m_eff), P ~ Poisson(mu_eff*kappa*xi2),
    /// W ~ Gamma(mu_eff + P, 2), gamma = eta_eff * W / (2 mu_eff (1+kappa)).
    std::vector<double> sample_snr(std::mt19937_64& rng, std::size_t n) const;

  private:
    FadingParams params_;
    int branches_;
    double mu_eff_, m_eff_, eta_eff_;
    double beta_, zeta_, ratio_, log_psi_;
};

} // namespace fadekit

#endif
