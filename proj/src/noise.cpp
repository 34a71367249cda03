#include "fadekit/noise.hpp"

#include <cmath>

#include "fadekit/specfun.hpp"

namespace fadekit {

NoiseModel NoiseModel::with_shape(double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw domain_error("NoiseModel: shape a must be finite and > 0");
    double lambda0 =
        std::exp(0.5 * (specfun::ln_gamma(3.0 / a) - specfun::ln_gamma(1.0 / a)));
    return NoiseModel(a, lambda0);
}

double q_a(double x, const NoiseModel& noise) {
    if (x < 0.0) return 1.0 - q_a(-x, noise);
    if (x == 0.0) return 0.5;
    double a = noise.shape();
    double arg = std::pow(noise.lambda0() * x, a);
    return 0.5 * specfun::upper_gamma_reg(1.0 / a, arg);
}

double ggn_pdf(double x, const NoiseModel& noise) {
    double a = noise.shape();
    double l0 = noise.lambda0();
    double lp = std::log(a) + std::log(l0) - std::log(2.0) -
                specfun::ln_gamma(1.0 / a) - std::pow(l0 * std::abs(x), a);
    return lp < -745.0 ? 0.0 : std::exp(lp);
}

std::vector<double> sample_ggn(std::mt19937_64& rng, const NoiseModel& noise,
                               std::size_t n) {
    double a = noise.shape();
    double inv_a = 1.0 / a;
    double inv_l0 = 1.0 / noise.lambda0();
    std::gamma_distribution<double> gamma_draw(inv_a, 1.0);
    std::bernoulli_distribution coin(0.5);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double mag = std::pow(gamma_draw(rng), inv_a) * inv_l0;
        out.push_back(coin(rng) ? mag : -mag);
    }
    return out;
}

} // namespace fadekit
