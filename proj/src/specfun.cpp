#include "fadekit/specfun.hpp"

#include <cmath>
#include <limits>

namespace fadekit::specfun {

namespace {

constexpr double kLn2 = 0.6931471805599453094;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

// Signed accumulator with an explicit binary exponent. Rescaling by powers of
// two is exact, so huge sums (e.g. 1F1 near e^10000) accumulate without any
// precision loss beyond ordinary summation.
class ScaledAccumulator {
  public:
    void add(double mantissa, long exp2) {
        if (mantissa == 0.0) return;
        if (sum_ == 0.0) {
            sum_ = mantissa;
            exp2_ = exp2;
        } else {
            long shift = exp2 - exp2_;
            if (shift > 600) { // incoming term dwarfs the sum; swap roles
                sum_ = std::ldexp(sum_, -shift) + mantissa;
                exp2_ = exp2;
            } else if (shift < -1100) {
                // negligible against the running sum
            } else {
                sum_ += std::ldexp(mantissa, static_cast<int>(shift));
            }
        }
        normalize();
    }

    double abs_ratio(double mantissa, long exp2) const {
        if (sum_ == 0.0) return kInf;
        return std::abs(std::ldexp(mantissa / sum_, static_cast<int>(exp2 - exp2_)));
    }

    SignedLog signed_log() const {
        if (sum_ == 0.0) return {-kInf, 0};
        return {std::log(std::abs(sum_)) + static_cast<double>(exp2_) * kLn2,
                sum_ > 0 ? 1 : -1};
    }

  private:
    void normalize() {
        if (sum_ == 0.0) return;
        int e = 0;
        (void)std::frexp(sum_, &e);
        if (e > 900 || e < -900) {
            sum_ = std::ldexp(sum_, -e);
            exp2_ += e;
        }
    }

    double sum_ = 0.0;
    long exp2_ = 0;
};

// Running series term in mantissa * 2^exp2 form.
struct ScaledTerm {
    double mantissa = 1.0;
    long exp2 = 0;

    void multiply(double factor) {
        mantissa *= factor;
        int e = 0;
        (void)std::frexp(mantissa, &e);
        if (e > 600 || e < -600) {
            mantissa = std::ldexp(mantissa, -e);
            exp2 += e;
        }
    }
};

} // namespace

double SignedLog::value() const {
    if (sign == 0) return 0.0;
    if (log_abs > 709.0)
        throw range_error("value exceeds double range; use the log form");
    return sign * std::exp(log_abs);
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw domain_error("ln_gamma: requires x > 0");
    return std::lgamma(x);
}

// ---------------------------------------------------------------------------
// Regularized incomplete gamma: series for x < s + 1, Lentz continued fraction
// otherwise. Prefactor x^s e^-x / Gamma(s) handled in log form.
// ---------------------------------------------------------------------------

namespace {

double gamma_p_series(double s, double x, const Accuracy& acc) {
    double term = 1.0 / s;
    double sum = term;
    for (long n = 1; n <= acc.max_terms; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 0.25 * acc.rel_tol) {
            double lp = s * std::log(x) - x - std::lgamma(s);
            return std::exp(lp) * sum;
        }
    }
    throw accuracy_error("upper_gamma_reg: series did not converge", sum,
                         acc.max_terms);
}

double gamma_q_contfrac(double s, double x, const Accuracy& acc) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (long i = 1; i <= acc.max_terms; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 0.25 * acc.rel_tol) {
            double lp = s * std::log(x) - x - std::lgamma(s);
            if (lp < -745.0) return 0.0;
            return std::exp(lp) * h;
        }
    }
    throw accuracy_error("upper_gamma_reg: continued fraction did not converge", h,
                         acc.max_terms);
}

} // namespace

double upper_gamma_reg(double s, double x, const Accuracy& acc) {
    acc.validate();
    if (!(s > 0.0)) throw domain_error("upper_gamma_reg: requires s > 0");
    if (!(x >= 0.0)) throw domain_error("upper_gamma_reg: requires x >= 0");
    if (x == 0.0) return 1.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x, acc);
    return gamma_q_contfrac(s, x, acc);
}

// ---------------------------------------------------------------------------
// 1F1
// ---------------------------------------------------------------------------

namespace {

// Ascending series for a, b > 0, z >= 0: every term positive, scaled
// accumulation, no cancellation. Handles a ~ 1e5 and z ~ 1e4.
SignedLog kummer_series_positive_ln(double a, double b, double z,
                                    const Accuracy& acc) {
    ScaledAccumulator sum;
    ScaledTerm term;
    sum.add(term.mantissa, term.exp2);
    for (long n = 0; n < acc.max_terms; ++n) {
        double ratio = (a + n) * z / ((b + n) * (n + 1.0));
        term.multiply(ratio);
        sum.add(term.mantissa, term.exp2);
        if (ratio < 1.0 && sum.abs_ratio(term.mantissa, term.exp2) < acc.rel_tol)
            return sum.signed_log();
    }
    throw accuracy_error("kummer_1f1: series did not converge",
                         sum.signed_log().log_abs, acc.max_terms);
}

// Plain signed series for mixed-sign regimes (negative a, or moderate z < 0).
// Tracks the absolute-term sum so cancellation beyond the tolerance is caught.
double kummer_series_signed(double a, double b, double z, const Accuracy& acc) {
    double term = 1.0, sum = 1.0, abs_sum = 1.0;
    long settled = 0;
    for (long n = 0; n < acc.max_terms; ++n) {
        double ratio = (a + n) * z / ((b + n) * (n + 1.0));
        term *= ratio;
        sum += term;
        abs_sum += std::abs(term);
        if (term == 0.0) break; // terminating polynomial case
        if (std::abs(ratio) < 1.0 && std::abs(term) < std::abs(sum) * acc.rel_tol) {
            if (++settled >= 3) break;
        } else {
            settled = 0;
        }
        if (!std::isfinite(sum))
            throw accuracy_error("kummer_1f1: series overflowed", sum, n);
    }
    double cancel_err = abs_sum * kEps * 8.0;
    if (settled < 3 && std::abs(term) > std::abs(sum) * acc.rel_tol)
        throw accuracy_error("kummer_1f1: series did not converge", sum,
                             acc.max_terms);
    if (cancel_err > std::abs(sum) * std::max(acc.rel_tol, 1e-11))
        throw accuracy_error("kummer_1f1: cancellation exceeds tolerance", sum,
                             acc.max_terms, cancel_err / std::abs(sum));
    return sum;
}

// Large-z expansion 1F1(a;b;z) ~ Gamma(b)/Gamma(a) e^z z^(a-b) 2F0(b-a, 1-a; 1/z).
// Asymptotic: accumulate until terms stop shrinking; fail if the smallest term
// is still above tolerance.
bool kummer_asymptotic_ln(double a, double b, double z, const Accuracy& acc,
                          SignedLog& out) {
    double term = 1.0, sum = 1.0;
    double prev = kInf;
    bool ok = false;
    for (int k = 0; k < 80; ++k) {
        double factor = (b - a + k) * (1.0 - a + k) / ((k + 1.0) * z);
        term *= factor;
        if (term == 0.0) { ok = true; break; } // terminating (integer a)
        if (std::abs(term) >= prev) {          // divergence onset
            ok = std::abs(prev) < acc.rel_tol * std::abs(sum);
            break;
        }
        sum += term;
        prev = std::abs(term);
        if (prev < acc.rel_tol * std::abs(sum) * 0.1) { ok = true; break; }
    }
    if (!ok || sum <= 0.0) return false;
    out.log_abs = z + (a - b) * std::log(z) + std::lgamma(b) - std::lgamma(a) +
                  std::log(sum);
    out.sign = 1;
    return true;
}

} // namespace

SignedLog kummer_1f1_ln(double a, double b, double z, const Accuracy& acc) {
    acc.validate();
    if (is_nonpositive_integer(b))
        throw domain_error("kummer_1f1: b must not be a non-positive integer");
    if (!(a > 0.0) || !(b > 0.0) || !(z >= 0.0))
        throw domain_error("kummer_1f1_ln: requires a > 0, b > 0, z >= 0");
    if (z == 0.0) return {0.0, 1};
    if (z > 30.0) {
        SignedLog out{};
        if (kummer_asymptotic_ln(a, b, z, acc, out)) return out;
    }
    return kummer_series_positive_ln(a, b, z, acc);
}

double kummer_1f1(double a, double b, double z, const Accuracy& acc) {
    acc.validate();
    if (is_nonpositive_integer(b))
        throw domain_error("kummer_1f1: b must not be a non-positive integer");
    if (z == 0.0) return 1.0;
    if (z < 0.0) {
        // Moderate negative arguments go through the signed series directly;
        // beyond that the cancellation is hopeless in doubles and the Kummer
        // transform 1F1(a;b;z) = e^z 1F1(b-a;b;-z) maps to a positive argument.
        if (z >= -15.0 && std::abs(a) < 50.0 && b < 50.0)
            return kummer_series_signed(a, b, z, acc);
        double shifted = kummer_1f1(b - a, b, -z, acc);
        double lv = z + std::log(std::abs(shifted));
        if (lv > 709.0)
            throw range_error("kummer_1f1: value exceeds double range");
        return (shifted >= 0 ? 1.0 : -1.0) * std::exp(lv);
    }
    if (a > 0.0 && b > 0.0) return kummer_1f1_ln(a, b, z, acc).value();
    return kummer_series_signed(a, b, z, acc);
}

// ---------------------------------------------------------------------------
// 2F1
// ---------------------------------------------------------------------------

double gauss_2f1(double a, double b, double c, double z, const Accuracy& acc) {
    acc.validate();
    if (is_nonpositive_integer(c))
        throw domain_error("gauss_2f1: c must not be a non-positive integer");
    if (!(z < 1.0)) throw domain_error("gauss_2f1: requires z < 1");
    if (z == 0.0) return 1.0;
    if (z < 0.0) {
        // Pfaff transformation onto z/(z-1) in (0, 1).
        double zp = z / (z - 1.0);
        double f = gauss_2f1(a, c - b, c, zp, acc);
        return std::pow(1.0 - z, -a) * f;
    }

    ScaledAccumulator sum;
    ScaledTerm term;
    sum.add(term.mantissa, term.exp2);
    double abs_scale = 1.0; // plain |term| tally for the cancellation guard
    double abs_sum = 1.0;
    long settled = 0;
    for (long n = 0; n < acc.max_terms; ++n) {
        double ratio = (a + n) * (b + n) * z / ((c + n) * (n + 1.0));
        term.multiply(ratio);
        sum.add(term.mantissa, term.exp2);
        abs_scale *= std::abs(ratio);
        abs_sum += abs_scale;
        double rel = sum.abs_ratio(term.mantissa, term.exp2);
        if (std::abs(ratio) < 1.0 && rel < acc.rel_tol) {
            if (++settled >= 2) {
                SignedLog sl = sum.signed_log();
                if (sl.sign == 0) return 0.0;
                return sl.value();
            }
        } else {
            settled = 0;
        }
    }
    throw accuracy_error("gauss_2f1: series did not converge",
                         sum.signed_log().sign * sum.signed_log().log_abs,
                         acc.max_terms);
}

// ---------------------------------------------------------------------------
// Humbert Phi2 double series, summed along diagonals j + k = n.
// ---------------------------------------------------------------------------

Phi2Result humbert_phi2_checked(double b1, double b2, double c, double x, double y,
                                const Accuracy& acc) noexcept {
    if (is_nonpositive_integer(c) || !(std::abs(x) <= 50.0) ||
        !(std::abs(y) <= 50.0))
        return {0.0, false, 0};

    const int max_diag = 700;
    // P[j] = (b1)_j x^j / j!, R[k] = (b2)_k y^k / k!, built incrementally.
    std::vector<double> p(1, 1.0), r(1, 1.0);
    double sum = 1.0, abs_sum = 1.0;
    double c_poch = 1.0; // (c)_n
    long terms = 1;
    int settled = 0;
    for (int n = 1; n <= max_diag; ++n) {
        p.push_back(p[n - 1] * (b1 + n - 1) * x / n);
        r.push_back(r[n - 1] * (b2 + n - 1) * y / n);
        c_poch *= (c + n - 1);
        if (!std::isfinite(p[n]) || !std::isfinite(r[n]) || !std::isfinite(c_poch))
            return {sum, false, terms};
        double diag = 0.0, abs_diag = 0.0;
        for (int j = 0; j <= n; ++j) {
            double t = p[j] * r[n - j];
            diag += t;
            abs_diag += std::abs(t);
        }
        terms += n + 1;
        sum += diag / c_poch;
        abs_sum += abs_diag / std::abs(c_poch);
        if (!std::isfinite(sum)) return {sum, false, terms};
        if (std::abs(diag / c_poch) <= std::max(acc.rel_tol, 1e-9) * std::abs(sum))
            ++settled;
        else
            settled = 0;
        if (settled >= 4) break;
    }
    double tol = std::max(acc.rel_tol, 1e-8);
    if (settled < 4) return {sum, false, terms};
    double cancel_err = abs_sum * kEps * 16.0;
    if (cancel_err > tol * std::abs(sum)) return {sum, false, terms};
    return {sum, true, terms};
}

double humbert_phi2(double b1, double b2, double c, double x, double y,
                    const Accuracy& acc) {
    acc.validate();
    if (is_nonpositive_integer(c))
        throw domain_error("humbert_phi2: c must not be a non-positive integer");
    if (std::abs(x) > 50.0 || std::abs(y) > 50.0)
        throw accuracy_error("humbert_phi2: outside the |x|,|y| <= 50 envelope",
                             0.0, 0);
    Phi2Result res = humbert_phi2_checked(b1, b2, c, x, y, acc);
    if (!res.converged)
        throw accuracy_error("humbert_phi2: double series did not converge to "
                             "tolerance (cancellation or growth)",
                             res.value, res.terms);
    return res.value;
}

// ---------------------------------------------------------------------------
// Modified Bessel I_nu via the 0F1 series with scaled accumulation.
// ---------------------------------------------------------------------------

namespace {

// log of I_nu(x), valid for nu >= 0, x > 0
double bessel_i_log(double nu, double x, const Accuracy& acc) {
    double q = 0.25 * x * x;
    ScaledAccumulator sum;
    ScaledTerm term;
    sum.add(term.mantissa, term.exp2);
    for (long k = 0; k < acc.max_terms; ++k) {
        double ratio = q / ((k + 1.0) * (nu + k + 1.0));
        term.multiply(ratio);
        sum.add(term.mantissa, term.exp2);
        if (ratio < 1.0 && sum.abs_ratio(term.mantissa, term.exp2) < acc.rel_tol)
            break;
    }
    return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) + sum.signed_log().log_abs;
}

} // namespace

double bessel_i(double nu, double x) {
    if (!(nu >= 0.0) || !(x >= 0.0))
        throw domain_error("bessel_i: requires nu >= 0 and x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    double lv = bessel_i_log(nu, x, {});
    if (lv > 709.0)
        throw range_error("bessel_i: overflow; use bessel_i_scaled");
    return std::exp(lv);
}

double bessel_i_scaled(double nu, double x) {
    if (!(nu >= 0.0) || !(x >= 0.0))
        throw domain_error("bessel_i_scaled: requires nu >= 0 and x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return std::exp(bessel_i_log(nu, x, {}) - x);
}

} // namespace fadekit::specfun
