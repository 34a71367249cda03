#ifndef FADEKIT_ERRORS_HPP
#define FADEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fadekit {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Result not representable in double precision (overflow of an unscaled form).
class range_error : public std::range_error {
  public:
    using std::range_error::range_error;
};

/// Caller combined arguments in an unsupported way (wrong target, n = 0, ...).
class usage_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A requested preset/tabulated value does not exist.
class not_available_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Named distribution limit (a = 0 impulsive, a = inf uniform) that is not a
/// constructible member of the family under this parameterization.
class unsupported_limit_error : public domain_error {
  public:
    using domain_error::domain_error;
};

/// Requested accuracy not reached within the iteration/subdivision budget.
/// Carries the best value obtained and how much work was spent.
class accuracy_error : public std::runtime_error {
  public:
    accuracy_error(const std::string& what, double partial_value, long terms_used,
                   double error_estimate = 0.0)
        : std::runtime_error(what),
          partial_value_(partial_value),
          terms_used_(terms_used),
          error_estimate_(error_estimate) {}

    double partial_value() const noexcept { return partial_value_; }
    long terms_used() const noexcept { return terms_used_; }
    double error_estimate() const noexcept { return error_estimate_; }

  private:
    double partial_value_;
    long terms_used_;
    double error_estimate_;
};

/// Scenario file rejected; carries the offending line and field when known.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, int line = 0, std::string field = {})
        : std::runtime_error(what), line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

  private:
    int line_;
    std::string field_;
};

} // namespace fadekit

#endif
