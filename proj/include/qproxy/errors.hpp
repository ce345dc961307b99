#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qproxy {

// Thrown when adaptive quadrature cannot reach the requested tolerance.
// Carries the best available estimate so callers can decide what to do with it.
class accuracy_error : public std::runtime_error {
public:
  accuracy_error(const std::string& what, std::complex<double> best_value,
                 double best_error)
      : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}
  std::complex<double> best_value() const { return best_value_; }
  double best_error() const { return best_error_; }

private:
  std::complex<double> best_value_;
  double best_error_;
};

// Requested evaluation path does not exist (e.g. closed form for a massive psi).
class capability_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a contract (mismatched sample points, bad ranges, unknown names).
class usage_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Grid tails truncated: integral over the window would be silently wrong.
class boundary_leak_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qproxy
