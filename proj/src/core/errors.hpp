#pragma once

#include <stdexcept>
#include <string>

namespace dyncache {

// Raised when a closed-form approximation is asked to work outside the
// range it was calibrated for. Carries the bound that failed.
class out_of_validity : public std::domain_error {
 public:
  out_of_validity(std::string bound, double limit, double value);

  const std::string& bound() const noexcept { return bound_; }
  double limit() const noexcept { return limit_; }
  double value() const noexcept { return value_; }

 private:
  std::string bound_;
  double limit_;
  double value_;
};

class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A simulation finished its request budget without a single usable sample.
class undersampled_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dyncache
