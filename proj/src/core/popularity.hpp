#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace dyncache {

inline constexpr double kEulerGamma = 0.577215664901533;

struct SurvivalSums {
  double count;     // sum of (1-p_i)^L
  double weighted;  // sum of p_i (1-p_i)^L
};

// Object population with fixed request probabilities, sorted so that
// p_1 >= p_2 >= ... >= p_N. Immutable once built.
class Catalog {
 public:
  static Catalog zipf(std::size_t n, double alpha);
  // Arbitrary weights; they are normalized and sorted in decreasing order.
  static Catalog from_weights(std::vector<double> weights);

  std::size_t size() const noexcept { return p_.size(); }
  // Set only for catalogs built by zipf().
  std::optional<double> zipf_alpha() const noexcept { return alpha_; }
  double omega() const noexcept { return omega_; }

  // 1-based, matching the usual object numbering.
  double probability(std::size_t i) const;
  const std::vector<double>& probabilities() const noexcept { return p_; }
  // log1p(-p_i), -inf for p_i == 1.
  const std::vector<double>& log_complements() const noexcept { return lq_; }

  // Sum of the floor(c) largest probabilities.
  double head_sum(double c) const;
  // Like head_sum but interpolates linearly inside the next object.
  double head_sum_fractional(double c) const;

  SurvivalSums survival_sums(double l) const;

 private:
  Catalog(std::vector<double> p, std::optional<double> alpha, double omega);

  std::vector<double> p_;
  std::vector<double> lq_;
  std::vector<double> head_;  // head_[m] = p_1 + ... + p_m
  std::optional<double> alpha_;
  double omega_;
};

// (1-p)^l given lq = log1p(-p).
inline double survival(double lq, double l) {
  if (l == 0.0) return 1.0;
  return std::exp(l * lq);
}

}  // namespace dyncache
