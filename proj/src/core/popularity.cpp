#include "core/popularity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dyncache {

Catalog::Catalog(std::vector<double> p, std::optional<double> alpha, double omega)
    : p_(std::move(p)), alpha_(alpha), omega_(omega) {
  lq_.resize(p_.size());
  head_.resize(p_.size() + 1);
  head_[0] = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    lq_[i] = p_[i] >= 1.0 ? -INFINITY : std::log1p(-p_[i]);
    head_[i + 1] = head_[i] + p_[i];
  }
}

Catalog Catalog::zipf(std::size_t n, double alpha) {
  if (n == 0) throw std::invalid_argument("catalog needs at least one object");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("zipf exponent must be a finite value >= 0");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(static_cast<double>(i + 1), -alpha);
  // Smallest terms first keeps the rounding error of the sum small.
  double omega = 0.0;
  for (std::size_t i = n; i-- > 0;) omega += w[i];
  for (double& v : w) v /= omega;
  return Catalog(std::move(w), alpha, omega);
}

Catalog Catalog::from_weights(std::vector<double> weights) {
  if (weights.empty()) throw std::invalid_argument("catalog needs at least one object");
  for (double v : weights)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("weights must be finite and positive");
  std::sort(weights.begin(), weights.end(), std::greater<>());
  double total = 0.0;
  for (std::size_t i = weights.size(); i-- > 0;) total += weights[i];
  for (double& v : weights) v /= total;
  return Catalog(std::move(weights), std::nullopt, total);
}

double Catalog::probability(std::size_t i) const {
  if (i < 1 || i > p_.size()) throw std::domain_error("object index out of range");
  return p_[i - 1];
}

double Catalog::head_sum(double c) const {
  if (!(c >= 0.0)) throw std::invalid_argument("capacity must be >= 0");
  if (c >= static_cast<double>(p_.size())) return head_.back();
  return head_[static_cast<std::size_t>(std::floor(c))];
}

double Catalog::head_sum_fractional(double c) const {
  if (!(c >= 0.0)) throw std::invalid_argument("capacity must be >= 0");
  if (c >= static_cast<double>(p_.size())) return head_.back();
  auto m = static_cast<std::size_t>(std::floor(c));
  return head_[m] + (c - static_cast<double>(m)) * p_[m];
}

SurvivalSums Catalog::survival_sums(double l) const {
  if (!(l >= 0.0)) throw std::invalid_argument("window must be >= 0");
  SurvivalSums s{0.0, 0.0};
  for (std::size_t i = p_.size(); i-- > 0;) {
    double x = survival(lq_[i], l);
    s.count += x;
    s.weighted += p_[i] * x;
  }
  return s;
}

}  // namespace dyncache
