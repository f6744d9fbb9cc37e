#include "core/workload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyncache {

RateProfile::RateProfile(Kind kind, double period, double high, double low, double h,
                         std::vector<Knot> knots)
    : kind_(kind),
      period_(period),
      lambda_high_(high),
      lambda_low_(low),
      h_(h),
      knots_(std::move(knots)) {
  cumulative_.resize(knots_.size());
  cumulative_[0] = 0.0;
  for (std::size_t j = 1; j < knots_.size(); ++j) {
    const Knot& a = knots_[j - 1];
    const Knot& b = knots_[j];
    cumulative_[j] = cumulative_[j - 1] + 0.5 * (a.rate + b.rate) * (b.t - a.t);
  }
}

namespace {

void check_period(double period) {
  if (!(period > 0.0) || !std::isfinite(period))
    throw std::invalid_argument("period must be positive");
}

}  // namespace

RateProfile RateProfile::triangular(double period, double lambda_high) {
  check_period(period);
  if (!(lambda_high >= 0.0)) throw std::invalid_argument("peak rate must be >= 0");
  return RateProfile(Kind::triangular, period, lambda_high, 0.0, 0.0,
                     {{0.0, 0.0}, {period / 2.0, lambda_high}, {period, 0.0}});
}

RateProfile RateProfile::plateau_valley(double period, double lambda_high, double lambda_low,
                                        double h) {
  check_period(period);
  if (!(lambda_low >= 0.0 && lambda_high >= lambda_low))
    throw std::invalid_argument("need 0 <= lambda_low <= lambda_high");
  if (!(h >= -1.0 && h <= 1.0)) throw std::invalid_argument("h must lie in [-1, 1]");
  double mid = period / 2.0;
  std::vector<Knot> knots;
  if (h == 1.0) {
    knots = {{0.0, lambda_low}, {period, lambda_low}};
  } else if (h == -1.0) {
    knots = {{0.0, lambda_high}, {period, lambda_high}};
  } else if (h > 0.0) {
    double edge = h * period / 2.0;
    knots = {{0.0, lambda_low}, {edge, lambda_low}, {mid, lambda_high},
             {period - edge, lambda_low}, {period, lambda_low}};
  } else if (h < 0.0) {
    double ramp = (1.0 + h) * period / 2.0;
    knots = {{0.0, lambda_low}, {ramp, lambda_high}, {period - ramp, lambda_high},
             {period, lambda_low}};
  } else {
    knots = {{0.0, lambda_low}, {mid, lambda_high}, {period, lambda_low}};
  }
  return RateProfile(Kind::plateau_valley, period, lambda_high, lambda_low, h,
                     std::move(knots));
}

double RateProfile::rate_at(double t) const {
  if (!(t >= 0.0 && t <= period_)) throw std::domain_error("time outside [0, T]");
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                             [](double v, const Knot& k) { return v < k.t; });
  if (it == knots_.end()) return knots_.back().rate;
  const Knot& b = *it;
  const Knot& a = *(it - 1);
  return a.rate + (b.rate - a.rate) * (t - a.t) / (b.t - a.t);
}

double RateProfile::integral_to(double t) const {
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                             [](double v, const Knot& k) { return v < k.t; });
  if (it == knots_.end()) return cumulative_.back();
  std::size_t j = static_cast<std::size_t>(it - knots_.begin()) - 1;
  const Knot& a = knots_[j];
  double r = rate_at(t);
  return cumulative_[j] + 0.5 * (a.rate + r) * (t - a.t);
}

double RateProfile::volume(double t1, double t2) const {
  if (!(t1 >= 0.0 && t1 <= t2 && t2 <= period_))
    throw std::domain_error("need 0 <= t1 <= t2 <= T");
  if (t1 == t2) return 0.0;
  return integral_to(t2) - integral_to(t1);
}

double RateProfile::peak_to_mean() const {
  // Nominal peak: at h = 1 the spike has zero width but still counts.
  return lambda_high_ / (total_volume() / period_);
}

InstantiationWindow RateProfile::best_window(double duration) const {
  if (!(duration > 0.0 && duration <= period_))
    throw std::domain_error("duration must lie in (0, T]");
  double t_a = std::max(0.0, period_ / 2.0 - duration / 2.0);
  double t_d = std::min(period_, t_a + duration);
  return {t_a, t_d, t_d - t_a, volume(t_a, t_d)};
}

RateProfile RateProfile::scaled_to_volume(double reference_volume) const {
  if (!(reference_volume > 0.0)) throw std::invalid_argument("reference volume must be > 0");
  double total = total_volume();
  if (!(total > 0.0)) throw std::invalid_argument("cannot rescale a zero-rate profile");
  double f = reference_volume / total;
  if (kind_ == Kind::triangular) return triangular(period_, lambda_high_ * f);
  return plateau_valley(period_, lambda_high_ * f, lambda_low_ * f, h_);
}

}  // namespace dyncache
