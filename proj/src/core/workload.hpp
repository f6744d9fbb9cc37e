#pragma once

#include <vector>

namespace dyncache {

struct InstantiationWindow {
  double t_a;
  double t_d;
  double duration;
  double volume;  // expected requests inside [t_a, t_d]
};

// Piecewise-linear request rate over one period [0, T], in requests per
// minute. Both shapes are symmetric about T/2 and peak there.
class RateProfile {
 public:
  enum class Kind { triangular, plateau_valley };

  static RateProfile triangular(double period, double lambda_high);
  // h > 0 flattens the low end into a valley of width h T, h < 0 widens the
  // peak into a plateau of width |h| T. h = +-1 is a constant rate.
  static RateProfile plateau_valley(double period, double lambda_high, double lambda_low,
                                    double h);

  Kind kind() const noexcept { return kind_; }
  double period() const noexcept { return period_; }
  double lambda_high() const noexcept { return lambda_high_; }
  double lambda_low() const noexcept { return lambda_low_; }
  double shape() const noexcept { return h_; }

  double rate_at(double t) const;
  double volume(double t1, double t2) const;
  double total_volume() const { return cumulative_.back(); }
  double peak_to_mean() const;

  // Duration-D window with the most expected requests. Centered on the
  // peak, which is optimal for symmetric unimodal rates.
  InstantiationWindow best_window(double duration) const;

  // Same shape with both rates scaled so the period volume matches.
  RateProfile scaled_to_volume(double reference_volume) const;

 private:
  struct Knot {
    double t;
    double rate;
  };

  RateProfile(Kind kind, double period, double high, double low, double h,
              std::vector<Knot> knots);
  double integral_to(double t) const;

  Kind kind_;
  double period_;
  double lambda_high_;
  double lambda_low_;
  double h_;
  std::vector<Knot> knots_;
  std::vector<double> cumulative_;  // integral from 0 to each knot
};

inline constexpr double kDefaultPeriod = 1440.0;
inline constexpr double kDefaultLambdaHigh = 20.0;
inline constexpr double kDefaultReferenceVolume = 14400.0;

}  // namespace dyncache
