#include <doctest.h>

#include <cmath>

#include "core/workload.hpp"
#include "oracles.hpp"

using namespace dyncache;

namespace {

double quad(const RateProfile& p, double a, double b) {
  // Split at every minute so kinks fall on panel edges for integer knots.
  double s = 0.0;
  double t = a;
  while (t < b) {
    double e = std::min(b, std::floor(t) + 1.0);
    s += oracle::simpson([&](double x) { return p.rate_at(x); }, t, e, 8);
    t = e;
  }
  return s;
}

InstantiationWindow sliding_best(const RateProfile& p, double d) {
  InstantiationWindow best{0, d, d, -1};
  for (double t = 0.0; t + d <= p.period() + 1e-9; t += 1.0) {
    double v = p.volume(t, std::min(p.period(), t + d));
    if (v > best.volume) best = {t, t + d, d, v};
  }
  return best;
}

}  // namespace

TEST_CASE("triangular rate values") {
  auto p = RateProfile::triangular(1440, 20);
  CHECK(p.rate_at(720) == doctest::Approx(20));
  CHECK(p.rate_at(0) == 0);
  CHECK(p.rate_at(1440) == 0);
  CHECK(p.rate_at(360) == doctest::Approx(10));
  CHECK(p.rate_at(1080) == doctest::Approx(10));
  CHECK_THROWS_AS(p.rate_at(-1), std::domain_error);
  CHECK_THROWS_AS(p.rate_at(1441), std::domain_error);
}

TEST_CASE("triangular volumes") {
  auto p = RateProfile::triangular(1440, 20);
  CHECK(p.total_volume() == doctest::Approx(14400));
  CHECK(quad(p, 0, 1440) == doctest::Approx(14400).epsilon(1e-6));
  CHECK(p.volume(300, 300) == 0);
  auto w = p.best_window(720);
  CHECK(w.t_a == doctest::Approx(360));
  CHECK(w.t_d == doctest::Approx(1080));
  CHECK(w.volume == doctest::Approx(10800));
  CHECK(quad(p, 360, 1080) == doctest::Approx(10800).epsilon(1e-6));
  for (double d : {1.0, 100.0, 999.0, 1440.0})
    CHECK(p.best_window(d).volume == doctest::Approx(20 * d * (1 - d / 2880)));
  CHECK_THROWS_AS(p.volume(10, 5), std::domain_error);
  CHECK_THROWS_AS(p.volume(0, 2000), std::domain_error);
}

TEST_CASE("volume matches quadrature and is additive") {
  for (double h : {-0.8, -0.3, 0.0, 0.25, 0.9}) {
    auto p = RateProfile::plateau_valley(1440, 30, 3, h);
    for (auto [a, b] : {std::pair{0.0, 1440.0}, {17.0, 600.0}, {500.0, 1300.0}})
      CHECK(p.volume(a, b) == doctest::Approx(quad(p, a, b)).epsilon(1e-6));
    for (double b = 0; b <= 1440; b += 97) {
      double lhs = p.volume(0, b) + p.volume(b, 1440);
      CHECK(std::abs(lhs - p.total_volume()) <= 1e-9);
    }
  }
}

TEST_CASE("plateau and valley shapes") {
  auto valley = RateProfile::plateau_valley(1440, 20, 2, 0.5);
  CHECK(valley.rate_at(100) == doctest::Approx(2));
  CHECK(valley.rate_at(360) == doctest::Approx(2));
  CHECK(valley.rate_at(720) == doctest::Approx(20));
  CHECK(valley.rate_at(540) == doctest::Approx(11));
  auto plateau = RateProfile::plateau_valley(1440, 20, 2, -0.5);
  CHECK(plateau.rate_at(0) == doctest::Approx(2));
  CHECK(plateau.rate_at(360) == doctest::Approx(20));
  CHECK(plateau.rate_at(1000) == doctest::Approx(20));
  CHECK(plateau.rate_at(180) == doctest::Approx(11));
  for (double t = 0; t <= 1440; t += 61) {
    CHECK(valley.rate_at(t) == doctest::Approx(valley.rate_at(1440 - t)));
    CHECK(plateau.rate_at(t) == doctest::Approx(plateau.rate_at(1440 - t)));
  }
  CHECK_THROWS_AS(RateProfile::plateau_valley(1440, 20, 2, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(RateProfile::plateau_valley(1440, 2, 20, 0), std::invalid_argument);
}

TEST_CASE("peak-to-mean ratio") {
  for (double h = -0.95; h <= 0.951; h += 0.05)
    for (double ratio : {0.0, 0.1, 0.5}) {
      auto p = RateProfile::plateau_valley(1440, 20, 20 * ratio, h);
      CHECK(std::abs(p.peak_to_mean() - 2.0 / (1 - h + (1 + h) * ratio)) <= 1e-9);
    }
}

TEST_CASE("best window agrees with a sliding search") {
  std::vector<RateProfile> profiles{RateProfile::triangular(1440, 20),
                                    RateProfile::plateau_valley(1440, 20, 2, 0.6),
                                    RateProfile::plateau_valley(1440, 20, 2, -0.6),
                                    RateProfile::plateau_valley(1440, 20, 2, 0.99)};
  for (const auto& p : profiles)
    for (double d : {1.0, 30.0, 301.0, 720.0, 1439.0, 1440.0}) {
      auto fast = p.best_window(d);
      auto slow = sliding_best(p, d);
      CHECK(fast.volume >= slow.volume - 1e-9);
      // one-minute slide steps lose at most one minute of peak rate
      CHECK(fast.volume <= slow.volume + p.rate_at(p.period() / 2) + 1e-9);
      CHECK(p.volume(fast.t_a, fast.t_d) == doctest::Approx(fast.volume));
    }
  // a single peak gives a unique maximizer
  for (double d : {1.0, 30.0, 301.0, 720.0, 1439.0}) {
    auto tri = RateProfile::triangular(1440, 20);
    CHECK(std::abs(tri.best_window(d).t_a - sliding_best(tri, d).t_a) <= 1.0);
    }
  auto full = RateProfile::triangular(1440, 20).best_window(1440);
  CHECK(full.t_a == 0);
  CHECK(full.t_d == 1440);
  auto flat = RateProfile::plateau_valley(1440, 20, 2, 0.99).best_window(200);
  CHECK(flat.t_a == doctest::Approx(620));
}

TEST_CASE("window volume grows with D while its average rate falls") {
  auto p = RateProfile::plateau_valley(1440, 20, 2, 0.3);
  double pv = 0, pr = 1e9;
  for (double d = 1; d <= 1440; d += 7) {
    auto w = p.best_window(d);
    CHECK(w.volume >= pv);
    CHECK(w.volume / d <= pr + 1e-12);
    pv = w.volume;
    pr = w.volume / d;
  }
  CHECK_THROWS_AS(p.best_window(0), std::domain_error);
  CHECK_THROWS_AS(p.best_window(1441), std::domain_error);
}

TEST_CASE("constant-volume rescaling") {
  for (double h : {-0.8, -0.4, 0.0, 0.4, 0.8}) {
    auto p = RateProfile::plateau_valley(1440, 20, 2, h).scaled_to_volume(14400);
    CHECK(std::abs(p.total_volume() - 14400) <= 1e-6);
    CHECK(std::abs(quad(p, 0, 1440) - 14400) <= 1e-6 * 14400);
    CHECK(p.lambda_low() == doctest::Approx(0.1 * p.lambda_high()));
  }
  auto mid = RateProfile::plateau_valley(1440, 20, 2, 0.0).scaled_to_volume(14400);
  CHECK(mid.lambda_high() == doctest::Approx(2 * 14400 / (1440 * 1.1)));
  CHECK(mid.lambda_high() == doctest::Approx(18.18).epsilon(1e-3));
  auto up = RateProfile::plateau_valley(1440, 20, 2, 1.0).scaled_to_volume(14400);
  auto down = RateProfile::plateau_valley(1440, 20, 2, -1.0).scaled_to_volume(14400);
  for (double t = 0; t <= 1440; t += 180) {
    CHECK(up.rate_at(t) == doctest::Approx(10));
    CHECK(down.rate_at(t) == doctest::Approx(10));
  }
  for (double d : {10.0, 500.0, 1440.0})
    CHECK(up.best_window(d).volume == doctest::Approx(down.best_window(d).volume));
}
