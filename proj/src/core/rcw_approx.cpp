#include "core/rcw_approx.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace dyncache {

namespace {

constexpr double kLn2 = 0.693147180559945309;

long double binom(int n, int r) {
  long double c = 1.0L;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

void check_k(int k) {
  if (k < 1 || k > kMaxApproxK)
    throw std::invalid_argument("closed forms support 1 <= k <= 20");
}

// Positive and negative terms are accumulated apart and combined once.
template <typename Term>
double alternating_sum(int first, int last, Term term) {
  long double pos = 0.0L, neg = 0.0L;
  for (int j = first; j <= last; ++j) {
    long double v = term(j);
    (v >= 0.0L ? pos : neg) += v;
  }
  return static_cast<double>(pos + neg);
}

long double sign(int j) { return (j % 2 == 0) ? 1.0L : -1.0L; }
long double ln(int j) { return std::log(static_cast<long double>(j)); }

}  // namespace

double binomial_log_sum(int k) {
  return alternating_sum(2, k, [k](int j) { return sign(j) * binom(k, j) * j * ln(j); });
}

double binomial_log_sum_plain(int k) {
  return alternating_sum(2, k, [k](int j) { return sign(j) * binom(k, j) * ln(j); });
}

double binomial_log_sum_square(int k) {
  return alternating_sum(
      2, k, [k](int j) { return -sign(j) * binom(k, j) * j * j * ln(j); });
}

ApproxRegime ApproxRegime::of(const Catalog& catalog) {
  auto alpha = catalog.zipf_alpha();
  if (!alpha) throw std::invalid_argument("closed forms need a Zipf catalog");
  if (*alpha == 1.0) return {ZipfCase::alpha_one, catalog.size()};
  if (*alpha == 0.5) return {ZipfCase::alpha_half, catalog.size()};
  throw std::invalid_argument("closed forms exist only for alpha = 1 and alpha = 0.5");
}

double ApproxRegime::omega() const {
  double nn = static_cast<double>(n);
  return zipf == ZipfCase::alpha_one ? std::log(nn) + kEulerGamma : 2.0 * std::sqrt(nn);
}

WindowRange validity_window(const ApproxRegime& regime, int k) {
  check_k(k);
  double nn = static_cast<double>(regime.n);
  if (regime.zipf == ZipfCase::alpha_one) {
    double lam = regime.omega();
    return {5.0 * k * lam, 0.45 * nn * lam / k};
  }
  return {14.0 * k * std::sqrt(nn), 1.1 * nn / k};
}

namespace {

constexpr std::uint64_t kMinApproxN = 1000;

void check_regime(const ApproxRegime& regime, int k, double l) {
  check_k(k);
  if (regime.n < kMinApproxN)
    throw out_of_validity("N >= 1000", double(kMinApproxN), double(regime.n));
  WindowRange r = validity_window(regime, k);
  if (l < r.lo) throw out_of_validity("L >= lower window bound", r.lo, l);
  if (l > r.hi) throw out_of_validity("L <= upper window bound", r.hi, l);
}

SteadyMetrics alpha_one(double nn, int k, double l) {
  double lam = std::log(nn) + kEulerGamma;
  double u = l / lam;
  double tail = l / (nn * lam);
  if (k == 1) {
    double a = u * (std::log(nn) - std::log(u) + 1.0 - kEulerGamma + tail / 2.0);
    double h = (std::log(u) + 2.0 * kEulerGamma - tail) / lam;
    return {a, h, 1.0 - h};
  }
  if (k == 2) {
    return {(2.0 * kLn2 - tail) * u, (std::log(u) + 2.0 * kEulerGamma - kLn2) / lam,
            (kLn2 - tail) / lam};
  }
  double ins = alternating_sum(
      2, k, [k](int j) { return sign(j) * binom(k - 1, j - 1) * std::log(j); });
  return {binomial_log_sum(k) * u,
          (std::log(u) + 2.0 * kEulerGamma - binomial_log_sum_plain(k)) / lam, ins / lam};
}

SteadyMetrics alpha_half(double nn, int k, double l) {
  double r = l / nn;
  if (k == 1) {
    double a = l * (1.0 - r / 4.0 * (std::log(2.0 / r) + r / 6.0 + 1.5 - kEulerGamma));
    double h = r / 2.0 * (std::log(2.0 / r) + r / 4.0 + 1.0 - kEulerGamma);
    return {a, h, 1.0 - h};
  }
  if (k == 2) {
    double a = l * l / (2.0 * nn) * (std::log(1.0 / (2.0 * r)) + r / 2.0 + 1.5 - kEulerGamma);
    double h = r * (kLn2 - r / 4.0);
    double i = r / 2.0 * (std::log(1.0 / (2.0 * r)) + 0.75 * r + 1.0 - kEulerGamma);
    return {a, h, i};
  }
  double h = r / 2.0 * binomial_log_sum(k);
  if (k == 3) {
    double ln3 = std::log(3.0);
    double a = (9.0 * ln3 - 12.0 * kLn2 - r) * l * l / (4.0 * nn);
    double i = r / 2.0 * (3.0 * ln3 - 4.0 * kLn2 - r / 2.0);
    return {a, h, i};
  }
  double a = binomial_log_sum_square(k) * l * l / (4.0 * nn);
  double i = r / 2.0 * alternating_sum(1, k - 1, [k](int j) {
               return sign(j) * binom(k - 1, j) * (j + 1) * ln(j + 1);
             });
  return {a, h, i};
}

}  // namespace

SteadyMetrics approx_steady_unchecked(const ApproxRegime& regime, int k, double l) {
  check_k(k);
  if (!(l > 0.0)) throw std::invalid_argument("L must be > 0");
  double nn = static_cast<double>(regime.n);
  return regime.zipf == ZipfCase::alpha_one ? alpha_one(nn, k, l) : alpha_half(nn, k, l);
}

SteadyMetrics approx_steady(const ApproxRegime& regime, int k, double l) {
  check_regime(regime, k, l);
  return approx_steady_unchecked(regime, k, l);
}

namespace {

double invert_alpha_one(double nn, int k, double c) {
  double lam = std::log(nn) + kEulerGamma;
  if (k == 1) {
    double beta = std::log(c) / std::log(nn);
    if (!(beta > 0.0 && beta < 1.0))
      throw out_of_validity("0 < log C / log N < 1", 1.0, beta);
    double u = (1.0 - beta) * std::log(nn);
    double denom = (u + kEulerGamma) * (u - kEulerGamma + std::log(u + kEulerGamma));
    if (!(denom > 0.0)) throw out_of_validity("capacity inversion denominator > 0", 0.0, denom);
    return std::pow(nn, beta) * lam * (u + kEulerGamma - 1.0) / denom;
  }
  if (k == 2) return c * lam * (1.0 + c / (4.0 * kLn2 * kLn2 * nn)) / (2.0 * kLn2);
  return c * lam / binomial_log_sum(k);
}

double invert_alpha_half(double nn, int k, double c) {
  double f = c / nn;
  if (!(f > 0.0 && f < 1.0)) throw out_of_validity("0 < C/N < 1", 1.0, f);
  double s = std::sqrt(f);
  double disc, l;
  switch (k) {
    case 1:
      disc = (1.0 + f / 4.0) * (1.0 + f / 4.0) - f * (std::log(2.0 / f) + 1.5 - kEulerGamma);
      if (disc < 0.0) throw out_of_validity("capacity inversion discriminant >= 0", 0.0, disc);
      l = 2.0 * f * nn / (1.0 - f / 4.0 + std::sqrt(disc));
      break;
    case 2:
      disc = (3.0 + s / 2.0) * (3.0 + s / 2.0) -
             8.0 * (std::log(2.0 * s) - s / 2.0 + 0.5 + kEulerGamma);
      if (disc < 0.0) throw out_of_validity("capacity inversion discriminant >= 0", 0.0, disc);
      l = 4.0 * s * nn / (1.0 - s / 2.0 + std::sqrt(disc));
      break;
    case 3: {
      double t = 1.0 + 2.0 * s;
      disc = (s - 1.0) * (s - 1.0) - t * (t - 9.0 * std::log(3.0) + 12.0 * kLn2);
      if (disc < 0.0) throw out_of_validity("capacity inversion discriminant >= 0", 0.0, disc);
      l = 2.0 * s * t * nn / (3.0 * s + std::sqrt(disc));
      break;
    }
    default:
      l = 2.0 * nn * std::sqrt(f / binomial_log_sum_square(k));
  }
  return l;
}

// Accepted inversions must land inside the window and reproduce the
// capacity through the forward formula.
constexpr double kInversionTolerance = 0.05;

}  // namespace

double invert_window(const ApproxRegime& regime, int k, double capacity) {
  check_k(k);
  if (!(capacity > 0.0)) throw std::invalid_argument("capacity must be > 0");
  double nn = static_cast<double>(regime.n);
  double l = regime.zipf == ZipfCase::alpha_one ? invert_alpha_one(nn, k, capacity)
                                                : invert_alpha_half(nn, k, capacity);
  if (!(l > 0.0) || !std::isfinite(l)) throw out_of_validity("inverted L > 0", 0.0, l);
  check_regime(regime, k, l);
  double a = approx_steady_unchecked(regime, k, l).occupancy;
  double err = std::abs(a - capacity) / capacity;
  if (err > kInversionTolerance)
    throw out_of_validity("|A(L) - C|/C <= 0.05", kInversionTolerance, err);
  return l;
}

std::uint64_t invert_window_rounded(const ApproxRegime& regime, int k, double capacity) {
  double l = std::round(invert_window(regime, k, capacity));
  return l < 1.0 ? 1 : static_cast<std::uint64_t>(l);
}

double simple_hit_approximation(const ApproxRegime& regime, int k, double capacity,
                                std::optional<double> constant) {
  double nn = static_cast<double>(regime.n);
  if (!(capacity > 0.0 && capacity < nn))
    throw std::invalid_argument("capacity must lie in (0, N)");
  if (regime.zipf == ZipfCase::alpha_one) {
    if (k != 1) throw std::invalid_argument("no simple form for alpha = 1 with k >= 2");
    double beta = std::log(capacity) / std::log(nn);
    double c = constant.value_or(1.0 / 3.0);
    return beta - c * (1.0 - beta) / (2.0 - beta);
  }
  double f = capacity / nn;
  if (k == 1) return f / 2.0 * std::log(constant.value_or(4.5) / f);
  return constant.value_or(0.7) * std::sqrt(f);
}

}  // namespace dyncache
