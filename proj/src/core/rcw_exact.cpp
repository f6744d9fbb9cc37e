#include "core/rcw_exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyncache {

void PolicyConfig::validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (l < 1) throw std::invalid_argument("L must be >= 1");
  if (k >= 2 && w < 1) throw std::invalid_argument("W must be >= 1 when k >= 2");
}

SteadyMetrics steady_k1(const Catalog& catalog, double l) {
  SurvivalSums s = catalog.survival_sums(l);
  double n = static_cast<double>(catalog.size());
  return {n - s.count, 1.0 - s.weighted, s.weighted};
}

double expected_theta(double p, double l) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("p must lie in (0,1)");
  if (!(l >= 1.0)) throw std::invalid_argument("L must be >= 1");
  double lq = std::log1p(-p);
  return -std::expm1(l * lq) / (p * std::exp(l * lq));
}

double expected_delta(double p, int k, double w) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("p must lie in (0,1)");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k == 1) return 1.0 / p;
  if (!(w >= 1.0)) throw std::invalid_argument("W must be >= 1 when k >= 2");
  double q = std::exp(w * std::log1p(-p));
  double s = -std::expm1(w * std::log1p(-p));
  double g = q > 0.0 ? -std::expm1(k * std::log1p(-q)) / q : static_cast<double>(k);
  return g / (p * std::pow(s, k - 1));
}

namespace {

// Per object, with x = (1-p)^L, the cycle "in cache, then waiting for k
// qualifying requests" gives occupancy (1-x)/((1-x)+t) and insertion rate
// p x/((1-x)+t), where t = x g / s^(k-1), s = 1-(1-p)^W and
// g = (1-(1-q)^k)/q with q = (1-p)^W. t is built in log space so that
// tiny s or x do not produce 0/0.
struct ObjectTerms {
  double occupancy;
  double insertion;
};

ObjectTerms object_terms(double p, double lq, int k, double l, double w) {
  if (p >= 1.0) return {1.0, 0.0};
  double log_x = l * lq;
  double one_minus_x = -std::expm1(log_x);
  double x = std::exp(log_x);
  if (k == 1) return {one_minus_x, p * x};
  bool same = w == l;
  double q = same ? x : std::exp(w * lq);
  double s = same ? one_minus_x : -std::expm1(w * lq);
  if (s <= 0.0) return {0.0, 0.0};
  double log_s = q < 0.5 ? std::log1p(-q) : std::log(s);
  double g = q > 0.0 ? -std::expm1(k * log_s) / q : static_cast<double>(k);
  double t = std::exp(log_x + std::log(g) - (k - 1) * log_s);
  double denom = one_minus_x + t;
  if (denom <= 0.0) return {0.0, 0.0};
  double occ = one_minus_x / denom;
  double ins = std::isfinite(t) ? p * x / denom : 0.0;
  return {occ, ins};
}

}  // namespace

SteadyMetrics steady_k(const Catalog& catalog, int k, double l, double w) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(l >= 0.0)) throw std::invalid_argument("L must be >= 0");
  if (k >= 2 && !(w >= 1.0)) throw std::invalid_argument("W must be >= 1 when k >= 2");
  if (k == 1) return steady_k1(catalog, l);
  const auto& p = catalog.probabilities();
  const auto& lq = catalog.log_complements();
  SteadyMetrics m{0.0, 0.0, 0.0};
  for (std::size_t i = p.size(); i-- > 0;) {
    ObjectTerms o = object_terms(p[i], lq[i], k, l, w);
    m.occupancy += o.occupancy;
    m.hit_rate += p[i] * o.occupancy;
    m.insertion_rate += o.insertion;
  }
  return m;
}

SteadyMetrics steady_k(const Catalog& catalog, const PolicyConfig& policy) {
  policy.validate();
  return steady_k(catalog, policy.k, static_cast<double>(policy.l),
                  static_cast<double>(policy.w));
}

namespace {

// Largest l in [lo, hi) whose value is still below the target, given that
// value(lo) is below and value(hi) is not. The value must increase with l.
// Illinois steps on (log l, log value), with a bisection step whenever two
// steps fail to halve the bracket. Same bracket invariant as bisection.
template <typename Value, typename Below>
std::uint64_t last_below(Value value, Below below, double target, std::uint64_t lo,
                         double vlo, std::uint64_t hi, double vhi) {
  auto gap = [target](double v) {
    return v > 0.0 && target > 0.0 ? std::log(v) - std::log(target) : v - target;
  };
  double glo = gap(vlo), ghi = gap(vhi);
  int side = 0;
  std::uint64_t width_two_ago = hi - lo, width_one_ago = hi - lo;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (2 * (hi - lo) <= width_two_ago && glo < ghi) {
      double ulo = std::log(static_cast<double>(lo)), uhi = std::log(static_cast<double>(hi));
      double u = ulo + (uhi - ulo) * glo / (glo - ghi);
      double m = std::exp(u);
      if (std::isfinite(m))
        mid = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::llround(m)), lo + 1,
                                         hi - 1);
    }
    width_two_ago = width_one_ago;
    width_one_ago = hi - lo;
    double v = value(mid);
    if (below(v)) {
      lo = mid;
      glo = gap(v);
      if (side == -1) ghi /= 2.0;
      side = -1;
    } else {
      hi = mid;
      ghi = gap(v);
      if (side == 1) glo /= 2.0;
      side = 1;
    }
  }
  return lo;
}

}  // namespace

std::uint64_t largest_window_within(const Catalog& catalog, int k, double capacity,
                                    std::uint64_t upper) {
  auto occ = [&](std::uint64_t l) {
    double d = static_cast<double>(l);
    return steady_k(catalog, k, d, d).occupancy;
  };
  capacity *= 1.0 + 1e-12;  // sum of p can round above 1
  double first = occ(1);
  if (first > capacity) return 0;
  double last = occ(upper);
  if (last <= capacity) return upper;
  return last_below(occ, [capacity](double v) { return v <= capacity; }, capacity, 1, first,
                    upper, last);
}

std::uint64_t smallest_window_reaching(const Catalog& catalog, int k, double target,
                                       std::uint64_t upper) {
  auto hit = [&](std::uint64_t l) {
    double d = static_cast<double>(l);
    return steady_k(catalog, k, d, d).hit_rate;
  };
  double last = hit(upper);
  if (last < target) return 0;
  double first = hit(1);
  if (first >= target) return 1;
  return last_below(hit, [target](double v) { return v < target; }, target, 1, first, upper,
                    last) + 1;
}

std::uint64_t window_search_ceiling(const Catalog& catalog) {
  double n = static_cast<double>(catalog.size());
  return static_cast<std::uint64_t>(std::ceil(10.0 * n * (std::log(n) + kEulerGamma)));
}

}  // namespace dyncache
