#include "core/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rcw_approx.hpp"

namespace dyncache {

const char* to_string(Infeasibility reason) {
  switch (reason) {
    case Infeasibility::none: return "feasible";
    case Infeasibility::target_too_high: return "target_too_high";
    case Infeasibility::transient_too_long: return "transient_too_long";
    case Infeasibility::regime_violation: return "regime_violation";
  }
  return "unknown";
}

SearchGrid SearchGrid::log_spaced(double lo, double hi, std::size_t n, double step) {
  if (!(lo > 0.0 && hi >= lo) || n == 0)
    throw std::invalid_argument("log grid needs 0 < lo <= hi and n >= 1");
  SearchGrid g;
  g.duration_step = step;
  g.capacities.resize(n);
  double a = std::log(lo), z = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    g.capacities[i] = n == 1 ? lo : std::exp(a + (z - a) * double(i) / double(n - 1));
  g.capacities.front() = lo;
  g.capacities.back() = hi;
  return g;
}

SearchGrid SearchGrid::defaults(const Catalog& catalog) {
  return log_spaced(1.0, static_cast<double>(catalog.size()), 200, 1.0);
}

void OptimizationProblem::validate() const {
  if (!catalog) throw std::invalid_argument("problem has no catalog");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(b >= 0.0)) throw std::invalid_argument("b must be >= 0");
  if (!(h_min > 0.0 && h_min < 1.0)) throw std::invalid_argument("h_min must lie in (0, 1)");
  if (grid.capacities.empty()) throw std::invalid_argument("capacity grid is empty");
  if (!(grid.duration_step > 0.0)) throw std::invalid_argument("duration step must be > 0");
}

namespace {

CurvePoint exact_point(const Catalog& catalog, int k, double capacity,
                       std::uint64_t ceiling) {
  CurvePoint pt{capacity, false, Infeasibility::target_too_high, 0.0, {}, {}};
  std::uint64_t l = largest_window_within(catalog, k, capacity, ceiling);
  if (l == 0) return pt;
  pt.lifetime = static_cast<double>(l);
  pt.steady = steady_k(catalog, k, pt.lifetime, pt.lifetime);
  pt.transient = transient_metrics(pt.steady, pt.lifetime);
  pt.usable = true;
  pt.issue = Infeasibility::none;
  return pt;
}

CurvePoint approx_point(const ApproxRegime& regime, int k, double capacity) {
  CurvePoint pt{capacity, false, Infeasibility::regime_violation, 0.0, {}, {}};
  try {
    pt.lifetime = invert_window(regime, k, capacity);
    pt.steady = approx_steady(regime, k, pt.lifetime);
  } catch (const out_of_validity&) {
    return pt;
  }
  pt.transient = transient_metrics(pt.steady, pt.lifetime);
  pt.usable = true;
  pt.issue = Infeasibility::none;
  return pt;
}

std::vector<double> duration_grid(double period, double step) {
  std::vector<double> d;
  auto n = static_cast<std::size_t>(std::floor(period / step + 1e-9));
  d.reserve(n + 1);
  for (std::size_t i = 1; i <= n; ++i) d.push_back(std::min(period, double(i) * step));
  if (d.empty() || d.back() < period) d.push_back(period);
  return d;
}

// Lexicographic (cost, duration, capacity) so the winner does not depend
// on the order candidates are visited.
bool better(const OptimizationResult& a, const OptimizationResult& b) {
  if (!b.feasible) return a.feasible;
  if (!a.feasible) return false;
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.window.duration != b.window.duration) return a.window.duration < b.window.duration;
  return a.capacity < b.capacity;
}

double served_fraction(const CurvePoint& pt, double volume, double total) {
  IntervalAverages avg = interval_averages(pt.steady, pt.transient, pt.lifetime, volume);
  return avg.hit_rate * volume / total;
}

}  // namespace

PolicyCurve PolicyCurve::build(const Catalog& catalog, int k, EvalMode mode,
                               const std::vector<double>& capacities) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (capacities.empty()) throw std::invalid_argument("capacity grid is empty");
  PolicyCurve curve;
  curve.catalog_ = &catalog;
  curve.k_ = k;
  curve.mode_ = mode;
  curve.points_.reserve(capacities.size());
  if (mode == EvalMode::approx) {
    ApproxRegime regime = ApproxRegime::of(catalog);
    if (k > kMaxApproxK) throw std::invalid_argument("closed forms support 1 <= k <= 20");
    for (double c : capacities) curve.points_.push_back(approx_point(regime, k, c));
  } else {
    std::uint64_t ceiling = window_search_ceiling(catalog);
    for (double c : capacities) curve.points_.push_back(exact_point(catalog, k, c, ceiling));
  }
  return curve;
}

OptimizationResult optimize(const PolicyCurve& curve, const RateProfile& profile, double b,
                            double h_min, double duration_step) {
  if (!(b >= 0.0)) throw std::invalid_argument("b must be >= 0");
  if (!(h_min > 0.0 && h_min < 1.0)) throw std::invalid_argument("h_min must lie in (0, 1)");
  if (!(duration_step > 0.0)) throw std::invalid_argument("duration step must be > 0");

  std::vector<double> durations = duration_grid(profile.period(), duration_step);
  std::vector<InstantiationWindow> windows;
  windows.reserve(durations.size());
  for (double d : durations) windows.push_back(profile.best_window(d));
  double total = profile.total_volume();
  const InstantiationWindow& widest = windows.back();

  OptimizationResult best;
  bool any_usable = false, blocked_by_fill = false;
  for (const CurvePoint& pt : curve.points()) {
    if (!pt.usable) continue;
    any_usable = true;
    auto meets = [&](const InstantiationWindow& w) {
      return w.volume >= pt.lifetime && served_fraction(pt, w.volume, total) >= h_min;
    };
    if (!meets(widest)) {
      if (widest.volume < pt.lifetime && pt.steady.hit_rate >= h_min) blocked_by_fill = true;
      continue;
    }
    // Served volume grows with D, so the feasible durations form a suffix.
    auto it = std::partition_point(windows.begin(), windows.end(),
                                   [&](const InstantiationWindow& w) { return !meets(w); });
    OptimizationResult r;
    r.feasible = true;
    r.reason = Infeasibility::none;
    r.window = *it;
    r.capacity = pt.capacity;
    r.lifetime = pt.lifetime;
    r.cost = it->duration * (pt.capacity + b);
    r.served_fraction = served_fraction(pt, it->volume, total);
    if (better(r, best)) best = r;
  }
  if (!best.feasible) {
    // No policy at all can serve h_min of the period's requests.
    bool impossible = widest.volume < 1.0 ||
                      hitrate_upper_bound(curve.catalog(), widest.volume) * widest.volume <
                          h_min * total;
    if (impossible || (!any_usable && curve.mode() == EvalMode::exact))
      best.reason = Infeasibility::target_too_high;
    else if (!any_usable)
      best.reason = Infeasibility::regime_violation;
    else
      best.reason = blocked_by_fill ? Infeasibility::transient_too_long
                                    : Infeasibility::target_too_high;
  }
  return best;
}

OptimizationResult optimize(const OptimizationProblem& problem) {
  problem.validate();
  PolicyCurve curve =
      PolicyCurve::build(*problem.catalog, problem.k, problem.mode, problem.grid.capacities);
  return optimize(curve, problem.profile, problem.b, problem.h_min,
                  problem.grid.duration_step);
}

double hitrate_upper_bound(const Catalog& catalog, double requests) {
  if (!(requests >= 1.0)) throw std::invalid_argument("need at least one request");
  double seen = 0.0;
  for (double lq : catalog.log_complements()) seen -= std::expm1(requests * lq);
  return 1.0 - seen / requests;
}

namespace {

constexpr int kBisectionSteps = 100;

// Smallest D in [0, T] with pred(D), assuming pred is monotone and holds at T.
template <typename Pred>
double smallest_duration(double period, Pred pred) {
  double lo = 0.0, hi = period;
  if (pred(lo)) return lo;
  for (int i = 0; i < kBisectionSteps && hi - lo > 1e-12 * period; ++i) {
    double mid = 0.5 * (lo + hi);
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

double best_volume(const RateProfile& profile, double d) {
  return d <= 0.0 ? 0.0 : profile.best_window(d).volume;
}

}  // namespace

DurationBound lower_bound_duration(const Catalog& catalog, const RateProfile& profile,
                                   double h_min) {
  if (!(h_min > 0.0 && h_min < 1.0)) throw std::invalid_argument("h_min must lie in (0, 1)");
  constexpr double inf = std::numeric_limits<double>::infinity();
  double period = profile.period();
  double total = profile.total_volume();
  double nn = static_cast<double>(catalog.size());

  // Requests R serve at most R minus the number of distinct objects seen.
  auto generic = [&](double d) {
    double r = best_volume(profile, d);
    return r + catalog.survival_sums(r).count >= total * h_min + nn;
  };
  DurationBound out{false, inf, inf};
  if (generic(period)) out.generic_duration = smallest_duration(period, generic);

  auto alpha = catalog.zipf_alpha();
  if (!alpha || (*alpha != 1.0 && *alpha != 0.5)) {
    out.duration = out.generic_duration;
    out.feasible = std::isfinite(out.duration);
    return out;
  }

  // Closed-form lower estimates of the expected number of distinct objects,
  // valid below a cutoff in R.
  double rhs = total * h_min - 1.0;
  double np1 = nn + 1.0;
  double cutoff;
  std::function<double(double)> lhs;
  if (*alpha == 1.0) {
    double lam = std::log(np1) + kEulerGamma;
    cutoff = np1 * lam;
    lhs = [lam](double r) {
      return r <= 0.0 ? 0.0 : r / lam * (std::log(r / lam) + 2.0 * kEulerGamma - 1.0);
    };
  } else {
    cutoff = 2.0 * np1;
    lhs = [np1](double r) {
      return r <= 0.0 ? 0.0
                      : r * r / (4.0 * np1) *
                            (std::log(2.0 * np1 / r) + r / (6.0 * np1) + 1.5 - kEulerGamma);
    };
  }
  auto refined = [&](double d) { return lhs(best_volume(profile, d)) >= rhs; };
  auto past_cutoff = [&](double d) { return best_volume(profile, d) >= cutoff; };
  double d1 = refined(period) ? smallest_duration(period, refined) : inf;
  double d2 = past_cutoff(period) ? smallest_duration(period, past_cutoff) : inf;
  out.duration = std::min(d1, d2);
  out.feasible = std::isfinite(out.duration);
  return out;
}

namespace {

// Smallest capacity whose top-capacity hit-rate bound reaches target, or
// +inf. Zipf 1 and 0.5 use closed-form bounds; other catalogs use the
// exact head sum with linear interpolation inside the next object.
double capacity_for_head(const Catalog& catalog, double target) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double nn = static_cast<double>(catalog.size());
  auto alpha = catalog.zipf_alpha();
  double c;
  if (alpha && *alpha == 1.0) {
    c = std::exp(target * (std::log(nn) + kEulerGamma) - kEulerGamma) - 1.0;
  } else if (alpha && *alpha == 0.5) {
    double root = target * (std::sqrt(nn + 1.0) - 1.0) + std::sqrt(0.5);
    c = root * root - 0.5;
  } else {
    if (target > catalog.head_sum(nn)) return inf;
    std::size_t lo = 0, hi = catalog.size();  // head(lo) < target <= head(hi)
    if (target <= 0.0) return 0.0;
    while (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      (catalog.head_sum(double(mid)) >= target ? hi : lo) = mid;
    }
    c = double(lo) + (target - catalog.head_sum(double(lo))) / catalog.probability(hi);
  }
  c = std::max(c, 0.0);
  return c > nn ? inf : c;
}

}  // namespace

OptimizationResult lower_bound_cost(const Catalog& catalog, const RateProfile& profile,
                                    double b, double h_min, double duration_step) {
  if (!(b >= 0.0)) throw std::invalid_argument("b must be >= 0");
  if (!(duration_step > 0.0)) throw std::invalid_argument("duration step must be > 0");
  OptimizationResult best;
  DurationBound dl = lower_bound_duration(catalog, profile, h_min);
  if (!dl.feasible) return best;

  std::vector<double> durations;
  if (dl.duration > 0.0) durations.push_back(dl.duration);
  for (double d : duration_grid(profile.period(), duration_step))
    if (d > dl.duration) durations.push_back(d);

  double total = profile.total_volume();
  for (double d : durations) {
    InstantiationWindow w = profile.best_window(d);
    if (!(w.volume > 0.0)) continue;
    double target = h_min * total / w.volume;
    if (target > 1.0) continue;
    double c = capacity_for_head(catalog, target);
    if (!std::isfinite(c)) continue;
    OptimizationResult r;
    r.feasible = true;
    r.reason = Infeasibility::none;
    r.window = w;
    r.capacity = c;
    r.cost = d * (c + b);
    r.served_fraction = h_min;
    if (better(r, best)) best = r;
  }
  return best;
}

OptimizationResult always_on_baseline(const Catalog& catalog, int k, double b, double h_min,
                                      const RateProfile& profile) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(b >= 0.0)) throw std::invalid_argument("b must be >= 0");
  if (!(h_min > 0.0 && h_min < 1.0)) throw std::invalid_argument("h_min must lie in (0, 1)");
  OptimizationResult r;
  std::uint64_t l = smallest_window_reaching(catalog, k, h_min, window_search_ceiling(catalog));
  if (l == 0) return r;
  double lf = static_cast<double>(l);
  SteadyMetrics s = steady_k(catalog, k, lf, lf);
  r.feasible = true;
  r.reason = Infeasibility::none;
  r.window = profile.best_window(profile.period());
  r.capacity = s.occupancy;
  r.lifetime = lf;
  r.cost = profile.period() * (s.occupancy + b);
  r.served_fraction = s.hit_rate;
  return r;
}

}  // namespace dyncache
