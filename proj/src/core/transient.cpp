#include "core/transient.hpp"

#include <stdexcept>

#include "core/errors.hpp"

namespace dyncache {

TransientMetrics transient_metrics(const SteadyMetrics& steady, double l) {
  if (!(l >= 1.0)) throw std::invalid_argument("L must be >= 1");
  // Nothing is evicted during the fill, so every occupied slot at the end
  // of the first L requests was one insertion.
  double ins = steady.occupancy / l;
  return {steady.hit_rate + steady.insertion_rate - ins, ins};
}

TransientMetrics transient_metrics(const Catalog& catalog, const PolicyConfig& policy) {
  return transient_metrics(steady_k(catalog, policy), static_cast<double>(policy.l));
}

IntervalAverages interval_averages(const SteadyMetrics& steady,
                                   const TransientMetrics& transient, double l,
                                   double requests) {
  if (!(requests >= l))
    throw precondition_error("interval holds fewer requests than one fill window");
  double rest = requests - l;
  return {(l * transient.hit_rate + rest * steady.hit_rate) / requests,
          (l * transient.insertion_rate + rest * steady.insertion_rate) / requests,
          requests};
}

IntervalAverages interval_averages(const Catalog& catalog, const PolicyConfig& policy,
                                   double requests) {
  SteadyMetrics steady = steady_k(catalog, policy);
  double l = static_cast<double>(policy.l);
  return interval_averages(steady, transient_metrics(steady, l), l, requests);
}

WindowRange transient_ratio_window(const ApproxRegime& regime, int k) {
  if (regime.zipf == ZipfCase::alpha_half) {
    if (k < 1 || k > kMaxApproxK) throw std::invalid_argument("closed forms support 1 <= k <= 20");
    return {0.0, 2.0 * static_cast<double>(regime.n) / k};
  }
  return validity_window(regime, k);
}

double transient_ratio_approx(const ApproxRegime& regime, int k, double l) {
  WindowRange w = transient_ratio_window(regime, k);
  if (regime.zipf == ZipfCase::alpha_half) {
    if (!(l > w.lo)) throw out_of_validity("L > 0", w.lo, l);
    if (!(l < w.hi)) throw out_of_validity("L < 2N/k", w.hi, l);
  } else {
    if (l < w.lo) throw out_of_validity("L >= lower window bound", w.lo, l);
    if (l > w.hi) throw out_of_validity("L <= upper window bound", w.hi, l);
  }
  SteadyMetrics s = approx_steady_unchecked(regime, k, l);
  return (s.hit_rate + s.insertion_rate - s.occupancy / l) / s.hit_rate;
}

}  // namespace dyncache
