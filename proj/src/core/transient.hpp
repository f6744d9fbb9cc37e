#pragma once

#include "core/popularity.hpp"
#include "core/rcw_approx.hpp"
#include "core/rcw_exact.hpp"

namespace dyncache {

// Averages over the first L requests after the cache is allocated empty.
// For k >= 2 candidate counts are assumed to be kept outside the cache
// while it is deallocated.
struct TransientMetrics {
  double hit_rate;
  double insertion_rate;
};

struct IntervalAverages {
  double hit_rate;
  double insertion_rate;
  double requests;
};

TransientMetrics transient_metrics(const SteadyMetrics& steady, double l);
TransientMetrics transient_metrics(const Catalog& catalog, const PolicyConfig& policy);

// Mean over an interval of `requests` expected requests starting with a fill.
IntervalAverages interval_averages(const SteadyMetrics& steady,
                                   const TransientMetrics& transient, double l,
                                   double requests);
IntervalAverages interval_averages(const Catalog& catalog, const PolicyConfig& policy,
                                   double requests);

// Range of L accepted by transient_ratio_approx.
WindowRange transient_ratio_window(const ApproxRegime& regime, int k);

// Transient over steady hit rate from the closed forms, W = L.
double transient_ratio_approx(const ApproxRegime& regime, int k, double l);

}  // namespace dyncache
