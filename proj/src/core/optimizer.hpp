#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "core/popularity.hpp"
#include "core/rcw_exact.hpp"
#include "core/transient.hpp"
#include "core/workload.hpp"

namespace dyncache {

enum class EvalMode { exact, approx };

enum class Infeasibility {
  none,
  target_too_high,      // no capacity/duration on the grid reaches h_min
  transient_too_long,   // some capacity would do, but its fill window exceeds the volume
  regime_violation,     // closed forms unusable for every grid capacity
};

const char* to_string(Infeasibility reason);

struct SearchGrid {
  std::vector<double> capacities;
  double duration_step = 1.0;

  // n log-spaced capacities in [lo, hi].
  static SearchGrid log_spaced(double lo, double hi, std::size_t n, double step = 1.0);
  static SearchGrid defaults(const Catalog& catalog);
};

struct OptimizationProblem {
  std::shared_ptr<const Catalog> catalog;
  RateProfile profile = RateProfile::triangular(kDefaultPeriod, kDefaultLambdaHigh);
  int k = 1;
  double b = 500.0;
  double h_min = 0.4;
  EvalMode mode = EvalMode::exact;
  SearchGrid grid;

  void validate() const;
};

struct OptimizationResult {
  bool feasible = false;
  Infeasibility reason = Infeasibility::target_too_high;
  InstantiationWindow window{0.0, 0.0, 0.0, 0.0};
  double capacity = 0.0;
  double lifetime = 0.0;  // L; real-valued in approximate mode
  double cost = 0.0;
  double served_fraction = 0.0;
};

// Model outputs for one capacity. Independent of the rate profile, so a
// curve can be reused across b, h_min and profile sweeps.
struct CurvePoint {
  double capacity;
  bool usable;          // false if the capacity has no valid L
  Infeasibility issue;  // why not usable
  double lifetime;
  SteadyMetrics steady;
  TransientMetrics transient;
};

// Keeps a reference to the catalog, which must outlive the curve.
class PolicyCurve {
 public:
  static PolicyCurve build(const Catalog& catalog, int k, EvalMode mode,
                           const std::vector<double>& capacities);

  const Catalog& catalog() const noexcept { return *catalog_; }
  int k() const noexcept { return k_; }
  EvalMode mode() const noexcept { return mode_; }
  const std::vector<CurvePoint>& points() const noexcept { return points_; }

 private:
  const Catalog* catalog_ = nullptr;
  int k_ = 1;
  EvalMode mode_ = EvalMode::exact;
  std::vector<CurvePoint> points_;
};

// Grid search over (capacity, duration) for the cheapest window meeting h_min.
OptimizationResult optimize(const PolicyCurve& curve, const RateProfile& profile, double b,
                            double h_min, double duration_step = 1.0);
OptimizationResult optimize(const OptimizationProblem& problem);

// Best achievable hit rate over R requests starting cold: every distinct
// object costs at least one miss.
double hitrate_upper_bound(const Catalog& catalog, double requests);

struct DurationBound {
  bool feasible;
  double duration;  // min of the refined and generic bounds when both apply
  double generic_duration;
};

DurationBound lower_bound_duration(const Catalog& catalog, const RateProfile& profile,
                                   double h_min);

// Policy-independent lower bound on the cost.
OptimizationResult lower_bound_cost(const Catalog& catalog, const RateProfile& profile,
                                    double b, double h_min, double duration_step = 1.0);

// Cache kept allocated for the whole period, sized for steady hit rate h_min.
OptimizationResult always_on_baseline(const Catalog& catalog, int k, double b, double h_min,
                                      const RateProfile& profile);

}  // namespace dyncache
