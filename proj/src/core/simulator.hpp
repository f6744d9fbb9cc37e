#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "core/popularity.hpp"
#include "core/rcw_exact.hpp"

namespace dyncache {

// Fixed-capacity LRU cache with cache-on-k-th-request admission. While the
// cache is full the candidate window is the request age of the LRU tail.
struct LruPolicy {
  std::uint64_t capacity = 1;
  int k = 1;
};

using CachePolicy = std::variant<PolicyConfig, LruPolicy>;

struct TransientBudget {
  std::uint64_t max_periods = 2000;
  std::uint64_t max_requests = 6'000'000;
};

struct SimConfig {
  std::uint64_t seed = 1;
  std::uint64_t total_requests = 6'000'000;
  std::uint64_t warmup_requests = 2'000'000;
  std::optional<TransientBudget> transient;

  void validate() const;
};

struct SimReport {
  double hit_rate = 0.0;
  double insertion_rate = 0.0;
  double mean_occupancy = 0.0;
  std::uint64_t requests_counted = 0;
  std::uint64_t periods_completed = 0;
  std::uint64_t seed = 0;
  std::string generator;
};

inline constexpr const char* kGeneratorName = "mt19937_64";

SimReport simulate_rcw_steady(const Catalog& catalog, const PolicyConfig& policy,
                              const SimConfig& config);
SimReport simulate_lru_steady(const Catalog& catalog, const LruPolicy& policy,
                              const SimConfig& config);
SimReport simulate_steady(const Catalog& catalog, const CachePolicy& policy,
                          const SimConfig& config);

// Repeated fills of an emptied cache, measured over complete fills only.
// RCW: the fill is the first L requests after emptying. LRU: the fill ends
// when the cache is full again. Candidate counts survive the emptying.
// Throws undersampled_error if the budget ends before one fill completes.
SimReport simulate_transient(const Catalog& catalog, const CachePolicy& policy,
                             const SimConfig& config);

}  // namespace dyncache
