#pragma once

#include <cstdint>

#include "core/popularity.hpp"

namespace dyncache {

// Cache on k-th request with an L-request lifetime window and a W-request
// candidate window. W is ignored when k == 1.
struct PolicyConfig {
  int k = 1;
  std::uint64_t l = 1;
  std::uint64_t w = 1;

  static PolicyConfig same_window(int k, std::uint64_t l) { return {k, l, l}; }
  void validate() const;
};

struct SteadyMetrics {
  double occupancy;       // A
  double hit_rate;        // H
  double insertion_rate;  // I
};

SteadyMetrics steady_k1(const Catalog& catalog, double l);

double expected_theta(double p, double l);
double expected_delta(double p, int k, double w);

// Real-valued L and W so the same code serves the optimizer's approximate
// mode; integer policies go through the PolicyConfig overload.
SteadyMetrics steady_k(const Catalog& catalog, int k, double l, double w);
SteadyMetrics steady_k(const Catalog& catalog, const PolicyConfig& policy);

// Largest integer L in [1, upper] with A(L) <= capacity under W = L.
// Returns 0 if even L = 1 overshoots.
std::uint64_t largest_window_within(const Catalog& catalog, int k, double capacity,
                                    std::uint64_t upper);

// Smallest integer L in [1, upper] with H(L) >= target under W = L, or 0.
std::uint64_t smallest_window_reaching(const Catalog& catalog, int k, double target,
                                       std::uint64_t upper);

// 10 N (ln N + gamma), the search ceiling used for window inversions.
std::uint64_t window_search_ceiling(const Catalog& catalog);

}  // namespace dyncache
