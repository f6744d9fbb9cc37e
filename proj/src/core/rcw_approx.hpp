#pragma once

#include <cstdint>
#include <optional>

#include "core/popularity.hpp"
#include "core/rcw_exact.hpp"

namespace dyncache {

enum class ZipfCase { alpha_one, alpha_half };

// Zipf catalog shape for which closed forms exist. All closed forms assume
// W = L.
struct ApproxRegime {
  ZipfCase zipf = ZipfCase::alpha_one;
  std::uint64_t n = 0;

  // Throws std::invalid_argument unless the catalog is Zipf with alpha 1 or 0.5.
  static ApproxRegime of(const Catalog& catalog);
  // ln N + gamma for alpha 1, 2 sqrt(N) for alpha 0.5.
  double omega() const;
};

inline constexpr int kMaxApproxK = 20;

struct WindowRange {
  double lo;
  double hi;
};

// Range of L over which the closed forms are trusted.
WindowRange validity_window(const ApproxRegime& regime, int k);

// Closed-form (A, H, I). Throws out_of_validity outside validity_window.
SteadyMetrics approx_steady(const ApproxRegime& regime, int k, double l);
// Same formulas without the range check.
SteadyMetrics approx_steady_unchecked(const ApproxRegime& regime, int k, double l);

// Real-valued L with approximate occupancy equal to capacity.
double invert_window(const ApproxRegime& regime, int k, double capacity);
std::uint64_t invert_window_rounded(const ApproxRegime& regime, int k, double capacity);

// One-line hit-rate estimates. A default constant is used when none is given.
double simple_hit_approximation(const ApproxRegime& regime, int k, double capacity,
                                std::optional<double> constant = std::nullopt);

// Alternating binomial-log sums appearing in the k >= 2 forms.
double binomial_log_sum(int k);         // sum_{j=2..k} (-1)^j C(k,j) j ln j
double binomial_log_sum_plain(int k);   // sum_{j=2..k} (-1)^j C(k,j) ln j
double binomial_log_sum_square(int k);  // sum_{j=2..k} (-1)^(j+1) C(k,j) j^2 ln j

}  // namespace dyncache
