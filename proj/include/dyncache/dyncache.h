#ifndef DYNCACHE_DYNCACHE_H
#define DYNCACHE_DYNCACHE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DC_API __declspec(dllexport)
#else
#define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
  DC_OK = 0,
  DC_INVALID_ARGUMENT = 1,
  DC_DOMAIN = 2,
  DC_OUT_OF_VALIDITY = 3,
  DC_PRECONDITION = 4,
  DC_UNDERSAMPLED = 5,
  DC_INTERNAL = 6
} dc_status;

typedef enum dc_mode { DC_MODE_EXACT = 0, DC_MODE_APPROX = 1 } dc_mode;

typedef enum dc_infeasibility {
  DC_FEASIBLE = 0,
  DC_TARGET_TOO_HIGH = 1,
  DC_TRANSIENT_TOO_LONG = 2,
  DC_REGIME_VIOLATION = 3
} dc_infeasibility;

typedef enum dc_cache_kind { DC_CACHE_RCW = 0, DC_CACHE_LRU = 1 } dc_cache_kind;

typedef struct dc_catalog dc_catalog;
typedef struct dc_profile dc_profile;
typedef struct dc_curve dc_curve;

typedef struct dc_steady {
  double occupancy;
  double hit_rate;
  double insertion_rate;
} dc_steady;

typedef struct dc_transient {
  double hit_rate;
  double insertion_rate;
} dc_transient;

typedef struct dc_interval {
  double hit_rate;
  double insertion_rate;
  double requests;
} dc_interval;

typedef struct dc_window {
  double t_a;
  double t_d;
  double duration;
  double volume;
} dc_window;

typedef struct dc_result {
  int feasible;
  dc_infeasibility reason;
  dc_window window;
  double capacity;
  double lifetime;
  double cost;
  double served_fraction;
} dc_result;

typedef struct dc_duration_bound {
  int feasible;
  double duration;
  double generic_duration;
} dc_duration_bound;

/* For DC_CACHE_RCW, size is L and window is W; for DC_CACHE_LRU, size is
   the capacity and window is ignored. */
typedef struct dc_cache_spec {
  dc_cache_kind kind;
  int k;
  uint64_t size;
  uint64_t window;
} dc_cache_spec;

typedef struct dc_sim_config {
  uint64_t seed;
  uint64_t total_requests;
  uint64_t warmup_requests;
  uint64_t max_periods;  /* transient runs only */
  uint64_t max_requests; /* transient runs only */
} dc_sim_config;

typedef struct dc_sim_report {
  double hit_rate;
  double insertion_rate;
  double mean_occupancy;
  uint64_t requests_counted;
  uint64_t periods_completed;
  uint64_t seed;
  char generator[32];
} dc_sim_report;

DC_API const char* dc_version(void);
DC_API const char* dc_status_name(dc_status status);
DC_API const char* dc_infeasibility_name(dc_infeasibility reason);
/* Error text from the latest call on this thread; empty after success. */
DC_API const char* dc_last_error(void);

DC_API dc_status dc_catalog_zipf(uint64_t n, double alpha, dc_catalog** out);
DC_API dc_status dc_catalog_from_weights(const double* weights, size_t count,
                                         dc_catalog** out);
DC_API void dc_catalog_free(dc_catalog* catalog);
DC_API uint64_t dc_catalog_size(const dc_catalog* catalog);
DC_API dc_status dc_probability(const dc_catalog* catalog, uint64_t i, double* out);
DC_API dc_status dc_head_sum(const dc_catalog* catalog, double capacity, double* out);
DC_API dc_status dc_survival_sums(const dc_catalog* catalog, double l, double* count,
                                  double* weighted);

DC_API dc_status dc_steady_exact(const dc_catalog* catalog, int k, uint64_t l, uint64_t w,
                                 dc_steady* out);
DC_API dc_status dc_expected_theta(double p, double l, double* out);
DC_API dc_status dc_expected_delta(double p, int k, double w, double* out);
/* Largest L with exact occupancy <= capacity (W = L); 0 if none. */
DC_API dc_status dc_window_for_capacity(const dc_catalog* catalog, int k, double capacity,
                                        uint64_t* out);
/* Smallest L with exact hit rate >= target (W = L); 0 if unreachable. */
DC_API dc_status dc_window_for_hit_rate(const dc_catalog* catalog, int k, double target,
                                        uint64_t* out);

/* Closed forms need a Zipf catalog with alpha 1 or 0.5. */
DC_API dc_status dc_steady_approx(const dc_catalog* catalog, int k, double l,
                                  dc_steady* out);
DC_API dc_status dc_invert_window(const dc_catalog* catalog, int k, double capacity,
                                  double* out);
DC_API dc_status dc_validity_window(const dc_catalog* catalog, int k, double* lo,
                                    double* hi);
/* constant <= 0 selects the default constant. */
DC_API dc_status dc_simple_hit(const dc_catalog* catalog, int k, double capacity,
                               double constant, double* out);

DC_API dc_status dc_transient_from_steady(const dc_steady* steady, double l,
                                          dc_transient* out);
DC_API dc_status dc_interval_from_steady(const dc_steady* steady, double l,
                                         double requests, dc_interval* out);
DC_API dc_status dc_transient_ratio_approx(const dc_catalog* catalog, int k, double l,
                                           double* out);

DC_API dc_status dc_profile_triangular(double period, double lambda_high, dc_profile** out);
DC_API dc_status dc_profile_plateau_valley(double period, double lambda_high,
                                           double lambda_low, double h, dc_profile** out);
DC_API dc_status dc_profile_scaled(const dc_profile* profile, double reference_volume,
                                   dc_profile** out);
DC_API void dc_profile_free(dc_profile* profile);
DC_API dc_status dc_profile_rate(const dc_profile* profile, double t, double* out);
DC_API dc_status dc_profile_volume(const dc_profile* profile, double t1, double t2,
                                   double* out);
DC_API double dc_profile_total_volume(const dc_profile* profile);
DC_API dc_status dc_profile_best_window(const dc_profile* profile, double duration,
                                        dc_window* out);

/* n log-spaced capacities in [lo, hi] written to out[0..n). */
DC_API dc_status dc_capacity_grid(double lo, double hi, size_t n, double* out);
/* Model outputs per capacity; reusable across profiles, b and h_min. */
DC_API dc_status dc_curve_build(const dc_catalog* catalog, int k, dc_mode mode,
                                const double* capacities, size_t count, dc_curve** out);
DC_API void dc_curve_free(dc_curve* curve);
DC_API dc_status dc_optimize(const dc_curve* curve, const dc_profile* profile, double b,
                             double h_min, double duration_step, dc_result* out);
DC_API dc_status dc_lower_bound_cost(const dc_catalog* catalog, const dc_profile* profile,
                                     double b, double h_min, double duration_step,
                                     dc_result* out);
DC_API dc_status dc_lower_bound_duration(const dc_catalog* catalog,
                                         const dc_profile* profile, double h_min,
                                         dc_duration_bound* out);
DC_API dc_status dc_always_on(const dc_catalog* catalog, int k, double b, double h_min,
                              const dc_profile* profile, dc_result* out);
DC_API dc_status dc_hitrate_upper_bound(const dc_catalog* catalog, double requests,
                                        double* out);

DC_API dc_sim_config dc_sim_config_default(void);
DC_API dc_status dc_simulate_steady(const dc_catalog* catalog, const dc_cache_spec* cache,
                                    const dc_sim_config* config, dc_sim_report* out);
DC_API dc_status dc_simulate_transient(const dc_catalog* catalog, const dc_cache_spec* cache,
                                       const dc_sim_config* config, dc_sim_report* out);

#ifdef __cplusplus
}
#endif

#endif
