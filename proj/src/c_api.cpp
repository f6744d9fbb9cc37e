#include "dyncache/dyncache.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/optimizer.hpp"
#include "core/popularity.hpp"
#include "core/rcw_approx.hpp"
#include "core/rcw_exact.hpp"
#include "core/simulator.hpp"
#include "core/transient.hpp"
#include "core/workload.hpp"

struct dc_catalog {
  std::shared_ptr<const dyncache::Catalog> impl;
};

struct dc_profile {
  dyncache::RateProfile impl;
};

struct dc_curve {
  std::shared_ptr<const dyncache::Catalog> catalog;  // keeps impl's catalog alive
  dyncache::PolicyCurve impl;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
dc_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return DC_OK;
  } catch (const dyncache::out_of_validity& e) {
    last_error = e.what();
    return DC_OUT_OF_VALIDITY;
  } catch (const dyncache::precondition_error& e) {
    last_error = e.what();
    return DC_PRECONDITION;
  } catch (const dyncache::undersampled_error& e) {
    last_error = e.what();
    return DC_UNDERSAMPLED;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return DC_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return DC_DOMAIN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DC_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DC_INTERNAL;
  }
}

template <typename T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

dc_steady to_c(const dyncache::SteadyMetrics& s) {
  return {s.occupancy, s.hit_rate, s.insertion_rate};
}

dyncache::SteadyMetrics from_c(const dc_steady& s) {
  return {s.occupancy, s.hit_rate, s.insertion_rate};
}

dc_window to_c(const dyncache::InstantiationWindow& w) {
  return {w.t_a, w.t_d, w.duration, w.volume};
}

dc_result to_c(const dyncache::OptimizationResult& r) {
  return {r.feasible ? 1 : 0,
          static_cast<dc_infeasibility>(r.reason),
          to_c(r.window),
          r.capacity,
          r.lifetime,
          r.cost,
          r.served_fraction};
}

dyncache::CachePolicy to_policy(const dc_cache_spec& spec) {
  if (spec.kind == DC_CACHE_LRU) return dyncache::LruPolicy{spec.size, spec.k};
  if (spec.kind != DC_CACHE_RCW) throw std::invalid_argument("unknown cache kind");
  dyncache::PolicyConfig p{spec.k, spec.size, spec.window};
  p.validate();
  return p;
}

dyncache::SimConfig to_config(const dc_sim_config& c, bool transient) {
  dyncache::SimConfig cfg;
  cfg.seed = c.seed;
  cfg.total_requests = c.total_requests;
  cfg.warmup_requests = c.warmup_requests;
  if (transient) cfg.transient = dyncache::TransientBudget{c.max_periods, c.max_requests};
  return cfg;
}

void fill_report(const dyncache::SimReport& r, dc_sim_report* out) {
  out->hit_rate = r.hit_rate;
  out->insertion_rate = r.insertion_rate;
  out->mean_occupancy = r.mean_occupancy;
  out->requests_counted = r.requests_counted;
  out->periods_completed = r.periods_completed;
  out->seed = r.seed;
  std::memset(out->generator, 0, sizeof out->generator);
  std::strncpy(out->generator, r.generator.c_str(), sizeof out->generator - 1);
}

}  // namespace

extern "C" {

const char* dc_version(void) { return "1.0.0"; }

const char* dc_status_name(dc_status status) {
  switch (status) {
    case DC_OK: return "ok";
    case DC_INVALID_ARGUMENT: return "invalid_argument";
    case DC_DOMAIN: return "domain";
    case DC_OUT_OF_VALIDITY: return "out_of_validity";
    case DC_PRECONDITION: return "precondition";
    case DC_UNDERSAMPLED: return "undersampled";
    case DC_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* dc_infeasibility_name(dc_infeasibility reason) {
  return dyncache::to_string(static_cast<dyncache::Infeasibility>(reason));
}

const char* dc_last_error(void) { return last_error.c_str(); }

dc_status dc_catalog_zipf(uint64_t n, double alpha, dc_catalog** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto cat = std::make_shared<const dyncache::Catalog>(dyncache::Catalog::zipf(n, alpha));
    *out = new dc_catalog{std::move(cat)};
  });
}

dc_status dc_catalog_from_weights(const double* weights, size_t count, dc_catalog** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (count > 0) require(weights, "weights");
    auto cat = std::make_shared<const dyncache::Catalog>(
        dyncache::Catalog::from_weights(std::vector<double>(weights, weights + count)));
    *out = new dc_catalog{std::move(cat)};
  });
}

void dc_catalog_free(dc_catalog* catalog) { delete catalog; }

uint64_t dc_catalog_size(const dc_catalog* catalog) {
  return catalog ? catalog->impl->size() : 0;
}

dc_status dc_probability(const dc_catalog* catalog, uint64_t i, double* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    *out = catalog->impl->probability(i);
  });
}

dc_status dc_head_sum(const dc_catalog* catalog, double capacity, double* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    *out = catalog->impl->head_sum(capacity);
  });
}

dc_status dc_survival_sums(const dc_catalog* catalog, double l, double* count,
                           double* weighted) {
  return guarded([&] {
    require(catalog, "catalog");
    require(count, "count");
    require(weighted, "weighted");
    auto s = catalog->impl->survival_sums(l);
    *count = s.count;
    *weighted = s.weighted;
  });
}

dc_status dc_steady_exact(const dc_catalog* catalog, int k, uint64_t l, uint64_t w,
                          dc_steady* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    *out = to_c(dyncache::steady_k(*catalog->impl, dyncache::PolicyConfig{k, l, w}));
  });
}

dc_status dc_expected_theta(double p, double l, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = dyncache::expected_theta(p, l);
  });
}

dc_status dc_expected_delta(double p, int k, double w, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = dyncache::expected_delta(p, k, w);
  });
}

dc_status dc_window_for_capacity(const dc_catalog* catalog, int k, double capacity,
                                 uint64_t* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const auto& cat = *catalog->impl;
    *out = dyncache::largest_window_within(cat, k, capacity,
                                           dyncache::window_search_ceiling(cat));
  });
}

dc_status dc_window_for_hit_rate(const dc_catalog* catalog, int k, double target,
                                 uint64_t* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const auto& cat = *catalog->impl;
    *out = dyncache::smallest_window_reaching(cat, k, target,
                                              dyncache::window_search_ceiling(cat));
  });
}

dc_status dc_steady_approx(const dc_catalog* catalog, int k, double l, dc_steady* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    *out = to_c(dyncache::approx_steady(dyncache::ApproxRegime::of(*catalog->impl), k, l));
  });
}

dc_status dc_invert_window(const dc_catalog* catalog, int k, double capacity, double* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    *out = dyncache::invert_window(dyncache::ApproxRegime::of(*catalog->impl), k, capacity);
  });
}

dc_status dc_validity_window(const dc_catalog* catalog, int k, double* lo, double* hi) {
  return guarded([&] {
    require(catalog, "catalog");
    require(lo, "lo");
    require(hi, "hi");
    auto r = dyncache::validity_window(dyncache::ApproxRegime::of(*catalog->impl), k);
    *lo = r.lo;
    *hi = r.hi;
  });
}

dc_status dc_simple_hit(const dc_catalog* catalog, int k, double capacity, double constant,
                        double* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    std::optional<double> c;
    if (constant > 0.0) c = constant;
    *out = dyncache::simple_hit_approximation(dyncache::ApproxRegime::of(*catalog->impl), k,
                                              capacity, c);
  });
}

dc_status dc_transient_from_steady(const dc_steady* steady, double l, dc_transient* out) {
  return guarded([&] {
    require(steady, "steady");
    require(out, "out");
    auto t = dyncache::transient_metrics(from_c(*steady), l);
    *out = {t.hit_rate, t.insertion_rate};
  });
}

dc_status dc_interval_from_steady(const dc_steady* steady, double l, double requests,
                                  dc_interval* out) {
  return guarded([&] {
    require(steady, "steady");
    require(out, "out");
    auto s = from_c(*steady);
    auto a = dyncache::interval_averages(s, dyncache::transient_metrics(s, l), l, requests);
    *out = {a.hit_rate, a.insertion_rate, a.requests};
  });
}

dc_status dc_transient_ratio_approx(const dc_catalog* catalog, int k, double l,
                                    double* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    *out = dyncache::transient_ratio_approx(dyncache::ApproxRegime::of(*catalog->impl), k, l);
  });
}

dc_status dc_profile_triangular(double period, double lambda_high, dc_profile** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new dc_profile{dyncache::RateProfile::triangular(period, lambda_high)};
  });
}

dc_status dc_profile_plateau_valley(double period, double lambda_high, double lambda_low,
                                    double h, dc_profile** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new dc_profile{
        dyncache::RateProfile::plateau_valley(period, lambda_high, lambda_low, h)};
  });
}

dc_status dc_profile_scaled(const dc_profile* profile, double reference_volume,
                            dc_profile** out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = nullptr;
    *out = new dc_profile{profile->impl.scaled_to_volume(reference_volume)};
  });
}

void dc_profile_free(dc_profile* profile) { delete profile; }

dc_status dc_profile_rate(const dc_profile* profile, double t, double* out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = profile->impl.rate_at(t);
  });
}

dc_status dc_profile_volume(const dc_profile* profile, double t1, double t2, double* out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = profile->impl.volume(t1, t2);
  });
}

double dc_profile_total_volume(const dc_profile* profile) {
  return profile ? profile->impl.total_volume() : 0.0;
}

dc_status dc_profile_best_window(const dc_profile* profile, double duration,
                                 dc_window* out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = to_c(profile->impl.best_window(duration));
  });
}

dc_status dc_capacity_grid(double lo, double hi, size_t n, double* out) {
  return guarded([&] {
    require(out, "out");
    auto g = dyncache::SearchGrid::log_spaced(lo, hi, n);
    std::copy(g.capacities.begin(), g.capacities.end(), out);
  });
}

dc_status dc_curve_build(const dc_catalog* catalog, int k, dc_mode mode,
                         const double* capacities, size_t count, dc_curve** out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    *out = nullptr;
    if (mode != DC_MODE_EXACT && mode != DC_MODE_APPROX)
      throw std::invalid_argument("unknown evaluation mode");
    std::vector<double> caps;
    if (capacities == nullptr || count == 0)
      caps = dyncache::SearchGrid::defaults(*catalog->impl).capacities;
    else
      caps.assign(capacities, capacities + count);
    auto m = mode == DC_MODE_APPROX ? dyncache::EvalMode::approx : dyncache::EvalMode::exact;
    *out = new dc_curve{catalog->impl,
                        dyncache::PolicyCurve::build(*catalog->impl, k, m, caps)};
  });
}

void dc_curve_free(dc_curve* curve) { delete curve; }

dc_status dc_optimize(const dc_curve* curve, const dc_profile* profile, double b,
                      double h_min, double duration_step, dc_result* out) {
  return guarded([&] {
    require(curve, "curve");
    require(profile, "profile");
    require(out, "out");
    *out = to_c(dyncache::optimize(curve->impl, profile->impl, b, h_min, duration_step));
  });
}

dc_status dc_lower_bound_cost(const dc_catalog* catalog, const dc_profile* profile, double b,
                              double h_min, double duration_step, dc_result* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(profile, "profile");
    require(out, "out");
    *out = to_c(dyncache::lower_bound_cost(*catalog->impl, profile->impl, b, h_min,
                                           duration_step));
  });
}

dc_status dc_lower_bound_duration(const dc_catalog* catalog, const dc_profile* profile,
                                  double h_min, dc_duration_bound* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(profile, "profile");
    require(out, "out");
    auto d = dyncache::lower_bound_duration(*catalog->impl, profile->impl, h_min);
    *out = {d.feasible ? 1 : 0, d.duration, d.generic_duration};
  });
}

dc_status dc_always_on(const dc_catalog* catalog, int k, double b, double h_min,
                       const dc_profile* profile, dc_result* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(profile, "profile");
    require(out, "out");
    *out = to_c(dyncache::always_on_baseline(*catalog->impl, k, b, h_min, profile->impl));
  });
}

dc_status dc_hitrate_upper_bound(const dc_catalog* catalog, double requests, double* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(out, "out");
    *out = dyncache::hitrate_upper_bound(*catalog->impl, requests);
  });
}

dc_sim_config dc_sim_config_default(void) {
  dyncache::SimConfig d;
  dyncache::TransientBudget t;
  return {d.seed, d.total_requests, d.warmup_requests, t.max_periods, t.max_requests};
}

dc_status dc_simulate_steady(const dc_catalog* catalog, const dc_cache_spec* cache,
                             const dc_sim_config* config, dc_sim_report* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(cache, "cache");
    require(config, "config");
    require(out, "out");
    fill_report(dyncache::simulate_steady(*catalog->impl, to_policy(*cache),
                                          to_config(*config, false)),
                out);
  });
}

dc_status dc_simulate_transient(const dc_catalog* catalog, const dc_cache_spec* cache,
                                const dc_sim_config* config, dc_sim_report* out) {
  return guarded([&] {
    require(catalog, "catalog");
    require(cache, "cache");
    require(config, "config");
    require(out, "out");
    fill_report(dyncache::simulate_transient(*catalog->impl, to_policy(*cache),
                                             to_config(*config, true)),
                out);
  });
}

}  // extern "C"
