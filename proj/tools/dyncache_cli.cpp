// dyncache command-line driver. Writes CSV plus a key=value manifest next to it.

#include <CLI11.hpp>
#include <dyncache/dyncache.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(dc_status s, const char* what) {
  if (s != DC_OK)
    throw Failure(std::string(what) + ": " + dc_status_name(s) + ": " + dc_last_error());
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string exact_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Cell = std::optional<double>;

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(const std::vector<std::string>& cells) { rows_.push_back(cells); }
  void write(std::ostream& os) const {
    auto line = [&os](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string cell(Cell c) { return c ? num(*c) : std::string(); }

struct CatalogHandle {
  dc_catalog* h = nullptr;
  CatalogHandle(std::uint64_t n, double alpha) { check(dc_catalog_zipf(n, alpha, &h), "catalog"); }
  ~CatalogHandle() { dc_catalog_free(h); }
  CatalogHandle(const CatalogHandle&) = delete;
  CatalogHandle& operator=(const CatalogHandle&) = delete;
};

struct ProfileHandle {
  dc_profile* h = nullptr;
  ProfileHandle() = default;
  explicit ProfileHandle(dc_profile* p) : h(p) {}
  ProfileHandle(ProfileHandle&& o) noexcept : h(std::exchange(o.h, nullptr)) {}
  ~ProfileHandle() { dc_profile_free(h); }
};

struct CurveHandle {
  dc_curve* h = nullptr;
  CurveHandle() = default;
  CurveHandle(CurveHandle&& o) noexcept : h(std::exchange(o.h, nullptr)) {}
  ~CurveHandle() { dc_curve_free(h); }
};

// Flags shared by the subcommands; each subcommand registers what it uses.
struct Options {
  std::uint64_t n = 100000;
  double alpha = 1.0;
  int k = 1;
  std::vector<int> ks;
  std::uint64_t l = 1000;
  std::uint64_t w = 0;  // 0: same as L
  double capacity = 1000;
  double b = 500;
  double hmin = 0.4;
  double period = 1440;
  double lambda_high = 20;
  std::optional<double> lambda_low;
  std::optional<double> h;
  std::string mode = "exact";
  std::uint64_t seed = 1;
  std::uint64_t requests = 6000000;
  std::uint64_t warmup = 2000000;
  std::uint64_t max_periods = 2000;
  std::uint64_t max_requests = 6000000;
  std::string out;
  std::vector<double> grid;
  bool with_sim = false;
  bool transient = false;
  std::string cache = "rcw";
  std::string param = "b";
  double from = 0, to = 0;
  int steps = 0;
  std::size_t capacities = 200;
  double duration_step = 1.0;

  dc_mode eval_mode() const { return mode == "approx" ? DC_MODE_APPROX : DC_MODE_EXACT; }
  double low_rate() const { return lambda_low.value_or(0.1 * lambda_high); }
};

class Manifest {
 public:
  void set(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
  void set(const std::string& key, double value) { set(key, exact_num(value)); }
  void write(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw Failure("cannot write " + path);
    for (const auto& [k, v] : entries_) f << k << '=' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + exact_num(v[i]);
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

void emit(const std::string& command, const Options& o, const Csv& csv, Manifest m) {
  std::string path = o.out.empty() ? command + ".csv" : o.out;
  {
    std::ofstream f(path);
    if (!f) throw Failure("cannot write " + path);
    csv.write(f);
  }
  m.set("command", command);
  m.set("version", dc_version());
  m.set("output", path);
  m.write(path + ".manifest");
  std::cerr << "wrote " << path << " and " << path << ".manifest\n";
}

void catalog_manifest(Manifest& m, const Options& o) {
  m.set("n", std::to_string(o.n));
  m.set("alpha", o.alpha);
}

dc_sim_config sim_config(const Options& o) {
  dc_sim_config c = dc_sim_config_default();
  c.seed = o.seed;
  c.total_requests = o.requests;
  c.warmup_requests = o.warmup;
  c.max_periods = o.max_periods;
  c.max_requests = o.max_requests;
  return c;
}

void sim_manifest(Manifest& m, const Options& o) {
  m.set("seed", std::to_string(o.seed));
  m.set("requests", std::to_string(o.requests));
  m.set("warmup", std::to_string(o.warmup));
  m.set("max_periods", std::to_string(o.max_periods));
  m.set("max_requests", std::to_string(o.max_requests));
}

void note(const std::string& what) { std::cerr << "note: " << what << ": " << dc_last_error() << '\n'; }

int steady_sweep(const Options& o) {
  CatalogHandle cat(o.n, o.alpha);
  std::vector<std::string> header{"a_over_n", "L", "A_exact", "H_exact", "H_approx",
                                  "insfrac_exact", "insfrac_approx", "H_topC"};
  if (o.with_sim)
    for (const char* c : {"H_lru_sim", "insfrac_lru_sim", "H_rcw_sim", "insfrac_rcw_sim"})
      header.emplace_back(c);
  Csv csv(header);
  dc_sim_config cfg = sim_config(o);
  for (double frac : o.grid) {
    double cap = frac * static_cast<double>(o.n);
    std::uint64_t l = 0;
    check(dc_window_for_capacity(cat.h, o.k, cap, &l), "window for capacity");
    if (l == 0) {
      std::cerr << "note: a_over_n=" << num(frac) << ": no window fits the capacity\n";
      csv.row({num(frac), "", "", "", "", "", "", ""});
      continue;
    }
    dc_steady ex{};
    check(dc_steady_exact(cat.h, o.k, l, l, &ex), "steady");
    Cell h_apx, i_apx;
    dc_steady apx{};
    if (dc_steady_approx(cat.h, o.k, double(l), &apx) == DC_OK) {
      h_apx = apx.hit_rate;
      i_apx = apx.insertion_rate;
    } else {
      note("a_over_n=" + num(frac) + " closed form");
    }
    double top = 0;
    check(dc_head_sum(cat.h, cap, &top), "top-C");
    std::vector<std::string> row{num(frac),          std::to_string(l), num(ex.occupancy),
                                 num(ex.hit_rate),   cell(h_apx),       num(ex.insertion_rate),
                                 cell(i_apx),        num(top)};
    if (o.with_sim) {
      dc_cache_spec lru{DC_CACHE_LRU, o.k, std::max<std::uint64_t>(1, std::llround(ex.occupancy)), 0};
      dc_cache_spec rcw{DC_CACHE_RCW, o.k, l, l};
      dc_sim_report a{}, r{};
      check(dc_simulate_steady(cat.h, &lru, &cfg, &a), "lru simulation");
      check(dc_simulate_steady(cat.h, &rcw, &cfg, &r), "rcw simulation");
      for (double v : {a.hit_rate, a.insertion_rate, r.hit_rate, r.insertion_rate})
        row.push_back(num(v));
    }
    csv.row(row);
  }
  Manifest m;
  catalog_manifest(m, o);
  m.set("k", std::to_string(o.k));
  m.set("grid", join(o.grid));
  m.set("with_sim", o.with_sim ? "1" : "0");
  if (o.with_sim) sim_manifest(m, o);
  emit("steady-sweep", o, csv, m);
  return kExitOk;
}

// Window reaching a target hit rate under the closed forms, by bisection
// inside the validity window. Empty if the target lies outside it.
Cell approx_window_for_hit(const dc_catalog* cat, int k, double target) {
  double lo = 0, hi = 0;
  if (dc_validity_window(cat, k, &lo, &hi) != DC_OK || !(lo <= hi)) return std::nullopt;
  auto h = [&](double l) {
    dc_steady s{};
    check(dc_steady_approx(cat, k, l, &s), "closed form");
    return s.hit_rate;
  };
  if (h(lo) > target || h(hi) < target) return std::nullopt;
  for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (h(mid) < target ? lo : hi) = mid;
  }
  return hi;
}

int tradeoff(const Options& o) {
  CatalogHandle cat(o.n, o.alpha);
  std::vector<int> ks = o.ks.empty() ? std::vector<int>{1, 2, 3, 4} : o.ks;
  std::vector<std::string> header{"H"};
  for (int k : ks) header.push_back("insfrac_k" + std::to_string(k));
  Csv csv(header);
  for (double target : o.grid) {
    std::vector<std::string> row{num(target)};
    for (int k : ks) {
      Cell ins;
      if (o.eval_mode() == DC_MODE_EXACT) {
        std::uint64_t l = 0;
        check(dc_window_for_hit_rate(cat.h, k, target, &l), "window for hit rate");
        if (l > 0) {
          dc_steady s{};
          check(dc_steady_exact(cat.h, k, l, l, &s), "steady");
          ins = s.insertion_rate;
        }
      } else if (auto l = approx_window_for_hit(cat.h, k, target)) {
        dc_steady s{};
        check(dc_steady_approx(cat.h, k, *l, &s), "closed form");
        ins = s.insertion_rate;
      }
      if (!ins) std::cerr << "note: H=" << num(target) << " k=" << k << " unreachable\n";
      row.push_back(cell(ins));
    }
    csv.row(row);
  }
  Manifest m;
  catalog_manifest(m, o);
  m.set("ks", join(ks));
  m.set("mode", o.mode);
  m.set("grid", join(o.grid));
  emit("tradeoff", o, csv, m);
  return kExitOk;
}

int transient_sweep(const Options& o) {
  CatalogHandle cat(o.n, o.alpha);
  std::vector<std::string> header{"a_over_n", "L",       "A_exact",      "H_steady",
                                  "h_trans",  "ratio",   "ratio_approx", "ins_trans"};
  if (o.with_sim)
    for (const char* c : {"h_rcw_sim", "fills_rcw_sim", "h_lru_sim", "fills_lru_sim"})
      header.emplace_back(c);
  Csv csv(header);
  dc_sim_config cfg = sim_config(o);
  for (double frac : o.grid) {
    std::uint64_t l = 0;
    check(dc_window_for_capacity(cat.h, o.k, frac * double(o.n), &l), "window for capacity");
    if (l == 0) {
      std::cerr << "note: a_over_n=" << num(frac) << ": no window fits the capacity\n";
      continue;
    }
    dc_steady s{};
    check(dc_steady_exact(cat.h, o.k, l, l, &s), "steady");
    dc_transient t{};
    check(dc_transient_from_steady(&s, double(l), &t), "transient");
    Cell ratio_apx;
    double r = 0;
    if (dc_transient_ratio_approx(cat.h, o.k, double(l), &r) == DC_OK)
      ratio_apx = r;
    else
      note("a_over_n=" + num(frac) + " closed-form ratio");
    std::vector<std::string> row{num(frac),        std::to_string(l),
                                 num(s.occupancy), num(s.hit_rate),
                                 num(t.hit_rate),  num(t.hit_rate / s.hit_rate),
                                 cell(ratio_apx),  num(t.insertion_rate)};
    if (o.with_sim) {
      dc_cache_spec rcw{DC_CACHE_RCW, o.k, l, l};
      dc_cache_spec lru{DC_CACHE_LRU, o.k, std::max<std::uint64_t>(1, std::llround(s.occupancy)), 0};
      for (const dc_cache_spec* spec : {&rcw, &lru}) {
        dc_sim_report rep{};
        dc_status st = dc_simulate_transient(cat.h, spec, &cfg, &rep);
        if (st == DC_UNDERSAMPLED) {
          note("a_over_n=" + num(frac) + " simulation");
          row.insert(row.end(), {"", "0"});
          continue;
        }
        check(st, "transient simulation");
        row.push_back(num(rep.hit_rate));
        row.push_back(std::to_string(rep.periods_completed));
      }
    }
    csv.row(row);
  }
  Manifest m;
  catalog_manifest(m, o);
  m.set("k", std::to_string(o.k));
  m.set("grid", join(o.grid));
  m.set("with_sim", o.with_sim ? "1" : "0");
  if (o.with_sim) sim_manifest(m, o);
  emit("transient-sweep", o, csv, m);
  return kExitOk;
}

ProfileHandle make_profile(const Options& o, double lambda_high, std::optional<double> h) {
  dc_profile* p = nullptr;
  if (!h) {
    check(dc_profile_triangular(o.period, lambda_high, &p), "profile");
    return ProfileHandle(p);
  }
  // Plateau/valley shapes are compared at the triangular profile's volume.
  check(dc_profile_plateau_valley(o.period, lambda_high, o.lambda_low.value_or(0.1 * lambda_high),
                                  *h, &p),
        "profile");
  ProfileHandle shaped(p);
  dc_profile* scaled = nullptr;
  check(dc_profile_scaled(shaped.h, o.period * lambda_high / 2.0, &scaled), "profile scaling");
  return ProfileHandle(scaled);
}

void profile_manifest(Manifest& m, const Options& o) {
  m.set("T", o.period);
  m.set("lambda_high", o.lambda_high);
  m.set("lambda_low", o.low_rate());
  if (o.h) m.set("h", *o.h);
}

std::vector<double> sweep_values(const Options& o) {
  if (!o.grid.empty()) return o.grid;
  if (o.steps < 1) throw CLI::ValidationError("--steps", "must be >= 1 when --grid is absent");
  std::vector<double> v;
  for (int i = 0; i <= o.steps; ++i) v.push_back(o.from + (o.to - o.from) * i / o.steps);
  return v;
}

std::vector<double> capacity_grid(const Options& o) {
  std::vector<double> caps(o.capacities);
  check(dc_capacity_grid(1.0, double(o.n), caps.size(), caps.data()), "capacity grid");
  return caps;
}

int optimize_sweep(const Options& o) {
  CatalogHandle cat(o.n, o.alpha);
  std::vector<double> values = sweep_values(o);
  std::vector<int> ks = o.ks.empty() ? std::vector<int>{1, 2, 3, 4} : o.ks;
  std::vector<double> caps = capacity_grid(o);
  std::vector<CurveHandle> curves;
  for (int k : ks) {
    CurveHandle c;
    check(dc_curve_build(cat.h, k, o.eval_mode(), caps.data(), caps.size(), &c.h), "curve");
    curves.push_back(std::move(c));
  }
  std::vector<std::string> labels;
  for (int k : ks) labels.push_back("k" + std::to_string(k));
  labels.push_back("on_k1");
  labels.push_back("on_k2");
  std::vector<std::string> header{o.param, "lb_cost"};
  for (const auto& l : labels)
    for (const char* f : {"_cost", "_ratio", "_capacity", "_duration", "_reason"})
      header.push_back(l + f);
  Csv csv(header);
  bool any_feasible = false;
  for (double v : values) {
    double b = o.b, hmin = o.hmin, lh = o.lambda_high;
    std::optional<double> h = o.h;
    if (o.param == "b") b = v;
    else if (o.param == "hmin") hmin = v;
    else if (o.param == "lambda_high") lh = v;
    else h = v;
    ProfileHandle prof = make_profile(o, lh, h);
    dc_result lb{};
    check(dc_lower_bound_cost(cat.h, prof.h, b, hmin, o.duration_step, &lb), "lower bound");
    std::vector<dc_result> rs;
    for (const auto& c : curves) {
      dc_result r{};
      check(dc_optimize(c.h, prof.h, b, hmin, o.duration_step, &r), "optimize");
      rs.push_back(r);
    }
    for (int k : {1, 2}) {
      dc_result r{};
      check(dc_always_on(cat.h, k, b, hmin, prof.h, &r), "always-on");
      rs.push_back(r);
    }
    std::vector<std::string> row{num(v), lb.feasible ? num(lb.cost) : ""};
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const dc_result& r = rs[i];
      // always-on baselines do not count toward a feasible sweep
      if (i < curves.size()) any_feasible = any_feasible || r.feasible;
      if (!r.feasible) {
        row.insert(row.end(), {"", "", "", "", dc_infeasibility_name(r.reason)});
        continue;
      }
      row.push_back(num(r.cost));
      row.push_back(lb.feasible ? num(r.cost / lb.cost) : "");
      row.push_back(num(r.capacity));
      row.push_back(num(r.window.duration));
      row.push_back(dc_infeasibility_name(r.reason));
    }
    csv.row(row);
  }
  Manifest m;
  catalog_manifest(m, o);
  profile_manifest(m, o);
  m.set("param", o.param);
  m.set("values", join(values));
  m.set("ks", join(ks));
  m.set("b", o.b);
  m.set("hmin", o.hmin);
  m.set("mode", o.mode);
  m.set("capacities", std::to_string(o.capacities));
  m.set("duration_step", o.duration_step);
  emit("optimize-sweep", o, csv, m);
  return any_feasible ? kExitOk : kExitInfeasible;
}

int bound(const Options& o) {
  CatalogHandle cat(o.n, o.alpha);
  ProfileHandle prof = make_profile(o, o.lambda_high, o.h);
  std::vector<double> targets = o.grid.empty() ? std::vector<double>{o.hmin} : o.grid;
  Csv csv({"hmin", "duration_bound", "generic_duration_bound", "lb_cost", "lb_capacity",
           "lb_duration", "hitrate_upper_bound"});
  double ub = 0;
  check(dc_hitrate_upper_bound(cat.h, dc_profile_total_volume(prof.h), &ub), "upper bound");
  bool any = false;
  for (double hmin : targets) {
    dc_duration_bound d{};
    check(dc_lower_bound_duration(cat.h, prof.h, hmin, &d), "duration bound");
    dc_result lb{};
    check(dc_lower_bound_cost(cat.h, prof.h, o.b, hmin, o.duration_step, &lb), "lower bound");
    any = any || lb.feasible;
    if (!lb.feasible) std::cerr << "note: hmin=" << num(hmin) << " exceeds what any cache can serve\n";
    csv.row({num(hmin), d.feasible ? num(d.duration) : "", d.feasible ? num(d.generic_duration) : "",
             lb.feasible ? num(lb.cost) : "", lb.feasible ? num(lb.capacity) : "",
             lb.feasible ? num(lb.window.duration) : "", num(ub)});
  }
  Manifest m;
  catalog_manifest(m, o);
  profile_manifest(m, o);
  m.set("b", o.b);
  m.set("targets", join(targets));
  m.set("duration_step", o.duration_step);
  emit("bound", o, csv, m);
  return any ? kExitOk : kExitInfeasible;
}

int simulate(const Options& o) {
  CatalogHandle cat(o.n, o.alpha);
  dc_cache_spec spec{};
  spec.k = o.k;
  if (o.cache == "lru") {
    spec.kind = DC_CACHE_LRU;
    spec.size = static_cast<std::uint64_t>(std::llround(o.capacity));
  } else {
    spec.kind = DC_CACHE_RCW;
    spec.size = o.l;
    spec.window = o.w == 0 ? o.l : o.w;
  }
  dc_sim_config cfg = sim_config(o);
  dc_sim_report rep{};
  check(o.transient ? dc_simulate_transient(cat.h, &spec, &cfg, &rep)
                    : dc_simulate_steady(cat.h, &spec, &cfg, &rep),
        "simulation");
  Csv csv({"cache", "k", "L", "W", "capacity", "transient", "seed", "generator",
           "requests_counted", "periods_completed", "hit_rate", "insertion_rate",
           "mean_occupancy"});
  bool lru = spec.kind == DC_CACHE_LRU;
  csv.row({o.cache, std::to_string(o.k), lru ? "" : std::to_string(spec.size),
           lru ? "" : std::to_string(spec.window), lru ? std::to_string(spec.size) : "",
           o.transient ? "1" : "0", std::to_string(rep.seed), rep.generator,
           std::to_string(rep.requests_counted), std::to_string(rep.periods_completed),
           num(rep.hit_rate), num(rep.insertion_rate), num(rep.mean_occupancy)});
  Manifest m;
  catalog_manifest(m, o);
  m.set("cache", o.cache);
  m.set("k", std::to_string(o.k));
  if (lru) m.set("capacity", std::to_string(spec.size));
  else {
    m.set("l", std::to_string(spec.size));
    m.set("w", std::to_string(spec.window));
  }
  m.set("transient", o.transient ? "1" : "0");
  m.set("generator", rep.generator);
  sim_manifest(m, o);
  emit("simulate", o, csv, m);
  return kExitOk;
}

void catalog_flags(CLI::App* c, Options& o) {
  c->add_option("--n", o.n, "catalog size")->capture_default_str()->check(CLI::PositiveNumber);
  c->add_option("--alpha", o.alpha, "Zipf exponent")->capture_default_str();
  c->add_option("--out", o.out, "CSV path (default <command>.csv)");
}

void profile_flags(CLI::App* c, Options& o) {
  c->add_option("--T", o.period, "period in minutes")->capture_default_str();
  c->add_option("--lambda-high", o.lambda_high, "peak request rate per minute")->capture_default_str();
  c->add_option("--lambda-low", o.lambda_low, "valley rate (default 0.1 * lambda-high)");
  c->add_option("--h", o.h, "plateau/valley shape in [-1, 1]; absent means triangular")
      ->check(CLI::Range(-1.0, 1.0));
  c->add_option("--b", o.b, "per-minute instance cost")->capture_default_str();
  c->add_option("--duration-step", o.duration_step, "duration grid step in minutes")
      ->capture_default_str();
}

void sim_flags(CLI::App* c, Options& o) {
  c->add_option("--seed", o.seed)->capture_default_str();
  c->add_option("--requests", o.requests, "steady run length")->capture_default_str();
  c->add_option("--warmup", o.warmup, "steady warm-up requests")->capture_default_str();
  c->add_option("--max-periods", o.max_periods, "transient fills to measure")->capture_default_str();
  c->add_option("--max-requests", o.max_requests, "transient request budget")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic cache provisioning models"};
  app.set_help_flag("--help", "print help and exit");
  app.set_version_flag("--version", std::string(dc_version()));
  app.require_subcommand(1);
  Options o;
  const std::vector<double> occupancy_grid{1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3,
                                           0.01, 0.02, 0.05, 0.1,  0.2};

  auto* ss = app.add_subcommand("steady-sweep", "exact, closed-form and simulated steady state");
  catalog_flags(ss, o);
  sim_flags(ss, o);
  ss->add_option("--k", o.k)->capture_default_str()->check(CLI::PositiveNumber);
  ss->add_option("--grid", o.grid, "A/N values")->delimiter(',');
  ss->add_flag("--with-sim", o.with_sim, "add LRU and RCW simulation columns");

  auto* to = app.add_subcommand("tradeoff", "insertion fraction at a target hit rate");
  catalog_flags(to, o);
  to->add_option("--k", o.ks, "k values")->delimiter(',');
  to->add_option("--grid", o.grid, "target hit rates")->delimiter(',');
  to->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "approx"}))->capture_default_str();

  auto* ts = app.add_subcommand("transient-sweep", "fill-period hit rates");
  catalog_flags(ts, o);
  sim_flags(ts, o);
  ts->add_option("--k", o.k)->capture_default_str()->check(CLI::PositiveNumber);
  ts->add_option("--grid", o.grid, "A/N values")->delimiter(',');
  ts->add_flag("--with-sim", o.with_sim, "add simulated fill columns");

  auto* os = app.add_subcommand("optimize-sweep", "cost over lower bound across one parameter");
  catalog_flags(os, o);
  profile_flags(os, o);
  os->add_option("--param", o.param)
      ->check(CLI::IsMember({"b", "hmin", "lambda_high", "h"}))
      ->capture_default_str();
  os->add_option("--grid", o.grid, "explicit parameter values")->delimiter(',');
  os->add_option("--from", o.from);
  os->add_option("--to", o.to);
  os->add_option("--steps", o.steps, "number of intervals between --from and --to");
  os->add_option("--hmin", o.hmin)->capture_default_str();
  os->add_option("--k", o.ks, "dynamic policies (default 1,2,3,4)")->delimiter(',');
  os->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "approx"}))->capture_default_str();
  os->add_option("--capacities", o.capacities, "log-spaced capacity grid size")->capture_default_str();

  auto* bd = app.add_subcommand("bound", "policy-independent lower bounds");
  catalog_flags(bd, o);
  profile_flags(bd, o);
  bd->add_option("--hmin", o.hmin)->capture_default_str();
  bd->add_option("--grid", o.grid, "h_min values")->delimiter(',');

  auto* sm = app.add_subcommand("simulate", "one simulation run");
  catalog_flags(sm, o);
  sim_flags(sm, o);
  sm->add_option("--cache", o.cache)->check(CLI::IsMember({"rcw", "lru"}))->capture_default_str();
  sm->add_option("--k", o.k)->capture_default_str()->check(CLI::PositiveNumber);
  sm->add_option("--l", o.l, "RCW window L")->capture_default_str();
  sm->add_option("--w", o.w, "RCW candidate window W (default L)");
  sm->add_option("--capacity", o.capacity, "LRU capacity")->capture_default_str();
  sm->add_flag("--transient", o.transient, "measure repeated fills");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ss) {
      if (o.grid.empty()) o.grid = occupancy_grid;
      return steady_sweep(o);
    }
    if (*to) {
      if (o.grid.empty()) o.grid = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
      return tradeoff(o);
    }
    if (*ts) {
      if (o.grid.empty()) o.grid = occupancy_grid;
      return transient_sweep(o);
    }
    if (*os) return optimize_sweep(o);
    if (*bd) return bound(o);
    if (*sm) return simulate(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
