#include "core/simulator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"

namespace dyncache {

void SimConfig::validate() const {
  if (transient) {
    if (transient->max_periods == 0 || transient->max_requests == 0)
      throw std::invalid_argument("transient budget must be positive");
    return;
  }
  if (warmup_requests >= total_requests)
    throw std::invalid_argument("warmup must be shorter than the run");
}

namespace {

using Index = std::uint32_t;
constexpr Index kNil = std::numeric_limits<Index>::max();

class Sampler {
 public:
  Sampler(const Catalog& catalog, std::uint64_t seed) : rng_(seed) {
    const auto& p = catalog.probabilities();
    if (p.size() >= kNil) throw std::invalid_argument("catalog too large to simulate");
    cumulative_.resize(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) cumulative_[i] = acc += p[i];
    cumulative_.back() = 1.0;
  }

  Index next() {
    double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return static_cast<Index>(it - cumulative_.begin());
  }

 private:
  std::mt19937_64 rng_;
  std::vector<double> cumulative_;
};

// Objects in recency order, most recent at the head. last[i] is the index
// of the latest request for i whether or not it is cached; for candidates
// that is also the latest qualifying request.
struct CacheState {
  explicit CacheState(std::size_t n)
      : prev(n, kNil), next(n, kNil), last(n, 0), count(n, 0), cached(n, 0) {}

  void push_front(Index i) {
    prev[i] = kNil;
    next[i] = head;
    if (head != kNil) prev[head] = i;
    head = i;
    if (tail == kNil) tail = i;
    cached[i] = 1;
    ++size;
  }

  void unlink(Index i) {
    if (prev[i] != kNil) next[prev[i]] = next[i]; else head = next[i];
    if (next[i] != kNil) prev[next[i]] = prev[i]; else tail = prev[i];
    prev[i] = next[i] = kNil;
    cached[i] = 0;
    --size;
  }

  void touch(Index i) {
    if (head == i) return;
    unlink(i);
    push_front(i);
  }

  // Counts one more request toward admission; true once it reaches k.
  // `fresh` says whether the previous request is still inside the window.
  bool qualifies(Index i, int k, bool fresh) {
    if (k <= 1) return true;
    count[i] = (count[i] > 0 && fresh) ? count[i] + 1 : 1;
    if (count[i] >= static_cast<std::uint32_t>(k)) {
      count[i] = 0;
      return true;
    }
    return false;
  }

  std::vector<Index> prev, next;
  std::vector<std::uint64_t> last;
  std::vector<std::uint32_t> count;
  std::vector<std::uint8_t> cached;
  Index head = kNil, tail = kNil;
  std::uint64_t size = 0;
};

struct Tally {
  std::uint64_t requests = 0, hits = 0, inserts = 0;
  double occupancy = 0.0;

  SimReport report(std::uint64_t seed, std::uint64_t periods = 0) const {
    SimReport r;
    if (requests > 0) {
      double n = static_cast<double>(requests);
      r.hit_rate = static_cast<double>(hits) / n;
      r.insertion_rate = static_cast<double>(inserts) / n;
      r.mean_occupancy = occupancy / n;
    }
    r.requests_counted = requests;
    r.periods_completed = periods;
    r.seed = seed;
    r.generator = kGeneratorName;
    return r;
  }
};

class RcwSim {
 public:
  RcwSim(const Catalog& catalog, const PolicyConfig& policy, std::uint64_t seed)
      : policy_(policy), sampler_(catalog, seed), state_(catalog.size()) {
    policy_.validate();
  }

  struct Step {
    Index object;
    bool hit;
    bool inserted;
    std::uint64_t occupancy;  // seen by this request
  };

  // Evicted objects are reported through on_evict before the request.
  template <typename OnEvict>
  Step step(OnEvict on_evict) {
    ++t_;
    while (state_.tail != kNil && state_.last[state_.tail] + policy_.l < t_) {
      Index old = state_.tail;
      state_.unlink(old);
      on_evict(old);
    }
    Step s{sampler_.next(), false, false, state_.size};
    Index i = s.object;
    if (state_.cached[i]) {
      s.hit = true;
      state_.touch(i);
    } else {
      bool fresh = t_ - state_.last[i] <= policy_.w;
      if (state_.qualifies(i, policy_.k, fresh)) {
        state_.push_front(i);
        s.inserted = true;
      }
    }
    state_.last[i] = t_;
    return s;
  }

  Step step() {
    return step([](Index) {});
  }

  std::uint64_t now() const { return t_; }

 private:
  PolicyConfig policy_;
  Sampler sampler_;
  CacheState state_;
  std::uint64_t t_ = 0;
};

class LruSim {
 public:
  LruSim(const Catalog& catalog, const LruPolicy& policy, std::uint64_t seed)
      : policy_(policy), sampler_(catalog, seed), state_(catalog.size()) {
    if (policy_.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (policy_.k < 1) throw std::invalid_argument("k must be >= 1");
  }

  struct Step {
    bool hit;
    bool inserted;
    std::uint64_t occupancy;
  };

  Step step() {
    ++t_;
    Step s{false, false, state_.size};
    Index i = sampler_.next();
    if (state_.cached[i]) {
      s.hit = true;
      state_.touch(i);
    } else {
      bool full = state_.size >= policy_.capacity;
      // A full cache sets the window to the age of its LRU object; the
      // comparison is t - last[i] <= t - last[tail]. A refilling cache
      // keeps the window it had when it was emptied.
      bool fresh;
      if (full)
        fresh = state_.last[i] >= state_.last[state_.tail];
      else
        fresh = frozen_window_ == 0 || t_ - state_.last[i] <= frozen_window_;
      if (state_.qualifies(i, policy_.k, fresh)) {
        if (full) state_.unlink(state_.tail);
        state_.push_front(i);
        s.inserted = true;
      }
    }
    state_.last[i] = t_;
    return s;
  }

  bool full() const { return state_.size >= policy_.capacity; }

  // Drops every cached object; each keeps k-1 qualifying requests so its
  // next request admits it again. The candidate window is frozen at the
  // age the LRU object would have at the next request.
  void empty() {
    frozen_window_ = state_.tail != kNil ? t_ + 1 - state_.last[state_.tail] : 0;
    while (state_.head != kNil) {
      Index i = state_.head;
      state_.unlink(i);
      state_.count[i] = policy_.k >= 2 ? static_cast<std::uint32_t>(policy_.k - 1) : 0;
    }
  }

 private:
  LruPolicy policy_;
  Sampler sampler_;
  CacheState state_;
  std::uint64_t t_ = 0;
  std::uint64_t frozen_window_ = 0;  // 0 until the first emptying: unbounded
};

template <typename Sim>
SimReport run_steady(Sim& sim, const SimConfig& config) {
  config.validate();
  Tally tally;
  for (std::uint64_t t = 1; t <= config.total_requests; ++t) {
    auto s = sim.step();
    if (t <= config.warmup_requests) continue;
    ++tally.requests;
    tally.hits += s.hit;
    tally.inserts += s.inserted;
    tally.occupancy += static_cast<double>(s.occupancy);
  }
  return tally.report(config.seed);
}

// The shadow cache runs the policy without interruption. The allocated
// cache holds the shadow's objects that were requested since the current
// fill began, which is exactly what a cache emptied at that point and fed
// the same requests and candidate counts would hold.
SimReport rcw_transient(const Catalog& catalog, const PolicyConfig& policy,
                        const SimConfig& config) {
  const TransientBudget& budget = *config.transient;
  RcwSim shadow(catalog, policy, config.seed);
  std::vector<std::uint64_t> joined(catalog.size(), 0);  // fill number, 0 = none
  std::uint64_t period = 0, allocated = 0;
  auto on_evict = [&](Index i) {
    if (joined[i] == period) --allocated;
  };

  // Long enough for the shadow's cache and candidate chains to forget the
  // cold start.
  std::uint64_t warm = policy.l + static_cast<std::uint64_t>(policy.k - 1) * policy.w;
  if (warm > budget.max_requests) throw undersampled_error("budget ends during warm-up");
  for (std::uint64_t t = 0; t < warm; ++t) shadow.step();

  Tally tally;
  std::uint64_t periods = 0;
  while (periods < budget.max_periods && shadow.now() + policy.l <= budget.max_requests) {
    period = periods + 1;
    allocated = 0;
    for (std::uint64_t r = 0; r < policy.l; ++r) {
      auto s = shadow.step(on_evict);
      ++tally.requests;
      tally.occupancy += static_cast<double>(allocated);
      if (!(s.hit || s.inserted)) continue;
      if (joined[s.object] == period) {
        ++tally.hits;
      } else {
        joined[s.object] = period;
        ++allocated;
        ++tally.inserts;
      }
    }
    ++periods;
  }
  if (periods == 0) throw undersampled_error("no complete fill within the request budget");
  return tally.report(config.seed, periods);
}

SimReport lru_transient(const Catalog& catalog, const LruPolicy& policy,
                        const SimConfig& config) {
  const TransientBudget& budget = *config.transient;
  if (policy.capacity > catalog.size())
    throw std::invalid_argument("an LRU fill cannot complete with capacity above N");
  LruSim sim(catalog, policy, config.seed);
  std::uint64_t used = 0;
  // Cold start: fill once without measuring.
  while (!sim.full() && used < budget.max_requests) {
    sim.step();
    ++used;
  }
  Tally tally;
  std::uint64_t periods = 0;
  while (periods < budget.max_periods && used < budget.max_requests) {
    sim.empty();
    Tally fill;
    while (!sim.full() && used < budget.max_requests) {
      auto s = sim.step();
      ++used;
      ++fill.requests;
      fill.hits += s.hit;
      fill.inserts += s.inserted;
      fill.occupancy += static_cast<double>(s.occupancy);
    }
    if (!sim.full()) break;  // budget ran out mid-fill
    tally.requests += fill.requests;
    tally.hits += fill.hits;
    tally.inserts += fill.inserts;
    tally.occupancy += fill.occupancy;
    ++periods;
  }
  if (periods == 0) throw undersampled_error("no complete fill within the request budget");
  return tally.report(config.seed, periods);
}

}  // namespace

SimReport simulate_rcw_steady(const Catalog& catalog, const PolicyConfig& policy,
                              const SimConfig& config) {
  RcwSim sim(catalog, policy, config.seed);
  return run_steady(sim, config);
}

SimReport simulate_lru_steady(const Catalog& catalog, const LruPolicy& policy,
                              const SimConfig& config) {
  LruSim sim(catalog, policy, config.seed);
  return run_steady(sim, config);
}

SimReport simulate_steady(const Catalog& catalog, const CachePolicy& policy,
                          const SimConfig& config) {
  if (const auto* rcw = std::get_if<PolicyConfig>(&policy))
    return simulate_rcw_steady(catalog, *rcw, config);
  return simulate_lru_steady(catalog, std::get<LruPolicy>(policy), config);
}

SimReport simulate_transient(const Catalog& catalog, const CachePolicy& policy,
                             const SimConfig& config) {
  if (!config.transient) throw std::invalid_argument("transient budget missing");
  config.validate();
  if (const auto* rcw = std::get_if<PolicyConfig>(&policy)) {
    rcw->validate();
    return rcw_transient(catalog, *rcw, config);
  }
  return lru_transient(catalog, std::get<LruPolicy>(policy), config);
}

}  // namespace dyncache
