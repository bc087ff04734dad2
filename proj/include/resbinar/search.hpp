#pragma once

// Constraint search over the enumerated models: configuration handling, a
// deterministic parallel driver, and the exhaustive sweeps used by the
// verification reports.
//
// Work is split into independent (lattice, first-grid-cell) chunks.  Each
// chunk produces its matches in a fixed order, chunks are merged by index
// and the merged list is sorted by canonical key, so the result does not
// depend on the number of workers.  A wall-clock budget can cut a run
// short; in that case only fully completed sizes are reported, partial
// slices are discarded rather than exposed.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "resbinar/algebra.hpp"
#include "resbinar/enumerate.hpp"
#include "resbinar/errors.hpp"
#include "resbinar/laws.hpp"

namespace resbinar {

struct SearchConfig {
  int max_size = 4;            // largest algebra size to visit, 1..8
  bool distributive = false;   // lattice reduct flags
  bool complemented = false;
  bool boolean = false;        // implies distributive and complemented
  bool associative = false;    // multiplication flags
  bool commutative = false;
  bool unital = false;
  bool integral = false;       // implies unital
  std::set<Law> satisfies;     // every law here must hold
  std::set<Law> fails;         // every law here must fail (not merely be inapplicable)
  std::uint64_t limit = 0;     // matches to report; 0 keeps them all
  double time_budget = -1;     // seconds of wall clock; negative: unlimited
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::ExhaustedNone;
  // matches ordered by size, then canonical key, truncated to the limit
  std::vector<ResiduatedBinar> models;
  std::vector<std::string> keys;  // canonical keys, parallel to models
  std::vector<int> sizes_certified;          // sizes swept to completion
  std::vector<std::uint64_t> models_per_size;  // indexed by size; 0 when uncertified
};

namespace detail {

inline SearchConfig normalized(const SearchConfig& in) {
  SearchConfig cfg = in;
  if (cfg.max_size < 1 || cfg.max_size > 8)
    throw ConfigError("search size must be between 1 and 8, got " +
                      std::to_string(cfg.max_size));
  for (const Law l : cfg.satisfies)
    if (cfg.fails.count(l))
      throw ConfigError(std::string("law ") + law_info(l).tag +
                        " is both required and forbidden");
  if (cfg.boolean) {
    cfg.distributive = true;
    cfg.complemented = true;
  }
  if (cfg.integral) cfg.unital = true;
  return cfg;
}

inline bool lattice_matches(const SearchConfig& cfg, const Lattice& lat) {
  if (cfg.distributive && !lat.is_distributive()) return false;
  if (cfg.complemented && !lat.is_complemented()) return false;
  if (cfg.boolean && !lat.is_boolean()) return false;
  return true;
}

// Cheap structure flags first, then the laws that must fail, then the ones
// that must hold.  A law that is inapplicable (no unit) neither holds nor
// fails.
inline bool model_matches(const SearchConfig& cfg, const ResiduatedBinar& alg) {
  if (cfg.associative || cfg.commutative || cfg.unital || cfg.integral) {
    const StructureFlags f = algebra_predicates(alg);
    if (cfg.associative && !f.associative) return false;
    if (cfg.commutative && !f.commutative) return false;
    if (cfg.unital && !f.unital) return false;
    if (cfg.integral && !f.integral) return false;
  }
  for (const Law l : cfg.fails)
    if (check_law(l, alg) != LawStatus::Fails) return false;
  for (const Law l : cfg.satisfies)
    if (check_law(l, alg) != LawStatus::Holds) return false;
  return true;
}

inline int worker_count(std::size_t items) {
  if (items <= 1) return 1;
  const unsigned hw = std::thread::hardware_concurrency();
  long w = hw ? static_cast<long>(hw) : 1;
  if (const char* s = std::getenv("RESBINAR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 1 && v <= 1024) w = v;
  }
  return static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(w), items));
}

inline bool mult_is_meet(const ResiduatedBinar& alg) {
  const int n = alg.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (alg.mult(x, y) != alg.lattice().meet(x, y)) return false;
  return true;
}

}  // namespace detail

// Models on one given lattice meeting the constraints, in enumeration
// order.  The size and budget fields are ignored here; lattice-level flags
// the lattice does not meet make the stream empty.
inline bool enumerate_binars(
    const Lattice& lat, const SearchConfig& config,
    const std::function<bool(const ResiduatedBinar&)>& visit) {
  const SearchConfig cfg = detail::normalized(config);
  if (!detail::lattice_matches(cfg, lat)) return true;
  return for_each_model(lat, [&](const ResiduatedBinar& alg) {
    if (!detail::model_matches(cfg, alg)) return true;
    return visit(alg);
  });
}

inline SearchResult search(const SearchConfig& config) {
  const SearchConfig cfg = detail::normalized(config);
  SearchResult res;
  res.models_per_size.assign(static_cast<std::size_t>(cfg.max_size) + 1, 0);

  using Clock = std::chrono::steady_clock;
  const bool budgeted = cfg.time_budget >= 0;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(
                             budgeted ? cfg.time_budget : 0.0));
  const auto over_budget = [budgeted, deadline] {
    return budgeted && Clock::now() >= deadline;
  };

  std::vector<std::pair<std::string, ResiduatedBinar>> collected;
  bool budget_hit = false;
  for (int s = 1; s <= cfg.max_size; ++s) {
    if (over_budget()) {
      budget_hit = true;
      break;
    }
    std::vector<Lattice> lats;
    for (auto& lat : enumerate_lattices(s))
      if (detail::lattice_matches(cfg, lat)) lats.push_back(std::move(lat));
    std::vector<std::pair<int, int>> items;  // (lattice index, chunk)
    for (std::size_t i = 0; i < lats.size(); ++i)
      for (int c = 0; c < model_chunk_count(lats[i]); ++c)
        items.emplace_back(static_cast<int>(i), c);

    struct Slot {
      std::uint64_t examined = 0;
      std::vector<std::pair<std::string, ResiduatedBinar>> matches;
    };
    std::vector<Slot> slots(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto run_item = [&](std::size_t ix) {
      const auto [li, chunk] = items[ix];
      Slot& slot = slots[ix];
      std::uint64_t ticker = 0;
      for_each_model_in_chunk(lats[static_cast<std::size_t>(li)], chunk,
                              [&](const ResiduatedBinar& alg) {
        if ((++ticker & 0x3F) == 0 &&
            (stop.load(std::memory_order_relaxed) || over_budget())) {
          stop.store(true, std::memory_order_relaxed);
          return false;
        }
        ++slot.examined;
        if (!detail::model_matches(cfg, alg)) return true;
        std::string key = canonical_key(alg);
        auto& m = slot.matches;
        const auto pos = std::lower_bound(
            m.begin(), m.end(), key,
            [](const auto& a, const std::string& k) { return a.first < k; });
        m.emplace(pos, std::move(key), alg);
        if (cfg.limit && m.size() > cfg.limit) m.pop_back();
        return true;
      });
    };

    const int workers = detail::worker_count(items.size());
    if (workers <= 1) {
      for (std::size_t ix = 0; ix < items.size(); ++ix) {
        if (stop.load(std::memory_order_relaxed)) break;
        run_item(ix);
      }
    } else {
      std::vector<std::thread> pool;
      std::exception_ptr first_error;
      std::atomic<bool> failed{false};
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          try {
            while (true) {
              const std::size_t ix = next.fetch_add(1);
              if (ix >= items.size() ||
                  stop.load(std::memory_order_relaxed))
                break;
              run_item(ix);
            }
          } catch (...) {
            if (!failed.exchange(true)) first_error = std::current_exception();
            stop.store(true, std::memory_order_relaxed);
          }
        });
      for (auto& t : pool) t.join();
      if (first_error) std::rethrow_exception(first_error);
    }

    if (stop.load()) {  // budget ran out mid-size; nothing here is certified
      budget_hit = true;
      break;
    }

    std::uint64_t examined = 0;
    std::vector<std::pair<std::string, ResiduatedBinar>> merged;
    for (auto& slot : slots) {
      examined += slot.examined;
      for (auto& kv : slot.matches) merged.push_back(std::move(kv));
    }
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    res.models_per_size[static_cast<std::size_t>(s)] = examined;
    res.sizes_certified.push_back(s);
    for (auto& kv : merged)
      if (!cfg.limit || collected.size() < cfg.limit)
        collected.push_back(std::move(kv));
    if (cfg.limit && collected.size() >= cfg.limit) break;
  }

  res.models.reserve(collected.size());
  res.keys.reserve(collected.size());
  for (auto& kv : collected) {
    res.keys.push_back(std::move(kv.first));
    res.models.push_back(std::move(kv.second));
  }
  res.status = budget_hit ? SearchStatus::BudgetExceeded
               : res.models.empty() ? SearchStatus::ExhaustedNone
                                    : SearchStatus::Found;
  return res;
}

// ---- exhaustive sweeps -----------------------------------------------

struct RuleOutcome {
  ImplicationRule rule;
  SearchResult result;  // countermodel hunt: premises hold, conclusion fails
};

struct RuleSweepReport {
  int max_size = 0;
  bool distributive_only = true;
  std::vector<RuleOutcome> outcomes;  // in implication_rules() order
  bool all_exhausted() const {
    for (const auto& o : outcomes)
      if (o.result.status != SearchStatus::ExhaustedNone) return false;
    return !outcomes.empty();
  }
  bool budget_hit() const {
    for (const auto& o : outcomes)
      if (o.result.status == SearchStatus::BudgetExceeded) return true;
    return false;
  }
};

// Hunts for a countermodel of each rule: a model satisfying both premises
// and failing the conclusion.  An ExhaustedNone verdict for every rule
// confirms the rules hold at the swept scale.  The budget applies per rule.
inline RuleSweepReport check_implication_rules(int max_size,
                                               bool distributive_only = true,
                                               double time_budget = -1) {
  RuleSweepReport report;
  report.max_size = max_size;
  report.distributive_only = distributive_only;
  for (const ImplicationRule& r : implication_rules()) {
    SearchConfig cfg;
    cfg.max_size = max_size;
    cfg.distributive = distributive_only;
    cfg.satisfies = {r.premise1, r.premise2};
    cfg.fails = {r.conclusion};
    cfg.limit = 1;  // one countermodel settles a rule
    cfg.time_budget = time_budget;
    report.outcomes.push_back({r, search(cfg)});
  }
  return report;
}

struct UnitalStructureReport {
  int max_size = 0;
  std::uint64_t models_seen = 0;
  // instance counters for each checked statement
  std::uint64_t meet_instances = 0;      // unital, complemented lattice, integral
  std::uint64_t integral_instances = 0;  // unit complemented, one-sided law held
  std::uint64_t boolean_instances = 0;   // unital with boolean lattice
  std::uint64_t boolean_law_instances = 0;  // ...that satisfy some nontrivial law
  std::uint64_t prelinearity_instances = 0;  // associative unital with (ed)
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// Structure forced by a unit, checked over every model up to max_size:
//  (a) on a complemented lattice an integral model multiplies by meet;
//  (b) a complemented unit plus any of fm, mf, ml, rm forces integrality;
//  (c) on a boolean lattice the six nontrivial laws hold or fail together,
//      and when they hold the unit is the top and the product is the meet;
//  (d) in associative models with (ed): lp, ml, lj hold or fail together,
//      and so do rp, rm, jr.
inline UnitalStructureReport check_unital_structure(int max_size) {
  if (max_size < 1 || max_size > 8)
    throw ConfigError("sweep size must be between 1 and 8, got " +
                      std::to_string(max_size));
  UnitalStructureReport rep;
  rep.max_size = max_size;
  const LawMask one_sided = static_cast<LawMask>(
      law_bit(Law::fm) | law_bit(Law::mf) | law_bit(Law::ml) |
      law_bit(Law::rm));
  for (int s = 1; s <= max_size; ++s)
    for (const auto& lat : enumerate_lattices(s))
      for_each_model(lat, [&](const ResiduatedBinar& alg) {
        ++rep.models_seen;
        const StructureFlags f = algebra_predicates(alg);
        if (!f.unital) return true;
        const Lattice& red = alg.lattice();
        const int unit = *alg.unit();
        std::optional<LawMask> prof;
        const auto profile = [&] {
          if (!prof) prof = nontrivial_profile(alg);
          return *prof;
        };
        const auto flag = [&](const char* what) {
          rep.violations.push_back(std::string(what) + " (size " +
                                   std::to_string(red.size()) + ", key " +
                                   canonical_key(alg) + ")");
        };
        if (f.complemented && f.integral) {
          ++rep.meet_instances;
          if (!detail::mult_is_meet(alg))
            flag("integral model on a complemented lattice multiplies off-meet");
        }
        if (!red.complements_of(unit).empty() && (profile() & one_sided)) {
          ++rep.integral_instances;
          if (!f.integral)
            flag("complemented unit with a one-sided law but unit below top");
        }
        if (f.boolean) {
          ++rep.boolean_instances;
          if (profile() != 0 && profile() != kAllNontrivial)
            flag("boolean model splits the six laws");
          if (profile()) {
            ++rep.boolean_law_instances;
            if (unit != red.top() || !detail::mult_is_meet(alg))
              flag("boolean model with the laws but not a meet algebra");
          }
        }
        if (f.associative && check_law(Law::ed, alg) == LawStatus::Holds) {
          ++rep.prelinearity_instances;
          const bool lp = check_law(Law::lp, alg) == LawStatus::Holds;
          const bool rp = check_law(Law::rp, alg) == LawStatus::Holds;
          const bool ml = (profile() & law_bit(Law::ml)) != 0;
          const bool lj = (profile() & law_bit(Law::lj)) != 0;
          const bool rm = (profile() & law_bit(Law::rm)) != 0;
          const bool jr = (profile() & law_bit(Law::jr)) != 0;
          if (lp != ml || lp != lj)
            flag("lp, ml, lj split on an associative model with (ed)");
          if (rp != rm || rp != jr)
            flag("rp, rm, jr split on an associative model with (ed)");
        }
        return true;
      });
  return rep;
}

}  // namespace resbinar
