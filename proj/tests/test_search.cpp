#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "reference_models.hpp"
#include "resbinar/search.hpp"

using namespace resbinar;

namespace {

std::set<Law> law_set(LawMask m) {
  std::set<Law> out;
  for (Law l : {Law::fm, Law::mf, Law::lj, Law::jr, Law::ml, Law::rm})
    if (m & law_bit(l)) out.insert(l);
  return out;
}

}  // namespace

TEST_CASE("config validation and normalization") {
  SearchConfig cfg;
  cfg.max_size = 0;
  REQUIRE_THROWS_AS(search(cfg), ConfigError);
  cfg.max_size = 9;
  REQUIRE_THROWS_AS(search(cfg), ConfigError);

  cfg.max_size = 3;
  cfg.satisfies = {Law::fm};
  cfg.fails = {Law::fm};
  REQUIRE_THROWS_AS(search(cfg), ConfigError);

  SearchConfig flags;
  flags.boolean = true;
  flags.integral = true;
  const SearchConfig norm = detail::normalized(flags);
  REQUIRE(norm.distributive);
  REQUIRE(norm.complemented);
  REQUIRE(norm.unital);
}

TEST_CASE("unconstrained search lists every model in order") {
  SearchConfig cfg;
  cfg.max_size = 3;
  const SearchResult res = search(cfg);
  REQUIRE(res.status == SearchStatus::Found);
  REQUIRE(res.models.size() == 23);  // 1 + 2 + 20
  REQUIRE(res.keys.size() == 23);
  REQUIRE(res.sizes_certified == std::vector<int>{1, 2, 3});
  REQUIRE(res.models_per_size ==
          std::vector<std::uint64_t>{0, 1, 2, 20});

  for (std::size_t i = 0; i < res.models.size(); ++i)
    REQUIRE(canonical_key(res.models[i]) == res.keys[i]);
  for (std::size_t i = 1; i < res.models.size(); ++i) {
    REQUIRE(res.models[i - 1].size() <= res.models[i].size());
    if (res.models[i - 1].size() == res.models[i].size())
      REQUIRE(res.keys[i - 1] < res.keys[i]);
  }
}

TEST_CASE("match limit keeps the smallest keys") {
  SearchConfig cfg;
  cfg.max_size = 4;
  cfg.distributive = true;
  cfg.satisfies = {Law::fm};
  cfg.fails = {Law::mf};
  const SearchResult full = search(cfg);
  REQUIRE(full.status == SearchStatus::Found);
  REQUIRE(full.models.size() == 13);
  for (const auto& m : full.models) REQUIRE(m.size() == 4);

  cfg.limit = 5;
  const SearchResult cut = search(cfg);
  REQUIRE(cut.status == SearchStatus::Found);
  REQUIRE(cut.models.size() == 5);
  REQUIRE(std::vector<std::string>(full.keys.begin(), full.keys.begin() + 5) ==
          cut.keys);
  REQUIRE(cut.sizes_certified == std::vector<int>{1, 2, 3, 4});
  REQUIRE(cut.models_per_size ==
          std::vector<std::uint64_t>{0, 1, 2, 20, 1116});
}

TEST_CASE("a filled limit stops before later sizes") {
  SearchConfig cfg;
  cfg.max_size = 4;
  cfg.limit = 2;
  const SearchResult res = search(cfg);
  REQUIRE(res.status == SearchStatus::Found);
  REQUIRE(res.models.size() == 2);
  REQUIRE(res.models[0].size() == 1);
  REQUIRE(res.models[1].size() == 2);
  REQUIRE(res.sizes_certified == std::vector<int>{1, 2});
  REQUIRE(res.models_per_size[3] == 0);
  REQUIRE(res.models_per_size[4] == 0);
}

TEST_CASE("zero budget reports immediately with nothing certified") {
  SearchConfig cfg;
  cfg.max_size = 4;
  cfg.time_budget = 0;
  const SearchResult res = search(cfg);
  REQUIRE(res.status == SearchStatus::BudgetExceeded);
  REQUIRE(res.models.empty());
  REQUIRE(res.sizes_certified.empty());
  REQUIRE(res.models_per_size == std::vector<std::uint64_t>(5, 0));
}

TEST_CASE("results do not depend on the worker count") {
  SearchConfig cfg;
  cfg.max_size = 4;
  cfg.distributive = true;
  cfg.satisfies = {Law::fm};
  cfg.fails = {Law::mf};

  setenv("RESBINAR_THREADS", "1", 1);
  const SearchResult serial = search(cfg);
  setenv("RESBINAR_THREADS", "3", 1);
  const SearchResult pooled = search(cfg);
  unsetenv("RESBINAR_THREADS");

  REQUIRE(serial.status == pooled.status);
  REQUIRE(serial.keys == pooled.keys);
  REQUIRE(serial.models_per_size == pooled.models_per_size);
  REQUIRE(serial.keys.size() == 13);
}

TEST_CASE("bundled models are rediscovered from their profiles", "[slow]") {
  const auto bundle = refmodels::all();
  const int sizes[6] = {4, 4, 4, 5, 5, 5};
  const std::size_t matches[6] = {2, 2, 2, 220, 220, 20};
  for (int i = 0; i < 6; ++i) {
    const ResiduatedBinar& alg = bundle[static_cast<std::size_t>(i)];
    const LawMask prof = nontrivial_profile(alg);
    SearchConfig cfg;
    cfg.max_size = sizes[i];
    cfg.distributive = true;
    cfg.satisfies = law_set(prof);
    cfg.fails = law_set(static_cast<LawMask>(kAllNontrivial & ~prof));
    const SearchResult res = search(cfg);
    INFO("bundle model " << i + 1);
    REQUIRE(res.status == SearchStatus::Found);
    REQUIRE(res.models.size() == matches[i]);
    const std::string key = canonical_key(alg);
    bool present = false;
    for (const auto& k : res.keys) present = present || k == key;
    REQUIRE(present);
  }
}

TEST_CASE("implication rules have no countermodels up to size four") {
  const RuleSweepReport sweep = check_implication_rules(4);
  REQUIRE(sweep.outcomes.size() == 6);
  REQUIRE(sweep.all_exhausted());
  REQUIRE_FALSE(sweep.budget_hit());
  const auto rules = implication_rules();
  for (std::size_t i = 0; i < 6; ++i) {
    REQUIRE(sweep.outcomes[i].rule.conclusion == rules[i].conclusion);
    const SearchResult& r = sweep.outcomes[i].result;
    REQUIRE(r.status == SearchStatus::ExhaustedNone);
    REQUIRE(r.models.empty());
    REQUIRE(r.sizes_certified == std::vector<int>{1, 2, 3, 4});
    REQUIRE(r.models_per_size ==
            std::vector<std::uint64_t>{0, 1, 2, 20, 1116});
  }
}

TEST_CASE("rules survive size five beyond distributivity", "[slow]") {
  const RuleSweepReport wide = check_implication_rules(5, false);
  REQUIRE(wide.all_exhausted());
  REQUIRE(wide.outcomes[0].result.models_per_size ==
          std::vector<std::uint64_t>{0, 1, 2, 20, 1116, 260687});
}

TEST_CASE("dropping a premise always yields a countermodel", "[slow]") {
  for (const ImplicationRule& r : implication_rules()) {
    const std::set<Law> subsets[3] = {{}, {r.premise1}, {r.premise2}};
    for (const auto& sub : subsets) {
      SearchConfig cfg;
      cfg.max_size = 4;
      cfg.distributive = true;
      cfg.satisfies = sub;
      cfg.fails = {r.conclusion};
      cfg.limit = 1;
      const SearchResult res = search(cfg);
      INFO("conclusion " << law_info(r.conclusion).tag << " with "
                         << sub.size() << " premise(s)");
      REQUIRE(res.status == SearchStatus::Found);
      REQUIRE(res.models.size() == 1);
      const ResiduatedBinar& m = res.models[0];
      REQUIRE(m.size() == 4);
      REQUIRE(check_law(r.conclusion, m) == LawStatus::Fails);
      for (Law l : sub) REQUIRE(check_law(l, m) == LawStatus::Holds);
    }
  }
}

TEST_CASE("unital structure sweep is clean up to size four") {
  const UnitalStructureReport rep = check_unital_structure(4);
  CAPTURE(rep.violations);
  REQUIRE(rep.passed());
  REQUIRE(rep.models_seen == 1139);
  REQUIRE(rep.meet_instances == 3);
  REQUIRE(rep.integral_instances == 16);
  REQUIRE(rep.boolean_instances == 7);
  REQUIRE(rep.boolean_law_instances == 3);
  REQUIRE(rep.prelinearity_instances == 25);
}

TEST_CASE("unital structure sweep is clean at size five", "[slow]") {
  const UnitalStructureReport rep = check_unital_structure(5);
  CAPTURE(rep.violations);
  REQUIRE(rep.passed());
  REQUIRE(rep.models_seen == 261826);
  REQUIRE(rep.meet_instances == 3);
  REQUIRE(rep.integral_instances == 193);
  REQUIRE(rep.boolean_instances == 7);
  REQUIRE(rep.boolean_law_instances == 3);
  REQUIRE(rep.prelinearity_instances == 161);
}

TEST_CASE("unit-dependent laws are matched by status, not applicability") {
  SearchConfig with_ed;
  with_ed.max_size = 2;
  with_ed.satisfies = {Law::ed};
  const SearchResult holds = search(with_ed);
  REQUIRE(holds.status == SearchStatus::Found);
  REQUIRE(holds.models.size() == 2);
  for (const auto& m : holds.models) {
    REQUIRE(m.unit().has_value());
    REQUIRE(check_law(Law::ed, m) == LawStatus::Holds);
  }

  // every distributive model with a unit satisfies (ed); models without a
  // unit are inapplicable rather than failing, so nothing matches
  SearchConfig against_ed;
  against_ed.max_size = 4;
  against_ed.fails = {Law::ed};
  const SearchResult fails = search(against_ed);
  REQUIRE(fails.status == SearchStatus::ExhaustedNone);
  REQUIRE(fails.models_per_size ==
          std::vector<std::uint64_t>{0, 1, 2, 20, 1116});
}

TEST_CASE("streaming on one lattice applies the constraints") {
  SearchConfig cfg;
  cfg.satisfies = {Law::fm, Law::mf, Law::rm, Law::ml};
  cfg.fails = {Law::lj};
  int count = 0;
  bool has_a1 = false;
  const std::string a1key = canonical_key(refmodels::a1());
  const bool done = enumerate_binars(
      refmodels::diamond4(), cfg, [&](const ResiduatedBinar& m) {
        ++count;
        has_a1 = has_a1 || canonical_key(m) == a1key;
        return true;
      });
  REQUIRE(done);
  REQUIRE(count == 2);
  REQUIRE(has_a1);

  // a lattice-level flag the lattice misses empties the stream
  SearchConfig comp;
  comp.complemented = true;
  int seen = 0;
  const Lattice chain3 = Lattice::from_covers({"0", "a", "1"},
                                              {{0, 1}, {1, 2}});
  REQUIRE(enumerate_binars(chain3, comp,
                           [&](const ResiduatedBinar&) {
                             ++seen;
                             return true;
                           }));
  REQUIRE(seen == 0);

  // the visitor can stop the stream
  SearchConfig open;
  int first = 0;
  REQUIRE_FALSE(enumerate_binars(chain3, open, [&](const ResiduatedBinar&) {
    ++first;
    return false;
  }));
  REQUIRE(first == 1);
}
