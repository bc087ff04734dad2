#pragma once

// The one-shot reproduction suite: nine items covering the bundled models,
// the law sweeps, frame correspondence, the implication rules, unital
// structure and the subvariety poset.  The report is plain text with an
// `ITEM <name> PASS|FAIL` trailer per item, byte-deterministic for fixed
// flags whatever the worker count.

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "resbinar/enumerate.hpp"
#include "resbinar/errors.hpp"
#include "resbinar/eval.hpp"
#include "resbinar/frame.hpp"
#include "resbinar/laws.hpp"
#include "resbinar/models.hpp"
#include "resbinar/poset.hpp"
#include "resbinar/search.hpp"

namespace resbinar {

struct VerifyItem {
  std::string name;
  std::string title;
  bool passed = true;
  bool budget_hit = false;
  std::vector<std::string> lines;
};

struct VerifyReport {
  int max_size = 4;
  std::vector<VerifyItem> items;
  bool all_passed() const {
    for (const VerifyItem& it : items)
      if (!it.passed) return false;
    return !items.empty();
  }
  bool budget_hit() const {
    for (const VerifyItem& it : items)
      if (it.budget_hit) return true;
    return false;
  }
};

namespace detail {

// "models per size 1..4: 1 2 20 1116"
inline std::string per_size_line(const char* what,
                                 const std::vector<std::uint64_t>& counts) {
  std::string out = std::string(what) + " per size 1.." +
                    std::to_string(counts.size()) + ":";
  for (std::uint64_t c : counts) out += " " + std::to_string(c);
  return out;
}

// Walks every model on every lattice up to cap, smallest sizes first.
// The callback may stop the sweep by returning false.
template <typename F>
inline std::vector<std::uint64_t> sweep_models(int cap, bool distributive_only,
                                               F&& f) {
  std::vector<std::uint64_t> per_size;
  bool go = true;
  for (int s = 1; s <= cap && go; ++s) {
    std::uint64_t count = 0;
    for (const Lattice& lat : enumerate_lattices(s, distributive_only)) {
      if (!go) break;
      go = for_each_model(lat, [&](const ResiduatedBinar& alg) {
        ++count;
        return f(alg);
      });
    }
    per_size.push_back(count);
  }
  return per_size;
}

inline void item_bundle_profiles(VerifyItem& it) {
  static const std::array<std::pair<const char*, LawMask>, 7> expected = {{
      {"A1", 51}, {"A2", 23}, {"A3", 43}, {"A4", 45},
      {"A5", 30}, {"A6", 60}, {"A7", 0},
  }};
  const std::vector<NamedAlgebra> models = all_bundled_models();
  if (models.size() != expected.size()) {
    it.passed = false;
    it.lines.push_back("expected 7 bundled models, found " +
                       std::to_string(models.size()));
    return;
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& [name, want] = expected[i];
    const LawMask got = nontrivial_profile(models[i].algebra);
    it.lines.push_back(models[i].name + " size " +
                       std::to_string(models[i].algebra.size()) + " profile " +
                       mask_tags(got));
    if (models[i].name != name || got != want) {
      it.passed = false;
      it.lines.push_back(std::string("  expected ") + name + " with " +
                         mask_tags(want));
    }
  }
}

inline void item_unital_countermodel(VerifyItem& it) {
  const ResiduatedBinar a7 = bundled_model("A7").algebra;
  const StructureFlags f = algebra_predicates(a7);
  const UnitalReport rep = unital_checks(a7);
  const LawMask prof = nontrivial_profile(a7);

  bool ok = f.unital && !f.integral && !f.associative;
  it.lines.push_back("A7 is unital, not integral, not associative");
  ok = ok && rep.lp == LawStatus::Holds && rep.rp == LawStatus::Holds &&
       rep.ed == LawStatus::Holds;
  it.lines.push_back("lp, rp and ed hold");
  ok = ok && prof == 0;
  it.lines.push_back("fm, mf, lj, jr, ml, rm all fail");
  bool vac = rep.implications_apply;
  for (ImplicationVerdict v : rep.implications)
    vac = vac && v == ImplicationVerdict::Vacuous;
  ok = ok && vac;
  it.lines.push_back(
      "the implications rm=>lp, jr=>lp, ml=>rp, lj=>rp are vacuous here,"
      " so prelinearity does not force any division law back");
  if (!ok) {
    it.passed = false;
    it.lines.push_back("A7 does not match its published behavior");
  }
}

inline void item_always_valid(VerifyItem& it, int cap) {
  std::uint64_t total = 0;
  try {
    const auto per = sweep_models(cap, false, [&](const ResiduatedBinar& alg) {
      for (int i = kNontrivialCount; i < 2 * kNontrivialCount; ++i)
        (void)check_law(static_cast<Law>(i), alg);  // throws on violation
      ++total;
      return true;
    });
    it.lines.push_back(per_size_line("models", per));
    it.lines.push_back("all six hold on " + std::to_string(total) +
                       " models");
  } catch (const AlwaysValidLawFailed& e) {
    it.passed = false;
    it.lines.push_back(std::string("violation: ") + e.what());
  }
}

inline void item_four_variable(VerifyItem& it, int cap) {
  std::uint64_t total = 0;
  std::string mismatch;
  const auto per = sweep_models(cap, false, [&](const ResiduatedBinar& alg) {
    for (int i = 0; i < kNontrivialCount; ++i) {
      const Law l = static_cast<Law>(i);
      const bool law = check_law(l, alg) == LawStatus::Holds;
      const bool four =
          check_statement(four_variable_equivalent(l), alg).holds;
      if (law != four) {
        mismatch = std::string("law ") + law_info(l).tag +
                   " disagrees with its four-variable form on a size-" +
                   std::to_string(alg.size()) + " model, key " +
                   canonical_key(alg);
        return false;
      }
    }
    ++total;
    return true;
  });
  if (!mismatch.empty()) {
    it.passed = false;
    it.lines.push_back(mismatch);
    return;
  }
  it.lines.push_back(per_size_line("models", per));
  it.lines.push_back("two-variable and four-variable forms agree on " +
                     std::to_string(total) + " models");
}

inline void item_mirror_duality(VerifyItem& it, int cap) {
  std::uint64_t total = 0;
  std::string mismatch;
  const auto per = sweep_models(cap, false, [&](const ResiduatedBinar& alg) {
    const ResiduatedBinar op = opposite_algebra(alg);
    for (int i = 0; i < kLawCount; ++i) {
      const Law l = static_cast<Law>(i);
      if (check_law(l, op) != check_law(law_info(l).mirror, alg)) {
        mismatch = std::string("law ") + law_info(l).tag +
                   " breaks mirror duality on a size-" +
                   std::to_string(alg.size()) + " model, key " +
                   canonical_key(alg);
        return false;
      }
    }
    ++total;
    return true;
  });
  if (!mismatch.empty()) {
    it.passed = false;
    it.lines.push_back(mismatch);
    return;
  }
  it.lines.push_back(per_size_line("models", per));
  it.lines.push_back("every law mirrors onto the opposite algebra on " +
                     std::to_string(total) + " models");
}

inline void item_frame_correspondence(VerifyItem& it, int cap) {
  std::vector<ResiduatedBinar> sample;
  for (const NamedAlgebra& na : all_bundled_models())
    sample.push_back(na.algebra);
  const CalibrationOutcome cal = calibrate_variant(sample);
  it.lines.push_back(
      "calibration disagreements over " + std::to_string(cal.algebras) +
      " bundled algebras: literal=" + std::to_string(cal.disagreements[0]) +
      " upset=" + std::to_string(cal.disagreements[1]) +
      " superset=" + std::to_string(cal.disagreements[2]));
  if (!cal.chosen) {
    it.passed = false;
    it.lines.push_back("no variant matches algebra-level truth");
    return;
  }
  it.lines.push_back(std::string("chosen variant: ") +
                     variant_name(*cal.chosen));

  std::uint64_t total = 0, reproof = 0;
  std::string mismatch;
  const auto per = sweep_models(cap, true, [&](const ResiduatedBinar& alg) {
    const CorrespondenceReport rep = correspondence_check(alg, *cal.chosen);
    if (!rep.all_agree) {
      for (const CorrespondenceEntry& e : rep.entries)
        if (!e.agree)
          mismatch = std::string("law ") + law_info(e.law).tag +
                     " splits from its frame condition on a size-" +
                     std::to_string(alg.size()) + " model, key " +
                     canonical_key(alg);
      return false;
    }
    // frame-side re-proof: when the frame meets the jr and ml conditions
    // it must meet the lj condition too
    if (rep.entries[0].frame_holds && rep.entries[1].frame_holds) {
      ++reproof;
      if (!rep.entries[2].frame_holds) {
        mismatch = "a frame satisfies the jr and ml conditions but not lj,"
                   " size " + std::to_string(alg.size()) + ", key " +
                   canonical_key(alg);
        return false;
      }
    }
    ++total;
    return true;
  });
  if (!mismatch.empty()) {
    it.passed = false;
    it.lines.push_back(mismatch);
    return;
  }
  it.lines.push_back(per_size_line("distributive models", per));
  it.lines.push_back("frame conditions for jr, ml, lj agree on " +
                     std::to_string(total) + " models");
  it.lines.push_back("frames meeting the jr and ml conditions: " +
                     std::to_string(reproof) + ", every one meets lj");
}

inline std::string rule_text(const ImplicationRule& r) {
  return mask_tags(static_cast<LawMask>(law_bit(r.premise1) |
                                        law_bit(r.premise2))) +
         " => " + law_info(r.conclusion).tag;
}

inline void rule_lines(VerifyItem& it, const RuleSweepReport& sweep,
                       const char* prefix, bool binding) {
  for (const RuleOutcome& o : sweep.outcomes) {
    std::uint64_t examined = 0;
    for (std::uint64_t c : o.result.models_per_size) examined += c;
    std::string line = std::string(prefix) + rule_text(o.rule) + ": ";
    switch (o.result.status) {
      case SearchStatus::ExhaustedNone:
        line += "exhausted, no countermodel (" + std::to_string(examined) +
                " models)";
        break;
      case SearchStatus::Found:
        line += "countermodel of size " +
                std::to_string(o.result.models[0].size()) + ", key " +
                o.result.keys[0];
        if (binding) it.passed = false;
        break;
      case SearchStatus::BudgetExceeded:
        line += "budget exceeded after " +
                std::to_string(o.result.sizes_certified.size()) +
                " certified sizes";
        it.budget_hit = true;
        if (binding) it.passed = false;
        break;
    }
    it.lines.push_back(std::move(line));
  }
}

inline void item_implication_rules(VerifyItem& it, int cap, double budget) {
  rule_lines(it, check_implication_rules(cap, true, budget), "", true);
  // the same hunt without the distributive floor; the answer is not known
  // in general, so this only reports what the sweep sees
  rule_lines(it, check_implication_rules(cap, false, budget),
             "probe without distributivity: ", false);
}

inline void item_unital_structure(VerifyItem& it, int cap) {
  const UnitalStructureReport rep = check_unital_structure(cap);
  it.lines.push_back("models examined: " + std::to_string(rep.models_seen));
  it.lines.push_back("integral models on complemented lattices: " +
                     std::to_string(rep.meet_instances) +
                     ", each multiplies by meet");
  it.lines.push_back("models with a complemented unit and a one-sided law: " +
                     std::to_string(rep.integral_instances) +
                     ", all integral");
  it.lines.push_back("unital models on boolean lattices: " +
                     std::to_string(rep.boolean_instances) +
                     ", six-law agreement throughout; laws held on " +
                     std::to_string(rep.boolean_law_instances) +
                     " (unit on top, product is meet)");
  it.lines.push_back("associative models with ed: " +
                     std::to_string(rep.prelinearity_instances) +
                     ", the classes {lp,ml,lj} and {rp,rm,jr} never split");
  if (!rep.passed()) {
    it.passed = false;
    it.lines.push_back("first violation: " + rep.violations.front());
  }
}

inline void item_subvariety_poset(VerifyItem& it) {
  const auto sets = closed_sets(false);
  const auto comm = closed_sets(true);
  it.lines.push_back("closed sets: " + std::to_string(sets.size()) +
                     ", commutative quotient: " + std::to_string(comm.size()));
  if (sets.size() != 29 || comm.size() != 7) {
    it.passed = false;
    it.lines.push_back("expected 29 and 7");
    return;
  }
  const PosetDiagram d = build_poset(false);  // asserts atoms and coatoms
  std::set<LawMask> atom_masks;
  for (int a : d.atoms) atom_masks.insert(d.nodes[static_cast<std::size_t>(a)]);
  std::set<LawMask> profiles;
  const auto models = all_bundled_models();
  for (std::size_t i = 0; i < 6; ++i)
    profiles.insert(nontrivial_profile(models[i].algebra));
  if (atom_masks != profiles) {
    it.passed = false;
    it.lines.push_back("atoms differ from the bundled profiles");
    return;
  }
  it.lines.push_back(
      "atoms: 6 quadruples matching the bundled profiles; coatoms: 6"
      " singletons");
  std::vector<ResiduatedBinar> six;
  for (std::size_t i = 0; i < 6; ++i) six.push_back(models[i].algebra);
  const SeparationReport sep = separation_check(six);  // throws on a gap
  it.lines.push_back("separation: " + std::to_string(sep.pairs_checked) +
                     " closed-set/law pairs, every one witnessed");
}

}  // namespace detail

inline VerifyReport verify_paper(int max_size = 4, double time_budget = -1) {
  if (max_size < 1 || max_size > 8)
    throw ConfigError("verify size must be between 1 and 8, got " +
                      std::to_string(max_size));
  VerifyReport rep;
  rep.max_size = max_size;
  const int small = max_size < 4 ? max_size : 4;

  struct ItemSpec {
    const char* name;
    const char* title;
    std::function<void(VerifyItem&)> run;
  };
  const std::vector<ItemSpec> items = {
      {"bundle-profiles",
       "bundled models parse and report their published profiles",
       [&](VerifyItem& it) { detail::item_bundle_profiles(it); }},
      {"unital-countermodel",
       "the unital bundled model keeps prelinearity apart from the division"
       " laws",
       [&](VerifyItem& it) { detail::item_unital_countermodel(it); }},
      {"always-valid-laws",
       "the six always-valid laws hold on every enumerated model",
       [&](VerifyItem& it) { detail::item_always_valid(it, max_size); }},
      {"four-variable-forms",
       "each law matches its four-variable companion",
       [&](VerifyItem& it) { detail::item_four_variable(it, small); }},
      {"mirror-duality",
       "law checks transfer to the opposite algebra under the mirror map",
       [&](VerifyItem& it) { detail::item_mirror_duality(it, small); }},
      {"frame-correspondence",
       "frame conditions match algebra-level truth after calibration",
       [&](VerifyItem& it) {
         detail::item_frame_correspondence(it, max_size);
       }},
      {"implication-rules",
       "no distributive model satisfies a rule's premises and fails its"
       " conclusion",
       [&](VerifyItem& it) {
         detail::item_implication_rules(it, max_size, time_budget);
       }},
      {"unital-structure",
       "units force the published structure across the enumeration",
       [&](VerifyItem& it) { detail::item_unital_structure(it, max_size); }},
      {"subvariety-poset",
       "closed sets, diagram shape and separation witnesses line up",
       [&](VerifyItem& it) { detail::item_subvariety_poset(it); }},
  };
  for (const ItemSpec& spec : items) {
    VerifyItem it;
    it.name = spec.name;
    it.title = spec.title;
    try {
      spec.run(it);
    } catch (const Error& e) {
      it.passed = false;
      it.lines.push_back(std::string("error: ") + e.what());
    }
    rep.items.push_back(std::move(it));
  }
  return rep;
}

inline std::string format_report(const VerifyReport& rep) {
  std::string out = "verify-paper max-size=" + std::to_string(rep.max_size) +
                    "\n";
  for (const VerifyItem& it : rep.items) {
    out += "\n" + it.title + "\n";
    for (const std::string& line : it.lines) out += "  " + line + "\n";
    out += "ITEM " + it.name + (it.passed ? " PASS" : " FAIL") + "\n";
  }
  out += std::string("\nRESULT ") + (rep.all_passed() ? "PASS" : "FAIL") +
         "\n";
  return out;
}

}  // namespace resbinar
