#pragma once

// The poset of subvarieties cut out by the six nontrivial laws.  A set of
// laws is closed when the implication rules add nothing to it; closed sets
// ordered by reverse inclusion (more laws, smaller variety, lower node)
// form the diagram, and the six bundled models witness that distinct
// closed sets really axiomatize distinct subvarieties.

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "resbinar/algebra.hpp"
#include "resbinar/errors.hpp"
#include "resbinar/laws.hpp"

namespace resbinar {

inline std::string closed_set_label(LawMask laws) {
  if (laws == 0) return "RB";
  std::string out;
  for (Law l : {Law::fm, Law::mf, Law::lj, Law::jr, Law::ml, Law::rm})
    if (laws & law_bit(l)) {
      if (!out.empty()) out += ',';
      out += law_info(l).tag;
    }
  return out;
}

// Commutativity makes x\y and y/x interchangeable, which identifies each
// law with its mirror.  The left-hand law of each pair stands for both.
inline Law commutative_representative(Law l) {
  switch (l) {
    case Law::mf: return Law::fm;
    case Law::jr: return Law::lj;
    case Law::rm: return Law::ml;
    default: return l;
  }
}

// The rule list after identifying mirrored laws.  Rules whose conclusion
// becomes one of its own premises say nothing and are dropped, as are
// duplicates; one rule survives.
inline std::vector<ImplicationRule> commutative_rules() {
  std::vector<ImplicationRule> out;
  for (const ImplicationRule& r : implication_rules()) {
    const ImplicationRule q{commutative_representative(r.premise1),
                            commutative_representative(r.premise2),
                            commutative_representative(r.conclusion)};
    if (q.conclusion == q.premise1 || q.conclusion == q.premise2) continue;
    bool dup = false;
    for (const ImplicationRule& e : out)
      dup = dup ||
            ((law_bit(e.premise1) | law_bit(e.premise2)) ==
                 (law_bit(q.premise1) | law_bit(q.premise2)) &&
             e.conclusion == q.conclusion);
    if (!dup) out.push_back(q);
  }
  return out;
}

namespace detail {

inline LawMask close_over(LawMask m, const std::vector<ImplicationRule>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ImplicationRule& r : rules) {
      const LawMask need =
          static_cast<LawMask>(law_bit(r.premise1) | law_bit(r.premise2));
      if ((m & need) == need && !(m & law_bit(r.conclusion))) {
        m = static_cast<LawMask>(m | law_bit(r.conclusion));
        changed = true;
      }
    }
  }
  return m;
}

}  // namespace detail

// Every rule-closed subset of the law universe, sorted by size and then by
// bit value, so the empty set comes first and the full set last.
inline std::vector<LawMask> closed_sets(bool commutative = false) {
  const LawMask universe =
      commutative ? static_cast<LawMask>(law_bit(Law::fm) | law_bit(Law::lj) |
                                         law_bit(Law::ml))
                  : kAllNontrivial;
  std::vector<ImplicationRule> rules;
  if (commutative) {
    rules = commutative_rules();
  } else {
    const auto& all = implication_rules();
    rules.assign(all.begin(), all.end());
  }
  std::vector<LawMask> out;
  for (int m = 0; m <= kAllNontrivial; ++m) {
    const LawMask s = static_cast<LawMask>(m);
    if (s & ~universe) continue;
    if (detail::close_over(s, rules) == s) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](LawMask a, LawMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

struct PosetDiagram {
  bool commutative = false;
  std::vector<LawMask> nodes;  // closed_sets() order: top first, bottom last
  std::vector<std::pair<int, int>> edges;  // covering pairs (below, above)
  std::vector<int> atoms;      // nodes covering the bottom
  std::vector<int> coatoms;    // nodes covered by the top
  int top = 0;
  int bottom = 0;
};

inline PosetDiagram build_poset(bool commutative = false) {
  PosetDiagram d;
  d.commutative = commutative;
  d.nodes = closed_sets(commutative);
  const int k = static_cast<int>(d.nodes.size());
  // node i lies below node j when its axiom set properly contains j's
  const auto below = [&](int i, int j) {
    return i != j && (d.nodes[i] & d.nodes[j]) == d.nodes[j] &&
           d.nodes[i] != d.nodes[j];
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!below(i, j)) continue;
      bool covering = true;
      for (int t = 0; t < k && covering; ++t)
        covering = !(below(i, t) && below(t, j));
      if (covering) d.edges.emplace_back(i, j);
    }
  d.top = 0;           // sorted by size: the empty set leads
  d.bottom = k - 1;    // and the full universe closes the list
  for (const auto& [lo, hi] : d.edges) {
    if (lo == d.bottom) d.atoms.push_back(hi);
    if (hi == d.top) d.coatoms.push_back(lo);
  }
  if (!commutative) {
    if (d.atoms.size() != 6 || d.coatoms.size() != 6)
      throw Error("subvariety diagram lost its six atoms or coatoms");
    for (int a : d.atoms)
      if (std::popcount(d.nodes[static_cast<std::size_t>(a)]) != 4)
        throw Error("an atom of the subvariety diagram is not a quadruple");
    for (int c : d.coatoms)
      if (std::popcount(d.nodes[static_cast<std::size_t>(c)]) != 1)
        throw Error("a coatom of the subvariety diagram is not a singleton");
  }
  return d;
}

struct SeparationReport {
  int closed_count = 0;
  int pairs_checked = 0;
  // (closed set, law outside it, first bundled model separating the two)
  std::vector<std::tuple<LawMask, Law, int>> witnesses;
};

// Confirms that for every closed set S and law e outside S some bundled
// model satisfies all of S yet fails e.  Distinct closed sets then cut out
// distinct subvarieties, so the diagram is exact.
inline SeparationReport separation_check(
    const std::vector<ResiduatedBinar>& models) {
  if (models.size() != 6)
    throw ConfigError("separation check needs exactly the six bundled models");
  std::array<LawMask, 6> prof{};
  for (std::size_t i = 0; i < 6; ++i) prof[i] = nontrivial_profile(models[i]);
  SeparationReport rep;
  const std::vector<LawMask> sets = closed_sets(false);
  rep.closed_count = static_cast<int>(sets.size());
  for (const LawMask s : sets)
    for (Law l : {Law::fm, Law::mf, Law::lj, Law::jr, Law::ml, Law::rm}) {
      if (s & law_bit(l)) continue;
      ++rep.pairs_checked;
      int witness = -1;
      for (int i = 0; i < 6 && witness < 0; ++i)
        if ((prof[static_cast<std::size_t>(i)] & s) == s &&
            !(prof[static_cast<std::size_t>(i)] & law_bit(l)))
          witness = i;
      if (witness < 0)
        throw SeparationGap("no bundled model satisfies {" +
                            closed_set_label(s) + "} while failing " +
                            law_info(l).tag);
      rep.witnesses.emplace_back(s, l, witness);
    }
  return rep;
}

inline std::string export_dot(const PosetDiagram& d) {
  std::string out = "digraph subvarieties {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" +
           closed_set_label(d.nodes[i]) + "\"];\n";
  for (const auto& [lo, hi] : d.edges)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace resbinar
