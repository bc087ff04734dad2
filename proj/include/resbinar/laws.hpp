#pragma once

// The fifteen distributivity-style laws, their two-letter tags, mirror
// pairing, and the implication rules among the six that can fail.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "resbinar/algebra.hpp"
#include "resbinar/errors.hpp"
#include "resbinar/eval.hpp"
#include "resbinar/parse.hpp"
#include "resbinar/term.hpp"

namespace resbinar {

// The first six can fail and get the profile bits 1<<0 .. 1<<5. The next six
// hold in every residuated binar. The last three mention the unit.
enum class Law : std::uint8_t {
  fm, mf, lj, jr, ml, rm,
  fj, jf, lm, mr, rj, jl,
  lp, rp, ed,
};

inline constexpr int kLawCount = 15;
inline constexpr int kNontrivialCount = 6;

using LawMask = std::uint8_t;
inline constexpr LawMask kAllNontrivial = 0x3f;

struct LawInfo {
  Law law;
  const char* tag;
  const char* display;  // operator-shaped name for listings
  const char* statement;
  bool always_valid;
  bool needs_unit;
  Law mirror;
};

inline const std::array<LawInfo, kLawCount>& law_catalog() {
  static const std::array<LawInfo, kLawCount> table = {{
      {Law::fm, "fm", "(·∧)", "x*(y ^ z) = x*y ^ x*z", false, false, Law::mf},
      {Law::mf, "mf", "(∧·)", "(x ^ y)*z = x*z ^ y*z", false, false, Law::fm},
      {Law::lj, "lj", "(\\∨)", "x\\(y v z) = x\\y v x\\z", false, false, Law::jr},
      {Law::jr, "jr", "(∨/)", "(x v y)/z = x/z v y/z", false, false, Law::lj},
      {Law::ml, "ml", "(∧\\)", "(x ^ y)\\z = x\\z v y\\z", false, false, Law::rm},
      {Law::rm, "rm", "(/∧)", "x/(y ^ z) = x/y v x/z", false, false, Law::ml},
      {Law::fj, "fj", "(·∨)", "x*(y v z) = x*y v x*z", true, false, Law::jf},
      {Law::jf, "jf", "(∨·)", "(x v y)*z = x*z v y*z", true, false, Law::fj},
      {Law::lm, "lm", "(\\∧)", "x\\(y ^ z) = x\\y ^ x\\z", true, false, Law::mr},
      {Law::mr, "mr", "(∧/)", "(x ^ y)/z = x/z ^ y/z", true, false, Law::lm},
      {Law::rj, "rj", "(/∨)", "x/(y v z) = x/y ^ x/z", true, false, Law::jl},
      {Law::jl, "jl", "(∨\\)", "(x v y)\\z = x\\z ^ y\\z", true, false, Law::rj},
      {Law::lp, "lp", "(lp)", "e <= x\\y v y\\x", false, true, Law::rp},
      {Law::rp, "rp", "(rp)", "e <= x/y v y/x", false, true, Law::lp},
      {Law::ed, "ed", "(ed)", "(x v y) ^ e = (x ^ e) v (y ^ e)", false, true, Law::ed},
  }};
  return table;
}

inline const LawInfo& law_info(Law l) {
  return law_catalog()[static_cast<int>(l)];
}

inline std::optional<Law> law_from_tag(std::string_view tag) {
  for (const LawInfo& info : law_catalog())
    if (tag == info.tag) return info.law;
  return std::nullopt;
}

inline Law mirror_law(Law l) { return law_info(l).mirror; }

inline LawMask law_bit(Law l) {
  const int i = static_cast<int>(l);
  if (i >= kNontrivialCount)
    throw UnsupportedLaw(std::string("law ") + law_info(l).tag +
                         " has no profile bit");
  return static_cast<LawMask>(LawMask(1) << i);
}

inline LawMask mirror_mask(LawMask m) {
  LawMask out = 0;
  for (int i = 0; i < kNontrivialCount; ++i)
    if (m & (LawMask(1) << i)) out |= law_bit(mirror_law(static_cast<Law>(i)));
  return out;
}

inline const Statement& law_statement(Law l) {
  static const auto cache = [] {
    std::array<Statement, kLawCount> a;
    for (int i = 0; i < kLawCount; ++i)
      a[static_cast<std::size_t>(i)] = parse_statement(law_catalog()[i].statement);
    return a;
  }();
  return cache[static_cast<int>(l)];
}

enum class LawStatus { Holds, Fails, NotApplicable };

inline LawStatus check_law(Law l, const ResiduatedBinar& alg) {
  const LawInfo& info = law_info(l);
  if (info.needs_unit && !alg.unit()) return LawStatus::NotApplicable;
  const bool holds = check_statement(law_statement(l), alg).holds;
  if (!holds && info.always_valid)
    throw AlwaysValidLawFailed(std::string("law ") + info.tag +
                               " failed on a residuated structure");
  return holds ? LawStatus::Holds : LawStatus::Fails;
}

// Like check_law but keeps the counterexample. The law must be applicable.
inline CheckResult law_witness(Law l, const ResiduatedBinar& alg) {
  if (law_info(l).needs_unit && !alg.unit()) throw NoUnit();
  return check_statement(law_statement(l), alg);
}

inline LawMask nontrivial_profile(const ResiduatedBinar& alg) {
  LawMask m = 0;
  for (int i = 0; i < kNontrivialCount; ++i)
    if (check_law(static_cast<Law>(i), alg) == LawStatus::Holds)
      m |= static_cast<LawMask>(LawMask(1) << i);
  return m;
}

inline std::array<LawStatus, kLawCount> full_profile(
    const ResiduatedBinar& alg) {
  std::array<LawStatus, kLawCount> out;
  for (int i = 0; i < kLawCount; ++i)
    out[static_cast<std::size_t>(i)] = check_law(static_cast<Law>(i), alg);
  return out;
}

struct LawProfile {
  LawMask nontrivial = 0;
  LawStatus lp = LawStatus::NotApplicable;
  LawStatus rp = LawStatus::NotApplicable;
  LawStatus ed = LawStatus::NotApplicable;
};

// Profile plus a hard assertion that the six always-valid laws hold; their
// failure would mean the algebra is not actually residuated.
inline LawProfile law_profile(const ResiduatedBinar& alg) {
  for (int i = kNontrivialCount; i < 2 * kNontrivialCount; ++i)
    (void)check_law(static_cast<Law>(i), alg);  // throws on violation
  LawProfile p;
  p.nontrivial = nontrivial_profile(alg);
  p.lp = check_law(Law::lp, alg);
  p.rp = check_law(Law::rp, alg);
  p.ed = check_law(Law::ed, alg);
  return p;
}

enum class ImplicationVerdict { Vacuous, Material, Violated };

struct UnitalReport {
  LawStatus lp = LawStatus::NotApplicable;
  LawStatus rp = LawStatus::NotApplicable;
  LawStatus ed = LawStatus::NotApplicable;
  // rm=>lp, jr=>lp, ml=>rp, lj=>rp; evaluated only when ed holds
  std::array<ImplicationVerdict, 4> implications{};
  bool implications_apply = false;
};

inline const std::array<std::pair<Law, Law>, 4>& unital_implications() {
  static const std::array<std::pair<Law, Law>, 4> pairs = {{
      {Law::rm, Law::lp},
      {Law::jr, Law::lp},
      {Law::ml, Law::rp},
      {Law::lj, Law::rp},
  }};
  return pairs;
}

// The unit-dependent laws plus, when the unit distributes over the lattice
// operations (ed), whether the four division-to-prelinearity implications
// come out vacuous, material, or violated on this algebra.
inline UnitalReport unital_checks(const ResiduatedBinar& alg) {
  if (!alg.unit()) throw NoUnit();
  UnitalReport rep;
  rep.lp = check_law(Law::lp, alg);
  rep.rp = check_law(Law::rp, alg);
  rep.ed = check_law(Law::ed, alg);
  if (rep.ed != LawStatus::Holds) return rep;
  rep.implications_apply = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& [prem, concl] = unital_implications()[i];
    if (check_law(prem, alg) != LawStatus::Holds)
      rep.implications[i] = ImplicationVerdict::Vacuous;
    else if (check_law(concl, alg) == LawStatus::Holds)
      rep.implications[i] = ImplicationVerdict::Material;
    else
      rep.implications[i] = ImplicationVerdict::Violated;
  }
  return rep;
}

// "{fm,mf}" style rendering in catalog order; "{}" when empty.
inline std::string mask_tags(LawMask m) {
  std::string out = "{";
  for (int i = 0; i < kNontrivialCount; ++i)
    if (m & (LawMask(1) << i)) {
      if (out.size() > 1) out += ',';
      out += law_info(static_cast<Law>(i)).tag;
    }
  out += '}';
  return out;
}

// Each of the six laws is equivalent, over all residuated binars, to an
// inequality in four variables. Only the six have one.
inline const Statement& four_variable_equivalent(Law l) {
  static const auto cache = [] {
    std::array<Statement, kNontrivialCount> a;
    const char* text[kNontrivialCount] = {
        "x*z ^ y*w <= (x v y)*(z ^ w)",
        "x*z ^ y*w <= (x ^ y)*(z v w)",
        "(x v y)\\(z v w) <= x\\z v y\\w",
        "(z v w)/(x v y) <= z/x v w/y",
        "(x ^ y)\\(z ^ w) <= x\\z v y\\w",
        "(z ^ w)/(x ^ y) <= z/x v w/y",
    };
    for (int i = 0; i < kNontrivialCount; ++i)
      a[static_cast<std::size_t>(i)] = parse_statement(text[i]);
    return a;
  }();
  const int i = static_cast<int>(l);
  if (i >= kNontrivialCount)
    throw UnsupportedLaw(std::string("law ") + law_info(l).tag +
                         " has no four-variable form");
  return cache[static_cast<std::size_t>(i)];
}

struct ImplicationRule {
  Law premise1, premise2, conclusion;
};

// Two laws from the six forcing a third, in every residuated binar.
inline const std::array<ImplicationRule, 6>& implication_rules() {
  static const std::array<ImplicationRule, 6> rules = {{
      {Law::jr, Law::ml, Law::lj},
      {Law::lj, Law::rm, Law::jr},
      {Law::fm, Law::jr, Law::rm},
      {Law::mf, Law::lj, Law::ml},
      {Law::ml, Law::fm, Law::mf},
      {Law::rm, Law::mf, Law::fm},
  }};
  return rules;
}

inline LawMask close_profile(LawMask m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ImplicationRule& r : implication_rules()) {
      const LawMask prem =
          static_cast<LawMask>(law_bit(r.premise1) | law_bit(r.premise2));
      if ((m & prem) == prem && !(m & law_bit(r.conclusion))) {
        m = static_cast<LawMask>(m | law_bit(r.conclusion));
        changed = true;
      }
    }
  }
  return m;
}

}  // namespace resbinar
