#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "reference_models.hpp"
#include "resbinar/laws.hpp"

using namespace resbinar;

TEST_CASE("catalog is internally consistent") {
  const auto& cat = law_catalog();
  REQUIRE(cat.size() == kLawCount);
  std::set<std::string> tags;
  for (int i = 0; i < kLawCount; ++i) {
    const LawInfo& info = cat[static_cast<std::size_t>(i)];
    CHECK(static_cast<int>(info.law) == i);
    CHECK(tags.insert(info.tag).second);
    CHECK(law_from_tag(info.tag) == info.law);
    // mirror pairing is an involution
    CHECK(mirror_law(mirror_law(info.law)) == info.law);
    // statements are stored in canonical form
    CHECK(format_statement(law_statement(info.law)) == info.statement);
    CHECK(info.needs_unit == (std::string(info.tag) == "lp" ||
                              std::string(info.tag) == "rp" ||
                              std::string(info.tag) == "ed"));
  }
  CHECK_FALSE(law_from_tag("xx").has_value());
  // exactly the middle six always hold
  int always = 0;
  for (const auto& info : cat) always += info.always_valid;
  CHECK(always == 6);
  for (int i = kNontrivialCount; i < 2 * kNontrivialCount; ++i)
    CHECK(cat[static_cast<std::size_t>(i)].always_valid);
}

TEST_CASE("profile bits and tag rendering") {
  CHECK(law_bit(Law::fm) == 1);
  CHECK(law_bit(Law::mf) == 2);
  CHECK(law_bit(Law::lj) == 4);
  CHECK(law_bit(Law::jr) == 8);
  CHECK(law_bit(Law::ml) == 16);
  CHECK(law_bit(Law::rm) == 32);
  CHECK_THROWS_AS(law_bit(Law::fj), UnsupportedLaw);
  CHECK(mask_tags(0) == "{}");
  CHECK(mask_tags(51) == "{fm,mf,ml,rm}");
  CHECK(mirror_mask(4) == 8);
  CHECK(mirror_mask(51) == 51);
  CHECK(mirror_mask(23) == 43);
}

TEST_CASE("always-valid laws hold on every bundled model") {
  for (const auto& alg : refmodels::all())
    for (const auto& info : law_catalog())
      if (info.always_valid) CHECK(check_law(info.law, alg) == LawStatus::Holds);
}

TEST_CASE("profiles of the bundled models") {
  const LawMask expected[6] = {51, 23, 43, 45, 30, 60};
  const auto models = refmodels::all();
  for (int i = 0; i < 6; ++i)
    CHECK(nontrivial_profile(models[static_cast<std::size_t>(i)]) ==
          expected[i]);
  CHECK(nontrivial_profile(models[6]) == 0);
}

TEST_CASE("unital laws on the bundled models") {
  auto a1 = refmodels::a1();
  CHECK(check_law(Law::lp, a1) == LawStatus::NotApplicable);
  CHECK(check_law(Law::rp, a1) == LawStatus::NotApplicable);
  CHECK(check_law(Law::ed, a1) == LawStatus::NotApplicable);
  CHECK_THROWS_AS(law_witness(Law::lp, a1), NoUnit);

  auto a7 = refmodels::a7();
  CHECK(check_law(Law::lp, a7) == LawStatus::Holds);
  CHECK(check_law(Law::rp, a7) == LawStatus::Holds);
  CHECK(check_law(Law::ed, a7) == LawStatus::Holds);
}

TEST_CASE("witness for the first failing law instance") {
  auto res = law_witness(Law::lj, refmodels::a1());
  REQUIRE_FALSE(res.holds);
  CHECK(res.witness == Env{{"x", 2}, {"y", 1}, {"z", 2}});
  CHECK(res.lhs_value == 3);
  CHECK(res.rhs_value == 1);
}

TEST_CASE("checking a law on the opposite algebra checks its mirror") {
  for (const auto& alg : refmodels::all()) {
    auto op = opposite_algebra(alg);
    for (const auto& info : law_catalog())
      CHECK(check_law(info.law, op) == check_law(mirror_law(info.law), alg));
  }
  // and on profiles: the second and third bundled models are opposites
  CHECK(nontrivial_profile(opposite_algebra(refmodels::a2())) ==
        mirror_mask(nontrivial_profile(refmodels::a2())));
  CHECK(nontrivial_profile(opposite_algebra(refmodels::a2())) ==
        nontrivial_profile(refmodels::a3()));
}

TEST_CASE("four-variable forms match the laws on every bundled model") {
  for (const auto& alg : refmodels::all())
    for (int i = 0; i < kNontrivialCount; ++i) {
      const Law l = static_cast<Law>(i);
      const bool law_holds = check_law(l, alg) == LawStatus::Holds;
      const bool ineq_holds =
          check_statement(four_variable_equivalent(l), alg).holds;
      CHECK(law_holds == ineq_holds);
    }
  CHECK_THROWS_AS(four_variable_equivalent(Law::lp), UnsupportedLaw);
  CHECK_THROWS_AS(four_variable_equivalent(Law::fj), UnsupportedLaw);
}

TEST_CASE("profile closure under the implication rules") {
  CHECK(implication_rules().size() == 6);
  CHECK(close_profile(0) == 0);
  CHECK(close_profile(8) == 8);
  // jr and ml together force lj
  CHECK(close_profile(24) == 28);
  // fm and jr force rm
  CHECK(close_profile(9) == 41);
  CHECK(close_profile(kAllNontrivial) == kAllNontrivial);
  // the bundled profiles are closed
  for (LawMask m : {51, 23, 43, 45, 30, 60})
    CHECK(close_profile(static_cast<LawMask>(m)) == m);
}

TEST_CASE("the rules are sound on the bundled models") {
  for (const auto& alg : refmodels::all()) {
    const LawMask m = nontrivial_profile(alg);
    CHECK(close_profile(m) == m);
  }
}

TEST_CASE("display names are present and unique") {
  std::set<std::string> seen;
  for (const auto& info : law_catalog()) {
    REQUIRE(info.display != nullptr);
    CHECK(seen.insert(info.display).second);
  }
  CHECK(std::string(law_info(Law::fm).display) == "(·∧)");
  CHECK(std::string(law_info(Law::jl).display) == "(∨\\)");
  CHECK(std::string(law_info(Law::lp).display) == "(lp)");
}

TEST_CASE("full profiles of the bundled models") {
  const LawProfile p1 = law_profile(refmodels::a1());
  CHECK(p1.nontrivial == 51);
  CHECK(p1.lp == LawStatus::NotApplicable);
  CHECK(p1.rp == LawStatus::NotApplicable);
  CHECK(p1.ed == LawStatus::NotApplicable);

  const LawProfile p7 = law_profile(refmodels::a7());
  CHECK(p7.nontrivial == 0);
  CHECK(p7.lp == LawStatus::Holds);
  CHECK(p7.rp == LawStatus::Holds);
  CHECK(p7.ed == LawStatus::Holds);
}

TEST_CASE("unital checks need a unit") {
  CHECK_THROWS_AS(unital_checks(refmodels::a1()), NoUnit);
}

TEST_CASE("unital checks on the unital bundled model") {
  const UnitalReport rep = unital_checks(refmodels::a7());
  CHECK(rep.lp == LawStatus::Holds);
  CHECK(rep.rp == LawStatus::Holds);
  CHECK(rep.ed == LawStatus::Holds);
  REQUIRE(rep.implications_apply);
  // none of rm, jr, ml, lj hold here, so every implication is vacuous
  for (const auto v : rep.implications)
    CHECK(v == ImplicationVerdict::Vacuous);
}

TEST_CASE("unital checks where every law holds") {
  auto one = ResiduatedBinar::from_mult(
      Lattice::from_covers({"x"}, std::vector<std::pair<int, int>>{}),
      Table{0});
  auto chain2 = ResiduatedBinar::from_mult(
      Lattice::from_covers({"bot", "top"},
                           std::vector<std::pair<int, int>>{{0, 1}}),
      Table{0, 0, 0, 1});
  for (const auto& alg : {one, chain2}) {
    const UnitalReport rep = unital_checks(alg);
    CHECK(rep.lp == LawStatus::Holds);
    CHECK(rep.rp == LawStatus::Holds);
    CHECK(rep.ed == LawStatus::Holds);
    REQUIRE(rep.implications_apply);
    for (const auto v : rep.implications)
      CHECK(v == ImplicationVerdict::Material);
  }
}

TEST_CASE("closure commutes with the mirror symmetry") {
  for (LawMask m = 0; m < 64; ++m)
    CHECK(close_profile(mirror_mask(m)) == mirror_mask(close_profile(m)));
  // and the rule list itself is mirror-symmetric
  for (const ImplicationRule& r : implication_rules()) {
    const LawMask prem = static_cast<LawMask>(
        mirror_mask(static_cast<LawMask>(law_bit(r.premise1) |
                                         law_bit(r.premise2))));
    bool found = false;
    for (const ImplicationRule& s : implication_rules())
      found |= (law_bit(s.premise1) | law_bit(s.premise2)) == prem &&
               s.conclusion == mirror_law(r.conclusion);
    CHECK(found);
  }
}
