#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "reference_models.hpp"
#include "resbinar/frame.hpp"

using namespace resbinar;

namespace {

ResiduatedBinar bottom_mult(const Lattice& lat) {
  Table mult(static_cast<std::size_t>(lat.size()) * lat.size(),
             static_cast<std::uint8_t>(lat.bot()));
  return ResiduatedBinar::from_mult(lat, mult);
}

int triple_count(const Frame& fr) {
  return std::accumulate(fr.rel.begin(), fr.rel.end(), 0);
}

}  // namespace

TEST_CASE("prime filters of small lattices") {
  // diamond, elements bot,a,b,top: the filters are up(a) and up(b);
  // {top} is not prime because a v b = top
  auto filters = prime_filters(refmodels::diamond4());
  CHECK(filters == std::vector<Mask>{0b1010, 0b1100});

  auto chain2 = Lattice::from_covers({"bot", "top"},
                                     std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(prime_filters(chain2) == std::vector<Mask>{0b10});

  // bot < a,b < e < top: three join-irreducibles a, b, top
  auto filters5 = prime_filters(refmodels::pentagon_top("e"));
  CHECK(filters5 == std::vector<Mask>{0b10000, 0b11010, 0b11100});
}

TEST_CASE("frames require a distributive reduct") {
  auto m3 = Lattice::from_covers(
      {"bot", "x", "y", "z", "top"},
      std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_THROWS_AS(prime_filters(m3), NotDistributive);
  CHECK_THROWS_AS(build_frame(bottom_mult(m3), FrameVariant::Literal),
                  NotDistributive);
}

TEST_CASE("variant names") {
  for (FrameVariant v : {FrameVariant::Literal, FrameVariant::Upset,
                         FrameVariant::Superset})
    CHECK(variant_from_name(variant_name(v)) == v);
  CHECK_FALSE(variant_from_name("strict").has_value());
}

TEST_CASE("relation of the first diamond model under each reading") {
  auto a1 = refmodels::a1();

  auto lit = build_frame(a1, FrameVariant::Literal);
  REQUIRE(lit.n_points == 2);
  CHECK(lit.generators == std::vector<int>{1, 2});
  CHECK(triple_count(lit) == 0);

  auto ups = build_frame(a1, FrameVariant::Upset);
  CHECK(triple_count(ups) == 6);

  auto sup = build_frame(a1, FrameVariant::Superset);
  CHECK(triple_count(sup) == 2);
  // only b*b = top lands above a generator
  CHECK(sup.r(0, 1, 1));
  CHECK(sup.r(1, 1, 1));
  CHECK_FALSE(sup.r(0, 0, 0));
  CHECK_FALSE(sup.r(1, 0, 1));
}

TEST_CASE("frame order follows the variant") {
  auto a7 = refmodels::a7();
  auto inc = build_frame(a7, FrameVariant::Literal);
  auto rev = build_frame(a7, FrameVariant::Superset);
  REQUIRE(inc.n_points == 3);
  // points sorted by mask: {top} first, then up(a), up(b)
  CHECK(inc.generators == std::vector<int>{4, 1, 2});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(inc.leq(i, j) == ((inc.points[i] & ~inc.points[j]) == 0));
      CHECK(rev.leq(i, j) == inc.leq(j, i));
    }
}

TEST_CASE("conditions on the first diamond model") {
  auto a1 = refmodels::a1();
  auto sup = build_frame(a1, FrameVariant::Superset);
  CHECK(frame_condition(sup, Law::ml).holds);
  auto lj = frame_condition(sup, Law::lj);
  REQUIRE_FALSE(lj.holds);
  CHECK(lj.witness == std::array<int, 5>{0, 1, 1, 1, 1});
  auto jr = frame_condition(sup, Law::jr);
  REQUIRE_FALSE(jr.holds);
  CHECK(jr.witness == std::array<int, 5>{0, 1, 1, 1, 1});

  CHECK_THROWS_AS(frame_condition(sup, Law::fm), UnsupportedLaw);
  CHECK_THROWS_AS(frame_condition(sup, Law::fj), UnsupportedLaw);

  // with empty R the conditions hold vacuously, which is exactly the
  // literal reading's failure mode on this model
  auto lit = build_frame(a1, FrameVariant::Literal);
  CHECK(frame_condition(lit, Law::lj).holds);
}

TEST_CASE("correspondence across the bundled models") {
  for (const auto& alg : refmodels::all()) {
    auto rep = correspondence_check(alg, FrameVariant::Superset);
    CAPTURE(alg.size());
    CHECK(rep.all_agree);
  }

  // spot checks of the frame-side verdicts
  auto r3 = correspondence_check(refmodels::a3(), FrameVariant::Superset);
  CHECK(r3.entries[0].law == Law::jr);
  CHECK(r3.entries[0].frame_holds);
  auto r4 = correspondence_check(refmodels::a4(), FrameVariant::Superset);
  CHECK(r4.entries[0].frame_holds);        // jr
  CHECK_FALSE(r4.entries[1].frame_holds);  // ml
  CHECK(r4.entries[2].frame_holds);        // lj
  auto r6 = correspondence_check(refmodels::a6(), FrameVariant::Superset);
  for (const auto& e : r6.entries) CHECK(e.frame_holds);

  // the other two readings break on the first model
  CHECK_FALSE(correspondence_check(refmodels::a1(), FrameVariant::Literal).all_agree);
  CHECK_FALSE(correspondence_check(refmodels::a1(), FrameVariant::Upset).all_agree);
}

TEST_CASE("calibration singles out the superset reading") {
  std::vector<ResiduatedBinar> sample;
  for (const auto& alg : refmodels::all()) sample.push_back(alg);
  auto out = calibrate_variant(sample);
  CHECK(out.algebras == 7);
  CHECK(out.disagreements[0] > 0);
  CHECK(out.disagreements[1] > 0);
  CHECK(out.disagreements[2] == 0);
  REQUIRE(out.chosen.has_value());
  CHECK(*out.chosen == FrameVariant::Superset);
}

TEST_CASE("degenerate frames") {
  // annihilating product on the 2-chain: one point, R empty or full
  auto chain2 = Lattice::from_covers({"bot", "top"},
                                     std::vector<std::pair<int, int>>{{0, 1}});
  auto alg = bottom_mult(chain2);
  for (FrameVariant v : {FrameVariant::Literal, FrameVariant::Upset,
                         FrameVariant::Superset}) {
    auto fr = build_frame(alg, v);
    REQUIRE(fr.n_points == 1);
    CHECK(fr.generators == std::vector<int>{1});
    for (Law l : {Law::jr, Law::ml, Law::lj})
      CHECK(frame_condition(fr, l).holds);
    CHECK(triple_count(fr) == (v == FrameVariant::Upset ? 1 : 0));
  }

  // one-element algebra: no prime filters at all
  auto one = Lattice::from_covers({"0"}, std::vector<std::pair<int, int>>{});
  auto fr = build_frame(bottom_mult(one), FrameVariant::Superset);
  CHECK(fr.n_points == 0);
  for (Law l : {Law::jr, Law::ml, Law::lj}) CHECK(frame_condition(fr, l).holds);
  CHECK(correspondence_check(bottom_mult(one), FrameVariant::Superset).all_agree);
}

TEST_CASE("literal and upset agree when product sets are upward closed") {
  // meet as product on a chain: every complex product of filters is a filter
  auto chain3 = Lattice::from_covers(
      {"bot", "m", "top"}, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  Table mult(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      mult[static_cast<std::size_t>(x) * 3 + y] =
          static_cast<std::uint8_t>(chain3.meet(x, y));
  auto alg = ResiduatedBinar::from_mult(chain3, mult);
  auto lit = build_frame(alg, FrameVariant::Literal);
  auto ups = build_frame(alg, FrameVariant::Upset);
  CHECK(lit.rel == ups.rel);
  // and on this algebra all three readings correspond
  for (FrameVariant v : {FrameVariant::Literal, FrameVariant::Upset,
                         FrameVariant::Superset})
    CHECK(correspondence_check(alg, v).all_agree);
}

TEST_CASE("point labels") {
  auto a1 = refmodels::a1();
  auto fr = build_frame(a1, FrameVariant::Superset);
  CHECK(point_label(fr, a1.lattice(), 0) == "{a,top}");
  CHECK(point_label(fr, a1.lattice(), 1) == "{b,top}");
}
