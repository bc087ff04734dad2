#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "reference_models.hpp"
#include "resbinar/io.hpp"
#include "resbinar/models.hpp"

using namespace resbinar;
using nlohmann::ordered_json;

namespace {

ordered_json a2_doc() { return ordered_json::parse(bundle()[1].text); }

}  // namespace

TEST_CASE("reading then writing is stable") {
  for (const BundledModel& m : bundle()) {
    auto na = read_algebra_json(m.text);
    const std::string s = write_algebra_json(na);
    auto na2 = read_algebra_json(s);
    CHECK(na2.name == na.name);
    CHECK(na2.algebra == na.algebra);
    CHECK(write_algebra_json(na2) == s);
  }
}

TEST_CASE("written files carry residual tables that validate on load") {
  const std::string s = write_algebra_json(read_algebra_json(bundle()[0].text));
  auto doc = ordered_json::parse(s);
  REQUIRE(doc.contains("ldiv"));
  REQUIRE(doc.contains("rdiv"));
  // row i, column j of ldiv holds elements[i] \ elements[j]
  auto a1 = refmodels::a1();
  CHECK(doc["ldiv"][3][2].get<std::string>() ==
        a1.lattice().name(a1.ldiv(3, 2)));
  CHECK(doc["ldiv"][3][2] == "a");
  // tampering with a stored residual is caught
  doc["ldiv"][0][0] = "bot";
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), FileFormatError);
}

TEST_CASE("a non-residuable table is rejected on load") {
  auto doc = a2_doc();
  doc["mult"][2][2] = "a";  // b*b = a kills join distributivity
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), NotResiduated);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(read_algebra_json("{"), FileFormatError);
  CHECK_THROWS_AS(read_algebra_json("[1,2]"), FileFormatError);

  auto doc = a2_doc();
  doc.erase("covers");
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), FileFormatError);

  doc = a2_doc();
  doc["mult"].erase(3);
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), FileFormatError);

  doc = a2_doc();
  doc["mult"][1][1] = 7;
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), FileFormatError);

  doc = a2_doc();
  doc["covers"][0] = {"bot"};
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), FileFormatError);

  doc = a2_doc();
  doc["name"] = 12;
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), FileFormatError);
}

TEST_CASE("unknown element names") {
  auto doc = a2_doc();
  doc["mult"][0][0] = "zap";
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), UnknownLabel);

  doc = a2_doc();
  doc["covers"][0][1] = "zap";
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), UnknownLabel);
}

TEST_CASE("declared unit must match the table") {
  auto doc = ordered_json::parse(bundle()[6].text);  // A7, unit e
  doc["unit"] = "a";
  CHECK_THROWS_AS(read_algebra_json(doc.dump()), UnitMismatch);

  auto doc2 = a2_doc();  // A2 has no unit at all
  doc2["unit"] = "top";
  CHECK_THROWS_AS(read_algebra_json(doc2.dump()), UnitMismatch);

  auto doc3 = a2_doc();
  doc3["unit"] = "zap";
  CHECK_THROWS_AS(read_algebra_json(doc3.dump()), UnknownLabel);
}

TEST_CASE("file round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "resbinar_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "m.alg";
  auto na = read_algebra_json(bundle()[3].text);
  write_algebra_file(path, na);
  auto back = read_algebra_file(path);
  CHECK(back.name == na.name);
  CHECK(back.algebra == na.algebra);
  CHECK_THROWS_AS(read_algebra_file(dir / "missing.alg"), FileFormatError);
  std::filesystem::remove_all(dir);
}
