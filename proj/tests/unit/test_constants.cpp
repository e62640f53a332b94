#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cltb/constants.hpp"
#include "cltb/errors.hpp"

using namespace cltb;

namespace {

std::string data_file() {
  std::ifstream in(std::string(CLTB_SOURCE_DIR) + "/data/constants.json");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("crc32 check value") { CHECK(crc32_hex("123456789") == "crc32:cbf43926"); }

TEST_CASE("the compiled-in table is the data file") {
  const auto file = ConstantTable::parse(data_file());
  const auto& built = ConstantTable::builtin();
  CHECK(file.checksum() == built.checksum());
  CHECK(file.entries().size() == built.entries().size());
  CHECK(built.version() == "1.0.0");
}

TEST_CASE("tampering is detected") {
  auto j = nlohmann::json::parse(data_file());
  j["entries"][0]["value"] = "0.1234";
  CHECK_THROWS_AS(ConstantTable::parse(j.dump()), StructuralError);
  CHECK_THROWS_AS(ConstantTable::parse("{not json"), StructuralError);
}

TEST_CASE("printed values are kept as strings") {
  const auto& t = ConstantTable::builtin();
  bool found = false;
  for (const auto* e : t.select("C0", "t2_1"))
    if (e->delta == "1" && e->regime == "iid") {
      CHECK(e->value == "0.4690");
      found = true;
    }
  CHECK(found);
  CHECK_FALSE(t.select("C0", "t2_1").empty());
  for (const auto& e : t.entries()) CHECK_FALSE(e.source.empty());
}

TEST_CASE("lookups") {
  const auto& t = ConstantTable::builtin();
  CHECK(t.c0(1.0, Regime::iid) == 0.469);
  CHECK(t.c0(1.0, Regime::general) == 0.5583);
  CHECK(t.c0(0.0, Regime::iid) == 0.541);
  CHECK(t.m(1.0) == 0.3031);
  CHECK(t.cs_lower(0.5) == 0.3328);
  CHECK(t.cs(0.5, 0.4444, Regime::iid) == 0.3728);
  CHECK_THROWS_AS(t.c0(0.55, Regime::iid), LookupError);
  CHECK_THROWS_AS(t.cs(0.5, 0.3, Regime::iid), LookupError);
  CHECK(t.bikelis_constant(Regime::general, false) == 47.65);
  CHECK(t.bikelis_constant(Regime::iid, true) == 24.13);
}

TEST_CASE("structured constants for delta=1") {
  const auto& t = ConstantTable::builtin();
  const auto iid = t.structured(1.0, Regime::iid);
  REQUIRE(iid.size() >= 3);
  CHECK(iid.front().s == 0.0);
  CHECK(iid.front().c == 0.469);
  for (std::size_t i = 1; i < iid.size(); ++i) CHECK(iid[i - 1].s < iid[i].s);
  bool saw = false;
  for (const auto& sc : iid)
    if (sc.s == 0.646) saw = sc.c == 0.3031;
  CHECK(saw);
  const auto gen = t.structured(1.0, Regime::general);
  CHECK(gen.back().s == 1.0);
  CHECK(gen.back().c == 0.3057);
}

TEST_CASE("M(delta) is the smallest iid C_s with s <= 1") {
  const auto& t = ConstantTable::builtin();
  for (double d : {0.9, 0.7, 0.5, 0.3, 0.1}) {
    double best = 1e9;
    for (const auto& sc : t.structured(d, Regime::iid))
      if (sc.s <= 1.0) best = std::min(best, sc.c);
    CHECK(t.m(d) == best);
  }
}

TEST_CASE("swapping the active table") {
  const auto saved = active_constants();
  auto j = nlohmann::json::parse(data_file());
  for (auto& e : j["entries"])
    if (e["kind"] == "M" && e["delta"] == "1") e["value"] = "0.5";
  // rebuild the checksum the way the maintainer script does
  j["checksum"] = crc32_hex(j["entries"].dump());
  set_active_constants(ConstantTable::parse(j.dump()));
  CHECK(active_constants().m(1.0) == 0.5);
  set_active_constants(saved);
  CHECK(active_constants().m(1.0) == 0.3031);
}
