#include <doctest.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/json_io.hpp"
#include "zinbiel/sampling.hpp"

using namespace zinbiel;
using io::json;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("algebra JSON is sparse and 1-based") {
  const json j = io::to_json(algebra_A6());
  CHECK(j["dim"] == 3);
  CHECK(j["products"]["1,2"]["3"] == "1/2");
  CHECK(j["products"].size() == 3);
  CHECK(io::algebra_from_json(j) == algebra_A6());
}

TEST_CASE("round trips") {
  Rng rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const ExtendingDatum d = random_datum(rng, 2 + trial % 2, 1 + trial % 2);
    CHECK(io::datum_from_json(io::to_json(d)) == d);
    const CrossedSystem cs = random_crossed_system(rng);
    const CrossedSystem cs2 = io::crossed_from_json(io::to_json(cs));
    CHECK(cs2.projR == cs.projR);
    CHECK(cs2.omega == cs.omega);
    CHECK(cs2.top == cs.top);
    const MatchedPair mp = random_matched_pair(rng);
    const MatchedPair mp2 = io::matched_from_json(io::to_json(mp));
    CHECK(mp2.actL == mp.actL);
    CHECK(mp2.actR == mp.actR);
    CHECK(mp2.projL == mp.projL);
    const FlagDatum fd = random_flag_datum(rng);
    CHECK(io::flag_from_json(io::to_json(fd)) == fd);
  }
  const Bimodule b = Bimodule::regular(algebra_A3());
  const Bimodule b2 = io::bimodule_from_json(io::to_json(b));
  CHECK(b2.actL == b.actL);
  CHECK(b2.actR == b.actR);
}

TEST_CASE("flag maps are written one row per basis vector") {
  const FlagDatum fd = Catalog().get_flag("D1", {{"mu1", 2}, {"a21", 3}});
  const json j = io::to_json(fd);
  // D(e2) = 3e1 − 3e3.
  CHECK(j["D"][1] == json::array({"3", "0", "-3"}));
  CHECK(j["mu"] == json::array({"2", "0", "2"}));
}

TEST_CASE("reports carry 1-based witnesses") {
  Algebra a(1);
  a.set(0, 0, 0, 1);
  const json j = io::to_json(is_zinbiel(a));
  CHECK(j["passed"] == false);
  CHECK(j["conditions"][0]["witness"]["basis_tuple"] == json::array({1, 1, 1}));
  CHECK(j["conditions"][0]["witness"]["rhs"] == json::array({"2"}));
}

TEST_CASE("output is deterministic") {
  const json a = io::to_json(Catalog().get_algebra("TA4.1", Catalog().recorded_params("TA4.1")));
  const json b = io::to_json(Catalog().get_algebra("TA4.1", Catalog().recorded_params("TA4.1")));
  CHECK(a.dump() == b.dump());
  const std::string text = a.dump();
  CHECK(text.find("\"dim\"") < text.find("\"names\""));
  CHECK(text.find("\"names\"") < text.find("\"products\""));
}

TEST_CASE("diagnostics name the line or the field") {
  const std::string syntax = error_of([] { io::parse("{\n  \"dim\": 2,\n  \"products\": {,}\n}", "e.json"); });
  CHECK(syntax.find("e.json:3") != std::string::npos);

  const std::string range = error_of([] { io::algebra_from_json(json::parse(R"({"dim": 2, "products": {"1,3": {"1": "1"}}})")); });
  CHECK(range.find("$.products.1,3") != std::string::npos);

  const std::string value = error_of([] { io::algebra_from_json(json::parse(R"({"dim": 1, "products": {"1,1": {"1": "1/0"}}})")); });
  CHECK(value.find("$.products.1,1.1") != std::string::npos);

  const std::string missing = error_of([] { io::datum_from_json(json::parse(R"({"base": {"dim": 1}})")); });
  CHECK(missing.find("$.dimV") != std::string::npos);

  const std::string rows = error_of([] { io::flag_from_json(json::parse(R"({"base": {"dim": 2}, "D": [["1","0"]]})")); });
  CHECK(rows.find("$.D") != std::string::npos);
}
