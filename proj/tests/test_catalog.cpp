#include <doctest.h>

#include "dpc/catalog.hpp"
#include "dpc/report.hpp"

#include <json.hpp>

using namespace dpc;

TEST_CASE("built-in catalog") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() == 19);
  int appendix = 0, theorem = 0, rs = 0;
  for (const auto& ms : cat) {
    if (ms.table == "RS") ++rs;
    else if (ms.table == "1") ++theorem;
    else ++appendix;
  }
  CHECK(appendix == 10);
  CHECK(theorem == 6);
  CHECK(rs == 3);
  CHECK_NOTHROW(validate_catalog(cat));
}

TEST_CASE("catalog round trip") {
  auto text = dump_catalog(builtin_catalog());
  auto back = parse_catalog(text);
  CHECK(back == builtin_catalog());
  CHECK(dump_catalog(back) == text);
}

TEST_CASE("catalog errors") {
  auto j = nlohmann::json::parse(dump_catalog(builtin_catalog()));
  auto dup = j;
  dup["models"].push_back(dup["models"][0]);
  CHECK_THROWS_WITH_AS(parse_catalog(dup.dump()), doctest::Contains("duplicate"), Error);

  auto neg = j;
  auto& m = neg["models"][0];
  m["weights"][0] = "r-3";
  m["law"] = {{"slope", 2}, {"offset", 1}, {"n_min", 1}};
  CHECK_THROWS_WITH_AS(parse_catalog(neg.dump()), doctest::Contains("CatalogError"), Error);

  CHECK_THROWS_WITH_AS(parse_catalog("{\"models\": 3}"), doctest::Contains("Schema"), Error);
  CHECK_THROWS_WITH_AS(find_model(builtin_catalog(), "XX"), doctest::Contains("UnknownModel"), Error);
}

TEST_CASE("instantiate") {
  const auto& cat = builtin_catalog();
  auto ci11 = instantiate(find_model(cat, "CI11"), 1, 7);
  CHECK(ci11.ambient.weights == std::vector<int>{1, 1, 2, 2, 3});
  CHECK(ci11.degrees == std::vector<long long>{4, 4});
  auto x10 = instantiate(find_model(cat, "RS8"), 1, 7);
  CHECK(x10.ambient.weights == std::vector<int>{1, 2, 3, 5});
  CHECK(x10.degrees == std::vector<long long>{10});
  CHECK_THROWS_WITH_AS(instantiate(find_model(cat, "PF14"), 0, 7), doctest::Contains("OutOfRange"), Error);
  auto again = instantiate(find_model(cat, "CI11"), 1, 7);
  CHECK(again.equations_str() == ci11.equations_str());
}

TEST_CASE("verify reports") {
  const auto& cat = builtin_catalog();
  VerifyOptions o;
  o.ids = {"RS8", "RS7", "RS6"};
  auto rep = run_verify(cat, o);
  REQUIRE(rep.records.size() == 3);
  CHECK(rep.records[0].degK2 == "1/3");
  CHECK(rep.records[1].degK2 == "4/3");
  CHECK(rep.records[2].degK2 == "7/3");
  CHECK(rep.records[0].h0 == 1);
  CHECK(rep.records[1].h0 == 2);
  CHECK(rep.records[2].h0 == 3);
  CHECK(rep.exit_code() == 0);

  o.ids = {"P11"};
  o.n_max = 3;
  auto p11 = run_verify(cat, o);
  CHECK(p11.discrepancies.size() == 3);
  CHECK(p11.exit_code() == 0);
  o.strict = true;
  CHECK(run_verify(cat, o).exit_code() == 1);
  CHECK(run_verify(cat, o).json() == run_verify(cat, o).json());
}

TEST_CASE("tables") {
  auto text = emit_tables(builtin_catalog(), 1, 2, false, 1);
  CHECK(text.find("CI11 n=1") != std::string::npos);
  auto j = nlohmann::json::parse(emit_tables(builtin_catalog(), 1, 2, true, 1));
  CHECK(j.size() == 4);
}
