#include <doctest.h>

#include "dpc/dpcascade.h"

#include <string>

TEST_CASE("C API round trip") {
  dpc_catalog* cat = nullptr;
  REQUIRE(dpc_catalog_builtin(&cat) == DPC_OK);
  CHECK(dpc_catalog_size(cat) == 19);

  dpc_report* dump = nullptr;
  REQUIRE(dpc_catalog_dump(cat, &dump) == DPC_OK);
  dpc_catalog* again = nullptr;
  CHECK(dpc_catalog_parse(dpc_report_text(dump), &again) == DPC_OK);
  CHECK(dpc_catalog_size(again) == 19);
  dpc_catalog_free(again);
  dpc_report_free(dump);

  dpc_verify_options o;
  dpc_verify_options_init(&o);
  const char* ids[] = {"CI11"};
  o.ids = ids;
  o.n_ids = 1;
  o.has_n_max = 1;
  o.n_max = 2;
  dpc_report* rep = nullptr;
  REQUIRE(dpc_verify(cat, &o, 0, &rep) == DPC_OK);
  CHECK(dpc_report_exit_code(rep) == 0);
  CHECK(std::string(dpc_report_text(rep)).find("CI11 n=2") != std::string::npos);
  dpc_report_free(rep);
  dpc_catalog_free(cat);
}

TEST_CASE("C API errors") {
  dpc_catalog* cat = nullptr;
  REQUIRE(dpc_catalog_builtin(&cat) == DPC_OK);
  dpc_report* rep = nullptr;
  CHECK(dpc_instantiate(cat, "PF14", 0, 1, &rep) == DPC_OUT_OF_RANGE);
  CHECK(std::string(dpc_last_error_kind()) == "OutOfRange");
  CHECK(dpc_instantiate(cat, "nope", 1, 1, &rep) == DPC_UNKNOWN_MODEL);
  CHECK(dpc_catalog_parse("{", &cat) == DPC_SCHEMA);
  CHECK(dpc_catalog_load("/nonexistent/catalog.json", &cat) == DPC_SCHEMA);
  CHECK(dpc_verify(nullptr, nullptr, 0, &rep) == DPC_INVALID_ARGUMENT);
  CHECK(dpc_instantiate(cat, "CI11", 1, 1, &rep) == DPC_OK);
  CHECK(std::string(dpc_last_error()).empty());
  dpc_report_free(rep);
  dpc_catalog_free(cat);
}
