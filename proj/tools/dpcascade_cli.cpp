#include "dpc/dpcascade.h"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kInputError = 2;

int fail(const char* what) {
  std::fprintf(stderr, "error: %s\n", what);
  return kInputError;
}

int finish(dpc_status st, dpc_report* rep) {
  if (st != DPC_OK) {
    // Computational failures are findings, not input errors.
    int code = st == DPC_COMPUTATION ? 1 : kInputError;
    std::fprintf(stderr, "error: %s\n", dpc_last_error());
    return code;
  }
  std::fputs(dpc_report_text(rep), stdout);
  int code = dpc_report_exit_code(rep);
  dpc_report_free(rep);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"del Pezzo cascade checker"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "catalog JSON file (default: built-in tables)");

  std::vector<std::string> v_models;
  std::optional<long long> v_nmin, v_nmax, v_members;
  std::uint64_t v_seed = 1, v_prime = 10007;
  bool v_strict = false, v_json = false;
  auto* verify = app.add_subcommand("verify", "recompute invariants and compare with the tables");
  verify->add_option("--model", v_models, "model id (repeatable)");
  verify->add_option("--n-min", v_nmin);
  verify->add_option("--n-max", v_nmax);
  verify->add_option("--member-n-max", v_members, "largest n whose explicit members are checked (default 2)");
  verify->add_option("--seed", v_seed);
  verify->add_option("--prime", v_prime);
  verify->add_flag("--strict", v_strict, "known table discrepancies also fail");
  verify->add_flag("--json", v_json);

  std::string p_model, p_center;
  long long p_n = 1;
  std::uint64_t p_seed = 1;
  bool p_json = false;
  auto* project = app.add_subcommand("project", "unproject one model from a weight-1 coordinate point");
  project->add_option("--model", p_model)->required();
  project->add_option("--center", p_center)->required();
  project->add_option("--n", p_n)->required();
  project->add_option("--seed", p_seed);
  project->add_flag("--json", p_json);

  long long c_nmax = 3;
  std::uint64_t c_seed = 1;
  bool c_rs = false, c_json = false;
  auto* cascade = app.add_subcommand("cascade", "search for cascades of projections");
  cascade->add_option("--n-max", c_nmax);
  cascade->add_option("--seed", c_seed);
  cascade->add_flag("--rs", c_rs, "run on the Reid-Suzuki surfaces");
  cascade->add_flag("--json", c_json);

  long long t_nmin = 1, t_nmax = 3;
  std::uint64_t t_seed = 1;
  bool t_json = false;
  auto* tables = app.add_subcommand("tables", "regenerate the model tables");
  tables->add_option("--n-min", t_nmin);
  tables->add_option("--n-max", t_nmax);
  tables->add_option("--seed", t_seed);
  tables->add_flag("--json", t_json);

  std::string i_model;
  long long i_n = 1;
  std::uint64_t i_seed = 1;
  auto* inst = app.add_subcommand("instantiate", "print an explicit member");
  inst->add_option("--model", i_model)->required();
  inst->add_option("--n", i_n)->required();
  inst->add_option("--seed", i_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  dpc_catalog* cat = nullptr;
  dpc_status st = catalog_path.empty() ? dpc_catalog_builtin(&cat) : dpc_catalog_load(catalog_path.c_str(), &cat);
  if (st != DPC_OK) return fail(dpc_last_error());

  dpc_report* rep = nullptr;
  if (*verify) {
    dpc_verify_options o;
    dpc_verify_options_init(&o);
    std::vector<const char*> ids;
    for (const auto& m : v_models) ids.push_back(m.c_str());
    o.ids = ids.data();
    o.n_ids = ids.size();
    if (v_nmin) o.has_n_min = 1, o.n_min = *v_nmin;
    if (v_nmax) o.has_n_max = 1, o.n_max = *v_nmax;
    if (v_members) o.member_n_max = *v_members;
    o.seed = v_seed;
    o.prime = v_prime;
    o.strict = v_strict;
    st = dpc_verify(cat, &o, v_json, &rep);
  } else if (*project) {
    st = dpc_project(cat, p_model.c_str(), p_center.c_str(), p_n, p_seed, p_json, &rep);
  } else if (*cascade) {
    st = dpc_cascade(cat, c_nmax, c_seed, c_rs, c_json, &rep);
  } else if (*tables) {
    st = dpc_tables(cat, t_nmin, t_nmax, t_seed, t_json, &rep);
  } else {
    st = dpc_instantiate(cat, i_model.c_str(), i_n, i_seed, &rep);
  }
  int code = finish(st, rep);
  dpc_catalog_free(cat);
  return code;
}
