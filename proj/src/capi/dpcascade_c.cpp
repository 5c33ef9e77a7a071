#include "dpc/dpcascade.h"

#include "dpc/report.hpp"

#include <json.hpp>

#include <exception>
#include <string>

struct dpc_catalog {
  dpc::Catalog cat;
};

struct dpc_report {
  std::string text;
  int exit_code = 0;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_kind;

dpc_status status_of(const std::string& kind) {
  if (kind == "UnknownModel") return DPC_UNKNOWN_MODEL;
  if (kind == "OutOfRange") return DPC_OUT_OF_RANGE;
  if (kind == "Schema" || kind == "CatalogError") return DPC_SCHEMA;
  if (kind == "UnknownVariable" || kind == "CenterNotLinear" || kind == "NotApplicable") return DPC_INVALID_ARGUMENT;
  return DPC_COMPUTATION;
}

template <class F>
dpc_status guarded(F&& f) {
  g_error.clear();
  g_kind.clear();
  try {
    f();
    return DPC_OK;
  } catch (const dpc::Error& e) {
    g_error = e.what();
    g_kind = e.kind();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    g_error = e.what();
    g_kind = "Schema";
    return DPC_SCHEMA;
  } catch (const std::exception& e) {
    g_error = e.what();
    g_kind = "Internal";
    return DPC_INTERNAL;
  }
}

dpc_status bad_argument(const char* what) {
  g_error = what;
  g_kind = "InvalidArgument";
  return DPC_INVALID_ARGUMENT;
}

dpc_report* make_report(std::string text, int code) {
  auto* r = new dpc_report;
  r->text = std::move(text);
  r->exit_code = code;
  return r;
}

}  // namespace

extern "C" {

DPC_API const char* dpc_last_error(void) { return g_error.c_str(); }
DPC_API const char* dpc_last_error_kind(void) { return g_kind.c_str(); }

DPC_API dpc_status dpc_catalog_builtin(dpc_catalog** out) {
  if (!out) return bad_argument("null output handle");
  return guarded([&] { *out = new dpc_catalog{dpc::builtin_catalog()}; });
}

DPC_API dpc_status dpc_catalog_load(const char* path, dpc_catalog** out) {
  if (!path || !out) return bad_argument("null argument");
  return guarded([&] { *out = new dpc_catalog{dpc::load_catalog(path)}; });
}

DPC_API dpc_status dpc_catalog_parse(const char* json_text, dpc_catalog** out) {
  if (!json_text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new dpc_catalog{dpc::parse_catalog(json_text)}; });
}

DPC_API size_t dpc_catalog_size(const dpc_catalog* cat) { return cat ? cat->cat.size() : 0; }

DPC_API const char* dpc_catalog_id(const dpc_catalog* cat, size_t i) {
  if (!cat || i >= cat->cat.size()) return nullptr;
  return cat->cat[i].id.c_str();
}

DPC_API dpc_status dpc_catalog_dump(const dpc_catalog* cat, dpc_report** out) {
  if (!cat || !out) return bad_argument("null argument");
  return guarded([&] { *out = make_report(dpc::dump_catalog(cat->cat), 0); });
}

DPC_API void dpc_catalog_free(dpc_catalog* cat) { delete cat; }

DPC_API void dpc_verify_options_init(dpc_verify_options* opts) {
  if (!opts) return;
  *opts = dpc_verify_options{};
  dpc::VerifyOptions d;
  opts->seed = d.seed;
  opts->prime = d.prime;
  opts->member_n_max = d.member_n_max;
}

DPC_API dpc_status dpc_verify(const dpc_catalog* cat, const dpc_verify_options* opts, int as_json, dpc_report** out) {
  if (!cat || !out) return bad_argument("null argument");
  dpc_verify_options def;
  dpc_verify_options_init(&def);
  if (!opts) opts = &def;
  if (opts->n_ids && !opts->ids) return bad_argument("model id list is null");
  return guarded([&] {
    dpc::VerifyOptions o;
    for (size_t i = 0; i < opts->n_ids; ++i) o.ids.emplace_back(opts->ids[i]);
    if (opts->has_n_min) o.n_min = opts->n_min;
    if (opts->has_n_max) o.n_max = opts->n_max;
    o.seed = opts->seed;
    o.prime = opts->prime;
    o.strict = opts->strict != 0;
    o.member_n_max = opts->member_n_max;
    auto rep = dpc::run_verify(cat->cat, o);
    *out = make_report(as_json ? rep.json() : rep.text(), rep.exit_code());
  });
}

DPC_API dpc_status dpc_cascade(const dpc_catalog* cat, long long n_max, uint64_t seed, int reid_suzuki, int as_json,
                               dpc_report** out) {
  if (!cat || !out) return bad_argument("null argument");
  if (n_max < 1) return bad_argument("n_max must be at least 1");
  return guarded([&] {
    auto run = dpc::run_cascade(cat->cat, n_max, seed, reid_suzuki != 0);
    *out = make_report(as_json ? run.json() : run.text(), run.exit_code());
  });
}

DPC_API dpc_status dpc_tables(const dpc_catalog* cat, long long n_min, long long n_max, uint64_t seed, int as_json,
                              dpc_report** out) {
  if (!cat || !out) return bad_argument("null argument");
  if (n_max < n_min) return bad_argument("empty n range");
  return guarded([&] { *out = make_report(dpc::emit_tables(cat->cat, n_min, n_max, as_json != 0, seed), 0); });
}

DPC_API dpc_status dpc_instantiate(const dpc_catalog* cat, const char* id, long long n, uint64_t seed, dpc_report** out) {
  if (!cat || !id || !out) return bad_argument("null argument");
  return guarded([&] {
    const auto& ms = dpc::find_model(cat->cat, id);
    *out = make_report(dpc::render_instance(dpc::instantiate(ms, n, seed)), 0);
  });
}

DPC_API dpc_status dpc_project(const dpc_catalog* cat, const char* id, const char* center, long long n, uint64_t seed,
                               int as_json, dpc_report** out) {
  if (!cat || !id || !center || !out) return bad_argument("null argument");
  return guarded([&] {
    int code = 0;
    auto text = dpc::render_projection(cat->cat, id, center, n, seed, as_json != 0, &code);
    *out = make_report(std::move(text), code);
  });
}

DPC_API const char* dpc_report_text(const dpc_report* rep) { return rep ? rep->text.c_str() : ""; }
DPC_API int dpc_report_exit_code(const dpc_report* rep) { return rep ? rep->exit_code : 2; }
DPC_API void dpc_report_free(dpc_report* rep) { delete rep; }

}  // extern "C"
