#pragma once

#include "dpc/cascade.hpp"
#include "dpc/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpc {

struct Discrepancy {
  std::string model;
  long long n = 0;
  std::string field;
  std::string computed;
  std::string declared;
  bool whitelisted = false;
};

struct VerifyRecord {
  std::string model;
  long long n = 0, r = 0;
  std::string ambient;
  bool ambient_wellformed = false;
  bool format_ok = false;
  bool gorenstein = false;
  long long k = 0;
  std::string numerator;
  std::string degK2, degK2_declared;
  long long h0 = 0, h0_declared = 0;
  std::optional<long long> rr_h0;
  std::optional<std::string> basket;  // computed on a member (small n)
  std::string basket_declared;
  std::optional<std::string> quasismooth;
  std::optional<bool> member_wellformed;
  std::vector<std::string> errors;
};

struct VerifyOptions {
  std::vector<std::string> ids;  // empty for all
  std::optional<long long> n_min, n_max;
  std::uint64_t seed = 1;
  std::uint64_t prime = kDefaultPrime;
  bool strict = false;
  long long member_n_max = 2;  // basket extraction and quasismoothness
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyRecord> records;
  std::vector<Discrepancy> discrepancies;

  int exit_code() const;
  std::string text() const;
  std::string json() const;
};

VerifyReport run_verify(const Catalog& cat, const VerifyOptions& opts);

struct CascadeRun {
  long long n_max = 3;
  std::uint64_t seed = 1;
  bool reid_suzuki = false;
  CascadeSearch search;
  std::vector<std::vector<std::string>> expected, missing, unexpected;

  int exit_code() const { return missing.empty() && unexpected.empty() ? 0 : 1; }
  std::string text() const;
  std::string json() const;
};

CascadeRun run_cascade(const Catalog& cat, long long n_max, std::uint64_t seed, bool reid_suzuki);

/// Regenerated model tables (and the fixed surfaces) over n_min..n_max.
std::string emit_tables(const Catalog& cat, long long n_min, long long n_max, bool json, std::uint64_t seed = 1);

/// Format-level step plus the explicit special member of the image with its verdicts.
std::string render_projection(const Catalog& cat, const std::string& id, const std::string& center, long long n,
                              std::uint64_t seed, bool json, int* exit_code);

std::string render_instance(const ModelInstance& inst);

}  // namespace dpc
