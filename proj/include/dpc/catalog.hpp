#pragma once

#include "dpc/formats.hpp"
#include "dpc/instance.hpp"
#include "dpc/rational.hpp"
#include "dpc/wps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpc {

/// One declared basket entry count x 1/order(a, b), affine in r.
struct DeclaredSing {
  int count = 1;
  LinExpr order, a, b;
  bool operator==(const DeclaredSing&) const = default;
};

/// Declared (-K)^2 as a ratio of integer polynomials in r (coefficients from degree 0 up).
struct DeclaredK2 {
  std::vector<long long> num{0};
  std::vector<long long> den{1};
  bool known_discrepant = false;

  Rational at(long long r) const;
  std::string str() const;
  bool operator==(const DeclaredK2&) const = default;
};

struct ModelSpec {
  std::string id;
  std::string table;  // "1", "2", "3" or "RS"
  std::vector<LinExpr> weights;
  std::vector<std::string> names;
  FormatSpec format;
  // parameter law r = r_slope * n + r_offset for n_min <= n (<= n_max when set)
  long long r_slope = 1;
  long long r_offset = 0;
  long long n_min = 1;
  std::optional<long long> n_max;
  /// Printed grading row: b-vector of a Pfaffian matrix or (u; v) of a 3x3 matrix.
  std::vector<LinExpr> w_row;
  std::vector<DeclaredSing> basket;
  DeclaredK2 k2;
  long long h0 = 0;
  std::optional<std::string> target;
  std::string note;

  long long r_of(long long n) const { return r_slope * n + r_offset; }
  bool in_range(long long n) const { return n >= n_min && (!n_max || n <= *n_max); }
  /// Parameters n in range with n <= cap.
  std::vector<long long> range_upto(long long cap) const;
  WeightedSpace ambient(long long r) const;
  std::vector<SingType> declared_basket(long long r) const;
  bool operator==(const ModelSpec&) const = default;
};

using Catalog = std::vector<ModelSpec>;

const Catalog& builtin_catalog();

/// Structural checks: unique ids, positive weights and valid degrees across the range, printed grading rows.
void validate_catalog(const Catalog& cat);
void validate_model(const ModelSpec& ms);

Catalog parse_catalog(const std::string& json_text);
Catalog load_catalog(const std::string& path);
std::string dump_catalog(const Catalog& cat);

const ModelSpec& find_model(const Catalog& cat, const std::string& id);

/// Explicit member at n; raises OutOfRange.
ModelInstance instantiate(const ModelSpec& ms, long long n, std::uint64_t seed, const PrimeField& field = PrimeField(),
                          const InstanceOptions& opts = {});

}  // namespace dpc
