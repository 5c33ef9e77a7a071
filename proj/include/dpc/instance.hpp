#pragma once

#include "dpc/formats.hpp"
#include "dpc/linalg.hpp"
#include "dpc/multipoly.hpp"
#include "dpc/wps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpc {

/// Generators of a divisor together with cofactors expressing each equation
/// as a combination of them (equation e = sum_g cofactors[e][g] * generators[g]).
struct Divisor {
  std::vector<Poly> generators;
  std::vector<std::vector<Poly>> cofactors;
};

struct ModelInstance {
  std::string model_id;
  long long n = 0;
  long long r = 0;
  WeightedSpace ambient;
  VarSetPtr vars;
  PrimeField field;
  FormatSpec format;  // degrees as LinExpr, evaluated at r
  PolyMatrix matrix;  // 5x5 skew (Pfaffian) or 3x3 (P2xP2); empty otherwise
  std::vector<Poly> equations;
  std::vector<long long> degrees;
  std::optional<Divisor> divisor;

  int codim() const { return format.codim(); }
  std::string equations_str() const;
};

struct InstanceOptions {
  /// Replace every entry by a generic form of its degree, ignoring the placement.
  bool generic_entries = false;
  /// Variable kept out of all generic forms (projection-ready members); empty for none.
  std::string center;
};

/// Explicit member with pseudo-random coefficients drawn from `seed`.
ModelInstance make_instance(const std::string& id, long long n, long long r, const WeightedSpace& ambient,
                            const FormatSpec& format, const PrimeField& field, std::uint64_t seed,
                            const InstanceOptions& opts = {});

/// Rebuilds equations from the matrix (Pfaffians or minors).
void refresh_equations(ModelInstance& inst);

/// Maximal Pfaffians of a 5x5 skew matrix; entry i omits row and column i.
std::vector<Poly> pfaffians(const PolyMatrix& m);
/// The nine 2x2 minors, row pairs outer and column pairs inner.
std::vector<Poly> minors2(const PolyMatrix& m);

PolyMatrix jacobian(const std::vector<Poly>& eqs);

}  // namespace dpc
