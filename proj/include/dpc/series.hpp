#pragma once

#include "dpc/error.hpp"
#include "dpc/linexpr.hpp"
#include "dpc/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpc {

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& m) : Error("NotDivisible", m) {}
};

/// Univariate power series in t, either an exact polynomial or truncated
/// (coefficients known for degrees below `bound`).
class SeriesPoly {
 public:
  SeriesPoly() = default;
  /// Exact polynomial; trailing zeros are trimmed.
  static SeriesPoly polynomial(std::vector<Rational> coeffs);
  static SeriesPoly polynomial(std::initializer_list<long long> coeffs);
  /// Truncated series holding degrees [0, bound).
  static SeriesPoly truncated(std::vector<Rational> coeffs, int bound);
  static SeriesPoly monomial(int degree, Rational c = 1);
  /// 1 + t^step + t^{2 step} + ... truncated at bound.
  static SeriesPoly geometric(int step, int bound);

  bool is_exact() const { return !bound_.has_value(); }
  std::optional<int> bound() const { return bound_; }
  /// Degree of the exact polynomial (-1 for zero).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int d) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational eval(const Rational& t) const;
  bool is_zero() const { return coeffs_.empty(); }

  SeriesPoly operator+(const SeriesPoly& o) const;
  SeriesPoly operator-(const SeriesPoly& o) const;
  SeriesPoly operator*(const Rational& k) const;
  /// Exact product; only valid when both operands are exact polynomials.
  SeriesPoly operator*(const SeriesPoly& o) const;
  bool operator==(const SeriesPoly& o) const;

  /// Re-truncate at `bound` (exact polynomials become truncated).
  SeriesPoly truncate(int bound) const;
  /// t^s p(1/t) for an exact polynomial; requires s >= degree.
  SeriesPoly reflect(int s) const;

  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
  std::optional<int> bound_;
};

/// Product of two series truncated at `bound`; operands must be known there.
SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b, int bound);

/// Quotient q with p = (1-t)^c q; throws NotDivisible at the first failing stage.
SeriesPoly divide_by_one_minus_t(const SeriesPoly& p, int c);

/// Order of vanishing of an exact nonzero polynomial at t = 1.
int order_at_one(const SeriesPoly& p);

/// h_d(t^{e_1}, t^{e_2}, t^{e_3}) as an exact polynomial.
SeriesPoly complete_homogeneous(int d, std::span<const long long> exps);
SeriesPoly complete_homogeneous(int d, std::span<const LinExpr> exps, long long r);

}  // namespace dpc
