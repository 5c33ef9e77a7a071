#pragma once

#include "dpc/field.hpp"

#include <string>
#include <vector>

namespace dpc {

/// Dense univariate polynomial over F_p, lowest degree first.
class UPoly {
 public:
  using Elem = PrimeField::Elem;

  explicit UPoly(PrimeField field = PrimeField()) : field_(field) {}
  UPoly(PrimeField field, std::vector<Elem> coeffs);

  static UPoly constant(PrimeField field, Elem c) { return UPoly(field, {c}); }

  const PrimeField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem eval(Elem x) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;
  UPoly derivative() const;

  std::string str() const;

 private:
  void trim();

  PrimeField field_;
  std::vector<Elem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Product of the distinct irreducible factors (monic). Valid while degree < p.
UPoly squarefree_part(const UPoly& f);

}  // namespace dpc
