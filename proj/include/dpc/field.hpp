#pragma once

#include "dpc/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpc {

inline constexpr std::uint64_t kDefaultPrime = 10007;

bool is_prime(std::uint64_t n);

/// Integers modulo a prime p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t characteristic() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    return static_cast<Elem>(m < 0 ? m + static_cast<long long>(p_) : m);
  }
  Elem from_rational(const Rational& q) const;
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  std::string str(Elem a) const { return std::to_string(a); }
  /// Signed representative in (-p/2, p/2], used when printing.
  long long signed_value(Elem a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_) : static_cast<long long>(a);
  }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

/// The rational numbers.
class RationalField {
 public:
  using Elem = Rational;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return make_rational(v); }
  Elem from_rational(const Rational& q) const { return q; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  std::string str(const Elem& a) const { return a.get_str(); }
  bool operator==(const RationalField&) const { return true; }
};

}  // namespace dpc
