#pragma once

#include "dpc/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpc {

/// Affine expression slope*r + offset in the model parameter r.
/// Both coefficients are stored doubled so half-integers stay exact.
class LinExpr {
 public:
  constexpr LinExpr() = default;
  constexpr LinExpr(long long slope2, long long offset2, int /*doubled tag*/)
      : slope2_(slope2), offset2_(offset2) {}

  static constexpr LinExpr constant(long long c) { return {0, 2 * c, 0}; }
  static constexpr LinExpr affine(long long slope, long long offset) {
    return {2 * slope, 2 * offset, 0};
  }
  static constexpr LinExpr doubled(long long slope2, long long offset2) {
    return {slope2, offset2, 0};
  }
  /// Parses forms like "2r-1", "r", "-r+3", "7", "r/2+1/2".
  static LinExpr parse(const std::string& text);

  long long slope2() const { return slope2_; }
  long long offset2() const { return offset2_; }

  long long eval2(long long r) const { return slope2_ * r + offset2_; }
  Rational eval(long long r) const { return make_rational(eval2(r), 2); }
  bool integral_at(long long r) const { return eval2(r) % 2 == 0; }
  /// Value at r; throws std::domain_error when it is a half-integer.
  long long eval_int(long long r) const {
    long long v = eval2(r);
    if (v % 2 != 0) throw std::domain_error("LinExpr " + str() + " is not integral at r=" + std::to_string(r));
    return v / 2;
  }
  bool is_constant() const { return slope2_ == 0; }

  LinExpr operator+(const LinExpr& o) const { return {slope2_ + o.slope2_, offset2_ + o.offset2_, 0}; }
  LinExpr operator-(const LinExpr& o) const { return {slope2_ - o.slope2_, offset2_ - o.offset2_, 0}; }
  LinExpr operator-() const { return {-slope2_, -offset2_, 0}; }
  LinExpr operator*(long long k) const { return {slope2_ * k, offset2_ * k, 0}; }
  /// Exact halving; throws if the doubled coefficients are odd.
  LinExpr half() const;
  bool operator==(const LinExpr&) const = default;
  auto operator<=>(const LinExpr&) const = default;

  std::string str() const;

 private:
  long long slope2_ = 0;
  long long offset2_ = 0;
};

}  // namespace dpc
