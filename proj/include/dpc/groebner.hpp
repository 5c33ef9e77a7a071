#pragma once

#include "dpc/field.hpp"
#include "dpc/multipoly.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace dpc {

inline constexpr int kMaxAffineVars = 16;

/// Affine monomial with cached total degree.
struct AMono {
  std::array<std::uint16_t, kMaxAffineVars> e{};
  std::uint32_t deg = 0;
  bool operator==(const AMono&) const = default;
};

struct ATerm {
  AMono m;
  PrimeField::Elem c = 0;
};

/// Affine polynomial over F_p; terms in strictly decreasing grevlex order.
using APoly = std::vector<ATerm>;

/// Positive when a > b in grevlex.
int grevlex_cmp(const AMono& a, const AMono& b, int nv);

APoly apoly_add(const APoly& a, const APoly& b, const PrimeField& f);
APoly apoly_mul(const APoly& a, const APoly& b, int nv, const PrimeField& f);
APoly apoly_scale(const APoly& a, PrimeField::Elem k, const PrimeField& f);
APoly apoly_constant(PrimeField::Elem c);
/// Determinant by cofactor expansion; meant for matrices of size at most 5.
APoly apoly_det(const std::vector<std::vector<APoly>>& m, int nv, const PrimeField& f);

/// Converts a polynomial, sending variable v to affine variable map[v] (>= 0),
/// to the value 1 (map[v] == -1) or to 0 (map[v] == -2).
/// Degrees are weighted by `weights` (indexed by affine variable; empty means all 1).
APoly to_affine(const Poly& p, const std::vector<int>& map, int nv, std::span<const int> weights = {});

struct GroebnerResult {
  enum class Status { Unit, Proper, OverBudget };
  Status status = Status::Proper;
  std::vector<APoly> basis;  // leading coefficients 1; empty unless Proper
  std::size_t work = 0;      // term operations spent
};

/// Buchberger's algorithm with the product and chain criteria. Stops early when a
/// nonzero constant appears, or with OverBudget once `budget` term operations are spent.
/// With weights the order is weighted degree, then reverse lexicographic.
GroebnerResult groebner(std::vector<APoly> gens, int nv, const PrimeField& f, std::size_t budget,
                        std::span<const int> weights = {});

/// Saturation of a weighted homogeneous ideal by the product of `vars`. The basis lives
/// in nv + 1 variables (the product is adjoined last) and has the same dimension.
GroebnerResult saturate(std::vector<APoly> gens, int nv, const PrimeField& f, std::size_t budget,
                        std::span<const int> weights, std::span<const int> vars);

/// Saturation of a weighted homogeneous ideal by its last variable.
GroebnerResult saturate_last(std::vector<APoly> gens, int nv, const PrimeField& f, std::size_t budget,
                             std::span<const int> weights);

/// Krull dimension of the ideal with the given Groebner basis (-1 for the unit ideal).
int ideal_dimension(const std::vector<APoly>& basis, int nv);

}  // namespace dpc
