#pragma once

#include "dpc/multipoly.hpp"

#include <cstdint>
#include <vector>

namespace dpc {

using FpMatrix = std::vector<std::vector<PrimeField::Elem>>;
using PolyMatrix = std::vector<std::vector<Poly>>;

/// Rank over F_p by Gaussian elimination.
int rank_mod_p(FpMatrix m, const PrimeField& field);

/// Rank over the fraction field of the polynomial ring.
/// Random evaluations give a lower bound that is accepted once it reaches
/// the trivial upper bound (or `enough`, when given; the result is then only
/// known to be at least `enough`); otherwise fraction-free elimination decides.
int fraction_field_rank(const PolyMatrix& m, std::uint64_t seed = 0x5EED, int enough = -1);

/// Fraction-free (Bareiss) elimination; exact.
int bareiss_rank(PolyMatrix m);

/// Determinant of a small square matrix by cofactor expansion.
Poly determinant(const PolyMatrix& m);

/// Evaluates every entry at a point.
FpMatrix evaluate(const PolyMatrix& m, const std::vector<PrimeField::Elem>& point);

/// Calls fn(rows, cols) for every k x k index selection, stopping when fn returns false.
template <class Fn>
bool for_each_minor(int nrows, int ncols, int k, Fn&& fn) {
  std::vector<int> rows(k), cols(k);
  auto first = [k](std::vector<int>& v) {
    for (int i = 0; i < k; ++i) v[i] = i;
  };
  auto advance = [k](std::vector<int>& v, int n) {
    int i = k - 1;
    while (i >= 0 && v[i] == n - k + i) --i;
    if (i < 0) return false;
    ++v[i];
    for (int j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
    return true;
  };
  if (k > nrows || k > ncols) return true;
  if (k == 0) return fn(rows, cols);
  first(rows);
  do {
    first(cols);
    do {
      if (!fn(rows, cols)) return false;
    } while (advance(cols, ncols));
  } while (advance(rows, nrows));
  return true;
}

}  // namespace dpc
