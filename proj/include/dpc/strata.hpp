#pragma once

#include "dpc/groebner.hpp"
#include "dpc/instance.hpp"
#include "dpc/rng.hpp"
#include "dpc/upoly.hpp"

#include <vector>

namespace dpc {

/// Polynomial in u = x_i^{w_j/g} / x_j^{w_i/g} (g = gcd) whose nonzero roots are the
/// torus orbits of the binary form f(x_i, x_j) = 0; normalized so that H(0) != 0.
UPoly binary_to_univariate(const Poly& f, int i, int j);

std::vector<bool> outside_mask(int nvars, const std::vector<int>& support);
std::vector<Poly> restrict_to(const std::vector<Poly>& eqs, const std::vector<int>& support);
PolyMatrix restrict_to(const PolyMatrix& m, const std::vector<int>& support);

/// Points of X in the open coordinate stratum with the given support.
struct StratumPoints {
  enum class Status { Empty, Finite, Contained, Unsupported };
  Status status = Status::Empty;
  int count = 0;  // number of points when finite
  UPoly locus;    // squarefree polynomial whose roots are the points (two-element supports)
};

StratumPoints stratum_points(const std::vector<Poly>& eqs, const std::vector<int>& support);

/// Points of a finite (or contained, for lines) stratum where the Jacobian has rank < codim.
/// Returns -1 when the rank drops along the whole stratum.
int singular_points(const std::vector<Poly>& eqs, const std::vector<int>& support, int codim, const StratumPoints& pts);

/// Transverse eigenweights (raw, mod rho) of the points of a finite stratum
/// of support size 1 or 2, grouped as (number of points, {a, b}).
std::vector<std::pair<int, std::pair<int, int>>> transverse_characters(const std::vector<Poly>& eqs,
                                                                      const std::vector<long long>& degrees,
                                                                      const std::vector<int>& support, int rho,
                                                                      const StratumPoints& pts);

/// X on the open torus of a coordinate stratum, decided with Groebner bases in the chart
/// where the first support variable is 1 (an extra variable inverts the others).
struct TorusAnalysis {
  enum class Status { Empty, Proper, OverBudget };
  Status status = Status::Empty;
  int dimension = -1;           // projective dimension of X on the open stratum
  int singular_dimension = -1;  // of the locus where the Jacobian rank drops; -1 when none
  bool random_minors = false;   // minors replaced by random combinations
  std::size_t work = 0;
};

inline constexpr std::size_t kTorusBudget = 4'000'000;

TorusAnalysis torus_intersection(const std::vector<Poly>& eqs, const std::vector<int>& support,
                                 std::size_t budget = kTorusBudget);

/// Extends torus_intersection with the singular locus (Jacobian rank < codim).
TorusAnalysis torus_singularities(const std::vector<Poly>& eqs, const std::vector<int>& support, int codim,
                                  CounterRng& rng, std::size_t budget = kTorusBudget);

}  // namespace dpc
