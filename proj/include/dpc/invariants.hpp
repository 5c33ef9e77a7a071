#pragma once

#include "dpc/error.hpp"
#include "dpc/formats.hpp"
#include "dpc/rational.hpp"
#include "dpc/wps.hpp"

#include <vector>

namespace dpc {

struct ModelInstance;

struct InvariantReport {
  long long k = 0;
  Rational degK2;
  Integer h0;
  std::vector<Integer> hilbert;  // coefficients of t^0 .. t^bound
  std::vector<SingType> basket;
  std::optional<Integer> rr_h0;
};

/// Coefficients of N(t) / prod(1 - t^w) for degrees 0..bound; all must be nonnegative integers.
std::vector<Integer> hilbert_coeffs(const HilbertData& hd, const std::vector<int>& weights, int bound);

/// h^0(-K): coefficient of t^k (zero when k < 0).
Integer h0_minusK(const HilbertData& hd, const std::vector<int>& weights);

/// (-K)^2 = k^2 * (N / (1-t)^c)(1) / prod w.
Rational anticanonical_square(const HilbertData& hd, const std::vector<int>& weights);

/// Sign conventions of the orbifold Riemann-Roch correction, fixed by calibration.
struct RRConvention {
  int sigma = 0;    // local type enters the character sum as sigma * i
  int epsilon = 0;  // overall sign of the correction
  bool operator==(const RRConvention&) const = default;
};

/// Runs the calibration once and returns the unique convention that reproduces
/// monomial-count h0 on P(1,1,3), P(1,1,2) and the (4,4) and (6,6) complete intersections.
const RRConvention& calibrated_convention();

/// Conventions among the four sign choices that pass the calibration set.
std::vector<RRConvention> calibration_candidates();

/// Raw character sum (1/rho) sum_j zeta^{ji} / ((1 - zeta^j)(1 - zeta^{ja})), exactly.
Rational rr_character_sum(int rho, int a, long long i);

/// Correction c_P for a class of local type i at a 1/rho(1,a) point.
/// Passing a null convention raises ConventionUncalibrated.
Rational rr_contribution(const SingType& sing, long long i, const RRConvention* conv);
Rational rr_contribution(const SingType& sing, long long i);

/// 1 + degK2 + sum of corrections; raises NonIntegerRR when that is not an integer.
Integer rr_h0(const Rational& degK2, const std::vector<SingType>& basket, const std::vector<long long>& localtypes);

/// Local type of -K = O(k) at a point with raw transverse eigenweights (a, b): k * a^{-1} mod rho.
long long local_type_of_minusK(int rho, long long a, long long b, long long k);
/// Local type of -K at a normalized 1/rho(1,a) point: 1 + a mod rho.
long long local_type_of_minusK(const SingType& sing);

/// Eigenweights, basket points and their multiplicities for an explicit member.
std::vector<SingType> basket_of(const ModelInstance& inst);

}  // namespace dpc
