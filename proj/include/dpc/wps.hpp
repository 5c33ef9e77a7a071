#pragma once

#include "dpc/error.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpc {

class NotIsolated : public Error {
 public:
  explicit NotIsolated(const std::string& m) : Error("NotIsolated", m) {}
};

struct WeightedSpace {
  std::vector<int> weights;
  std::vector<std::string> names;

  WeightedSpace() = default;
  WeightedSpace(std::vector<int> w, std::vector<std::string> n = {});

  int size() const { return static_cast<int>(weights.size()); }
  int index(const std::string& name) const;
  std::string str() const;
};

/// Cyclic quotient singularity 1/order(1, a) with multiplicity.
struct SingType {
  int order = 1;
  int a = 1;
  int multiplicity = 1;

  std::string str() const;  // "1/5(1,1)" with "2 x " prefix when multiplicity > 1
  auto operator<=>(const SingType&) const = default;
};

struct Stratum {
  std::vector<int> support;  // coordinate indices
  int order = 1;             // gcd of the support weights
  int dimension = 0;         // |support| - 1
  /// Ambient eigenweights (w_l mod order) of the coordinates outside the support.
  std::vector<int> transverse;

  std::string str(const WeightedSpace& ws) const;
};

/// Returns nullopt when well-formed, otherwise a violating index subset.
std::optional<std::vector<int>> wellformed_space(const WeightedSpace& ws);

/// Normal form 1/rho(1, a'); nullopt for rho = 1.
std::optional<SingType> normalize_sing(int rho, long long a, long long b);

/// Coordinate strata with nontrivial stabilizer, ordered by support size then lexicographically.
std::vector<Stratum> strata_of(const WeightedSpace& ws);

/// Canonical multiset form: merged multiplicities, sorted.
std::vector<SingType> canonical_basket(std::vector<SingType> basket);
std::string basket_str(const std::vector<SingType>& basket);

long long mod_inverse(long long a, long long m);

}  // namespace dpc
