#pragma once

#include "dpc/instance.hpp"
#include "dpc/wps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpc {

enum class QSVerdict { Pass, Fail, PassWithSamplingCaveat };
std::string to_string(QSVerdict v);

struct StratumCheck {
  std::vector<int> support;
  std::string method;  // combinatorial, exact-point, generic-rank, sampled
  bool ok = true;
  std::string detail;
};

struct QSReport {
  QSVerdict verdict = QSVerdict::Pass;
  std::optional<std::vector<int>> failing;
  std::vector<StratumCheck> checks;
  std::vector<std::vector<int>> sampled;
  /// Jacobian of rank < codim on a whole stratum (degenerate member).
  bool rank_deficient_everywhere = false;

  bool passed() const { return verdict != QSVerdict::Fail; }
  std::string summary(const WeightedSpace& ws) const;
};

std::string support_str(const WeightedSpace& ws, const std::vector<int>& support);

/// Combinatorial criterion for a general hypersurface of degree d.
QSReport qs_hypersurface_general(const WeightedSpace& ws, long long d);

/// Stratum-by-stratum Jacobian analysis of an explicit member.
QSReport qs_member(const ModelInstance& inst, int samples = 200, std::uint64_t seed = 0x9E3779B9u);

struct WellformedReport {
  bool ok = true;
  std::optional<std::vector<int>> witness;  // ambient subset or stratum support
  std::string detail;
};

/// Well-formedness of the ambient and of the member along singular strata of positive dimension.
WellformedReport wellformed_member(const ModelInstance& inst);

struct CrosscheckReport {
  std::optional<QSReport> general;  // hypersurfaces only
  std::vector<QSReport> members;
  bool agree = true;
};

/// Compares the combinatorial verdict (hypersurfaces) with member checks on `trials` random members.
CrosscheckReport qs_crosscheck(const WeightedSpace& ws, const FormatSpec& format, long long r, int trials,
                               std::uint64_t seed);

}  // namespace dpc
