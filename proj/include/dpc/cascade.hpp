#pragma once

#include "dpc/catalog.hpp"
#include "dpc/instance.hpp"
#include "dpc/quasismooth.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpc {

struct ProjectionStep {
  std::string source;
  std::string center;
  std::vector<LinExpr> target_weights;
  std::vector<std::string> target_names;
  FormatSpec target_special;  // placement records the special (zero) entries
  std::vector<std::string> divisor_generators;
  std::vector<LinExpr> divisor_degrees;
  std::string divisor_note;
  std::optional<std::string> tom;  // e.g. "Tom_1"
  std::optional<std::string> target_generic;
  // parameter law of the source, carried over to the target
  long long r_slope = 1, r_offset = 0;

  WeightedSpace target_ambient(long long r) const;
};

/// Weight-1 variables usable as projection centers.
std::vector<std::string> find_projection_centers(const ModelSpec& ms);

ProjectionStep project_format(const ModelSpec& ms, const std::string& center);

/// Image of a projection-ready member (center only at its entry / linear), with divisor data.
ModelInstance project_equations(const ModelInstance& inst, const std::string& center);

/// Member of the target family with all special entries replaced by generic forms.
ModelInstance deform_generic(const ProjectionStep& step, long long n, std::uint64_t seed,
                             const PrimeField& field = PrimeField());

/// Checks the identity equation = sum cofactor * generator for every equation.
bool divisor_contained(const ModelInstance& inst);

struct TargetMatch {
  std::string id;
  long long n = 0;
};

/// Catalog entries whose ambient weights (as a multiset), codimension and Hilbert numerator agree.
std::optional<TargetMatch> match_target(const Catalog& cat, const WeightedSpace& ws, const FormatSpec& fs, long long r,
                                        bool include_rs);

struct StepVerdicts {
  long long n = 0;
  bool wellformed = false;
  bool quasismooth = false;
  bool invariants = false;
  bool divisor = false;
  bool whitelisted = false;  // invariants match only up to a known table discrepancy
  std::optional<TargetMatch> target;
  long long h0_source = 0, h0_target = 0, h0_drop_expected = 0;
  std::string detail;

  bool passed(bool strict = false) const {
    return wellformed && quasismooth && invariants && divisor && !(strict && whitelisted);
  }
};

StepVerdicts verify_step(const Catalog& cat, const ModelSpec& source, const ProjectionStep& step, long long n,
                         std::uint64_t seed);

struct CascadeReport {
  std::vector<std::string> models;   // chain of model ids
  std::vector<ProjectionStep> steps;
  std::vector<std::vector<StepVerdicts>> verdicts;  // per step, per tested n
  std::string terminal_reason;
};

struct SourceOutcome {
  std::string id;
  std::vector<std::string> centers;
  std::vector<std::string> accepted;  // "center -> target"
  std::vector<std::string> rejected;  // "center: reason"
};

struct CascadeSearch {
  std::vector<CascadeReport> chains;
  std::vector<SourceOutcome> sources;
};

/// Greedy search over all models and centers; steps must verify for every n <= n_max in range.
CascadeSearch cascade_search(const Catalog& cat, long long n_max, std::uint64_t seed, bool reid_suzuki = false);

}  // namespace dpc
