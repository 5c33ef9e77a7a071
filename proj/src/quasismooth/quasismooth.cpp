#include "dpc/quasismooth.hpp"

#include "dpc/rng.hpp"
#include "dpc/strata.hpp"

#include <numeric>
#include <sstream>

namespace dpc {

std::string to_string(QSVerdict v) {
  switch (v) {
    case QSVerdict::Pass: return "pass";
    case QSVerdict::Fail: return "fail";
    case QSVerdict::PassWithSamplingCaveat: return "pass-with-sampling-caveat";
  }
  return "?";
}

std::string support_str(const WeightedSpace& ws, const std::vector<int>& support) {
  std::string s = "{";
  for (std::size_t i = 0; i < support.size(); ++i) s += (i ? "," : "") + ws.names[support[i]];
  return s + "}";
}

std::string QSReport::summary(const WeightedSpace& ws) const {
  std::ostringstream os;
  os << to_string(verdict);
  if (failing) {
    os << " at " << support_str(ws, *failing);
    for (const auto& c : checks)
      if (!c.ok && c.support == *failing && !c.detail.empty()) os << " (" << c.detail << ")";
  }
  if (rank_deficient_everywhere) os << " [RankDeficientEverywhere]";
  if (!sampled.empty()) os << " [sampled " << sampled.size() << " strata]";
  return os.str();
}

namespace {

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

// Is d a nonnegative combination of the given weights?
bool representable(long long d, const std::vector<int>& w) {
  if (d < 0) return false;
  std::vector<char> ok(d + 1, 0);
  ok[0] = 1;
  for (long long t = 1; t <= d; ++t)
    for (int x : w)
      if (t >= x && ok[t - x]) {
        ok[t] = 1;
        break;
      }
  return ok[d];
}

void record(QSReport& rep, StratumCheck c) {
  if (!c.ok && !rep.failing) {
    rep.failing = c.support;
    rep.verdict = QSVerdict::Fail;
  }
  rep.checks.push_back(std::move(c));
}

}  // namespace

QSReport qs_hypersurface_general(const WeightedSpace& ws, long long d) {
  for (int w : ws.weights)
    if (w == d) throw Error("LinearCone", "degree " + std::to_string(d) + " equals a weight of " + ws.str());
  QSReport rep;
  for (const auto& I : subsets(ws.size())) {
    std::vector<int> wi;
    for (int i : I) wi.push_back(ws.weights[i]);
    StratumCheck c{I, "combinatorial", true, ""};
    if (!representable(d, wi)) {
      std::size_t count = 0;
      for (int e = 0; e < ws.size(); ++e) {
        if (std::find(I.begin(), I.end(), e) != I.end()) continue;
        long long rest = d - ws.weights[e];
        if (rest > 0 && representable(rest, wi)) ++count;
      }
      if (count < I.size()) {
        c.ok = false;
        c.detail = "no pure monomial and only " + std::to_string(count) + " of " + std::to_string(I.size()) +
                   " monomials of the form x_I^M x_e";
      }
    }
    record(rep, std::move(c));
  }
  return rep;
}

QSReport qs_member(const ModelInstance& inst, int samples, std::uint64_t seed) {
  QSReport rep;
  const int nv = inst.ambient.size();
  const int c = inst.codim();
  if (c == 0) return rep;
  const auto& eqs = inst.equations;
  PolyMatrix jac = jacobian(eqs);
  CounterRng rng = CounterRng(seed).split(inst.model_id).split(static_cast<std::uint64_t>(inst.n));
  using S = StratumPoints::Status;

  for (const auto& I : subsets(nv)) {
    StratumCheck chk{I, "exact-point", true, ""};
    if (I.size() <= 2) {
      auto pts = stratum_points(eqs, I);
      if (pts.status == S::Empty) {
        chk.detail = "empty";
      } else {
        int bad = singular_points(eqs, I, c, pts);
        if (bad != 0) {
          chk.ok = false;
          chk.detail = bad < 0 ? "singular along the whole line" : std::to_string(bad) + " singular point(s)";
          if (bad < 0) rep.rank_deficient_everywhere = true;
        } else {
          chk.detail = pts.status == S::Contained ? "line contained, smooth" : std::to_string(pts.count) + " point(s)";
        }
      }
      record(rep, std::move(chk));
      continue;
    }
    auto rest = restrict_to(eqs, I);
    bool all_zero = true, monomial = false;
    for (const auto& f : rest) {
      all_zero = all_zero && f.is_zero();
      monomial = monomial || f.size() == 1;
    }
    if (monomial) {
      chk.method = "combinatorial";
      chk.detail = "empty (monomial equation)";
      record(rep, std::move(chk));
      continue;
    }
    auto r = rng.split(static_cast<std::uint64_t>(std::accumulate(I.begin(), I.end(), 0, [](int a, int i) { return a * 16 + i + 1; })));
    auto ta = torus_singularities(eqs, I, c, r);
    if (ta.status != TorusAnalysis::Status::OverBudget) {
      chk.method = ta.random_minors ? "groebner-random-minors" : "groebner";
      if (ta.status == TorusAnalysis::Status::Empty) {
        chk.detail = "empty";
      } else if (ta.singular_dimension < 0) {
        chk.detail = "smooth, dimension " + std::to_string(ta.dimension);
      } else {
        chk.ok = false;
        chk.detail = "singular locus of dimension " + std::to_string(ta.singular_dimension);
        if (ta.singular_dimension >= ta.dimension) rep.rank_deficient_everywhere = true;
      }
    } else if (all_zero) {
      // Too large for an exact answer: look for singular points by sampling the stratum.
      chk.method = "sampled";
      rep.sampled.push_back(I);
      int bad = 0;
      for (int t = 0; t < samples; ++t) {
        std::vector<PrimeField::Elem> p(nv, 0);
        for (int i : I) p[i] = 1 + r.below(inst.field.characteristic() - 1);
        if (rank_mod_p(evaluate(jac, p), inst.field) < c) ++bad;
      }
      chk.ok = bad == 0;
      chk.detail = std::to_string(samples) + " samples, " + std::to_string(bad) + " singular";
    } else {
      chk.method = "generic-rank";
      rep.sampled.push_back(I);
      int rk = fraction_field_rank(restrict_to(jac, I), r.split(0x7A).next(), c);
      chk.detail = "Groebner budget exceeded; generic Jacobian rank " + std::to_string(rk);
    }
    record(rep, std::move(chk));
  }
  if (rep.verdict == QSVerdict::Pass && !rep.sampled.empty()) rep.verdict = QSVerdict::PassWithSamplingCaveat;
  return rep;
}

WellformedReport wellformed_member(const ModelInstance& inst) {
  WellformedReport rep;
  if (auto w = wellformed_space(inst.ambient)) {
    rep.ok = false;
    rep.witness = *w;
    rep.detail = "ambient not well-formed";
    return rep;
  }
  for (const auto& st : strata_of(inst.ambient)) {
    if (st.dimension == 0) continue;
    auto pts = stratum_points(inst.equations, st.support);
    if (pts.status == StratumPoints::Status::Contained) {
      rep.ok = false;
      rep.witness = st.support;
      rep.detail = "contains the stratum " + st.str(inst.ambient);
      return rep;
    }
    if (pts.status == StratumPoints::Status::Unsupported) {
      // A curve of X inside the singular locus breaks well-formedness.
      auto ta = torus_intersection(inst.equations, st.support);
      if (ta.status == TorusAnalysis::Status::OverBudget)
        throw Error("UnsupportedStratum", "cannot decide the intersection with " + st.str(inst.ambient));
      if (ta.status == TorusAnalysis::Status::Proper && ta.dimension >= 1) {
        rep.ok = false;
        rep.witness = st.support;
        rep.detail = "meets the stratum " + st.str(inst.ambient) + " in dimension " + std::to_string(ta.dimension);
        return rep;
      }
    }
  }
  return rep;
}

CrosscheckReport qs_crosscheck(const WeightedSpace& ws, const FormatSpec& format, long long r, int trials,
                               std::uint64_t seed) {
  CrosscheckReport rep;
  if (format.kind == FormatKind::Hypersurface) rep.general = qs_hypersurface_general(ws, format.degrees[0].eval_int(r));
  for (int t = 0; t < trials; ++t) {
    auto inst = make_instance("crosscheck", t, r, ws, format, PrimeField(), CounterRng(seed).split(t).next());
    rep.members.push_back(qs_member(inst));
  }
  bool ref = rep.general ? rep.general->passed() : (rep.members.empty() || rep.members[0].passed());
  for (const auto& m : rep.members) rep.agree = rep.agree && m.passed() == ref;
  return rep;
}

}  // namespace dpc
