#include "dpc/cascade.hpp"

#include "dpc/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dpc {

namespace {

std::vector<int> sorted(std::vector<int> w) {
  std::sort(w.begin(), w.end());
  return w;
}

bool is_rs(const ModelSpec& ms) { return ms.table == "RS"; }

// Number of monomials of degree d in the given weights.
long long monomial_count(const std::vector<int>& w, long long d) {
  if (d < 0) return 0;
  std::vector<long long> c(d + 1, 0);
  c[0] = 1;
  for (int x : w)
    for (long long t = x; t <= d; ++t) c[t] += c[t - x];
  return c[d];
}

long long to_ll(const Integer& z) { return z.get_si(); }

}  // namespace

std::optional<TargetMatch> match_target(const Catalog& cat, const WeightedSpace& ws, const FormatSpec& fs, long long r,
                                        bool reid_suzuki) {
  auto want_w = sorted(ws.weights);
  auto want = hilbert_numerator(fs, ws.weights, r);
  int maxw = want_w.back();
  for (const auto& ms : cat) {
    if (is_rs(ms) != reid_suzuki) continue;
    if (ms.format.codim() != fs.codim()) continue;
    for (long long n = ms.n_min; !ms.n_max || n <= *ms.n_max; ++n) {
      long long r2 = ms.r_of(n);
      auto w = sorted(ms.ambient(r2).weights);
      if (w == want_w) {
        auto hd = hilbert_numerator(ms.format, w, r2);
        if (hd.numerator == want.numerator) return TargetMatch{ms.id, n};
      }
      if (w.back() > maxw || ms.r_slope == 0 || n > ms.n_min + 1000) break;
    }
  }
  return std::nullopt;
}

StepVerdicts verify_step(const Catalog& cat, const ModelSpec& source, const ProjectionStep& step, long long n,
                         std::uint64_t seed) {
  StepVerdicts v;
  v.n = n;
  long long r = source.r_of(n);
  WeightedSpace tw = step.target_ambient(r);
  std::vector<std::string> notes;

  v.wellformed = !wellformed_space(tw).has_value();
  if (!v.wellformed) notes.push_back("target ambient " + tw.str() + " not well-formed");

  std::optional<ModelInstance> member;
  try {
    member = deform_generic(step, n, seed);
    auto qs = qs_member(*member);
    auto wf = wellformed_member(*member);
    v.quasismooth = qs.passed() && wf.ok;
    if (!qs.passed()) notes.push_back("generic member " + qs.summary(tw));
    if (!wf.ok) notes.push_back("generic member " + wf.detail);
  } catch (const Error& e) {
    notes.push_back(std::string("genericization: ") + e.what());
  }

  v.target = match_target(cat, tw, step.target_special, r, is_rs(source));
  if (!v.target) {
    notes.push_back("no catalog entry with ambient " + tw.str() + " and this Hilbert numerator");
  } else {
    const auto& tm = find_model(cat, v.target->id);
    long long r2 = tm.r_of(v.target->n);
    auto hd = hilbert_numerator(step.target_special, tw.weights, r);
    Rational k2 = anticanonical_square(hd, tw.weights);
    long long h0 = to_ll(h0_minusK(hd, tw.weights));
    bool k2_ok = k2 == tm.k2.at(r2);
    if (!k2_ok && tm.k2.known_discrepant) v.whitelisted = true;
    bool h0_ok = h0 == tm.h0;
    bool basket_ok = false;
    if (member && v.quasismooth) {
      try {
        auto b = basket_of(*member);
        basket_ok = b == tm.declared_basket(r2);
        if (!basket_ok) notes.push_back("basket " + basket_str(b) + " vs declared " + basket_str(tm.declared_basket(r2)));
      } catch (const Error& e) {
        notes.push_back(std::string("basket: ") + e.what());
      }
    }
    if (!k2_ok) notes.push_back("(-K)^2 " + to_string(k2) + " vs declared " + to_string(tm.k2.at(r2)) +
                                (tm.k2.known_discrepant ? " (known table discrepancy)" : ""));
    if (!h0_ok) notes.push_back("h0 " + std::to_string(h0) + " vs declared " + std::to_string(tm.h0));
    v.invariants = (k2_ok || v.whitelisted) && h0_ok && basket_ok;
  }

  try {
    InstanceOptions opts;
    opts.center = step.center;
    auto ready = instantiate(source, n, seed, PrimeField(), opts);
    auto img = project_equations(ready, step.center);
    bool contained = divisor_contained(img);
    std::vector<long long> want;
    for (const auto& d : step.target_special.equation_degrees()) want.push_back(d.eval_int(r));
    bool degrees_ok = img.degrees == want;
    auto sw = source.ambient(r).weights;
    auto shd = hilbert_numerator(source.format, sw, r);
    auto thd = hilbert_numerator(step.target_special, tw.weights, r);
    v.h0_source = to_ll(h0_minusK(shd, sw));
    v.h0_target = to_ll(h0_minusK(thd, tw.weights));
    v.h0_drop_expected = monomial_count(sw, shd.k - 1);
    bool drop_ok = v.h0_source - v.h0_target == v.h0_drop_expected && shd.k == thd.k;
    v.divisor = contained && degrees_ok && drop_ok;
    if (!contained) notes.push_back("divisor containment fails");
    if (!degrees_ok) notes.push_back("image degrees differ from the format rule");
    if (!drop_ok)
      notes.push_back("h0 drop " + std::to_string(v.h0_source - v.h0_target) + " but " +
                      std::to_string(v.h0_drop_expected) + " monomials of degree k are divisible by the center");
  } catch (const Error& e) {
    notes.push_back(std::string("special member: ") + e.what());
  }

  for (std::size_t i = 0; i < notes.size(); ++i) v.detail += (i ? "; " : "") + notes[i];
  return v;
}

CascadeSearch cascade_search(const Catalog& cat, long long n_max, std::uint64_t seed, bool reid_suzuki) {
  CascadeSearch out;
  struct Edge {
    ProjectionStep step;
    std::vector<StepVerdicts> verdicts;
  };
  std::map<std::string, std::map<std::string, Edge>> edges;  // source -> target -> first accepted step
  std::map<std::string, bool> has_centers, qs_rejected;

  std::vector<const ModelSpec*> models;
  for (const auto& ms : cat)
    if (is_rs(ms) == reid_suzuki) models.push_back(&ms);
  std::sort(models.begin(), models.end(), [](auto* a, auto* b) { return a->id < b->id; });

  for (const auto* ms : models) {
    SourceOutcome so;
    so.id = ms->id;
    so.centers = find_projection_centers(*ms);
    has_centers[ms->id] = !so.centers.empty();
    auto range = ms->range_upto(n_max);
    for (const auto& c : so.centers) {
      ProjectionStep step;
      try {
        step = project_format(*ms, c);
      } catch (const Error& e) {
        so.rejected.push_back(c + ": " + e.what());
        continue;
      }
      if (range.empty()) {
        so.rejected.push_back(c + ": no parameter in range up to n=" + std::to_string(n_max));
        continue;
      }
      std::vector<StepVerdicts> vs;
      std::set<std::string> targets;
      std::string why;
      bool ok = true;
      for (long long n : range) {
        vs.push_back(verify_step(cat, *ms, step, n, seed));
        const auto& v = vs.back();
        targets.insert(v.target ? v.target->id : "unmatched");
        if (!v.passed()) {
          ok = false;
          if (!v.quasismooth) qs_rejected[ms->id] = true;
          if (why.empty()) why = "n=" + std::to_string(n) + ": " + v.detail;
        }
      }
      if (ok && targets.size() != 1) {
        ok = false;
        why = "target changes with n";
      }
      if (!ok) {
        so.rejected.push_back(c + ": " + why);
        continue;
      }
      step.target_generic = *targets.begin();
      so.accepted.push_back(c + " -> " + *step.target_generic);
      edges[ms->id].try_emplace(*step.target_generic, Edge{step, vs});
    }
    out.sources.push_back(std::move(so));
  }

  // All maximal paths along accepted steps.
  std::vector<std::vector<std::string>> paths;
  std::function<void(std::vector<std::string>&)> walk = [&](std::vector<std::string>& path) {
    auto it = edges.find(path.back());
    bool extended = false;
    if (it != edges.end())
      for (const auto& [t, e] : it->second) {
        if (std::find(path.begin(), path.end(), t) != path.end()) continue;
        path.push_back(t);
        walk(path);
        path.pop_back();
        extended = true;
      }
    if (!extended && path.size() > 1) paths.push_back(path);
  };
  for (const auto* ms : models) {
    std::vector<std::string> p{ms->id};
    walk(p);
  }
  auto contains = [](const std::vector<std::string>& big, const std::vector<std::string>& small) {
    return big.size() > small.size() && std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
  };
  std::set<std::vector<std::string>> kept;
  for (const auto& p : paths) {
    bool sub = false;
    for (const auto& q : paths) sub = sub || contains(q, p);
    if (!sub) kept.insert(p);
  }
  for (const auto& p : kept) {
    CascadeReport rep;
    rep.models = p;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const auto& e = edges[p[i]].at(p[i + 1]);
      rep.steps.push_back(e.step);
      rep.verdicts.push_back(e.verdicts);
    }
    const auto& last = p.back();
    if (!has_centers[last]) rep.terminal_reason = "no-weight-1-variable";
    else if (qs_rejected[last]) rep.terminal_reason = "genericization-not-quasismooth";
    else rep.terminal_reason = "matched-terminal";
    out.chains.push_back(std::move(rep));
  }
  return out;
}

}  // namespace dpc
