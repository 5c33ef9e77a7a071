#include "dpc/report.hpp"

#include "dpc/invariants.hpp"

#include <json.hpp>

#include <sstream>

namespace dpc {

using nlohmann::json;

namespace {

bool gorenstein_symmetric(const HilbertData& hd) {
  auto refl = hd.numerator.reflect(static_cast<int>(hd.socle));
  auto sign = hd.codim % 2 == 0 ? hd.numerator : hd.numerator * Rational(-1);
  return refl == sign && order_at_one(hd.numerator) == hd.codim;
}

std::vector<const ModelSpec*> select(const Catalog& cat, const std::vector<std::string>& ids) {
  std::vector<const ModelSpec*> out;
  if (ids.empty()) {
    for (const auto& ms : cat) out.push_back(&ms);
  } else {
    for (const auto& id : ids) out.push_back(&find_model(cat, id));
  }
  return out;
}

std::string yes(bool b) { return b ? "pass" : "fail"; }

const std::vector<std::vector<std::string>>& theorem_chains() {
  static const std::vector<std::vector<std::string>> v = {{"P11", "PF11", "CI11"}, {"PF12", "CI12", "HS12"},
                                                          {"PF13", "CI13"},        {"PF21", "CI21"},
                                                          {"PF22", "CI22"},        {"P12", "PF14"}};
  return v;
}

const std::vector<std::vector<std::string>>& reid_suzuki_chains() {
  static const std::vector<std::vector<std::string>> v = {{"RS6", "RS7", "RS8"}};
  return v;
}

std::string chain_str(const std::vector<std::string>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " -> " : "") + c[i];
  return s;
}

json verdict_json(const StepVerdicts& v) {
  json j{{"n", v.n},
         {"wellformed", v.wellformed},
         {"quasismooth", v.quasismooth},
         {"invariants", v.invariants},
         {"divisor", v.divisor},
         {"whitelisted", v.whitelisted},
         {"h0_source", v.h0_source},
         {"h0_target", v.h0_target},
         {"h0_drop_expected", v.h0_drop_expected},
         {"detail", v.detail}};
  j["target"] = v.target ? json{{"id", v.target->id}, {"n", v.target->n}} : json(nullptr);
  return j;
}

std::string verdict_text(const StepVerdicts& v) {
  std::ostringstream os;
  os << "n=" << v.n << " wellformed=" << yes(v.wellformed) << " quasismooth=" << yes(v.quasismooth)
     << " invariants=" << yes(v.invariants) << (v.whitelisted ? "(whitelisted)" : "") << " divisor=" << yes(v.divisor)
     << " h0 " << v.h0_source << "->" << v.h0_target << " (expected drop " << v.h0_drop_expected << ")";
  if (v.target) os << " target=" << v.target->id << "@n=" << v.target->n;
  return os.str();
}

json step_json(const ProjectionStep& s) {
  json j{{"source", s.source}, {"center", s.center}, {"target_format", s.target_special.str()}};
  std::vector<std::string> w;
  for (const auto& e : s.target_weights) w.push_back(e.str());
  j["target_weights"] = w;
  j["target_names"] = s.target_names;
  std::vector<std::string> dd;
  for (const auto& e : s.divisor_degrees) dd.push_back(e.str());
  j["divisor_generators"] = s.divisor_generators;
  j["divisor_degrees"] = dd;
  j["divisor_note"] = s.divisor_note;
  j["tom"] = s.tom ? json(*s.tom) : json(nullptr);
  j["target_generic"] = s.target_generic ? json(*s.target_generic) : json("unmatched");
  return j;
}

std::string step_text(const ProjectionStep& s, const std::string& indent) {
  std::ostringstream os;
  os << indent << s.source << " from p_" << s.center << " -> " << s.target_special.str() << " in P(";
  for (std::size_t i = 0; i < s.target_weights.size(); ++i) os << (i ? "," : "") << s.target_weights[i].str();
  os << ")\n" << indent << "  D = V(";
  for (std::size_t i = 0; i < s.divisor_generators.size(); ++i)
    os << (i ? ", " : "") << s.divisor_generators[i] << " [" << s.divisor_degrees[i].str() << "]";
  os << ")  " << s.divisor_note;
  if (s.tom) os << "  " << *s.tom;
  os << "\n";
  return os.str();
}

}  // namespace

VerifyReport run_verify(const Catalog& cat, const VerifyOptions& opts) {
  VerifyReport rep;
  rep.options = opts;
  PrimeField field(opts.prime);
  for (const auto* ms : select(cat, opts.ids)) {
    long long lo = std::max(ms->n_min, opts.n_min.value_or(ms->n_min));
    long long hi = opts.n_max.value_or(8);
    for (long long n : ms->range_upto(hi)) {
      if (n < lo) continue;
      VerifyRecord rec;
      rec.model = ms->id;
      rec.n = n;
      rec.r = ms->r_of(n);
      auto disc = [&](const std::string& f, const std::string& c, const std::string& d, bool wl = false) {
        rep.discrepancies.push_back({ms->id, n, f, c, d, wl});
      };
      WeightedSpace ws = ms->ambient(rec.r);
      rec.ambient = ws.str();
      rec.ambient_wellformed = !wellformed_space(ws).has_value();
      if (!rec.ambient_wellformed) disc("ambient", "not well-formed", "well-formed");
      auto declared_basket = ms->declared_basket(rec.r);
      rec.basket_declared = basket_str(declared_basket);
      rec.h0_declared = ms->h0;
      rec.degK2_declared = to_string(ms->k2.at(rec.r));
      try {
        format_entry_check(ms->format, ws, rec.r);
        if (ms->format.kind == FormatKind::Pfaffian5) pfaffian_data(ms->format.pf, {rec.r});
        rec.format_ok = true;
      } catch (const Error& e) {
        rec.errors.push_back(e.what());
        disc("format", e.what(), "consistent");
      }
      try {
        auto hd = hilbert_numerator(ms->format, ws.weights, rec.r);
        rec.k = hd.k;
        rec.numerator = hd.numerator.str();
        rec.gorenstein = gorenstein_symmetric(hd);
        if (!rec.gorenstein) disc("gorenstein", "asymmetric numerator", "symmetric");
        Rational k2 = anticanonical_square(hd, ws.weights);
        rec.degK2 = to_string(k2);
        if (k2 != ms->k2.at(rec.r)) disc("(-K)^2", rec.degK2, rec.degK2_declared, ms->k2.known_discrepant);
        rec.h0 = h0_minusK(hd, ws.weights).get_si();
        if (rec.h0 != ms->h0) disc("h0", std::to_string(rec.h0), std::to_string(ms->h0));
        std::vector<long long> lt;
        for (const auto& s : declared_basket) lt.push_back(local_type_of_minusK(s));
        try {
          rec.rr_h0 = rr_h0(k2, declared_basket, lt).get_si();
          if (*rec.rr_h0 != rec.h0) disc("rr_h0", std::to_string(*rec.rr_h0), std::to_string(rec.h0));
        } catch (const Error& e) {
          rec.errors.push_back(e.what());
          disc("rr_h0", e.what(), std::to_string(rec.h0));
        }
      } catch (const Error& e) {
        rec.errors.push_back(e.what());
        disc("hilbert", e.what(), "Gorenstein numerator");
      }
      if (n <= opts.member_n_max && rec.format_ok) {
        try {
          auto inst = instantiate(*ms, n, opts.seed, field);
          auto qs = qs_member(inst, 200, opts.seed);
          rec.quasismooth = qs.summary(ws);
          if (!qs.passed()) disc("quasismooth", *rec.quasismooth, "pass");
          auto wf = wellformed_member(inst);
          rec.member_wellformed = wf.ok;
          if (!wf.ok) disc("wellformed", wf.detail, "well-formed");
          if (qs.passed() && wf.ok) {
            auto b = basket_of(inst);
            rec.basket = basket_str(b);
            if (b != declared_basket) disc("basket", *rec.basket, rec.basket_declared);
          }
        } catch (const Error& e) {
          rec.errors.push_back(e.what());
          disc("member", e.what(), "analysable member");
        }
      }
      rep.records.push_back(std::move(rec));
    }
  }
  return rep;
}

int VerifyReport::exit_code() const {
  for (const auto& d : discrepancies)
    if (!d.whitelisted || options.strict) return 1;
  return 0;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "verify seed=" << options.seed << " prime=" << options.prime << (options.strict ? " strict" : "") << "\n";
  for (const auto& r : records) {
    os << r.model << " n=" << r.n << " r=" << r.r << " " << r.ambient << " k=" << r.k << " (-K)^2=" << r.degK2
       << " h0=" << r.h0;
    if (r.rr_h0) os << " rr=" << *r.rr_h0;
    os << " basket=" << (r.basket ? *r.basket : r.basket_declared + "(declared)");
    if (r.quasismooth) os << " qs=" << *r.quasismooth;
    if (r.member_wellformed) os << " wf=" << yes(*r.member_wellformed);
    os << " gorenstein=" << yes(r.gorenstein) << "\n";
  }
  int wl = 0;
  if (!discrepancies.empty()) os << "discrepancies:\n";
  for (const auto& d : discrepancies) {
    os << "  " << d.model << " n=" << d.n << " " << d.field << ": computed " << d.computed << ", declared " << d.declared
       << (d.whitelisted ? " [known table discrepancy]" : "") << "\n";
    wl += d.whitelisted;
  }
  os << "summary: " << records.size() << " cells, " << discrepancies.size() << " discrepancies (" << wl
     << " whitelisted), exit " << exit_code() << "\n";
  return os.str();
}

std::string VerifyReport::json() const {
  nlohmann::json j;
  j["seed"] = options.seed;
  j["prime"] = options.prime;
  j["strict"] = options.strict;
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json x{{"model", r.model},
                     {"n", r.n},
                     {"r", r.r},
                     {"ambient", r.ambient},
                     {"ambient_wellformed", r.ambient_wellformed},
                     {"format_ok", r.format_ok},
                     {"gorenstein", r.gorenstein},
                     {"k", r.k},
                     {"numerator", r.numerator},
                     {"degK2", r.degK2},
                     {"degK2_declared", r.degK2_declared},
                     {"h0", r.h0},
                     {"h0_declared", r.h0_declared},
                     {"basket_declared", r.basket_declared},
                     {"errors", r.errors}};
    x["rr_h0"] = r.rr_h0 ? nlohmann::json(*r.rr_h0) : nlohmann::json(nullptr);
    x["basket"] = r.basket ? nlohmann::json(*r.basket) : nlohmann::json(nullptr);
    x["quasismooth"] = r.quasismooth ? nlohmann::json(*r.quasismooth) : nlohmann::json(nullptr);
    x["member_wellformed"] = r.member_wellformed ? nlohmann::json(*r.member_wellformed) : nlohmann::json(nullptr);
    j["records"].push_back(x);
  }
  j["discrepancies"] = nlohmann::json::array();
  for (const auto& d : discrepancies)
    j["discrepancies"].push_back({{"model", d.model},
                                  {"n", d.n},
                                  {"field", d.field},
                                  {"computed", d.computed},
                                  {"declared", d.declared},
                                  {"whitelisted", d.whitelisted}});
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

CascadeRun run_cascade(const Catalog& cat, long long n_max, std::uint64_t seed, bool reid_suzuki) {
  CascadeRun run;
  run.n_max = n_max;
  run.seed = seed;
  run.reid_suzuki = reid_suzuki;
  run.search = cascade_search(cat, n_max, seed, reid_suzuki);
  run.expected = reid_suzuki ? reid_suzuki_chains() : theorem_chains();
  std::vector<std::vector<std::string>> found;
  for (const auto& c : run.search.chains) found.push_back(c.models);
  for (const auto& e : run.expected)
    if (std::find(found.begin(), found.end(), e) == found.end()) run.missing.push_back(e);
  for (const auto& f : found)
    if (std::find(run.expected.begin(), run.expected.end(), f) == run.expected.end()) run.unexpected.push_back(f);
  return run;
}

std::string CascadeRun::text() const {
  std::ostringstream os;
  os << "cascade n_max=" << n_max << " seed=" << seed << (reid_suzuki ? " catalog=reid-suzuki" : "") << "\n";
  os << "chains: " << search.chains.size() << "\n";
  for (const auto& c : search.chains) {
    os << "  " << chain_str(c.models) << "  [terminal: " << c.terminal_reason << "]\n";
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      os << step_text(c.steps[i], "    ");
      for (const auto& v : c.verdicts[i]) os << "      " << verdict_text(v) << "\n";
    }
  }
  os << "sources:\n";
  int formats = 0, cascading = 0;
  for (const auto& s : search.sources) {
    os << "  " << s.id << " centers={";
    for (std::size_t i = 0; i < s.centers.size(); ++i) os << (i ? "," : "") << s.centers[i];
    os << "}";
    if (s.centers.empty()) os << " no weight-1 variable";
    os << "\n";
    for (const auto& a : s.accepted) os << "    accepted " << a << "\n";
    for (const auto& r : s.rejected) os << "    rejected " << r << "\n";
    bool head = false;
    for (const auto& c : search.chains) head = head || c.models.front() == s.id;
    if (s.id.rfind("PF", 0) == 0 || s.id.rfind("P1", 0) == 0) {
      ++formats;
      cascading += head;
    }
  }
  if (!reid_suzuki)
    os << "Pfaffian and P2xP2 models: " << formats << ", of which " << cascading << " start a cascade\n";
  for (const auto& m : missing) os << "missing expected chain: " << chain_str(m) << "\n";
  for (const auto& u : unexpected) os << "unexpected chain: " << chain_str(u) << "\n";
  os << "exit " << exit_code() << "\n";
  return os.str();
}

std::string CascadeRun::json() const {
  nlohmann::json j{{"n_max", n_max}, {"seed", seed}, {"reid_suzuki", reid_suzuki}};
  j["chains"] = nlohmann::json::array();
  for (const auto& c : search.chains) {
    nlohmann::json x{{"models", c.models}, {"terminal_reason", c.terminal_reason}};
    x["steps"] = nlohmann::json::array();
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      auto s = step_json(c.steps[i]);
      s["verdicts"] = nlohmann::json::array();
      for (const auto& v : c.verdicts[i]) s["verdicts"].push_back(verdict_json(v));
      x["steps"].push_back(s);
    }
    j["chains"].push_back(x);
  }
  j["sources"] = nlohmann::json::array();
  for (const auto& s : search.sources)
    j["sources"].push_back({{"id", s.id}, {"centers", s.centers}, {"accepted", s.accepted}, {"rejected", s.rejected}});
  j["missing"] = missing;
  j["unexpected"] = unexpected;
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

std::string emit_tables(const Catalog& cat, long long n_min, long long n_max, bool as_json, std::uint64_t seed) {
  static const std::vector<std::pair<std::string, std::string>> tables = {
      {"1", "complete intersection and hypersurface models"},
      {"2", "Pfaffian models"},
      {"3", "P2xP2 models"},
      {"RS", "Reid-Suzuki surfaces"}};
  nlohmann::json j = nlohmann::json::array();
  std::ostringstream os;
  for (const auto& [tag, title] : tables) {
    nlohmann::json tj{{"table", tag}, {"title", title}, {"rows", nlohmann::json::array()}};
    os << title << "\n";
    std::vector<std::string> notes;
    for (const auto& ms : cat) {
      if (ms.table != tag) continue;
      for (long long n : ms.range_upto(n_max)) {
        if (n < n_min) continue;
        long long r = ms.r_of(n);
        auto ws = ms.ambient(r);
        auto hd = hilbert_numerator(ms.format, ws.weights, r);
        auto k2 = anticanonical_square(hd, ws.weights);
        long long h0 = h0_minusK(hd, ws.weights).get_si();
        std::string basket;
        try {
          basket = basket_str(basket_of(instantiate(ms, n, seed)));
        } catch (const Error& e) {
          basket = std::string("? (") + e.kind() + ")";
        }
        std::string mark;
        if (k2 != ms.k2.at(r)) {
          notes.push_back(ms.id + " n=" + std::to_string(n) + ": printed (-K)^2 " + to_string(ms.k2.at(r)) +
                          (ms.k2.known_discrepant ? " (known)" : ""));
          mark = "*";
        }
        if (h0 != ms.h0) {
          notes.push_back(ms.id + " n=" + std::to_string(n) + ": printed h0 " + std::to_string(ms.h0));
          mark = "*";
        }
        if (basket != basket_str(ms.declared_basket(r))) {
          notes.push_back(ms.id + " n=" + std::to_string(n) + ": printed basket " + basket_str(ms.declared_basket(r)));
          mark = "*";
        }
        os << "  " << ms.id << " n=" << n << " r=" << r << " " << ms.format.str() << " in " << ws.str()
           << "  (-K)^2=" << to_string(k2) << "  h0=" << h0 << "  basket=" << basket << mark << "\n";
        tj["rows"].push_back({{"model", ms.id},
                              {"n", n},
                              {"r", r},
                              {"ambient", ws.str()},
                              {"format", ms.format.str()},
                              {"degK2", to_string(k2)},
                              {"h0", h0},
                              {"basket", basket},
                              {"matches_print", mark.empty()}});
      }
    }
    for (const auto& note : notes) os << "    * " << note << "\n";
    tj["notes"] = notes;
    j.push_back(tj);
  }
  return as_json ? j.dump(2) + "\n" : os.str();
}

std::string render_instance(const ModelInstance& inst) {
  std::ostringstream os;
  os << inst.model_id << " n=" << inst.n << " r=" << inst.r << " " << inst.format.str() << " in " << inst.ambient.str()
     << " over F_" << inst.field.characteristic() << "\n";
  os << "variables:";
  for (int i = 0; i < inst.ambient.size(); ++i) os << " " << inst.ambient.names[i] << ":" << inst.ambient.weights[i];
  os << "\n" << inst.equations_str();
  return os.str();
}

std::string render_projection(const Catalog& cat, const std::string& id, const std::string& center, long long n,
                              std::uint64_t seed, bool as_json, int* exit_code) {
  const auto& ms = find_model(cat, id);
  if (!ms.in_range(n)) instantiate(ms, n, seed);  // raises OutOfRange
  auto step = project_format(ms, center);
  auto v = verify_step(cat, ms, step, n, seed);
  if (v.target) step.target_generic = v.target->id;
  InstanceOptions opts;
  opts.center = center;
  auto ready = instantiate(ms, n, seed, PrimeField(), opts);
  auto img = project_equations(ready, center);
  if (exit_code) *exit_code = v.passed() ? 0 : 1;
  if (as_json) {
    nlohmann::json j = step_json(step);
    j["n"] = n;
    j["verdicts"] = verdict_json(v);
    std::vector<std::string> eqs, gens;
    for (const auto& f : img.equations) eqs.push_back(f.str());
    for (const auto& g : img.divisor->generators) gens.push_back(g.str());
    j["special_member"] = {{"ambient", img.ambient.str()}, {"degrees", img.degrees}, {"equations", eqs},
                           {"divisor", gens}, {"divisor_contained", divisor_contained(img)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << step_text(step, "");
  os << "target: " << (step.target_generic ? *step.target_generic : "unmatched") << "\n";
  os << "verdicts: " << verdict_text(v) << "\n";
  if (!v.detail.empty()) os << "notes: " << v.detail << "\n";
  os << "special member:\n" << render_instance(img);
  os << "divisor generators:\n";
  for (const auto& g : img.divisor->generators) os << "  " << g.str() << "\n";
  os << "divisor contained: " << yes(divisor_contained(img)) << "\n";
  return os.str();
}

}  // namespace dpc
