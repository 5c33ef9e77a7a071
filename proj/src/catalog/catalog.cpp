#include "dpc/catalog.hpp"

#include <set>

namespace dpc {

namespace {

Integer poly_at(const std::vector<long long>& c, long long r) {
  Integer v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * big(r) + big(*it);
  return v;
}

std::string poly_str(const std::vector<long long>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    long long k = c[i];
    if (k == 0) continue;
    std::string mag = std::to_string(k < 0 ? -k : k);
    std::string mono = i == 0 ? mag : (k == 1 || k == -1 ? "" : mag) + "r" + (i > 1 ? "^" + std::to_string(i) : "");
    if (out.empty()) out = (k < 0 ? "-" : "") + mono;
    else out += (k < 0 ? " - " : " + ") + mono;
  }
  return out.empty() ? "0" : out;
}

[[noreturn]] void bad(const ModelSpec& ms, const std::string& msg) { throw Error("CatalogError", ms.id + ": " + msg); }

}  // namespace

Rational DeclaredK2::at(long long r) const {
  Integer d = poly_at(den, r);
  if (d == 0) throw Error("CatalogError", "declared (-K)^2 has a zero denominator at r=" + std::to_string(r));
  Rational q(poly_at(num, r), d);
  q.canonicalize();
  return q;
}

std::string DeclaredK2::str() const { return "(" + poly_str(num) + ")/(" + poly_str(den) + ")"; }

std::vector<long long> ModelSpec::range_upto(long long cap) const {
  std::vector<long long> out;
  for (long long n = n_min; n <= cap && (!n_max || n <= *n_max); ++n) out.push_back(n);
  return out;
}

WeightedSpace ModelSpec::ambient(long long r) const {
  std::vector<int> w;
  for (const auto& e : weights) w.push_back(static_cast<int>(e.eval_int(r)));
  return WeightedSpace(w, names);
}

std::vector<SingType> ModelSpec::declared_basket(long long r) const {
  std::vector<SingType> out;
  for (const auto& d : basket) {
    auto s = normalize_sing(static_cast<int>(d.order.eval_int(r)), d.a.eval_int(r), d.b.eval_int(r));
    if (!s) continue;
    s->multiplicity = d.count;
    out.push_back(*s);
  }
  return canonical_basket(out);
}

void validate_model(const ModelSpec& ms) {
  if (ms.id.empty()) throw Error("CatalogError", "model without id");
  if (ms.names.size() != ms.weights.size()) bad(ms, "names and weights differ in length");
  if (std::set<std::string>(ms.names.begin(), ms.names.end()).size() != ms.names.size()) bad(ms, "repeated variable name");
  if (ms.n_min < 0) bad(ms, "negative n_min");
  if (ms.n_max && *ms.n_max < ms.n_min) bad(ms, "empty parameter range");
  if (ms.k2.den.empty() || ms.k2.num.empty()) bad(ms, "declared (-K)^2 needs numerator and denominator");
  for (long long n : ms.range_upto(ms.n_min + 7)) {
    long long r = ms.r_of(n);
    std::string at = " at n=" + std::to_string(n) + " (r=" + std::to_string(r) + ")";
    for (std::size_t i = 0; i < ms.weights.size(); ++i) {
      if (!ms.weights[i].integral_at(r) || ms.weights[i].eval2(r) <= 0)
        bad(ms, "weight " + ms.weights[i].str() + " of " + ms.names[i] + " is not a positive integer" + at);
    }
    try {
      for (const auto& d : ms.format.equation_degrees())
        if (d.eval_int(r) <= 0) bad(ms, "equation degree " + d.str() + " is not positive" + at);
      format_entry_check(ms.format, ms.ambient(r), r);
      if (ms.format.kind == FormatKind::Pfaffian5) pfaffian_data(ms.format.pf, {r});
      for (const auto& s : ms.basket) {
        if (s.count < 1) bad(ms, "basket multiplicity below 1");
        if (s.order.eval_int(r) < 2) bad(ms, "basket order " + s.order.str() + " below 2" + at);
        normalize_sing(static_cast<int>(s.order.eval_int(r)), s.a.eval_int(r), s.b.eval_int(r));
      }
    } catch (const std::domain_error& e) {
      bad(ms, std::string(e.what()) + at);
    } catch (const Error& e) {
      if (e.kind() == "CatalogError") throw;
      bad(ms, std::string(e.what()) + at);
    }
    if (ms.k2.at(r) <= 0 && !ms.k2.known_discrepant) bad(ms, "declared (-K)^2 is not positive" + at);
  }
  if (!ms.w_row.empty()) {
    if (ms.format.kind == FormatKind::Pfaffian5) {
      if (ms.w_row.size() != 5) bad(ms, "grading row must have 5 entries");
      for (std::size_t s = 0; s < kPfPositions.size(); ++s) {
        auto [i, j] = kPfPositions[s];
        if (ms.w_row[i] + ms.w_row[j] != ms.format.pf[s])
          bad(ms, "grading row does not reproduce entry m" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    } else if (ms.format.kind == FormatKind::P2xP2) {
      if (ms.w_row.size() != 6) bad(ms, "grading row must have 6 entries");
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (ms.w_row[3 + i] + ms.w_row[j] != ms.format.p2_degree(i, j))
            bad(ms, "grading row does not reproduce entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    } else {
      bad(ms, "grading row given for a format without one");
    }
  }
}

void validate_catalog(const Catalog& cat) {
  std::set<std::string> ids;
  for (const auto& ms : cat) {
    if (!ids.insert(ms.id).second) throw Error("CatalogError", "duplicate model id " + ms.id);
    validate_model(ms);
  }
  for (const auto& ms : cat)
    if (ms.target && !ids.count(*ms.target)) bad(ms, "unknown cascade target " + *ms.target);
}

const ModelSpec& find_model(const Catalog& cat, const std::string& id) {
  for (const auto& ms : cat)
    if (ms.id == id) return ms;
  throw Error("UnknownModel", "no model with id " + id);
}

ModelInstance instantiate(const ModelSpec& ms, long long n, std::uint64_t seed, const PrimeField& field,
                          const InstanceOptions& opts) {
  if (!ms.in_range(n)) {
    std::string range = "n >= " + std::to_string(ms.n_min);
    if (ms.n_max) range += " and n <= " + std::to_string(*ms.n_max);
    throw Error("OutOfRange", ms.id + " is declared for " + range + ", got n=" + std::to_string(n));
  }
  long long r = ms.r_of(n);
  WeightedSpace ws = ms.ambient(r);
  format_entry_check(ms.format, ws, r);
  return make_instance(ms.id, n, r, ws, ms.format, field, seed, opts);
}

}  // namespace dpc
