#pragma once

#include "dpc/error.hpp"
#include "dpc/field.hpp"
#include "dpc/rng.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpc {

inline constexpr int kMaxVars = 12;

class WeightMismatch : public Error {
 public:
  explicit WeightMismatch(const std::string& m) : Error("WeightMismatch", m) {}
};

/// Named variables with positive integer weights.
struct VarSet {
  std::vector<std::string> names;
  std::vector<int> weights;

  int size() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    return -1;
  }
  int index_checked(const std::string& name) const {
    int i = index(name);
    if (i < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    return i;
  }
};

using VarSetPtr = std::shared_ptr<const VarSet>;
inline VarSetPtr make_varset(std::vector<std::string> names, std::vector<int> weights) {
  if (names.size() != weights.size()) throw std::invalid_argument("names and weights differ in length");
  if (names.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  return std::make_shared<const VarSet>(VarSet{std::move(names), std::move(weights)});
}

using Exponent = std::array<std::uint16_t, kMaxVars>;

/// All exponent vectors of weighted degree d; variables flagged in `skip` are not used.
std::vector<Exponent> monomials_of_degree(const std::vector<int>& weights, long long d,
                                          const std::vector<bool>& skip = {});

/// Sparse polynomial over a field in the variables of a VarSet.
template <class F>
class MultiPoly {
 public:
  using Elem = typename F::Elem;
  using Terms = std::map<Exponent, Elem>;

  MultiPoly() = default;
  MultiPoly(VarSetPtr vars, F field) : vars_(std::move(vars)), field_(std::move(field)) {}

  static MultiPoly constant(VarSetPtr vars, F field, Elem c) {
    MultiPoly p(std::move(vars), field);
    p.add_term(Exponent{}, c);
    return p;
  }
  static MultiPoly variable(VarSetPtr vars, F field, int i) {
    MultiPoly p(std::move(vars), field);
    Exponent e{};
    e[i] = 1;
    p.add_term(e, p.field_.one());
    return p;
  }
  static MultiPoly variable(VarSetPtr vars, F field, const std::string& name) {
    int i = vars->index_checked(name);
    return variable(std::move(vars), std::move(field), i);
  }

  const VarSetPtr& vars() const { return vars_; }
  const F& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int nvars() const { return vars_ ? vars_->size() : 0; }

  void add_term(const Exponent& e, const Elem& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  long long term_degree(const Exponent& e) const {
    long long d = 0;
    for (int i = 0; i < nvars(); ++i) d += static_cast<long long>(e[i]) * vars_->weights[i];
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long long d = term_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (term_degree(e) != d) return false;
    return true;
  }
  /// Weighted degree of a homogeneous nonzero polynomial.
  std::optional<long long> degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return term_degree(terms_.begin()->first);
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
    return d;
  }
  bool involves(int var) const { return degree_in(var) > 0; }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r.adopt(o);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = field_.neg(c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r.adopt(o);
    for (const auto& [e, c] : o.terms_) r.add_term(e, r.field_.neg(c));
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r(vars_ ? vars_ : o.vars_, vars_ ? field_ : o.field_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponent e;
        for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint16_t>(e1[i] + e2[i]);
        r.add_term(e, field_.mul(c1, c2));
      }
    return r;
  }
  MultiPoly scale(const Elem& k) const {
    MultiPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) r.add_term(e, field_.mul(c, k));
    return r;
  }
  MultiPoly pow(int k) const {
    MultiPoly r = constant(vars_, field_, field_.one());
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly derivative(int var) const {
    MultiPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      r.add_term(f, field_.mul(c, field_.from_int(e[var])));
    }
    return r;
  }

  /// Sets the listed variables to zero.
  MultiPoly restrict_zero(const std::vector<bool>& zero) const {
    MultiPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
      bool keep = true;
      for (int i = 0; i < nvars() && keep; ++i)
        if (zero[i] && e[i] > 0) keep = false;
      if (keep) r.terms_.emplace(e, c);
    }
    return r;
  }

  Elem eval(const std::vector<Elem>& point) const {
    Elem acc = field_.zero();
    for (const auto& [e, c] : terms_) {
      Elem t = c;
      for (int i = 0; i < nvars() && !field_.is_zero(t); ++i)
        if (e[i]) t = field_.mul(t, field_pow(point[i], e[i]));
      acc = field_.add(acc, t);
    }
    return acc;
  }

  /// Replaces variable `var` by g.
  MultiPoly substitute(int var, const MultiPoly& g) const {
    if (involves(var) && is_homogeneous() && !g.is_zero()) {
      auto dg = g.degree();
      if (!dg || *dg != vars_->weights[var])
        throw WeightMismatch("substituting a polynomial of degree " + (dg ? std::to_string(*dg) : std::string("?")) +
                             " for variable " + vars_->names[var] + " of weight " +
                             std::to_string(vars_->weights[var]));
    }
    int top = degree_in(var);
    std::vector<MultiPoly> powers{constant(vars_, field_, field_.one())};
    for (int k = 1; k <= top; ++k) powers.push_back(powers.back() * g);
    MultiPoly r(vars_, field_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      int k = f[var];
      f[var] = 0;
      MultiPoly mono(vars_, field_);
      mono.add_term(f, c);
      MultiPoly prod = k == 0 ? mono : mono * powers[k];
      for (const auto& [e2, c2] : prod.terms_) r.add_term(e2, c2);
    }
    return r;
  }
  MultiPoly substitute(const std::string& name, const MultiPoly& g) const {
    return substitute(vars_->index_checked(name), g);
  }

  /// Rewrites the polynomial in another variable set; variables are matched by name
  /// and any variable missing from the target set must not occur.
  MultiPoly rebase(const VarSetPtr& target) const {
    MultiPoly r(target, field_);
    std::vector<int> map(nvars(), -1);
    for (int i = 0; i < nvars(); ++i) map[i] = target->index(vars_->names[i]);
    for (const auto& [e, c] : terms_) {
      Exponent f{};
      for (int i = 0; i < nvars(); ++i) {
        if (e[i] == 0) continue;
        if (map[i] < 0) throw std::invalid_argument("variable " + vars_->names[i] + " not present in target ring");
        f[map[i]] = e[i];
      }
      r.add_term(f, c);
    }
    return r;
  }

  /// Exact quotient by g; throws if g does not divide *this.
  MultiPoly exact_divide(const MultiPoly& g) const {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly q(vars_, field_);
    auto lead = std::prev(g.terms_.end());
    Elem lead_inv = field_.inv(lead->second);
    while (!rem.is_zero()) {
      auto top = std::prev(rem.terms_.end());
      Exponent e{};
      for (int i = 0; i < kMaxVars; ++i) {
        if (top->first[i] < lead->first[i]) throw std::domain_error("polynomial division is not exact");
        e[i] = static_cast<std::uint16_t>(top->first[i] - lead->first[i]);
      }
      Elem c = field_.mul(top->second, lead_inv);
      MultiPoly t(vars_, field_);
      t.add_term(e, c);
      q.add_term(e, c);
      rem = rem - t * g;
    }
    return q;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = coeff_str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
      first = false;
      bool has_var = false;
      std::ostringstream mono;
      for (int i = 0; i < nvars(); ++i) {
        if (!e[i]) continue;
        if (has_var) mono << "*";
        mono << vars_->names[i];
        if (e[i] > 1) mono << "^" << e[i];
        has_var = true;
      }
      if (!has_var) os << cs;
      else if (cs == "1") os << mono.str();
      else os << cs << "*" << mono.str();
    }
    return os.str();
  }

 private:
  void adopt(const MultiPoly& o) {
    if (!vars_) {
      vars_ = o.vars_;
      field_ = o.field_;
    }
  }
  Elem field_pow(Elem a, int k) const {
    Elem r = field_.one();
    for (int i = 0; i < k; ++i) r = field_.mul(r, a);
    return r;
  }
  std::string coeff_str(const Elem& c) const {
    if constexpr (std::is_same_v<F, PrimeField>) return std::to_string(field_.signed_value(c));
    else return field_.str(c);
  }

  VarSetPtr vars_;
  F field_{};
  Terms terms_;
};

using Poly = MultiPoly<PrimeField>;
using QPoly = MultiPoly<RationalField>;

/// Free function form of MultiPoly::substitute.
template <class F>
MultiPoly<F> poly_substitute(const MultiPoly<F>& f, const std::string& var, const MultiPoly<F>& g) {
  return f.substitute(var, g);
}

/// Weighted-homogeneous form of degree d with pseudo-random nonzero coefficients
/// on every monomial not involving a skipped variable.
Poly random_form(const VarSetPtr& vars, const PrimeField& field, long long d, CounterRng& rng,
                 const std::vector<bool>& skip = {});

}  // namespace dpc
