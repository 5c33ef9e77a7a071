#include "dpc/series.hpp"

#include <algorithm>
#include <sstream>

namespace dpc {

SeriesPoly SeriesPoly::polynomial(std::vector<Rational> coeffs) {
  SeriesPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

SeriesPoly SeriesPoly::polynomial(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (long long v : coeffs) c.emplace_back(make_rational(v));
  return polynomial(std::move(c));
}

SeriesPoly SeriesPoly::truncated(std::vector<Rational> coeffs, int bound) {
  if (bound < 0) throw std::invalid_argument("negative truncation bound");
  SeriesPoly p;
  coeffs.resize(static_cast<std::size_t>(bound));
  p.coeffs_ = std::move(coeffs);
  p.bound_ = bound;
  return p;
}

SeriesPoly SeriesPoly::monomial(int degree, Rational c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return polynomial(std::move(v));
}

SeriesPoly SeriesPoly::geometric(int step, int bound) {
  if (step <= 0) throw std::invalid_argument("geometric series needs a positive step");
  std::vector<Rational> v(static_cast<std::size_t>(bound));
  for (int d = 0; d < bound; d += step) v[d] = 1;
  return truncated(std::move(v), bound);
}

void SeriesPoly::trim() {
  if (bound_) return;
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational SeriesPoly::coeff(int d) const {
  if (d < 0) return 0;
  if (bound_ && d >= *bound_) throw std::out_of_range("coefficient beyond truncation bound");
  if (static_cast<std::size_t>(d) >= coeffs_.size()) return 0;
  return coeffs_[d];
}

Rational SeriesPoly::eval(const Rational& t) const {
  if (bound_) throw std::logic_error("cannot evaluate a truncated series");
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

SeriesPoly SeriesPoly::operator+(const SeriesPoly& o) const {
  std::optional<int> b = bound_;
  if (o.bound_) b = b ? std::min(*b, *o.bound_) : o.bound_;
  std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  if (b) n = static_cast<std::size_t>(*b);
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < coeffs_.size()) v[i] += coeffs_[i];
    if (i < o.coeffs_.size()) v[i] += o.coeffs_[i];
  }
  return b ? truncated(std::move(v), *b) : polynomial(std::move(v));
}

SeriesPoly SeriesPoly::operator-(const SeriesPoly& o) const { return *this + o * Rational(-1); }

SeriesPoly SeriesPoly::operator*(const Rational& k) const {
  SeriesPoly p = *this;
  for (auto& c : p.coeffs_) c *= k;
  p.trim();
  return p;
}

SeriesPoly SeriesPoly::operator*(const SeriesPoly& o) const {
  if (bound_ || o.bound_) throw std::logic_error("use series_mul for truncated operands");
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return polynomial(std::move(v));
}

bool SeriesPoly::operator==(const SeriesPoly& o) const {
  return bound_ == o.bound_ && coeffs_ == o.coeffs_;
}

SeriesPoly SeriesPoly::truncate(int bound) const {
  if (bound_ && bound > *bound_) throw std::out_of_range("cannot extend a truncated series");
  std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), bound));
  return truncated(std::move(v), bound);
}

SeriesPoly SeriesPoly::reflect(int s) const {
  if (bound_) throw std::logic_error("reflect needs an exact polynomial");
  if (degree() > s) throw std::invalid_argument("reflection degree below polynomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(s) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[s - i] = coeffs_[i];
  return polynomial(std::move(v));
}

std::string SeriesPoly::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (any) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) os << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    any = true;
  }
  if (!any) os << "0";
  if (bound_) os << " + O(t^" << *bound_ << ")";
  return os.str();
}

SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b, int bound) {
  for (const SeriesPoly* s : {&a, &b})
    if (s->bound() && *s->bound() < bound) throw std::invalid_argument("operand truncated below requested bound");
  std::vector<Rational> v(static_cast<std::size_t>(bound));
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size() && i < v.size(); ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; j < bc.size() && i + j < v.size(); ++j) v[i + j] += ac[i] * bc[j];
  }
  return SeriesPoly::truncated(std::move(v), bound);
}

SeriesPoly divide_by_one_minus_t(const SeriesPoly& p, int c) {
  if (!p.is_exact()) throw std::invalid_argument("divide_by_one_minus_t needs an exact polynomial");
  std::vector<Rational> cur(p.coeffs().begin(), p.coeffs().end());
  for (int stage = 1; stage <= c; ++stage) {
    Rational total = 0;
    for (const auto& x : cur) total += x;
    if (sgn(total) != 0)
      throw NotDivisible("polynomial is not divisible by (1-t)^" + std::to_string(c) + " (stage " +
                         std::to_string(stage) + ")");
    // Synthetic division by (1 - t): q_i = sum_{j<=i} p_j.
    std::vector<Rational> q(cur.empty() ? 0 : cur.size() - 1);
    Rational running = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      running += cur[i];
      q[i] = running;
    }
    cur = std::move(q);
  }
  return SeriesPoly::polynomial(std::move(cur));
}

int order_at_one(const SeriesPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no finite order");
  int order = 0;
  SeriesPoly cur = p;
  while (true) {
    try {
      cur = divide_by_one_minus_t(cur, 1);
      ++order;
    } catch (const NotDivisible&) {
      return order;
    }
  }
}

SeriesPoly complete_homogeneous(int d, std::span<const long long> exps) {
  if (exps.size() != 3) throw std::invalid_argument("complete_homogeneous expects three exponents");
  for (long long e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent in complete_homogeneous");
  if (d < 0) return {};
  long long top = static_cast<long long>(d) * std::max({exps[0], exps[1], exps[2]});
  std::vector<Rational> v(static_cast<std::size_t>(top) + 1);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) v[a * exps[0] + b * exps[1] + (d - a - b) * exps[2]] += 1;
  return SeriesPoly::polynomial(std::move(v));
}

SeriesPoly complete_homogeneous(int d, std::span<const LinExpr> exps, long long r) {
  std::vector<long long> ints;
  for (const auto& e : exps) ints.push_back(e.eval_int(r));
  return complete_homogeneous(d, ints);
}

}  // namespace dpc
