#include "dpc/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dpc {

UPoly::UPoly(PrimeField field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= field_.characteristic();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly::Elem UPoly::eval(Elem x) const {
  Elem acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.add(coeff(i), o.coeff(i));
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.sub(coeff(i), o.coeff(i));
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
  return UPoly(field_, std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Elem> r = c_;
  int dd = d.degree();
  if (degree() < dd) return {UPoly(field_), *this};
  std::vector<Elem> q(degree() - dd + 1, 0);
  Elem lead_inv = field_.inv(d.c_.back());
  for (int i = degree(); i >= dd; --i) {
    Elem f = field_.mul(r[i], lead_inv);
    q[i - dd] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = field_.sub(r[i - dd + j], field_.mul(f, d.c_[j]));
  }
  return {UPoly(field_, std::move(q)), UPoly(field_, std::move(r))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Elem inv = field_.inv(c_.back());
  std::vector<Elem> v = c_;
  for (auto& x : v) x = field_.mul(x, inv);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::derivative() const {
  std::vector<Elem> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(field_.mul(c_[i], field_.from_int(static_cast<long long>(i))));
  return UPoly(field_, std::move(v));
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i];
    if (i > 0) os << "*u" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return f.monic();
  if (static_cast<std::uint64_t>(f.degree()) >= f.field().characteristic())
    throw std::domain_error("squarefree part needs degree below the characteristic");
  UPoly g = gcd(f, f.derivative());
  return f.divmod(g).first.monic();
}

}  // namespace dpc
