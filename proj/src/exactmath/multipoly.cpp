#include "dpc/multipoly.hpp"

namespace dpc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 31) || !is_prime(p)) throw std::invalid_argument("field characteristic must be a prime below 2^31");
}

PrimeField::Elem PrimeField::from_rational(const Rational& q) const {
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % m;
  mpz_class den = q.get_den() % m;
  if (num < 0) num += m;
  if (den == 0) throw std::domain_error("denominator divisible by p");
  return mul(num.get_ui(), inv(den.get_ui()));
}

namespace {

void enumerate(const std::vector<int>& weights, const std::vector<bool>& skip, std::size_t i, long long left,
               Exponent& cur, std::vector<Exponent>& out) {
  if (i == weights.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  if (!skip.empty() && skip[i]) {
    cur[i] = 0;
    enumerate(weights, skip, i + 1, left, cur, out);
    return;
  }
  for (long long k = 0; k * weights[i] <= left; ++k) {
    cur[i] = static_cast<std::uint16_t>(k);
    enumerate(weights, skip, i + 1, left - k * weights[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(const std::vector<int>& weights, long long d, const std::vector<bool>& skip) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent cur{};
  enumerate(weights, skip, 0, d, cur, out);
  return out;
}

Poly random_form(const VarSetPtr& vars, const PrimeField& field, long long d, CounterRng& rng,
                 const std::vector<bool>& skip) {
  Poly f(vars, field);
  for (const auto& e : monomials_of_degree(vars->weights, d, skip))
    f.add_term(e, 1 + rng.below(field.characteristic() - 1));
  return f;
}

}  // namespace dpc
