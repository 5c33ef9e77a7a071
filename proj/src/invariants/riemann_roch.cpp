#include "dpc/invariants.hpp"
#include "dpc/multipoly.hpp"


namespace dpc {

Rational rr_character_sum(int rho, int a, long long i) {
  // Expanding 1/(1 - zeta) = -(1/rho) sum_l l zeta^l turns the sum over
  // characters into a count of solutions of i + l + a l' = 0 mod rho.
  if (rho <= 1) return 0;
  long long im = ((i % rho) + rho) % rho;
  Integer total = 0;
  for (long long l = 0; l < rho; ++l)
    for (long long lp = 0; lp < rho; ++lp) {
      long long hit = (im + l + static_cast<long long>(a) * lp) % rho == 0 ? rho : 0;
      total += big(l * lp) * big(hit - 1);
    }
  Rational out(total, Integer(rho) * rho * rho);
  out.canonicalize();
  return out;
}

namespace {

Rational correction(const SingType& s, long long i, const RRConvention& c) {
  if (s.order <= 1 || i % s.order == 0) return 0;
  return c.epsilon * (rr_character_sum(s.order, s.a, c.sigma * i) - rr_character_sum(s.order, s.a, 0));
}

struct CalibrationCase {
  Rational degK2;
  Integer h0;
  std::vector<SingType> basket;
};

std::vector<CalibrationCase> calibration_set() {
  std::vector<CalibrationCase> out;
  // Weighted planes: h0 by direct monomial count, (-K)^2 = (sum w)^2 / prod w.
  for (std::vector<int> w : {std::vector<int>{1, 1, 3}, std::vector<int>{1, 1, 2}}) {
    long long k = w[0] + w[1] + w[2];
    CalibrationCase c;
    c.h0 = static_cast<long>(monomials_of_degree(w, k).size());
    c.degK2 = make_rational(k * k, static_cast<long long>(w[0]) * w[1] * w[2]);
    c.basket = {*normalize_sing(w[2], w[0], w[1])};
    out.push_back(c);
  }
  // Y_{2r,2r} in P(1,1,r,r,2r-1) for r = 2, 3.
  for (long long r : {2LL, 3LL}) {
    std::vector<int> w{1, 1, static_cast<int>(r), static_cast<int>(r), static_cast<int>(2 * r - 1)};
    auto fs = FormatSpec::complete_intersection({LinExpr::constant(2 * r), LinExpr::constant(2 * r)});
    auto hd = hilbert_numerator(fs, w, r);
    CalibrationCase c;
    // h0 of degree-1 forms: count monomials of degree 1 minus nothing (equations start in degree 2r).
    c.h0 = static_cast<long>(monomials_of_degree(w, hd.k).size());
    c.degK2 = anticanonical_square(hd, w);
    c.basket = {*normalize_sing(static_cast<int>(2 * r - 1), 1, 1)};
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<RRConvention> calibration_candidates() {
  std::vector<RRConvention> ok;
  auto cases = calibration_set();
  for (int sigma : {1, -1})
    for (int eps : {1, -1}) {
      RRConvention c{sigma, eps};
      bool pass = true;
      for (const auto& cc : cases) {
        Rational total = 1 + cc.degK2;
        for (const auto& s : cc.basket) total += s.multiplicity * correction(s, local_type_of_minusK(s), c);
        if (total != Rational(cc.h0)) pass = false;
      }
      if (pass) ok.push_back(c);
    }
  return ok;
}

const RRConvention& calibrated_convention() {
  static const RRConvention conv = [] {
    auto c = calibration_candidates();
    if (c.size() != 1)
      throw Error("ConventionUncalibrated", std::to_string(c.size()) + " sign conventions pass the calibration set");
    return c.front();
  }();
  return conv;
}

Rational rr_contribution(const SingType& sing, long long i, const RRConvention* conv) {
  if (!conv) throw Error("ConventionUncalibrated", "Riemann-Roch correction requested without a calibrated convention");
  return correction(sing, i, *conv);
}

Rational rr_contribution(const SingType& sing, long long i) { return correction(sing, i, calibrated_convention()); }

Integer rr_h0(const Rational& degK2, const std::vector<SingType>& basket, const std::vector<long long>& localtypes) {
  if (basket.size() != localtypes.size()) throw std::invalid_argument("one local type per basket entry is required");
  Rational total = 1 + degK2;
  for (std::size_t i = 0; i < basket.size(); ++i) total += basket[i].multiplicity * rr_contribution(basket[i], localtypes[i]);
  total.canonicalize();
  if (!is_integer(total)) throw Error("NonIntegerRR", "1 + (-K)^2 + sum c_P = " + total.get_str());
  return total.get_num();
}

long long local_type_of_minusK(int rho, long long a, long long b, long long k) {
  if (rho <= 1) return 0;
  long long km = ((k % rho) + rho) % rho;
  if (((a + b - k) % rho + rho) % rho != 0)
    throw Error("LocalTypeMismatch", "eigenweights do not sum to the adjunction number mod " + std::to_string(rho));
  return km * mod_inverse(a, rho) % rho;
}

long long local_type_of_minusK(const SingType& sing) {
  if (sing.order <= 1) return 0;
  return (1 + sing.a) % sing.order;
}

}  // namespace dpc
