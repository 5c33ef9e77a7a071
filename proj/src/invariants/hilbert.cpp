#include "dpc/invariants.hpp"

#include <numeric>

namespace dpc {

std::vector<Integer> hilbert_coeffs(const HilbertData& hd, const std::vector<int>& weights, int bound) {
  if (bound < 0) return {};
  int b = bound + 1;
  SeriesPoly s = hd.numerator.truncate(b);
  for (int w : weights) s = series_mul(s, SeriesPoly::geometric(w, b), b);
  std::vector<Integer> out;
  for (int d = 0; d < b; ++d) {
    Rational c = s.coeff(d);
    if (!is_integer(c) || sgn(c) < 0)
      throw Error("NegativeCoefficient", "Hilbert series coefficient of t^" + std::to_string(d) + " is " + c.get_str());
    out.push_back(c.get_num());
  }
  return out;
}

Integer h0_minusK(const HilbertData& hd, const std::vector<int>& weights) {
  if (hd.k < 0) return 0;
  return hilbert_coeffs(hd, weights, static_cast<int>(hd.k)).back();
}

Rational anticanonical_square(const HilbertData& hd, const std::vector<int>& weights) {
  SeriesPoly q = divide_by_one_minus_t(hd.numerator, hd.codim);
  Integer prod = 1;
  for (int w : weights) prod *= w;
  Rational k = make_rational(hd.k);
  Rational out = k * k * q.eval(1) / Rational(prod);
  out.canonicalize();
  return out;
}

}  // namespace dpc
