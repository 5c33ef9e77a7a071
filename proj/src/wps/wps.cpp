#include "dpc/wps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace dpc {

WeightedSpace::WeightedSpace(std::vector<int> w, std::vector<std::string> n) : weights(std::move(w)), names(std::move(n)) {
  for (int x : weights)
    if (x < 1) throw std::invalid_argument("weights must be positive");
  if (names.empty())
    for (std::size_t i = 0; i < weights.size(); ++i) names.push_back("x" + std::to_string(i));
  if (names.size() != weights.size()) throw std::invalid_argument("names and weights differ in length");
}

int WeightedSpace::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

std::string WeightedSpace::str() const {
  std::ostringstream os;
  os << "P(";
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << weights[i];
  os << ")";
  return os.str();
}

std::string SingType::str() const {
  std::ostringstream os;
  if (multiplicity > 1) os << multiplicity << " x ";
  os << "1/" << order << "(1," << a << ")";
  return os.str();
}

std::string Stratum::str(const WeightedSpace& ws) const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < support.size(); ++i) os << (i ? "," : "") << ws.names[support[i]];
  os << "}";
  return os.str();
}

long long mod_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    long long q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::domain_error("no inverse");
  return ((x % m) + m) % m;
}

std::optional<std::vector<int>> wellformed_space(const WeightedSpace& ws) {
  int n = ws.size();
  if (n < 2) return std::nullopt;
  // Every (n-1)-subset has gcd 1; each one omits a single index.
  for (int skip = 0; skip < n; ++skip) {
    int g = 0;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (i != skip) {
        g = std::gcd(g, ws.weights[i]);
        idx.push_back(i);
      }
    if (g > 1) return idx;
  }
  return std::nullopt;
}

std::optional<SingType> normalize_sing(int rho, long long a, long long b) {
  if (rho < 1) throw std::invalid_argument("singularity order must be positive");
  if (rho == 1) return std::nullopt;
  long long am = ((a % rho) + rho) % rho;
  long long bm = ((b % rho) + rho) % rho;
  if (std::gcd(am, static_cast<long long>(rho)) != 1 || std::gcd(bm, static_cast<long long>(rho)) != 1)
    throw NotIsolated("1/" + std::to_string(rho) + "(" + std::to_string(a) + "," + std::to_string(b) +
                      ") is not an isolated cyclic quotient singularity");
  long long ap = bm * mod_inverse(am, rho) % rho;
  long long alt = mod_inverse(ap, rho);
  return SingType{rho, static_cast<int>(std::min(ap, alt)), 1};
}

std::vector<Stratum> strata_of(const WeightedSpace& ws) {
  int n = ws.size();
  std::vector<Stratum> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Stratum s;
    int g = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        s.support.push_back(i);
        g = std::gcd(g, ws.weights[i]);
      }
    if (g <= 1) continue;
    s.order = g;
    s.dimension = static_cast<int>(s.support.size()) - 1;
    for (int i = 0; i < n; ++i)
      if (!(mask & (1u << i))) s.transverse.push_back(ws.weights[i] % g);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
    if (x.support.size() != y.support.size()) return x.support.size() < y.support.size();
    return x.support < y.support;
  });
  return out;
}

std::vector<SingType> canonical_basket(std::vector<SingType> basket) {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& s : basket)
    if (s.order > 1) counts[{s.order, s.a}] += s.multiplicity;
  std::vector<SingType> out;
  for (const auto& [k, c] : counts) out.push_back(SingType{k.first, k.second, c});
  return out;
}

std::string basket_str(const std::vector<SingType>& basket) {
  if (basket.empty()) return "smooth";
  std::ostringstream os;
  for (std::size_t i = 0; i < basket.size(); ++i) os << (i ? ", " : "") << basket[i].str();
  return os.str();
}

}  // namespace dpc
