#include "dpc/formats.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dpc {

namespace {

Error incompatible(const std::string& m) { return Error("IncompatibleMatrix", m); }

bool integral_everywhere(const LinExpr& e) { return e.slope2() % 2 == 0 && e.offset2() % 2 == 0; }

}  // namespace

std::string to_string(FormatKind k) {
  switch (k) {
    case FormatKind::Hypersurface: return "hypersurface";
    case FormatKind::CompleteIntersection: return "ci";
    case FormatKind::Pfaffian5: return "pfaffian5";
    case FormatKind::P2xP2: return "p2xp2";
  }
  return "?";
}

FormatKind format_kind_from_string(const std::string& s) {
  if (s == "hypersurface") return FormatKind::Hypersurface;
  if (s == "ci") return FormatKind::CompleteIntersection;
  if (s == "pfaffian5") return FormatKind::Pfaffian5;
  if (s == "p2xp2") return FormatKind::P2xP2;
  throw Error("Schema", "unknown format kind '" + s + "'");
}

int pf_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int s = 0; s < 10; ++s)
    if (kPfPositions[s].first == i && kPfPositions[s].second == j) return s;
  throw std::out_of_range("not an off-diagonal Pfaffian position");
}

FormatSpec FormatSpec::hypersurface(LinExpr d) {
  FormatSpec fs;
  fs.kind = FormatKind::Hypersurface;
  fs.degrees = {d};
  return fs;
}

FormatSpec FormatSpec::complete_intersection(std::vector<LinExpr> ds) {
  FormatSpec fs;
  fs.kind = ds.size() == 1 ? FormatKind::Hypersurface : FormatKind::CompleteIntersection;
  fs.degrees = std::move(ds);
  return fs;
}

FormatSpec FormatSpec::pfaffian(std::array<LinExpr, 10> entries) {
  FormatSpec fs;
  fs.kind = FormatKind::Pfaffian5;
  fs.pf = entries;
  return fs;
}

FormatSpec FormatSpec::p2xp2(std::array<LinExpr, 3> u, std::array<LinExpr, 3> v) {
  FormatSpec fs;
  fs.kind = FormatKind::P2xP2;
  fs.u = u;
  fs.v = v;
  return fs;
}

int FormatSpec::codim() const {
  switch (kind) {
    case FormatKind::Hypersurface:
    case FormatKind::CompleteIntersection: return static_cast<int>(degrees.size());
    case FormatKind::Pfaffian5: return 3;
    case FormatKind::P2xP2: return 4;
  }
  return 0;
}

std::vector<LinExpr> FormatSpec::equation_degrees() const {
  switch (kind) {
    case FormatKind::Hypersurface:
    case FormatKind::CompleteIntersection: return degrees;
    case FormatKind::Pfaffian5: {
      auto pd = pfaffian_data(pf);
      return {pd.d.begin(), pd.d.end()};
    }
    case FormatKind::P2xP2: return minor_degrees(u, v);
  }
  return {};
}

std::vector<std::pair<int, int>> FormatSpec::zero_entries() const {
  std::vector<std::pair<int, int>> out;
  if (kind != FormatKind::Pfaffian5) return out;
  for (std::size_t s = 0; s < placement.size() && s < 10; ++s)
    if (placement[s].kind == EntrySpec::Kind::Zero) out.push_back(kPfPositions[s]);
  return out;
}

std::string FormatSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case FormatKind::Hypersurface:
    case FormatKind::CompleteIntersection:
      os << (kind == FormatKind::Hypersurface ? "hypersurface" : "complete intersection") << " of degrees (";
      for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i].str();
      os << ")";
      break;
    case FormatKind::Pfaffian5:
      os << "5x5 Pfaffian with entry degrees [";
      for (int s = 0; s < 10; ++s) os << (s ? " " : "") << pf[s].str();
      os << "]";
      break;
    case FormatKind::P2xP2:
      os << "P2xP2 with u=(" << u[0].str() << "," << u[1].str() << "," << u[2].str() << ") v=(" << v[0].str() << ","
         << v[1].str() << "," << v[2].str() << ")";
      break;
  }
  return os.str();
}

PfaffianData pfaffian_data(const std::array<LinExpr, 10>& entries, const std::vector<long long>& r_values) {
  auto m = [&](int i, int j) { return entries[pf_slot(i, j)]; };
  PfaffianData pd;
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5, k = (i + 2) % 5;
    pd.b[i] = (m(i, j) + m(i, k) - m(j, k)).half();
  }
  for (int s = 0; s < 10; ++s) {
    auto [i, j] = kPfPositions[s];
    if (pd.b[i] + pd.b[j] != entries[s])
      throw incompatible("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") of degree " +
                         entries[s].str() + " is not b_i + b_j = " + (pd.b[i] + pd.b[j]).str());
  }
  LinExpr sigma;
  for (const auto& b : pd.b) sigma = sigma + b;
  for (int i = 0; i < 5; ++i) pd.d[i] = sigma - pd.b[i];
  pd.s = sigma * 2;
  auto check = [&](const LinExpr& e, const std::string& what) {
    bool ok = true;
    if (r_values.empty()) ok = integral_everywhere(e);
    else
      for (long long r : r_values) ok = ok && e.integral_at(r);
    if (!ok) throw Error("NonIntegralDegree", what + " = " + e.str() + " is not an integer on the range");
  };
  for (int i = 0; i < 5; ++i) check(pd.d[i], "Pfaffian degree d" + std::to_string(i + 1));
  check(pd.s, "socle degree");
  return pd;
}

std::vector<LinExpr> minor_degrees(const std::array<LinExpr, 3>& u, const std::array<LinExpr, 3>& v) {
  std::vector<LinExpr> out;
  const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs)
    for (auto [k, l] : pairs) out.push_back(u[i] + u[j] + v[k] + v[l]);
  return out;
}

namespace {

// Coefficients of sum_d h_d(t^u) h_d(t^v) below `bound`.
std::vector<long long> segre_character(const std::array<long long, 3>& u, const std::array<long long, 3>& v, int bound) {
  long long step = *std::min_element(u.begin(), u.end()) + *std::min_element(v.begin(), v.end());
  if (step <= 0) throw Error("NotPolynomial", "P2xP2 weights admit degree-0 pairs; the character sum diverges");
  int maxpairs = static_cast<int>((bound - 1) / step);
  // dp[deg][balance], balance = (#row letters) - (#column letters) in [0, maxpairs].
  std::vector<std::vector<long long>> dp(bound, std::vector<long long>(maxpairs + 1, 0));
  dp[0][0] = 1;
  for (long long w : u)
    for (int d = static_cast<int>(w); d < bound; ++d)
      for (int bal = 1; bal <= maxpairs; ++bal) dp[d][bal] += dp[d - w][bal - 1];
  for (long long w : v)
    for (int d = static_cast<int>(w); d < bound; ++d)
      for (int bal = maxpairs - 1; bal >= 0; --bal) dp[d][bal] += dp[d - w][bal + 1];
  std::vector<long long> out(bound);
  for (int d = 0; d < bound; ++d) out[d] = dp[d][0];
  return out;
}

}  // namespace

HilbertData hilbert_numerator(const FormatSpec& fs, const std::vector<int>& weights, long long r) {
  HilbertData hd;
  hd.codim = fs.codim();
  long long wsum = std::accumulate(weights.begin(), weights.end(), 0LL);
  switch (fs.kind) {
    case FormatKind::Hypersurface:
    case FormatKind::CompleteIntersection: {
      SeriesPoly n = SeriesPoly::polynomial({1});
      for (const auto& d : fs.degrees) {
        long long dv = d.eval_int(r);
        if (dv <= 0) throw Error("NonIntegralDegree", "equation degree " + d.str() + " is not positive at r=" + std::to_string(r));
        n = n * (SeriesPoly::polynomial({1}) - SeriesPoly::monomial(static_cast<int>(dv)));
        hd.socle += dv;
      }
      hd.numerator = n;
      break;
    }
    case FormatKind::Pfaffian5: {
      auto pd = pfaffian_data(fs.pf, {r});
      long long s = pd.s.eval_int(r);
      SeriesPoly n = SeriesPoly::polynomial({1}) - SeriesPoly::monomial(static_cast<int>(s));
      for (const auto& d : pd.d) {
        long long dv = d.eval_int(r);
        n = n - SeriesPoly::monomial(static_cast<int>(dv)) + SeriesPoly::monomial(static_cast<int>(s - dv));
      }
      hd.numerator = n;
      hd.socle = s;
      break;
    }
    case FormatKind::P2xP2: {
      std::array<long long, 3> u, v;
      for (int i = 0; i < 3; ++i) {
        u[i] = fs.u[i].eval_int(r);
        v[i] = fs.v[i].eval_int(r);
      }
      long long s = 2 * (u[0] + u[1] + u[2] + v[0] + v[1] + v[2]);
      int bound = static_cast<int>(2 * s + 2);
      auto h = segre_character(u, v, bound);
      for (long long ui : u)
        for (long long vj : v) {
          long long e = ui + vj;
          if (e <= 0) throw Error("NotPolynomial", "P2xP2 entry of nonpositive degree");
          for (int d = bound - 1; d >= e; --d) h[d] -= h[d - e];
        }
      for (int d = static_cast<int>(s) + 1; d < bound; ++d)
        if (h[d] != 0) throw Error("NotPolynomial", "P2xP2 numerator does not terminate by degree " + std::to_string(s));
      std::vector<Rational> c;
      for (int d = 0; d <= s; ++d) c.emplace_back(make_rational(h[d]));
      hd.numerator = SeriesPoly::polynomial(std::move(c));
      hd.socle = s;
      break;
    }
  }
  hd.k = wsum - hd.socle;
  return hd;
}

void format_entry_check(const FormatSpec& fs, const WeightedSpace& ambient, long long r) {
  if (fs.placement.empty()) return;
  std::size_t expected = fs.kind == FormatKind::Pfaffian5 ? 10 : fs.kind == FormatKind::P2xP2 ? 9 : 0;
  if (fs.placement.size() != expected) throw Error("EntryMismatch", "placement has the wrong number of entries");
  for (std::size_t s = 0; s < expected; ++s) {
    int i, j;
    LinExpr deg;
    if (fs.kind == FormatKind::Pfaffian5) {
      std::tie(i, j) = kPfPositions[s];
      deg = fs.pf[s];
    } else {
      i = static_cast<int>(s) / 3;
      j = static_cast<int>(s) % 3;
      deg = fs.p2_degree(i, j);
    }
    long long want = deg.eval_int(r);
    const EntrySpec& e = fs.placement[s];
    std::string pos = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    long long have = 0;
    if (e.kind == EntrySpec::Kind::Variable) {
      int idx = ambient.index(e.name);
      if (idx < 0) throw Error("EntryMismatch", "entry " + pos + " names unknown variable " + e.name);
      have = ambient.weights[idx];
    } else {
      have = e.degree.eval_int(r);
      if (e.kind == EntrySpec::Kind::Form && have < 0)
        throw Error("EntryMismatch", "entry " + pos + " has negative degree");
    }
    if (have != want)
      throw Error("EntryMismatch", "entry " + pos + " (" + e.name + ") has degree " + std::to_string(have) +
                                       " but the format requires " + std::to_string(want));
  }
}

}  // namespace dpc
