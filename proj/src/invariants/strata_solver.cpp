#include "dpc/strata.hpp"

#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace dpc {

UPoly binary_to_univariate(const Poly& f, int i, int j) {
  const auto& w = f.vars()->weights;
  int g = std::gcd(w[i], w[j]);
  int bp = w[j] / g;
  int amin = -1;
  for (const auto& [e, c] : f.terms()) amin = amin < 0 ? e[i] : std::min<int>(amin, e[i]);
  std::vector<PrimeField::Elem> coeffs;
  for (const auto& [e, c] : f.terms()) {
    for (int v = 0; v < f.nvars(); ++v)
      if (v != i && v != j && e[v] != 0) throw std::invalid_argument("binary form involves a third variable");
    int diff = e[i] - amin;
    if (diff % bp != 0) throw std::invalid_argument("binary form is not weighted homogeneous");
    std::size_t k = diff / bp;
    if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
    coeffs[k] = f.field().add(coeffs[k], c);
  }
  return UPoly(f.field(), std::move(coeffs));
}

std::vector<bool> outside_mask(int nvars, const std::vector<int>& support) {
  std::vector<bool> zero(nvars, true);
  for (int i : support) zero[i] = false;
  return zero;
}

std::vector<Poly> restrict_to(const std::vector<Poly>& eqs, const std::vector<int>& support) {
  std::vector<Poly> out;
  if (eqs.empty()) return out;
  auto mask = outside_mask(eqs[0].nvars(), support);
  for (const auto& f : eqs) out.push_back(f.restrict_zero(mask));
  return out;
}

PolyMatrix restrict_to(const PolyMatrix& m, const std::vector<int>& support) {
  PolyMatrix out;
  for (const auto& row : m) out.push_back(restrict_to(row, support));
  return out;
}

StratumPoints stratum_points(const std::vector<Poly>& eqs, const std::vector<int>& support) {
  StratumPoints sp;
  auto rest = restrict_to(eqs, support);
  bool all_zero = true;
  for (const auto& f : rest) all_zero = all_zero && f.is_zero();
  if (support.size() == 1) {
    sp.status = all_zero ? StratumPoints::Status::Finite : StratumPoints::Status::Empty;
    sp.count = all_zero ? 1 : 0;
    return sp;
  }
  if (all_zero) {
    sp.status = StratumPoints::Status::Contained;
    return sp;
  }
  if (support.size() == 2) {
    PrimeField field = rest[0].field();
    UPoly g(field);
    for (const auto& f : rest)
      if (!f.is_zero()) g = gcd(g, binary_to_univariate(f, support[0], support[1]));
    sp.locus = squarefree_part(g);
    sp.count = sp.locus.degree();
    sp.status = sp.count > 0 ? StratumPoints::Status::Finite : StratumPoints::Status::Empty;
    return sp;
  }
  // A single monomial has no zeros on the open torus.
  for (const auto& f : rest)
    if (f.size() == 1) {
      sp.status = StratumPoints::Status::Empty;
      return sp;
    }
  sp.status = StratumPoints::Status::Unsupported;
  return sp;
}

namespace {

std::vector<PrimeField::Elem> unit_point(int nvars, int i) {
  std::vector<PrimeField::Elem> p(nvars, 0);
  p[i] = 1;
  return p;
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix out;
  for (int r : rows) {
    std::vector<Poly> row;
    for (int c : cols) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

// gcd(start, all k x k minors of m) on a two-variable support, stopping at degree 0.
UPoly fold_minors(const PolyMatrix& m, int k, const std::vector<int>& support, UPoly acc) {
  int nr = static_cast<int>(m.size());
  int nc = nr ? static_cast<int>(m[0].size()) : 0;
  for_each_minor(nr, nc, k, [&](const std::vector<int>& rows, const std::vector<int>& cols) {
    Poly d = determinant(submatrix(m, rows, cols));
    if (d.is_zero()) return true;
    acc = gcd(acc, binary_to_univariate(d, support[0], support[1]));
    return acc.degree() > 0;
  });
  return acc;
}

}  // namespace

int singular_points(const std::vector<Poly>& eqs, const std::vector<int>& support, int codim, const StratumPoints& pts) {
  if (eqs.empty()) return 0;
  int nvars = eqs[0].nvars();
  PolyMatrix jac = jacobian(eqs);
  if (support.size() == 1) {
    if (pts.status != StratumPoints::Status::Finite) return 0;
    auto m = evaluate(jac, unit_point(nvars, support[0]));
    return rank_mod_p(m, eqs[0].field()) < codim ? 1 : 0;
  }
  if (support.size() != 2) throw std::invalid_argument("exact singular point count needs a point or line stratum");
  PolyMatrix j = restrict_to(jac, support);
  PrimeField field = eqs[0].field();
  if (pts.status == StratumPoints::Status::Contained) {
    // Every point of the line lies on X; the singular ones are the common zeros of the minors.
    UPoly acc(field);
    bool any = false;
    int nr = static_cast<int>(j.size());
    for_each_minor(nr, nvars, codim, [&](const std::vector<int>& rows, const std::vector<int>& cols) {
      Poly d = determinant(submatrix(j, rows, cols));
      if (d.is_zero()) return true;
      any = true;
      acc = gcd(acc, binary_to_univariate(d, support[0], support[1]));
      return acc.degree() > 0;
    });
    if (!any) return -1;
    return squarefree_part(acc).degree();
  }
  if (pts.status != StratumPoints::Status::Finite) return 0;
  return fold_minors(j, codim, support, pts.locus).degree();
}

std::vector<std::pair<int, std::pair<int, int>>> transverse_characters(const std::vector<Poly>& eqs,
                                                                      const std::vector<long long>& degrees,
                                                                      const std::vector<int>& support, int rho,
                                                                      const StratumPoints& pts) {
  int nvars = eqs[0].nvars();
  const auto& w = eqs[0].vars()->weights;
  PrimeField field = eqs[0].field();
  PolyMatrix jac = jacobian(eqs);
  auto mod = [rho](long long x) { return static_cast<int>(((x % rho) + rho) % rho); };

  // Equivariant blocks: rows of degree = chi, columns of weight = chi (mod rho).
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> blocks;
  for (std::size_t e = 0; e < eqs.size(); ++e) blocks[mod(degrees[e])].first.push_back(static_cast<int>(e));
  for (int v = 0; v < nvars; ++v) blocks[mod(w[v])].second.push_back(v);

  struct Part {
    UPoly poly;
    int points;
    std::map<int, int> rank;
  };
  std::vector<Part> parts;

  if (support.size() == 1) {
    auto m = evaluate(jac, unit_point(nvars, support[0]));
    Part p{UPoly(field), 1, {}};
    for (const auto& [chi, rc] : blocks) {
      if (rc.first.empty() || rc.second.empty()) continue;
      FpMatrix sub;
      for (int r : rc.first) {
        std::vector<PrimeField::Elem> row;
        for (int c : rc.second) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      p.rank[chi] = rank_mod_p(sub, field);
    }
    parts.push_back(p);
  } else {
    PolyMatrix j = restrict_to(jac, support);
    parts.push_back(Part{pts.locus, pts.count, {}});
    for (const auto& [chi, rc] : blocks) {
      if (rc.first.empty() || rc.second.empty()) continue;
      PolyMatrix block = submatrix(j, rc.first, rc.second);
      int top = static_cast<int>(std::min(rc.first.size(), rc.second.size()));
      for (int k = 1; k <= top; ++k) {
        UPoly low = fold_minors(block, k, support, pts.locus);  // points where rank < k
        std::vector<Part> next;
        for (auto& p : parts) {
          UPoly in = gcd(p.poly, low);
          UPoly out = p.poly.divmod(in).first;
          if (in.degree() > 0) next.push_back(Part{in, in.degree(), p.rank});
          if (out.degree() > 0) {
            Part q{out.monic(), out.degree(), p.rank};
            ++q.rank[chi];
            next.push_back(q);
          }
        }
        parts = std::move(next);
      }
    }
  }

  std::vector<std::pair<int, std::pair<int, int>>> out;
  for (const auto& p : parts) {
    std::map<int, int> count;
    for (int v = 0; v < nvars; ++v) ++count[mod(w[v])];
    for (const auto& [chi, rk] : p.rank) count[chi] -= rk;
    --count[0];  // orbit direction of the C^* action
    std::vector<int> chars;
    for (const auto& [chi, c] : count) {
      if (c < 0) throw Error("ResidualSingularity", "inconsistent equivariant ranks on a stratum");
      for (int t = 0; t < c; ++t) chars.push_back(chi);
    }
    if (chars.size() != 2)
      throw Error("ResidualSingularity", "tangent space of dimension " + std::to_string(chars.size()) +
                                             " at a point of stratum with stabilizer " + std::to_string(rho));
    out.push_back({p.points, {chars[0], chars[1]}});
  }
  return out;
}

namespace {

// Support variables become affine variables 0..|S|-1; the rest are set to zero.
struct Cone {
  std::vector<int> map;
  std::vector<int> weights;
  std::vector<int> vars;
  int nv = 0;
};

Cone cone_of(const std::vector<Poly>& eqs, const std::vector<int>& support) {
  Cone c;
  const auto& vs = *eqs[0].vars();
  c.map.assign(eqs[0].nvars(), -2);
  for (int v : support) {
    c.map[v] = c.nv++;
    c.weights.push_back(vs.weights[v]);
  }
  for (int i = 0; i < c.nv; ++i) c.vars.push_back(i);
  return c;
}

std::vector<APoly> cone_equations(const std::vector<Poly>& eqs, const Cone& c) {
  std::vector<APoly> out;
  for (const auto& f : eqs) {
    auto a = to_affine(f, c.map, c.nv, c.weights);
    if (!a.empty()) out.push_back(std::move(a));
  }
  return out;
}

TorusAnalysis::Status status_of(const GroebnerResult& gb) {
  switch (gb.status) {
    case GroebnerResult::Status::Unit: return TorusAnalysis::Status::Empty;
    case GroebnerResult::Status::Proper: return TorusAnalysis::Status::Proper;
    case GroebnerResult::Status::OverBudget: break;
  }
  return TorusAnalysis::Status::OverBudget;
}

}  // namespace

TorusAnalysis torus_intersection(const std::vector<Poly>& eqs, const std::vector<int>& support, std::size_t budget) {
  TorusAnalysis ta;
  if (eqs.empty() || support.empty()) return ta;
  Cone c = cone_of(eqs, support);
  auto gb = saturate(cone_equations(restrict_to(eqs, support), c), c.nv, eqs[0].field(), budget, c.weights, c.vars);
  ta.work = gb.work;
  ta.status = status_of(gb);
  if (ta.status == TorusAnalysis::Status::Proper) ta.dimension = ideal_dimension(gb.basis, c.nv + 1) - 1;
  return ta;
}

TorusAnalysis torus_singularities(const std::vector<Poly>& eqs, const std::vector<int>& support, int codim,
                                  CounterRng& rng, std::size_t budget) {
  TorusAnalysis ta;
  if (eqs.empty() || support.empty()) return ta;
  const PrimeField& f = eqs[0].field();
  Cone c = cone_of(eqs, support);
  auto base = saturate(cone_equations(restrict_to(eqs, support), c), c.nv, f, budget, c.weights, c.vars);
  ta.work = base.work;
  ta.status = status_of(base);
  if (ta.status != TorusAnalysis::Status::Proper) return ta;
  ta.dimension = ideal_dimension(base.basis, c.nv + 1) - 1;

  // The Euler relation makes one support column redundant on X away from the axes.
  std::vector<int> cols;
  for (int v = 0; v < eqs[0].nvars(); ++v)
    if (v != support[0]) cols.push_back(v);
  PolyMatrix jac = restrict_to(jacobian(eqs), support);
  std::vector<std::vector<APoly>> J;
  for (const auto& row : jac) {
    std::vector<APoly> r;
    for (int v : cols) r.push_back(to_affine(row[v], c.map, c.nv, c.weights));
    J.push_back(std::move(r));
  }
  int E = static_cast<int>(J.size()), N = static_cast<int>(cols.size());

  // Minors by expansion along the first row, sharing smaller minors between them.
  std::map<std::pair<unsigned, unsigned>, APoly> memo;
  std::function<const APoly&(unsigned, unsigned)> minor = [&](unsigned rows, unsigned cs) -> const APoly& {
    auto key = std::make_pair(rows, cs);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    APoly acc;
    int r0 = std::countr_zero(rows);
    if (std::popcount(rows) == 1) {
      acc = J[r0][std::countr_zero(cs)];
    } else {
      int sign = 0;
      for (int col = 0; col < N; ++col) {
        if (!(cs & (1u << col))) continue;
        if (!J[r0][col].empty()) {
          const APoly& sub = minor(rows & ~(1u << r0), cs & ~(1u << col));
          if (!sub.empty()) {
            APoly t = apoly_mul(J[r0][col], sub, c.nv, f);
            acc = apoly_add(acc, sign % 2 ? apoly_scale(t, f.neg(1), f) : t, f);
          }
        }
        ++sign;
      }
    }
    return memo.emplace(key, std::move(acc)).first->second;
  };
  std::vector<APoly> minors;
  for_each_minor(E, N, codim, [&](const std::vector<int>& rows, const std::vector<int>& cs) {
    unsigned rm = 0, cm = 0;
    for (int r : rows) rm |= 1u << r;
    for (int col : cs) cm |= 1u << col;
    const APoly& d = minor(rm, cm);
    if (!d.empty()) minors.push_back(d);
    return true;
  });

  // Start from the saturated basis of X, in the same variables plus the adjoined product.
  std::vector<APoly> gens = std::move(base.basis);
  std::vector<int> w = c.weights;
  w.push_back(0);
  for (int v = 0; v < c.nv; ++v) w.back() += c.weights[v];
  if (minors.size() <= 8) {
    for (auto& m : minors) gens.push_back(std::move(m));
  } else {
    // Within each degree the minors span a linear system whose base locus on X is the
    // rank-deficient locus; dimension + 2 random members cut it out on the cone.
    ta.random_minors = true;
    std::map<std::uint32_t, std::vector<const APoly*>> classes;
    for (const auto& m : minors) classes[m[0].m.deg].push_back(&m);
    for (const auto& [deg, members] : classes) {
      int count = std::min<int>(ta.dimension + 2, static_cast<int>(members.size()));
      for (int k = 0; k < count; ++k) {
        APoly combo;
        if (static_cast<int>(members.size()) == count) {
          combo = *members[k];
        } else {
          for (const auto* m : members) combo = apoly_add(combo, apoly_scale(*m, rng.below(f.characteristic()), f), f);
        }
        if (!combo.empty()) gens.push_back(std::move(combo));
      }
    }
  }
  auto gb = saturate_last(std::move(gens), c.nv + 1, f, budget > ta.work ? budget - ta.work : 0, w);
  ta.work += gb.work;
  if (gb.status == GroebnerResult::Status::OverBudget) ta.status = TorusAnalysis::Status::OverBudget;
  else if (gb.status == GroebnerResult::Status::Proper) ta.singular_dimension = ideal_dimension(gb.basis, c.nv + 1) - 1;
  return ta;
}

}  // namespace dpc
