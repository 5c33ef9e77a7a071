#include "dpc/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace dpc {

int grevlex_cmp(const AMono& a, const AMono& b, int nv) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = nv - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

namespace {

using Weights = std::array<std::uint32_t, kMaxAffineVars>;

Weights weights_of(std::span<const int> w) {
  Weights out;
  out.fill(1);
  for (std::size_t i = 0; i < w.size() && i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(w[i]);
  return out;
}

bool divides(const AMono& a, const AMono& b, int nv) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < nv; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

AMono mono_mul(const AMono& a, const AMono& b, int nv) {
  AMono r;
  for (int i = 0; i < nv; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

AMono mono_div(const AMono& a, const AMono& b, int nv) {
  AMono r;
  for (int i = 0; i < nv; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

AMono mono_lcm(const AMono& a, const AMono& b, int nv, const Weights& w) {
  AMono r;
  for (int i = 0; i < nv; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i] * w[i];
  }
  return r;
}

bool coprime(const AMono& a, const AMono& b, int nv) {
  for (int i = 0; i < nv; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

// f - c * m * g, merged in order.
APoly sub_mul(const APoly& f, std::size_t from, PrimeField::Elem c, const AMono& m, const APoly& g, std::size_t gfrom,
              int nv, const PrimeField& fld) {
  APoly out;
  out.reserve(f.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    AMono gm = mono_mul(g[j].m, m, nv);
    int cmp = i == f.size() ? -1 : grevlex_cmp(f[i].m, gm, nv);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, fld.neg(fld.mul(c, g[j].c))});
      ++j;
    } else {
      auto v = fld.sub(f[i].c, fld.mul(c, g[j].c));
      if (!fld.is_zero(v)) out.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(APoly& p, const PrimeField& f) {
  if (p.empty() || p[0].c == 1) return;
  auto inv = f.inv(p[0].c);
  for (auto& t : p) t.c = f.mul(t.c, inv);
}

struct Reducer {
  int nv;
  const PrimeField& f;
  const std::vector<APoly>& G;
  const std::vector<bool>& live;
  std::size_t& work;

  const APoly* divisor_of(const AMono& m) const {
    for (std::size_t k = 0; k < G.size(); ++k)
      if (live[k] && divides(G[k][0].m, m, nv)) return &G[k];
    return nullptr;
  }

  APoly reduce(APoly p, std::size_t budget) const {
    struct Greater {
      int nv;
      bool operator()(const AMono& a, const AMono& b) const { return grevlex_cmp(a, b, nv) > 0; }
    };
    std::map<AMono, PrimeField::Elem, Greater> acc(Greater{nv});
    for (const auto& t : p) acc.emplace(t.m, t.c);
    APoly r;
    while (!acc.empty()) {
      if (work > budget) return r;
      auto lead = acc.begin();
      const auto* g = divisor_of(lead->first);
      if (!g) {
        r.push_back({lead->first, lead->second});
        acc.erase(lead);
        continue;
      }
      AMono q = mono_div(lead->first, (*g)[0].m, nv);
      auto c = lead->second;
      acc.erase(lead);
      for (std::size_t k = 1; k < g->size(); ++k) {
        AMono m = mono_mul((*g)[k].m, q, nv);
        auto v = f.neg(f.mul(c, (*g)[k].c));
        auto [it, fresh] = acc.try_emplace(m, v);
        if (!fresh) {
          it->second = f.add(it->second, v);
          if (f.is_zero(it->second)) acc.erase(it);
        }
      }
      work += g->size();
    }
    return r;
  }
};

}  // namespace

APoly apoly_add(const APoly& a, const APoly& b, const PrimeField& f) {
  AMono one;
  return sub_mul(a, 0, f.neg(1), one, b, 0, kMaxAffineVars, f);
}

APoly apoly_scale(const APoly& a, PrimeField::Elem k, const PrimeField& f) {
  if (f.is_zero(k)) return {};
  APoly r = a;
  for (auto& t : r) t.c = f.mul(t.c, k);
  return r;
}

APoly apoly_constant(PrimeField::Elem c) {
  if (c == 0) return {};
  return {ATerm{AMono{}, c}};
}

APoly apoly_mul(const APoly& a, const APoly& b, int nv, const PrimeField& f) {
  APoly acc;
  if (a.empty() || b.empty()) return acc;
  const APoly& small = a.size() < b.size() ? a : b;
  const APoly& big = a.size() < b.size() ? b : a;
  for (const auto& t : small) acc = sub_mul(acc, 0, f.neg(t.c), t.m, big, 0, nv, f);
  return acc;
}

APoly apoly_det(const std::vector<std::vector<APoly>>& m, int nv, const PrimeField& f) {
  std::size_t n = m.size();
  if (n == 0) return apoly_constant(1);
  if (n == 1) return m[0][0];
  APoly acc;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].empty()) continue;
    std::vector<std::vector<APoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<APoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    APoly term = apoly_mul(m[0][col], apoly_det(minor, nv, f), nv, f);
    if (col % 2) term = apoly_scale(term, f.neg(1), f);
    acc = apoly_add(acc, term, f);
  }
  return acc;
}

APoly to_affine(const Poly& p, const std::vector<int>& map, int nv, std::span<const int> weights) {
  if (nv > kMaxAffineVars) throw std::invalid_argument("too many affine variables");
  Weights w = weights_of(weights);
  const auto& f = p.field();
  APoly raw;
  for (const auto& [e, c] : p.terms()) {
    AMono m;
    bool zero = false;
    for (int v = 0; v < p.nvars(); ++v) {
      if (e[v] == 0 || map[v] == -1) continue;
      if (map[v] == -2) {
        zero = true;
        break;
      }
      m.e[map[v]] = static_cast<std::uint16_t>(m.e[map[v]] + e[v]);
      m.deg += e[v] * w[map[v]];
    }
    if (!zero) raw.push_back({m, c});
  }
  std::sort(raw.begin(), raw.end(), [&](const ATerm& a, const ATerm& b) { return grevlex_cmp(a.m, b.m, nv) > 0; });
  APoly out;
  for (const auto& t : raw) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = f.add(out.back().c, t.c);
      if (f.is_zero(out.back().c)) out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  return out;
}

GroebnerResult groebner(std::vector<APoly> gens, int nv, const PrimeField& f, std::size_t budget,
                        std::span<const int> weights) {
  GroebnerResult res;
  Weights w = weights_of(weights);
  std::vector<APoly> G;
  std::vector<bool> live;
  struct Pair {
    AMono lcm;
    std::size_t i, j;
  };
  auto before = [nv](const Pair& a, const Pair& b) {
    int c = grevlex_cmp(a.lcm, b.lcm, nv);
    if (c) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(before)> pairs(before);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  Reducer red{nv, f, G, live, res.work};

  auto add = [&](APoly h) {
    make_monic(h, f);
    std::size_t idx = G.size();
    for (std::size_t k = 0; k < idx; ++k) {
      if (!live[k]) continue;
      pairs.insert({mono_lcm(G[k][0].m, h[0].m, nv, w), k, idx});
      pending.insert({k, idx});
    }
    G.push_back(std::move(h));
    live.push_back(true);
  };
  auto unit = [&](const APoly& h) { return !h.empty() && h[0].m.deg == 0; };

  std::sort(gens.begin(), gens.end(), [](const APoly& a, const APoly& b) { return a.size() < b.size(); });
  for (auto& g : gens) {
    APoly h = red.reduce(std::move(g), budget);
    if (res.work > budget) {
      res.status = GroebnerResult::Status::OverBudget;
      return res;
    }
    if (h.empty()) continue;
    if (unit(h)) {
      res.status = GroebnerResult::Status::Unit;
      return res;
    }
    add(std::move(h));
  }

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    pending.erase({p.i, p.j});
    const APoly& gi = G[p.i];
    const APoly& gj = G[p.j];
    if (coprime(gi[0].m, gj[0].m, nv)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j || !live[k]) continue;
      if (!divides(G[k][0].m, p.lcm, nv)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(p.i, k)) && !pending.count(key(p.j, k));
    }
    if (chain) continue;
    APoly s = sub_mul({}, 0, f.neg(1), mono_div(p.lcm, gi[0].m, nv), gi, 1, nv, f);
    s = sub_mul(s, 0, 1, mono_div(p.lcm, gj[0].m, nv), gj, 1, nv, f);
    res.work += s.size();
    APoly h = red.reduce(std::move(s), budget);
    if (res.work > budget) {
      res.status = GroebnerResult::Status::OverBudget;
      return res;
    }
    if (h.empty()) continue;
    if (unit(h)) {
      res.status = GroebnerResult::Status::Unit;
      return res;
    }
    add(std::move(h));
  }
  // Keep a minimal basis.
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < G.size() && !redundant; ++l)
      if (l != k && live[l] && divides(G[l][0].m, G[k][0].m, nv) && (G[l][0].m != G[k][0].m || l < k)) redundant = true;
    if (redundant) live[k] = false;
  }
  for (std::size_t k = 0; k < G.size(); ++k)
    if (live[k]) res.basis.push_back(std::move(G[k]));
  res.status = GroebnerResult::Status::Proper;
  return res;
}

GroebnerResult saturate(std::vector<APoly> gens, int nv, const PrimeField& f, std::size_t budget,
                        std::span<const int> weights, std::span<const int> vars) {
  // Adjoin u = prod(vars) as a last variable. The quotient ring is unchanged, and with u
  // last in reverse lexicographic order a homogeneous basis divided through by the
  // largest power of u it contains generates the saturation by u.
  if (nv + 1 > kMaxAffineVars) throw std::invalid_argument("too many affine variables");
  std::vector<int> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(nv, 1);
  int u = nv;
  AMono prod;
  for (int v : vars) {
    ++prod.e[v];
    prod.deg += w[v];
  }
  w.push_back(static_cast<int>(prod.deg));
  AMono um;
  um.e[u] = 1;
  um.deg = prod.deg;
  APoly link = grevlex_cmp(prod, um, nv + 1) > 0 ? APoly{{prod, 1}, {um, f.neg(1)}} : APoly{{um, f.neg(1)}, {prod, 1}};
  gens.push_back(std::move(link));
  return saturate_last(std::move(gens), nv + 1, f, budget, w);
}

GroebnerResult saturate_last(std::vector<APoly> gens, int nv, const PrimeField& f, std::size_t budget,
                             std::span<const int> weights) {
  auto res = groebner(std::move(gens), nv, f, budget, weights);
  if (res.status != GroebnerResult::Status::Proper) return res;
  int u = nv - 1;
  std::uint32_t wu = weights.empty() ? 1 : static_cast<std::uint32_t>(weights[u]);
  for (auto& g : res.basis) {
    std::uint16_t k = g[0].m.e[u];
    for (auto& t : g) {
      t.m.e[u] = static_cast<std::uint16_t>(t.m.e[u] - k);
      t.m.deg -= k * wu;
    }
    if (g[0].m.deg == 0) {
      res.status = GroebnerResult::Status::Unit;
      res.basis.clear();
      return res;
    }
  }
  return res;
}

int ideal_dimension(const std::vector<APoly>& basis, int nv) {
  if (basis.empty()) return nv;
  for (const auto& g : basis)
    if (g[0].m.deg == 0) return -1;
  // Largest set of variables containing no leading monomial.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : basis) {
      bool inside = true;
      for (int i = 0; i < nv && inside; ++i)
        if (g[0].m.e[i] && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace dpc
