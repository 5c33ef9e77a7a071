#include "dpc/cascade.hpp"

#include <numeric>

namespace dpc {

namespace {

Error center_not_linear(const std::string& m) { return Error("CenterNotLinear", m); }

std::string entry_label(const EntrySpec& e) { return e.kind == EntrySpec::Kind::Zero ? "0" : e.name; }

std::string pos_label(int i, int j) { return "m" + std::to_string(i + 1) + std::to_string(j + 1); }

// Index order putting `first` (and `second`) in front, the rest ascending.
std::vector<int> front_order(int n, int first, int second = -1) {
  std::vector<int> out{first};
  if (second >= 0) out.push_back(second);
  for (int k = 0; k < n; ++k)
    if (k != first && k != second) out.push_back(k);
  return out;
}

// Smallest k such that every entry of the skew matrix off row and column k is zero or a divisor generator.
std::optional<std::string> tom_tag(const std::array<bool, 10>& in_divisor) {
  for (int k = 0; k < 5; ++k) {
    bool ok = true;
    for (int s = 0; s < 10; ++s) {
      auto [i, j] = kPfPositions[s];
      if (i != k && j != k && !in_divisor[s]) ok = false;
    }
    if (ok) return "Tom_" + std::to_string(k + 1);
  }
  return std::nullopt;
}

void drop_center(ProjectionStep& st, const ModelSpec& ms, const std::string& center) {
  for (std::size_t i = 0; i < ms.names.size(); ++i) {
    if (ms.names[i] == center) continue;
    st.target_names.push_back(ms.names[i]);
    st.target_weights.push_back(ms.weights[i]);
  }
}

// Cofactors of Pfaffian-type sums of products with respect to generators sitting at matrix positions.
struct ProductExpansion {
  const PolyMatrix& m;
  const std::vector<std::pair<int, int>>& gens;

  int generator_at(int i, int j) const {
    for (std::size_t g = 0; g < gens.size(); ++g)
      if ((gens[g].first == i && gens[g].second == j) || (gens[g].first == j && gens[g].second == i))
        return static_cast<int>(g);
    return -1;
  }
  // Adds sign * m[a] * m[b] to the cofactor row; false if neither factor is zero or a generator.
  bool add(std::vector<Poly>& cof, int sign, std::pair<int, int> a, std::pair<int, int> b) const {
    const Poly& pa = m[a.first][a.second];
    const Poly& pb = m[b.first][b.second];
    if (pa.is_zero() || pb.is_zero()) return true;
    // The generator is stored with its upper-triangle orientation.
    auto oriented = [&](std::pair<int, int> p, const Poly& other) {
      int g = generator_at(p.first, p.second);
      if (g < 0) return false;
      const auto& gp = gens[g];
      int s = (gp.first == p.first && gp.second == p.second) ? sign : -sign;
      cof[g] = cof[g] + (s > 0 ? other : -other);
      return true;
    };
    return oriented(a, pb) || oriented(b, pa);
  }
};

Poly rebase_checked(const Poly& p, const VarSetPtr& vs, const std::string& center) {
  if (p.involves(p.vars()->index(center)))
    throw center_not_linear("the center " + center + " appears outside its own entry");
  return p.rebase(vs);
}

}  // namespace

WeightedSpace ProjectionStep::target_ambient(long long r) const {
  std::vector<int> w;
  for (const auto& e : target_weights) w.push_back(static_cast<int>(e.eval_int(r)));
  return WeightedSpace(w, target_names);
}

std::vector<std::string> find_projection_centers(const ModelSpec& ms) {
  std::vector<std::string> out;
  const LinExpr one = LinExpr::constant(1);
  switch (ms.format.kind) {
    case FormatKind::Hypersurface: break;
    case FormatKind::CompleteIntersection:
      for (std::size_t i = 0; i < ms.names.size(); ++i)
        if (ms.weights[i] == one) out.push_back(ms.names[i]);
      break;
    case FormatKind::Pfaffian5:
    case FormatKind::P2xP2:
      for (const auto& e : ms.format.placement) {
        if (e.kind != EntrySpec::Kind::Variable) continue;
        for (std::size_t i = 0; i < ms.names.size(); ++i)
          if (ms.names[i] == e.name && ms.weights[i] == one) out.push_back(e.name);
      }
      break;
  }
  return out;
}

ProjectionStep project_format(const ModelSpec& ms, const std::string& center) {
  ProjectionStep st;
  st.source = ms.id;
  st.center = center;
  st.r_slope = ms.r_slope;
  st.r_offset = ms.r_offset;
  auto it = std::find(ms.names.begin(), ms.names.end(), center);
  if (it == ms.names.end()) throw Error("UnknownVariable", "no variable named " + center + " in " + ms.id);
  if (ms.weights[it - ms.names.begin()] != LinExpr::constant(1))
    throw center_not_linear(center + " does not have weight 1");
  drop_center(st, ms, center);
  const auto& fs = ms.format;

  switch (fs.kind) {
    case FormatKind::Hypersurface: throw Error("NotApplicable", ms.id + " is a hypersurface");

    case FormatKind::CompleteIntersection: {
      if (fs.degrees.size() != 2) throw Error("NotApplicable", "only codimension-two complete intersections project");
      const LinExpr one = LinExpr::constant(1);
      st.target_special = FormatSpec::hypersurface(fs.degrees[0] + fs.degrees[1] - one);
      st.divisor_generators = {"g1", "g2"};
      st.divisor_degrees = {fs.degrees[0] - one, fs.degrees[1] - one};
      st.divisor_note = "f_j = " + center + " g_j + h_j; image g1 h2 - g2 h1";
      break;
    }

    case FormatKind::Pfaffian5: {
      int slot = -1;
      for (std::size_t s = 0; s < fs.placement.size(); ++s)
        if (fs.placement[s].kind == EntrySpec::Kind::Variable && fs.placement[s].name == center) slot = static_cast<int>(s);
      if (slot < 0) throw center_not_linear(center + " is not an entry of the skew matrix");
      auto [ci, cj] = kPfPositions[slot];
      auto p = front_order(5, ci, cj);
      auto deg = [&](int a, int b) { return fs.pf_degree(p[a], p[b]); };
      auto lab = [&](int a, int b) { return entry_label(fs.placement[pf_slot(p[a], p[b])]); };
      std::array<LinExpr, 10> e{};
      for (int s = 0; s < 10; ++s) e[s] = deg(kPfPositions[s].first, kPfPositions[s].second);
      auto pd = pfaffian_data(e);
      st.target_special = FormatSpec::complete_intersection({pd.d[0], pd.d[1]});
      for (auto [a, b] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
        st.divisor_generators.push_back(lab(a, b));
        st.divisor_degrees.push_back(deg(a, b));
      }
      st.divisor_note = "implicit functions " + st.divisor_generators[0] + ", " + st.divisor_generators[1] + ", " +
                        st.divisor_generators[2] + "; image [" + lab(1, 2) + " " + lab(1, 3) + " " + lab(1, 4) + " / " +
                        lab(0, 2) + " " + lab(0, 3) + " " + lab(0, 4) + "] x [" + lab(3, 4) + " " + lab(2, 4) + " " +
                        lab(2, 3) + "]";
      break;
    }

    case FormatKind::P2xP2: {
      int slot = -1;
      for (std::size_t s = 0; s < fs.placement.size(); ++s)
        if (fs.placement[s].kind == EntrySpec::Kind::Variable && fs.placement[s].name == center) slot = static_cast<int>(s);
      if (slot < 0) throw center_not_linear(center + " is not an entry of the 3x3 matrix");
      auto rows = front_order(3, slot / 3), cols = front_order(3, slot % 3);
      auto deg = [&](int a, int b) { return fs.p2_degree(rows[a - 1], cols[b - 1]); };
      auto ent = [&](int a, int b) { return fs.placement[rows[a - 1] * 3 + cols[b - 1]]; };
      // Skew matrix N of the image, upper triangle in the order 12,13,14,15,23,24,25,34,35,45.
      std::array<LinExpr, 10> e{};
      std::vector<EntrySpec> place(10);
      const std::pair<int, int> src[10] = {{1, 2}, {1, 3}, {2, 1}, {3, 1}, {0, 0}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {0, 0}};
      for (int s = 0; s < 10; ++s) {
        if (s == 4 || s == 9) continue;
        e[s] = deg(src[s].first, src[s].second);
        place[s] = ent(src[s].first, src[s].second);
      }
      e[4] = deg(1, 2) + deg(2, 3) - deg(2, 1);
      e[9] = deg(2, 1) + deg(3, 2) - deg(1, 2);
      place[4] = EntrySpec::zero(e[4]);
      place[9] = EntrySpec::zero(e[9]);
      pfaffian_data(e);
      st.target_special = FormatSpec::pfaffian(e);
      st.target_special.placement = place;
      std::array<bool, 10> in_d{};
      in_d[4] = in_d[9] = true;
      for (int s : {5, 6, 7, 8}) {
        in_d[s] = true;
        st.divisor_generators.push_back(entry_label(place[s]));
        st.divisor_degrees.push_back(e[s]);
      }
      st.tom = tom_tag(in_d);
      st.divisor_note = "zero entries at (2,3) and (4,5)";
      break;
    }
  }
  return st;
}

ModelInstance project_equations(const ModelInstance& inst, const std::string& center) {
  int c = inst.ambient.index(center);
  if (c < 0) throw Error("UnknownVariable", "no variable named " + center);
  if (inst.ambient.weights[c] != 1) throw center_not_linear(center + " does not have weight 1");

  ModelInstance out;
  out.model_id = inst.model_id + "/" + center;
  out.n = inst.n;
  out.r = inst.r;
  out.field = inst.field;
  std::vector<int> w;
  std::vector<std::string> names;
  for (int i = 0; i < inst.ambient.size(); ++i)
    if (i != c) {
      w.push_back(inst.ambient.weights[i]);
      names.push_back(inst.ambient.names[i]);
    }
  out.ambient = WeightedSpace(w, names);
  out.vars = make_varset(names, w);
  const Poly cvar = Poly::variable(inst.vars, inst.field, c);
  Divisor div;

  switch (inst.format.kind) {
    case FormatKind::Hypersurface: throw Error("NotApplicable", "a hypersurface has no type-I projection here");

    case FormatKind::CompleteIntersection: {
      if (inst.equations.size() != 2) throw Error("NotApplicable", "only codimension-two complete intersections project");
      Poly g[2] = {Poly(inst.vars, inst.field), Poly(inst.vars, inst.field)};
      Poly h[2] = {g[0], g[0]};
      for (int j = 0; j < 2; ++j) {
        for (const auto& [e, coef] : inst.equations[j].terms()) {
          if (e[c] > 1) throw center_not_linear(center + " appears to a power above one");
          Exponent e2 = e;
          e2[c] = 0;
          (e[c] == 1 ? g[j] : h[j]).add_term(e2, coef);
        }
        if (g[j].is_zero()) throw Error("ImplicitFunctionFails", "equation " + std::to_string(j + 1) + " does not involve " + center);
      }
      Poly f = g[0] * h[1] - g[1] * h[0];
      out.equations = {f.rebase(out.vars)};
      out.degrees = {inst.degrees[0] + inst.degrees[1] - 1};
      out.format = FormatSpec::hypersurface(LinExpr::constant(out.degrees[0]));
      div.generators = {g[0].rebase(out.vars), g[1].rebase(out.vars)};
      div.cofactors = {{h[1].rebase(out.vars), (-h[0]).rebase(out.vars)}};
      break;
    }

    case FormatKind::Pfaffian5: {
      int ci = -1, cj = -1;
      for (auto [i, j] : kPfPositions)
        if (inst.matrix[i][j] == cvar || inst.matrix[i][j] == -cvar) ci = i, cj = j;
      if (ci < 0) throw center_not_linear(center + " is not an entry of the skew matrix");
      auto p = front_order(5, ci, cj);
      PolyMatrix m(5, std::vector<Poly>(5, Poly(out.vars, inst.field)));
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
          if (a != b && !(std::min(a, b) == 0 && std::max(a, b) == 1))
            m[a][b] = rebase_checked(inst.matrix[p[a]][p[b]], out.vars, center);
      std::vector<std::pair<int, int>> gens = {{2, 3}, {2, 4}, {3, 4}};
      for (auto [a, b] : gens) {
        if (m[a][b].is_zero())
          throw Error("ImplicitFunctionFails", "implicit function entry " + pos_label(a, b) + " vanishes");
        div.generators.push_back(m[a][b]);
      }
      // Pfaffians omitting rows 0 and 1 of the reordered matrix avoid the center entry.
      ProductExpansion ex{m, gens};
      for (int skip : {0, 1}) {
        int idx[4], k = 0;
        for (int i = 0; i < 5; ++i)
          if (i != skip) idx[k++] = i;
        auto P = [&](int a, int b) { return std::pair{idx[a], idx[b]}; };
        out.equations.push_back(m[idx[0]][idx[1]] * m[idx[2]][idx[3]] - m[idx[0]][idx[2]] * m[idx[1]][idx[3]] +
                                m[idx[0]][idx[3]] * m[idx[1]][idx[2]]);
        std::vector<Poly> cof(3, Poly(out.vars, inst.field));
        bool ok = ex.add(cof, 1, P(0, 1), P(2, 3)) && ex.add(cof, -1, P(0, 2), P(1, 3)) && ex.add(cof, 1, P(0, 3), P(1, 2));
        if (!ok) throw Error("DivisorNotContained", "image equation is not in the divisor ideal");
        div.cofactors.push_back(cof);
      }
      std::array<LinExpr, 10> e{};
      for (int s = 0; s < 10; ++s) {
        auto [a, b] = kPfPositions[s];
        e[s] = inst.format.pf_degree(p[a], p[b]);
      }
      auto pd = pfaffian_data(e, {inst.r});
      out.format = FormatSpec::complete_intersection({LinExpr::constant(pd.d[0].eval_int(inst.r)),
                                                     LinExpr::constant(pd.d[1].eval_int(inst.r))});
      for (const auto& d : out.format.degrees) out.degrees.push_back(d.eval_int(inst.r));
      break;
    }

    case FormatKind::P2xP2: {
      int ci = -1, cj = -1;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (inst.matrix[i][j] == cvar) ci = i, cj = j;
      if (ci < 0) throw center_not_linear(center + " is not an entry of the 3x3 matrix");
      auto rows = front_order(3, ci), cols = front_order(3, cj);
      auto M = [&](int a, int b) { return rebase_checked(inst.matrix[rows[a - 1]][cols[b - 1]], out.vars, center); };
      auto D = [&](int a, int b) { return inst.format.p2_degree(rows[a - 1], cols[b - 1]).eval_int(inst.r); };
      PolyMatrix n(5, std::vector<Poly>(5, Poly(out.vars, inst.field)));
      const std::pair<int, int> src[10] = {{1, 2}, {1, 3}, {2, 1}, {3, 1}, {0, 0}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {0, 0}};
      std::array<LinExpr, 10> e{};
      for (int s = 0; s < 10; ++s) {
        auto [i, j] = kPfPositions[s];
        if (s == 4 || s == 9) continue;
        n[i][j] = M(src[s].first, src[s].second);
        n[j][i] = -n[i][j];
        e[s] = LinExpr::constant(D(src[s].first, src[s].second));
      }
      e[4] = LinExpr::constant(D(1, 2) + D(2, 3) - D(2, 1));
      e[9] = LinExpr::constant(D(2, 1) + D(3, 2) - D(1, 2));
      std::vector<std::pair<int, int>> gens = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
      for (auto [a, b] : gens) {
        if (n[a][b].is_zero())
          throw Error("ImplicitFunctionFails", "implicit function entry " + pos_label(a, b) + " vanishes");
        div.generators.push_back(n[a][b]);
      }
      out.matrix = n;
      out.format = FormatSpec::pfaffian(e);
      out.equations = pfaffians(n);
      ProductExpansion ex{out.matrix, gens};
      for (int skip = 0; skip < 5; ++skip) {
        int idx[4], k = 0;
        for (int i = 0; i < 5; ++i)
          if (i != skip) idx[k++] = i;
        auto P = [&](int a, int b) { return std::pair{idx[a], idx[b]}; };
        std::vector<Poly> cof(4, Poly(out.vars, inst.field));
        bool ok = ex.add(cof, 1, P(0, 1), P(2, 3)) && ex.add(cof, -1, P(0, 2), P(1, 3)) && ex.add(cof, 1, P(0, 3), P(1, 2));
        if (!ok) throw Error("DivisorNotContained", "image equation is not in the divisor ideal");
        div.cofactors.push_back(cof);
      }
      for (const auto& d : out.format.equation_degrees()) out.degrees.push_back(d.eval_int(inst.r));
      break;
    }
  }
  out.divisor = std::move(div);
  return out;
}

ModelInstance deform_generic(const ProjectionStep& step, long long n, std::uint64_t seed, const PrimeField& field) {
  long long r = step.r_slope * n + step.r_offset;
  InstanceOptions opts;
  opts.generic_entries = true;
  return make_instance(step.source + ">" + step.center, n, r, step.target_ambient(r), step.target_special, field, seed,
                       opts);
}

bool divisor_contained(const ModelInstance& inst) {
  if (!inst.divisor) return false;
  const auto& d = *inst.divisor;
  if (d.cofactors.size() != inst.equations.size()) return false;
  for (std::size_t e = 0; e < inst.equations.size(); ++e) {
    if (d.cofactors[e].size() != d.generators.size()) return false;
    Poly sum(inst.vars, inst.field);
    for (std::size_t g = 0; g < d.generators.size(); ++g) sum = sum + d.cofactors[e][g] * d.generators[g];
    if (!(sum == inst.equations[e])) return false;
  }
  return true;
}

}  // namespace dpc
