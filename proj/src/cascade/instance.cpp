#include "dpc/instance.hpp"

#include <sstream>

namespace dpc {

std::string ModelInstance::equations_str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < equations.size(); ++i)
    os << "  f" << i + 1 << " (deg " << degrees[i] << "): " << equations[i].str() << "\n";
  return os.str();
}

std::vector<Poly> pfaffians(const PolyMatrix& m) {
  std::vector<Poly> out;
  for (int skip = 0; skip < 5; ++skip) {
    int idx[4], k = 0;
    for (int i = 0; i < 5; ++i)
      if (i != skip) idx[k++] = i;
    auto e = [&](int a, int b) -> const Poly& { return m[idx[a]][idx[b]]; };
    out.push_back(e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2));
  }
  return out;
}

std::vector<Poly> minors2(const PolyMatrix& m) {
  std::vector<Poly> out;
  const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs)
    for (auto [k, l] : pairs) out.push_back(m[i][k] * m[j][l] - m[i][l] * m[j][k]);
  return out;
}

PolyMatrix jacobian(const std::vector<Poly>& eqs) {
  PolyMatrix j;
  for (const auto& f : eqs) {
    std::vector<Poly> row;
    for (int v = 0; v < f.nvars(); ++v) row.push_back(f.derivative(v));
    j.push_back(std::move(row));
  }
  return j;
}

void refresh_equations(ModelInstance& inst) {
  if (inst.format.kind == FormatKind::Pfaffian5) inst.equations = pfaffians(inst.matrix);
  else if (inst.format.kind == FormatKind::P2xP2) inst.equations = minors2(inst.matrix);
  inst.degrees.clear();
  for (const auto& d : inst.format.equation_degrees()) inst.degrees.push_back(d.eval_int(inst.r));
}

ModelInstance make_instance(const std::string& id, long long n, long long r, const WeightedSpace& ambient,
                            const FormatSpec& format, const PrimeField& field, std::uint64_t seed,
                            const InstanceOptions& opts) {
  ModelInstance inst;
  inst.model_id = id;
  inst.n = n;
  inst.r = r;
  inst.ambient = ambient;
  inst.vars = make_varset(ambient.names, ambient.weights);
  inst.field = field;
  inst.format = format;
  CounterRng base = CounterRng(seed).split(id).split(static_cast<std::uint64_t>(n));
  std::vector<bool> skip(ambient.size(), false);
  int center = -1;
  if (!opts.center.empty()) {
    center = ambient.index(opts.center);
    if (center < 0) throw Error("UnknownVariable", "no variable named " + opts.center);
    skip[center] = true;
  }
  auto form = [&](long long d, std::uint64_t slot) {
    CounterRng rng = base.split(slot);
    return random_form(inst.vars, field, d, rng, skip);
  };
  auto entry = [&](const EntrySpec* spec, long long d, std::uint64_t slot) {
    if (spec && !opts.generic_entries) {
      if (spec->kind == EntrySpec::Kind::Variable) return Poly::variable(inst.vars, field, spec->name);
      if (spec->kind == EntrySpec::Kind::Zero) return Poly(inst.vars, field);
    }
    return form(d, slot);
  };

  switch (format.kind) {
    case FormatKind::Hypersurface:
    case FormatKind::CompleteIntersection: {
      for (std::size_t j = 0; j < format.degrees.size(); ++j) {
        long long d = format.degrees[j].eval_int(r);
        if (center >= 0) {
          // Center appears linearly: f = c g + h with g, h free of c.
          Poly c = Poly::variable(inst.vars, field, center);
          inst.equations.push_back(c * form(d - ambient.weights[center], 2 * j) + form(d, 2 * j + 1));
        } else {
          inst.equations.push_back(form(d, j));
        }
        inst.degrees.push_back(d);
      }
      break;
    }
    case FormatKind::Pfaffian5: {
      inst.matrix.assign(5, std::vector<Poly>(5, Poly(inst.vars, field)));
      for (int s = 0; s < 10; ++s) {
        auto [i, j] = kPfPositions[s];
        const EntrySpec* spec = format.placement.empty() ? nullptr : &format.placement[s];
        Poly e = entry(spec, format.pf[s].eval_int(r), 100 + s);
        inst.matrix[j][i] = -e;
        inst.matrix[i][j] = std::move(e);
      }
      refresh_equations(inst);
      break;
    }
    case FormatKind::P2xP2: {
      inst.matrix.assign(3, std::vector<Poly>(3, Poly(inst.vars, field)));
      for (int s = 0; s < 9; ++s) {
        int i = s / 3, j = s % 3;
        const EntrySpec* spec = format.placement.empty() ? nullptr : &format.placement[s];
        inst.matrix[i][j] = entry(spec, format.p2_degree(i, j).eval_int(r), 200 + s);
      }
      refresh_equations(inst);
      break;
    }
  }
  return inst;
}

}  // namespace dpc
