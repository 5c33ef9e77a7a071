#include "dpc/linalg.hpp"

#include <algorithm>

namespace dpc {

int rank_mod_p(FpMatrix m, const PrimeField& field) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    auto inv = field.inv(m[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      auto f = field.mul(m[r][c], inv);
      for (int j = c; j < cols; ++j) m[r][j] = field.sub(m[r][j], field.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

FpMatrix evaluate(const PolyMatrix& m, const std::vector<PrimeField::Elem>& point) {
  FpMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& e : m[i]) out[i].push_back(e.eval(point));
  }
  return out;
}

namespace {

const Poly* first_nonzero(const PolyMatrix& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) return &e;
  return nullptr;
}

}  // namespace

int bareiss_rank(PolyMatrix m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  const Poly* any = first_nonzero(m);
  if (!any) return 0;
  Poly prev = Poly::constant(any->vars(), any->field(), 1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    std::size_t best = 0;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero() && (piv < 0 || m[r][c].size() < best)) {
        piv = r;
        best = m[r][c].size();
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j)
        m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]).exact_divide(prev);
      m[r][c] = Poly(any->vars(), any->field());
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

int fraction_field_rank(const PolyMatrix& m, std::uint64_t seed, int enough) {
  if (m.empty() || m[0].empty()) return 0;
  const Poly* any = first_nonzero(m);
  if (!any) return 0;
  int upper = static_cast<int>(std::min(m.size(), m[0].size()));
  const PrimeField& field = any->field();
  CounterRng rng(seed);
  int best = 0;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<PrimeField::Elem> point(any->nvars());
    for (auto& x : point) x = 1 + rng.below(field.characteristic() - 1);
    best = std::max(best, rank_mod_p(evaluate(m, point), field));
    if (best == upper || (enough > 0 && best >= enough)) return best;
  }
  return bareiss_rank(m);
}

Poly determinant(const PolyMatrix& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly acc(m[0][0].vars(), m[0][0].field());
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix sub;
    for (int i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (int k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Poly term = m[0][j] * determinant(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace dpc
