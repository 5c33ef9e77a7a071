#include <doctest.h>

#include "dpc/groebner.hpp"
#include "dpc/linalg.hpp"
#include "dpc/linexpr.hpp"
#include "dpc/multipoly.hpp"
#include "dpc/series.hpp"
#include "dpc/upoly.hpp"

using namespace dpc;

TEST_CASE("linexpr parse and eval") {
  CHECK(LinExpr::parse("2r-1").eval_int(3) == 5);
  CHECK(LinExpr::parse("-r+3").eval_int(1) == 2);
  CHECK(LinExpr::parse("r/2+1/2").eval_int(5) == 3);
  CHECK_FALSE(LinExpr::parse("r/2").integral_at(3));
  CHECK_THROWS_AS(LinExpr::parse("r/2").eval_int(3), std::domain_error);
  CHECK(LinExpr::parse(LinExpr::parse("3r-2").str()) == LinExpr::parse("3r-2"));
}

TEST_CASE("series products") {
  auto one_minus_t = SeriesPoly::polynomial({1, -1});
  CHECK(series_mul(SeriesPoly::polynomial({1, 1}), one_minus_t, 5).coeff(2) == -1);
  auto p = series_mul(SeriesPoly::polynomial({1, 1}), one_minus_t, 5);
  for (int d : {0, 1, 3, 4}) CHECK(p.coeff(d) == (d == 0 ? 1 : 0));

  auto geo = series_mul(SeriesPoly::geometric(1, 9), one_minus_t, 9);
  CHECK(geo.coeff(0) == 1);
  for (int d = 1; d < 9; ++d) CHECK(geo.coeff(d) == 0);

  std::vector<Rational> binom;
  for (int d = 0; d < 8; ++d) binom.emplace_back((d + 3) * (d + 2) * (d + 1) / 6);
  auto s = SeriesPoly::truncated(binom, 8);
  auto q = SeriesPoly::polynomial({1, -4, 6, -4, 1});
  auto prod = series_mul(s, q, 8);
  CHECK(prod.coeff(0) == 1);
  for (int d = 1; d < 8; ++d) CHECK(prod.coeff(d) == 0);
}

TEST_CASE("division by powers of 1-t") {
  auto q = divide_by_one_minus_t(SeriesPoly::polynomial({1, -2, 1}), 2);
  CHECK(q == SeriesPoly::polynomial({1}));
  auto g = divide_by_one_minus_t(SeriesPoly::polynomial({1, 0, -5, 5, 0, -1}), 3);
  CHECK(g.eval(1) == 5);
  CHECK_THROWS_AS(divide_by_one_minus_t(SeriesPoly::polynomial({1, 0, 0, -1}), 2), NotDivisible);
  CHECK(order_at_one(SeriesPoly::polynomial({1, 0, -5, 5, 0, -1})) == 3);
}

TEST_CASE("complete homogeneous polynomials") {
  std::vector<long long> ones{1, 1, 1};
  CHECK(complete_homogeneous(1, ones) == SeriesPoly::polynomial({0, 3}));
  std::vector<long long> e{0, 0, 1};
  CHECK(complete_homogeneous(2, e) == SeriesPoly::polynomial({3, 2, 1}));
  CHECK(complete_homogeneous(0, e) == SeriesPoly::polynomial({1}));
}

TEST_CASE("reflect") {
  auto p = SeriesPoly::polynomial({1, 0, -5, 5, 0, -1});
  CHECK(p.reflect(5) == p * Rational(-1));
}

namespace {
struct Ring {
  VarSetPtr vars = make_varset({"x", "y", "a", "b"}, {1, 1, 1, 1});
  PrimeField f;
  Poly var(const char* n) const { return Poly::variable(vars, f, n); }
  Poly c(long long v) const { return Poly::constant(vars, f, f.from_int(v)); }
};
}  // namespace

TEST_CASE("fraction field rank") {
  Ring R;
  auto x = R.var("x"), y = R.var("y"), zero = R.c(0);
  CHECK(fraction_field_rank({{x, y}, {R.c(2) * x, R.c(2) * y}}) == 1);
  CHECK(fraction_field_rank({{x, zero}, {zero, y}}) == 2);
  CHECK(bareiss_rank({{x, zero}, {zero, y}}) == 2);
  CHECK(bareiss_rank({{x, y}, {x * y, y * y}}) == 1);

  auto vars = make_varset({"v0", "v1", "v2", "v3", "v4", "v5"}, {1, 1, 1, 1, 1, 1});
  CounterRng rng(7);
  std::vector<Poly> qs{random_form(vars, R.f, 2, rng), random_form(vars, R.f, 2, rng)};
  PolyMatrix jac;
  for (const auto& q : qs) {
    std::vector<Poly> row;
    for (int v = 0; v < 6; ++v) row.push_back(q.derivative(v));
    jac.push_back(row);
  }
  CHECK(fraction_field_rank(jac) == 2);
}

TEST_CASE("rank mod p") {
  PrimeField f(7);
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, f) == 1);
  CHECK(rank_mod_p({{1, 2}, {3, 4}}, f) == 2);
}

TEST_CASE("substitution") {
  Ring R;
  auto x = R.var("x"), y = R.var("y"), a = R.var("a"), b = R.var("b");
  CHECK((x + y).substitute("x", y) == R.c(2) * y);
  CHECK((x * x).substitute("x", a + b) == a * a + R.c(2) * a * b + b * b);

  auto vars = make_varset({"p", "q", "s", "t"}, {1, 1, 3, 2});
  CounterRng rng(11);
  auto f = random_form(vars, R.f, 9, rng);
  auto g = random_form(vars, R.f, 3, rng);
  auto h = f.substitute("s", g);
  CHECK(h.is_homogeneous());
  CHECK(h.degree() == 9);
}

TEST_CASE("univariate gcd") {
  PrimeField f(101);
  UPoly p(f, {f.from_int(-1), 0, 1});  // u^2 - 1
  UPoly q(f, {f.from_int(-1), 1});     // u - 1
  CHECK(gcd(p, q).degree() == 1);
  UPoly sq = p * p;
  CHECK(squarefree_part(sq).degree() == 2);
}

TEST_CASE("counter rng is reproducible") {
  CounterRng a(42), b(42);
  for (int i = 0; i < 5; ++i) CHECK(a.next() == b.next());
  CHECK(CounterRng(1).split("PF11").next() != CounterRng(1).split("PF12").next());
}

TEST_CASE("groebner bases and saturation") {
  PrimeField f;
  auto vs = make_varset({"x", "y", "z"}, {1, 1, 1});
  auto x = Poly::variable(vs, f, "x"), y = Poly::variable(vs, f, "y"), z = Poly::variable(vs, f, "z");
  std::vector<int> id{0, 1, 2};
  auto aff = [&](const Poly& p) { return to_affine(p, id, 3); };

  // y = x and z^2 = x^2: two lines through the origin.
  auto tc = groebner({aff(x * z - y * y), aff(y - x), aff(z * z - x * y)}, 3, f, 1'000'000);
  REQUIRE(tc.status == GroebnerResult::Status::Proper);
  CHECK(ideal_dimension(tc.basis, 3) == 1);
  auto unit = groebner({aff(x - y), aff(x + y), aff(z - x * x), aff(x * y - z + Poly::constant(vs, f, 1))}, 3, f, 1'000'000);
  CHECK(unit.status == GroebnerResult::Status::Unit);

  // (x y, x z) saturated by x is (y, z); by x y z it is the unit ideal.
  std::vector<int> w{1, 1, 1}, just_x{0}, all{0, 1, 2};
  auto sx = saturate({aff(x * y), aff(x * z)}, 3, f, 1'000'000, w, just_x);
  REQUIRE(sx.status == GroebnerResult::Status::Proper);
  CHECK(ideal_dimension(sx.basis, 4) == 1);
  CHECK(saturate({aff(x * y), aff(x * z)}, 3, f, 1'000'000, w, all).status == GroebnerResult::Status::Unit);
}
