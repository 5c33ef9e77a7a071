#include <doctest.h>

#include "dpc/catalog.hpp"
#include "dpc/quasismooth.hpp"
#include "dpc/strata.hpp"

using namespace dpc;

namespace {
FormatSpec hs(long long d) { return FormatSpec::hypersurface(LinExpr::constant(d)); }
}  // namespace

TEST_CASE("general hypersurface criterion") {
  CHECK(qs_hypersurface_general(WeightedSpace({1, 2, 3, 5}), 10).passed());
  auto z = qs_hypersurface_general(WeightedSpace({1, 3, 3, 5}), 11);
  CHECK_FALSE(z.passed());
  REQUIRE(z.failing.has_value());
  CHECK(qs_hypersurface_general(WeightedSpace({2, 3, 3, 5}), 12).passed());
  CHECK_THROWS_WITH_AS(qs_hypersurface_general(WeightedSpace({1, 1, 2, 3}), 3), doctest::Contains("LinearCone"), Error);
}

TEST_CASE("members of catalog models") {
  const auto& cat = builtin_catalog();
  auto ci11 = instantiate(find_model(cat, "CI11"), 1, 5);
  CHECK(qs_member(ci11).verdict == QSVerdict::Pass);
  CHECK(wellformed_member(ci11).ok);
  auto pf11 = instantiate(find_model(cat, "PF11"), 1, 5);
  CHECK(qs_member(pf11).passed());
}

TEST_CASE("a member containing a singular line fails there") {
  auto inst = instantiate(find_model(builtin_catalog(), "CI11"), 1, 9);
  // Put both quartics in the ideal of the line a = b = e = 0.
  CounterRng rng(3);
  auto var = [&](const char* n) { return Poly::variable(inst.vars, inst.field, n); };
  for (auto& f : inst.equations)
    f = var("a") * random_form(inst.vars, inst.field, 3, rng) + var("b") * random_form(inst.vars, inst.field, 3, rng) +
        var("e") * random_form(inst.vars, inst.field, 1, rng);
  auto rep = qs_member(inst);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.failing.has_value());
  auto at = support_str(inst.ambient, *rep.failing);
  CHECK((at == "{c}" || at == "{d}" || at == "{c,d}"));
  CHECK_FALSE(wellformed_member(inst).ok);
}

TEST_CASE("verdict does not depend on equation order or row operations") {
  auto inst = instantiate(find_model(builtin_catalog(), "CI12"), 2, 4);
  auto base = qs_member(inst).verdict;
  std::swap(inst.equations[0], inst.equations[1]);
  std::swap(inst.degrees[0], inst.degrees[1]);
  CHECK(qs_member(inst).verdict == base);
  auto ci11 = instantiate(find_model(builtin_catalog(), "CI11"), 2, 4);
  auto before = qs_member(ci11).verdict;
  auto three = Poly::constant(ci11.vars, ci11.field, 3);
  ci11.equations[0] = ci11.equations[0] + three * ci11.equations[1];
  CHECK(qs_member(ci11).verdict == before);
}

TEST_CASE("crosscheck general and member verdicts") {
  auto hs12 = qs_crosscheck(WeightedSpace({2, 3, 3, 5}), hs(12), 3, 5, 1);
  CHECK(hs12.agree);
  for (const auto& m : hs12.members) CHECK(m.passed());
  auto z11 = qs_crosscheck(WeightedSpace({1, 3, 3, 5}), hs(11), 3, 5, 1);
  CHECK(z11.agree);
  for (const auto& m : z11.members) {
    CHECK_FALSE(m.passed());
    CHECK(m.failing == z11.members.front().failing);
  }
  const auto& ci11 = find_model(builtin_catalog(), "CI11");
  auto c = qs_crosscheck(ci11.ambient(4), ci11.format, 4, 5, 1);
  for (const auto& m : c.members) CHECK(m.passed());
}

TEST_CASE("torus analysis of plane cubics") {
  PrimeField f;
  auto vs = make_varset({"x", "y", "z"}, {1, 1, 1});
  auto x = Poly::variable(vs, f, "x"), y = Poly::variable(vs, f, "y"), z = Poly::variable(vs, f, "z");
  std::vector<int> all{0, 1, 2};
  CounterRng rng(5);
  auto fermat = torus_singularities({x.pow(3) + y.pow(3) + z.pow(3)}, all, 1, rng);
  REQUIRE(fermat.status == TorusAnalysis::Status::Proper);
  CHECK(fermat.dimension == 1);
  CHECK(fermat.singular_dimension == -1);
  // Nodal cubic with its node at (1:1:1).
  auto u = x - z, v = y - z;
  auto nodal = torus_singularities({u * v * z + u.pow(3) + v.pow(3)}, all, 1, rng);
  REQUIRE(nodal.status == TorusAnalysis::Status::Proper);
  CHECK(nodal.singular_dimension == 0);
  CHECK(torus_intersection({x * y * z}, all).status == TorusAnalysis::Status::Empty);
}
