#include <doctest.h>

#include "dpc/cascade.hpp"

using namespace dpc;

namespace {
const ModelSpec& M(const char* id) { return find_model(builtin_catalog(), id); }
std::vector<std::string> ws_str(const std::vector<LinExpr>& w) {
  std::vector<std::string> out;
  for (const auto& e : w) out.push_back(e.str());
  return out;
}
}  // namespace

TEST_CASE("projection centers") {
  auto p11 = find_projection_centers(M("P11"));
  CHECK(std::find(p11.begin(), p11.end(), "x0") != p11.end());
  CHECK(std::find(p11.begin(), p11.end(), "y0") != p11.end());
  CHECK(find_projection_centers(M("PF14")).empty());
  CHECK(find_projection_centers(M("HS12")).empty());
}

TEST_CASE("P11 from x0") {
  auto st = project_format(M("P11"), "x0");
  CHECK(st.target_special.kind == FormatKind::Pfaffian5);
  CHECK(ws_str(st.target_weights) == std::vector<std::string>{"1", "1", "1", "r", "r", "2r-1"});
  auto zeros = st.target_special.zero_entries();
  CHECK(zeros == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(st.target_special.pf_degree(1, 2) == LinExpr::parse("r"));
  CHECK(st.target_special.pf_degree(3, 4) == LinExpr::parse("r"));
  auto gens = st.divisor_generators;
  std::sort(gens.begin(), gens.end());
  CHECK(gens == std::vector<std::string>{"G_r", "b", "d", "e"});
  CHECK(st.tom == "Tom_1");
}

TEST_CASE("PF12 from y0 and CI12 from z0") {
  auto st = project_format(M("PF12"), "y0");
  CHECK(st.target_special.kind == FormatKind::CompleteIntersection);
  auto degs = ws_str(st.target_special.degrees);
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<std::string>{"2r", "2r+1"});
  auto gens = st.divisor_generators;
  std::sort(gens.begin(), gens.end());
  CHECK(gens.size() == 3);
  CHECK(std::count(gens.begin(), gens.end(), "c") == 1);
  CHECK(std::count(gens.begin(), gens.end(), "d") == 1);

  auto hs = project_format(M("CI12"), "z0");
  CHECK(hs.target_special.kind == FormatKind::Hypersurface);
  CHECK(hs.target_special.degrees.front() == LinExpr::parse("4r"));
  CHECK(hs.divisor_generators.size() == 2);
  CHECK_THROWS_WITH_AS(project_format(M("HS12"), "a"), doctest::Contains("CenterNotLinear"), Error);
  CHECK_THROWS_WITH_AS(project_format(M("RS8"), "x"), doctest::Contains("NotApplicable"), Error);
}

TEST_CASE("explicit projections contain the divisor") {
  InstanceOptions o;
  o.center = "y0";
  auto pf11 = instantiate(M("PF11"), 1, 2, PrimeField(), o);
  auto img = project_equations(pf11, "y0");
  CHECK(img.degrees == std::vector<long long>{4, 4});
  CHECK(img.ambient.weights == std::vector<int>{1, 1, 2, 2, 3});
  CHECK(divisor_contained(img));

  o.center = "x0";
  auto rs6 = instantiate(M("RS6"), 1, 2, PrimeField(), o);
  auto ci = project_equations(rs6, "x0");
  CHECK(ci.degrees == std::vector<long long>{4, 4});
  CHECK(ci.ambient.weights == std::vector<int>{1, 1, 2, 2, 3});
}

TEST_CASE("vanishing coefficient at the center") {
  InstanceOptions o;
  o.center = "z0";
  auto inst = instantiate(M("CI12"), 1, 2, PrimeField(), o);
  // Drop every term involving the center.
  auto zero = Poly(inst.vars, inst.field);
  inst.equations[0] = inst.equations[0].substitute("z0", zero);
  CHECK_THROWS_WITH_AS(project_equations(inst, "z0"), doctest::Contains("ImplicitFunctionFails"), Error);
}

TEST_CASE("special and generic members of the P11 projection") {
  InstanceOptions o;
  o.center = "x0";
  auto p11 = instantiate(M("P11"), 1, 2, PrimeField(), o);
  auto special = project_equations(p11, "x0");
  // Projecting from a general point of a smooth member gives its blow-up there.
  auto rep = qs_member(special);
  CHECK(rep.passed());
  CHECK_FALSE(rep.rank_deficient_everywhere);
  auto generic = deform_generic(project_format(M("P11"), "x0"), 1, 2);
  CHECK(qs_member(generic).passed());
}

TEST_CASE("verify_step verdicts") {
  const auto& cat = builtin_catalog();
  auto v = verify_step(cat, M("P11"), project_format(M("P11"), "x0"), 1, 1);
  CHECK(v.passed());
  CHECK(v.h0_source == 4);
  CHECK(v.h0_target == 3);
  REQUIRE(v.target.has_value());
  CHECK(v.target->id == "PF11");

  auto w = verify_step(cat, M("PF21"), project_format(M("PF21"), "y0"), 2, 1);
  CHECK(w.wellformed);
  CHECK(w.quasismooth);
  CHECK(w.divisor);
  CHECK(w.invariants);
  CHECK(w.whitelisted);
  CHECK(w.h0_source - w.h0_target == 2);

  auto x = verify_step(cat, M("CI11"), project_format(M("CI11"), "a"), 2, 1);
  CHECK_FALSE(x.quasismooth);
  CHECK_FALSE(x.passed());
}
