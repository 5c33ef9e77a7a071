#include <doctest.h>

#include "dpc/catalog.hpp"
#include "dpc/invariants.hpp"

using namespace dpc;

namespace {
HilbertData hd_of(const char* id, long long r) {
  const auto& ms = find_model(builtin_catalog(), id);
  return hilbert_numerator(ms.format, ms.ambient(r).weights, r);
}
std::vector<int> weights_of(const char* id, long long r) { return find_model(builtin_catalog(), id).ambient(r).weights; }
}  // namespace

TEST_CASE("Hilbert coefficients") {
  auto hd = hd_of("CI11", 2);
  CHECK(hilbert_coeffs(hd, weights_of("CI11", 2), 3)[1] == 2);
  HilbertData plane{SeriesPoly::polynomial({1}), 5, 0, 0};
  CHECK(hilbert_coeffs(plane, {1, 1, 3}, 6)[5] == 9);
  CHECK(h0_minusK(hd_of("HS12", 3), weights_of("HS12", 3)) == 0);
}

TEST_CASE("anticanonical degree") {
  CHECK(anticanonical_square(hd_of("CI11", 2), weights_of("CI11", 2)) == make_rational(4, 3));
  CHECK(anticanonical_square(hd_of("HS12", 3), weights_of("HS12", 3)) == make_rational(2, 15));
  CHECK(anticanonical_square(hd_of("PF21", 3), weights_of("PF21", 3)) == make_rational(11, 3));
}

TEST_CASE("Riemann-Roch corrections") {
  SingType cone{3, 1, 1};
  CHECK(rr_contribution(cone, 0) == 0);
  CHECK(rr_contribution(cone, local_type_of_minusK(cone)) == make_rational(-1, 3));
  CHECK(rr_contribution(SingType{1, 1, 1}, 5) == 0);
  CHECK_THROWS_WITH_AS(rr_contribution(cone, 2, nullptr), doctest::Contains("ConventionUncalibrated"), Error);
  CHECK(calibration_candidates().size() == 1);
}

TEST_CASE("Riemann-Roch h0") {
  SingType cone{3, 1, 1};
  CHECK(rr_h0(make_rational(25, 3), {cone}, {local_type_of_minusK(cone)}) == 9);
  CHECK(rr_h0(make_rational(4, 3), {cone}, {local_type_of_minusK(cone)}) == 2);
  CHECK(rr_h0(6, {}, {}) == 7);
  CHECK_THROWS_WITH_AS(rr_h0(make_rational(4, 3), {}, {}), doctest::Contains("NonIntegerRR"), Error);
}

TEST_CASE("local types") {
  CHECK(local_type_of_minusK(SingType{1, 1, 1}) == 0);
  CHECK(local_type_of_minusK(3, 1, 2, 6) == 0);
  CHECK_THROWS_WITH_AS(local_type_of_minusK(3, 1, 1, 6), doctest::Contains("LocalTypeMismatch"), Error);
  CHECK(local_type_of_minusK(3, 1, 1, 5) == 2);
}

TEST_CASE("baskets of explicit members") {
  const auto& cat = builtin_catalog();
  auto b = basket_of(instantiate(find_model(cat, "CI12"), 1, 3));
  CHECK(basket_str(b) == "2 x 1/3(1,1), 1/5(1,1)");
  CHECK(basket_str(basket_of(instantiate(find_model(cat, "CI11"), 1, 3))) == "1/3(1,1)");
  CHECK(basket_str(basket_of(instantiate(find_model(cat, "HS12"), 1, 3))) == "4 x 1/3(1,1), 1/5(1,1)");
}
