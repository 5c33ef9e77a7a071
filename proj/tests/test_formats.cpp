#include <doctest.h>

#include "dpc/catalog.hpp"
#include "dpc/formats.hpp"

using namespace dpc;

namespace {
std::array<LinExpr, 10> pf_entries(const char* text) {
  std::array<LinExpr, 10> out;
  std::istringstream is(text);
  for (auto& e : out) {
    std::string tok;
    is >> tok;
    e = LinExpr::parse(tok);
  }
  return out;
}
}  // namespace

TEST_CASE("Pfaffian degree data of PF11") {
  const auto& ms = find_model(builtin_catalog(), "PF11");
  auto pd = pfaffian_data(ms.format.pf);
  CHECK(pd.b[0] == LinExpr::doubled(0, 1));
  CHECK(pd.b[3] == LinExpr::doubled(2, -1));
  CHECK(pd.d[0] == LinExpr::parse("2r"));
  CHECK(pd.d[4] == LinExpr::parse("r+1"));
  CHECK(pd.s == LinExpr::parse("4r+1"));
}

TEST_CASE("uniform Pfaffian is the Grassmannian cone") {
  auto fs = FormatSpec::pfaffian(pf_entries("1 1 1 1 1 1 1 1 1 1"));
  auto pd = pfaffian_data(fs.pf);
  for (const auto& d : pd.d) CHECK(d == LinExpr::constant(2));
  CHECK(pd.s == LinExpr::constant(5));
  auto hd = hilbert_numerator(fs, {1, 1, 1, 1, 1, 1, 1}, 0);
  CHECK(hd.numerator == SeriesPoly::polynomial({1, 0, -5, 5, 0, -1}));
}

TEST_CASE("incompatible Pfaffian degrees") {
  // m12 = m13 = m24 = 1 forces m34 = 1.
  auto e = pf_entries("1 1 1 1 1 1 1 5 1 1");
  CHECK_THROWS_WITH_AS(pfaffian_data(e), doctest::Contains("IncompatibleMatrix"), Error);
}

TEST_CASE("Segre numerator") {
  std::array<LinExpr, 3> u{LinExpr::constant(0), LinExpr::constant(0), LinExpr::constant(0)};
  std::array<LinExpr, 3> v{LinExpr::constant(1), LinExpr::constant(1), LinExpr::constant(1)};
  auto fs = FormatSpec::p2xp2(u, v);
  auto hd = hilbert_numerator(fs, std::vector<int>(9, 1), 0);
  CHECK(hd.numerator == SeriesPoly::polynomial({1, 0, -9, 16, -9, 0, 1}));
  CHECK(hd.socle == 6);
  auto md = minor_degrees(u, v);
  CHECK(md.size() == 9);
  for (const auto& d : md) CHECK(d == LinExpr::constant(2));
  auto zero = minor_degrees(u, u);
  for (const auto& d : zero) CHECK(d == LinExpr::constant(0));
}

TEST_CASE("P11 minor degrees") {
  const auto& ms = find_model(builtin_catalog(), "P11");
  auto degs = ms.format.equation_degrees();
  std::map<std::string, int> count;
  for (const auto& d : degs) ++count[d.str()];
  CHECK(count["2"] == 1);
  CHECK(count["r+1"] == 4);
  CHECK(count["2r"] == 4);
}

TEST_CASE("placements match the displayed matrices") {
  for (const char* id : {"P11", "P12", "P13", "PF11", "PF12", "PF13", "PF14", "PF21", "PF22", "PF23"}) {
    const auto& ms = find_model(builtin_catalog(), id);
    for (long long n : ms.range_upto(4)) CHECK_NOTHROW(format_entry_check(ms.format, ms.ambient(ms.r_of(n)), ms.r_of(n)));
  }
  const auto& pf14 = find_model(builtin_catalog(), "PF14");
  bool has_f2r = false;
  for (const auto& e : pf14.format.placement) has_f2r = has_f2r || (e.name == "F_2r" && e.degree == LinExpr::parse("2r"));
  CHECK(has_f2r);
}

TEST_CASE("swapped ambient weights are caught") {
  const auto& ms = find_model(builtin_catalog(), "P11");
  long long r = ms.r_of(1);
  auto ws = ms.ambient(r);
  int a = ws.index("x0"), e = ws.index("e");
  std::swap(ws.weights[a], ws.weights[e]);
  CHECK_THROWS_WITH_AS(format_entry_check(ms.format, ws, r), doctest::Contains("EntryMismatch"), Error);
}

TEST_CASE("complete intersection numerator") {
  auto fs = FormatSpec::complete_intersection({LinExpr::constant(4), LinExpr::constant(4)});
  auto hd = hilbert_numerator(fs, {1, 1, 2, 2, 3}, 2);
  CHECK(hd.k == 1);
  CHECK(hd.numerator == SeriesPoly::polynomial({1, 0, 0, 0, -2, 0, 0, 0, 1}));
}
