#include "dpc/catalog.hpp"

#include <map>
#include <sstream>

namespace dpc {

namespace {

// Shorthands used by the tables: q=r-1, s=r+1, t=r+2, u=r+3, v=2r+1, y=2r-2, z=2r-1, m=3r-2.
LinExpr deg(const std::string& tok) {
  static const std::map<std::string, std::string> alias{{"q", "r-1"},  {"s", "r+1"},  {"t", "r+2"},
                                                        {"u", "r+3"},  {"v", "2r+1"}, {"y", "2r-2"},
                                                        {"z", "2r-1"}, {"m", "3r-2"}};
  auto it = alias.find(tok);
  return LinExpr::parse(it == alias.end() ? tok : it->second);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::vector<LinExpr> degs(const std::string& s) {
  std::vector<LinExpr> out;
  for (const auto& w : words(s)) out.push_back(deg(w));
  return out;
}

// Halved grading rows such as w = 1/2(1,1,1,z,z).
std::vector<LinExpr> halves(const std::string& s) {
  std::vector<LinExpr> out;
  for (const auto& e : degs(s)) out.push_back(LinExpr::doubled(e.slope2() / 2, e.offset2() / 2));
  return out;
}

// "y0 a F_r:r 0:r" -> variables, forms with degree, zero entries with degree.
std::vector<EntrySpec> placement(const std::string& s) {
  std::vector<EntrySpec> out;
  for (const auto& w : words(s)) {
    auto colon = w.find(':');
    if (colon == std::string::npos) {
      out.push_back(EntrySpec::variable(w));
    } else if (w.substr(0, colon) == "0") {
      out.push_back(EntrySpec::zero(deg(w.substr(colon + 1))));
    } else {
      out.push_back(EntrySpec::form(w.substr(0, colon), deg(w.substr(colon + 1))));
    }
  }
  return out;
}

FormatSpec pfaffian(const std::string& printed, const std::string& place) {
  auto d = degs(printed);
  std::array<LinExpr, 10> e{};
  std::copy(d.begin(), d.end(), e.begin());
  auto fs = FormatSpec::pfaffian(e);
  fs.placement = placement(place);
  return fs;
}

// Printed 3x3 matrices have entry (i,j) of degree v_i + u_j for the printed row w = (u; v).
FormatSpec segre(const std::vector<LinExpr>& w, const std::string& place) {
  auto fs = FormatSpec::p2xp2({w[3], w[4], w[5]}, {w[0], w[1], w[2]});
  fs.placement = placement(place);
  return fs;
}

DeclaredSing sing(int count, const std::string& order, const std::string& a, const std::string& b) {
  return {count, deg(order), deg(a), deg(b)};
}

struct Law {
  long long slope, offset, n_min;
};

ModelSpec model(std::string id, std::string table, const std::string& names, const std::string& weights, FormatSpec fs,
                Law law, std::vector<DeclaredSing> basket, DeclaredK2 k2, long long h0,
                std::optional<std::string> target = std::nullopt) {
  ModelSpec ms;
  ms.id = std::move(id);
  ms.table = std::move(table);
  ms.names = words(names);
  ms.weights = degs(weights);
  ms.format = std::move(fs);
  ms.r_slope = law.slope;
  ms.r_offset = law.offset;
  ms.n_min = law.n_min;
  ms.basket = std::move(basket);
  ms.k2 = std::move(k2);
  ms.h0 = h0;
  ms.target = std::move(target);
  return ms;
}

Catalog build() {
  const Law n1{1, 1, 1}, odd{2, 1, 1}, three0{3, 0, 1}, three1{3, 1, 1};
  const Law three0b{3, 0, 2}, three1b{3, 1, 2}, three2b{3, 2, 2};
  Catalog c;

  // Complete intersections and hypersurfaces
  c.push_back(model("CI11", "1", "a b c d e", "1 1 r r z", FormatSpec::complete_intersection(degs("2r 2r")), n1,
                    {sing(1, "z", "1", "1")}, {{4}, {-1, 2}}, 2));
  c.push_back(model("CI12", "1", "z0 a b c d", "1 2 r r z", FormatSpec::complete_intersection(degs("2r v")), odd,
                    {sing(2, "r", "2", "q"), sing(1, "z", "1", "1")}, {{1, 2}, {0, -1, 2}}, 1, "HS12"));
  c.push_back(model("HS12", "1", "a b c d", "2 r r z", FormatSpec::hypersurface(deg("4r")), odd,
                    {sing(4, "r", "2", "q"), sing(1, "z", "1", "1")}, {{2}, {0, -1, 2}}, 0));
  c.push_back(model("CI13", "1", "a b c d e", "2 r r z m", FormatSpec::complete_intersection(degs("3r 4r-2")), odd,
                    {sing(3, "r", "2", "q"), sing(1, "m", "r", "z")}, {{3}, {0, -2, 3}}, 0));
  const DeclaredK2 ci2{{6, 5, 1}, {0, 6, 6}, true};
  c.push_back(model("CI21", "1", "a b c d e", "1 2 3 r s", FormatSpec::complete_intersection(degs("r+2 r+3")),
                    three0, {sing(1, "2", "1", "1"), sing(1, "3", "1", "1"), sing(1, "r", "1", "1"), sing(1, "s", "3", "r")},
                    ci2, 2));
  c.back().note = "printed (-K)^2 is a quarter of the adjunction value";
  c.push_back(model("CI22", "1", "a b c d e", "1 2 3 r s", FormatSpec::complete_intersection(degs("r+2 r+3")),
                    three1, {sing(1, "2", "1", "1"), sing(1, "r", "1", "1"), sing(1, "s", "3", "r")}, ci2, 2));
  c.back().note = c[c.size() - 2].note;

  // Pfaffian models
  c.push_back(model("PF11", "2", "y0 a b c d e", "1 1 1 r r z",
                    pfaffian("1 1 r r 1 r r r r z", "y0 a c F_r:r b H_r:r d G_r:r I_r:r e"), n1,
                    {sing(1, "z", "1", "1")}, {{3, 2}, {-1, 2}}, 3, "CI11"));
  c.back().w_row = halves("1 1 1 z z");
  c.push_back(model("PF12", "2", "y0 z0 a b c d", "1 1 2 r r z",
                    pfaffian("1 1 q r 2 r s r s z", "y0 z0 F_q:q F_r:r a b F_s:s c G_s:s d"), odd,
                    {sing(1, "r", "2", "q"), sing(1, "z", "1", "1")}, {{1, 5, 2}, {0, -2, 4}}, 2, "CI12"));
  c.back().w_row = degs("0 1 1 q r");
  c.push_back(model("PF13", "2", "y0 a b c d e", "1 2 r r z m",
                    pfaffian("1 2 r s r y z z 2r m", "y0 a b F_s:s c F_y:y d F_z:z F_2r:2r e"), odd,
                    {sing(1, "r", "2", "q"), sing(1, "m", "r", "z")}, {{1, 3}, {0, -2, 3}}, 1, "CI13"));
  c.back().w_row = halves("-r+3 r-1 r+1 3r-3 3r-1");
  c.push_back(model("PF14", "2", "a b c d e f", "2 r r s t z",
                    pfaffian("2 r r s s s t z 2r 2r", "a b c F_s:s H_s:s d e f F_2r:2r I_2r:2r"), odd,
                    {sing(1, "t", "2", "s"), sing(1, "z", "1", "1"), sing(3, "r", "2", "q")},
                    {{3, 4}, {0, -2, 3, 2}}, 0));
  c.back().w_row = halves("1 3 z z 2r+1");
  const DeclaredK2 pf2{{12, 16, 8}, {0, 3, 3}, false};
  const std::string pf2_printed = "1 1 2 q 2 3 r 3 r s";
  const std::string pf2_place = "y0 a b F_q:q F_2:2 c d F_3:3 F_r:r e";
  c.push_back(model("PF21", "2", "y0 a b c d e", "1 1 2 3 r s", pfaffian(pf2_printed, pf2_place), three0b,
                    {sing(1, "3", "1", "1"), sing(1, "r", "1", "1"), sing(1, "s", "3", "r")}, pf2, 4, "CI21"));
  c.back().w_row = degs("0 1 1 2 q");
  c.push_back(model("PF22", "2", "y0 a b c d e", "1 1 2 3 r s", pfaffian(pf2_printed, pf2_place), three1b,
                    {sing(1, "r", "1", "1"), sing(1, "s", "3", "r")}, pf2, 4, "CI22"));
  c.back().w_row = degs("0 1 1 2 q");
  c.push_back(model("PF23", "2", "y0 a b c d e", "1 3 r s t u",
                    pfaffian("1 2 r s 3 s t t u v", "y0 F_2:2 b c a F_s:s d F_t:t e F_v:v"), three2b,
                    {sing(1, "3", "1", "1"), sing(1, "r", "1", "1"), sing(1, "u", "3", "t")}, {{36, 8}, {0, 9, 3}}, 1));
  c.back().w_row = degs("0 1 2 r s");

  // P2 x P2 models
  c.push_back(model("P11", "3", "x0 y0 a b c d e", "1 1 1 1 r r z",
                    segre(degs("0 0 q 1 1 r"), "x0 y0 c a b d F_r:r G_r:r e"), n1, {sing(1, "z", "1", "1")},
                    {{2, 4}, {1, -2}, true}, 4, "PF11"));
  c.back().w_row = degs("0 0 q 1 1 r");
  c.back().note = "printed (-K)^2 has the wrong sign";
  c.push_back(model("P12", "3", "x0 a b c d e f", "1 2 r r s t z",
                    segre(degs("0 1 q 1 r s"), "x0 a b c d f F_s:s e F_2r:2r"), odd,
                    {sing(1, "r", "2", "q"), sing(1, "t", "2", "s"), sing(1, "z", "1", "1")},
                    {{1, 7, 2}, {0, -2, 3, 2}}, 1, "PF14"));
  c.back().w_row = degs("0 1 q 1 r s");
  c.push_back(model("P13", "3", "x0 a b c d e f", "1 2 2 3 r r z",
                    segre(degs("0 1 q 1 2 r"), "x0 a d b c F_s:s e G_s:s f"), odd,
                    {sing(1, "3", "1", "1"), sing(1, "z", "1", "1"), sing(2, "r", "2", "q")}, {{3, 2}, {0, -3, 6}}, 1));
  c.back().w_row = degs("0 1 q 1 2 r");

  // Reid-Suzuki surfaces of degree 25/3 - k for k = 8, 7, 6
  const Law fixed{0, 0, 1};
  c.push_back(model("RS8", "RS", "x y z t", "1 2 3 5", FormatSpec::hypersurface(deg("10")), fixed,
                    {sing(1, "3", "1", "1")}, {{1}, {3}}, 1));
  c.push_back(model("RS7", "RS", "x1 x2 y0 y1 z", "1 1 2 2 3", FormatSpec::complete_intersection(degs("4 4")), fixed,
                    {sing(1, "3", "1", "1")}, {{4}, {3}}, 2, "RS8"));
  c.push_back(model("RS6", "RS", "x0 x1 x2 y0 y1 z", "1 1 1 2 2 3",
                    pfaffian("1 1 2 2 1 2 2 2 2 3", "x0 x1 Q_1:2 Q_2:2 x2 Q_3:2 Q_4:2 y0 y1 z"), fixed,
                    {sing(1, "3", "1", "1")}, {{7}, {3}}, 3, "RS7"));
  c.back().w_row = halves("1 1 1 3 3");
  for (auto& m : c)
    if (m.table == "RS") m.n_max = 1;
  return c;
}

}  // namespace

const Catalog& builtin_catalog() {
  static const Catalog cat = build();
  return cat;
}

}  // namespace dpc
