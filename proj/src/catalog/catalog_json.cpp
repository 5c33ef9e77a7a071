#include "dpc/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dpc {

using nlohmann::json;

namespace {

json lin(const LinExpr& e) { return {{"slope2", e.slope2()}, {"offset2", e.offset2()}}; }

json lins(const auto& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(lin(e));
  return a;
}

json entry(const EntrySpec& e) {
  switch (e.kind) {
    case EntrySpec::Kind::Variable: return {{"kind", "variable"}, {"name", e.name}};
    case EntrySpec::Kind::Form: return {{"kind", "form"}, {"name", e.name}, {"degree", lin(e.degree)}};
    case EntrySpec::Kind::Zero: return {{"kind", "zero"}, {"degree", lin(e.degree)}};
  }
  return {};
}

json format(const FormatSpec& fs) {
  json j{{"kind", to_string(fs.kind)}};
  switch (fs.kind) {
    case FormatKind::Hypersurface:
    case FormatKind::CompleteIntersection: j["degrees"] = lins(fs.degrees); break;
    case FormatKind::Pfaffian5: j["entries"] = lins(fs.pf); break;
    case FormatKind::P2xP2:
      j["u"] = lins(fs.u);
      j["v"] = lins(fs.v);
      break;
  }
  if (!fs.placement.empty()) {
    j["placement"] = json::array();
    for (const auto& e : fs.placement) j["placement"].push_back(entry(e));
  }
  return j;
}

json model(const ModelSpec& ms) {
  json j{{"id", ms.id}, {"table", ms.table}, {"names", ms.names}, {"weights", lins(ms.weights)},
         {"format", format(ms.format)}};
  j["law"] = {{"slope", ms.r_slope}, {"offset", ms.r_offset}, {"n_min", ms.n_min}};
  if (ms.n_max) j["law"]["n_max"] = *ms.n_max;
  if (!ms.w_row.empty()) j["w_row"] = lins(ms.w_row);
  j["basket"] = json::array();
  for (const auto& s : ms.basket)
    j["basket"].push_back({{"count", s.count}, {"order", lin(s.order)}, {"a", lin(s.a)}, {"b", lin(s.b)}});
  j["k2"] = {{"num", ms.k2.num}, {"den", ms.k2.den}, {"known_discrepant", ms.k2.known_discrepant}};
  j["h0"] = ms.h0;
  if (ms.target) j["target"] = *ms.target;
  if (!ms.note.empty()) j["note"] = ms.note;
  return j;
}

// Reader that reports the JSON path of the offending field.
struct Reader {
  const json& j;
  std::string path;

  [[noreturn]] void fail(const std::string& msg) const { throw Error("Schema", path + ": " + msg); }

  Reader at(const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    if (!j.contains(key)) fail("missing field '" + key + "'");
    return {j.at(key), path + "." + key};
  }
  bool has(const std::string& key) const { return j.is_object() && j.contains(key); }
  Reader at(std::size_t i) const { return {j.at(i), path + "[" + std::to_string(i) + "]"}; }
  std::size_t size() const {
    if (!j.is_array()) fail("expected an array");
    return j.size();
  }
  long long integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<long long>();
  }
  std::string string() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  bool boolean() const {
    if (!j.is_boolean()) fail("expected true or false");
    return j.get<bool>();
  }
  // Accepts {slope2, offset2} or a written form such as "2r-1".
  LinExpr linexpr() const {
    if (j.is_string()) {
      try {
        return LinExpr::parse(j.get<std::string>());
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    return LinExpr::doubled(at("slope2").integer(), at("offset2").integer());
  }
  std::vector<LinExpr> linexprs() const {
    std::vector<LinExpr> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).linexpr());
    return out;
  }
  std::vector<long long> integers() const {
    std::vector<long long> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).integer());
    return out;
  }
};

template <std::size_t N>
std::array<LinExpr, N> fixed(const Reader& r) {
  auto v = r.linexprs();
  if (v.size() != N) r.fail("expected " + std::to_string(N) + " entries");
  std::array<LinExpr, N> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

FormatSpec read_format(const Reader& r) {
  FormatSpec fs;
  std::string kind = r.at("kind").string();
  FormatKind k;
  try {
    k = format_kind_from_string(kind);
  } catch (const Error&) {
    r.at("kind").fail("unknown format kind '" + kind + "'");
  }
  switch (k) {
    case FormatKind::Hypersurface:
    case FormatKind::CompleteIntersection: {
      auto d = r.at("degrees").linexprs();
      if (d.empty()) r.at("degrees").fail("needs at least one degree");
      if (k == FormatKind::Hypersurface && d.size() != 1) r.at("degrees").fail("a hypersurface has one degree");
      fs = FormatSpec::complete_intersection(d);
      break;
    }
    case FormatKind::Pfaffian5: fs = FormatSpec::pfaffian(fixed<10>(r.at("entries"))); break;
    case FormatKind::P2xP2: fs = FormatSpec::p2xp2(fixed<3>(r.at("u")), fixed<3>(r.at("v"))); break;
  }
  if (r.has("placement")) {
    auto p = r.at("placement");
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto e = p.at(i);
      std::string ek = e.at("kind").string();
      if (ek == "variable") fs.placement.push_back(EntrySpec::variable(e.at("name").string()));
      else if (ek == "form") fs.placement.push_back(EntrySpec::form(e.at("name").string(), e.at("degree").linexpr()));
      else if (ek == "zero") fs.placement.push_back(EntrySpec::zero(e.at("degree").linexpr()));
      else e.at("kind").fail("unknown entry kind '" + ek + "'");
    }
  }
  return fs;
}

ModelSpec read_model(const Reader& r) {
  ModelSpec ms;
  ms.id = r.at("id").string();
  ms.table = r.at("table").string();
  auto names = r.at("names");
  for (std::size_t i = 0; i < names.size(); ++i) ms.names.push_back(names.at(i).string());
  ms.weights = r.at("weights").linexprs();
  ms.format = read_format(r.at("format"));
  auto law = r.at("law");
  ms.r_slope = law.at("slope").integer();
  ms.r_offset = law.at("offset").integer();
  ms.n_min = law.at("n_min").integer();
  if (law.has("n_max")) ms.n_max = law.at("n_max").integer();
  if (r.has("w_row")) ms.w_row = r.at("w_row").linexprs();
  auto b = r.at("basket");
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto s = b.at(i);
    ms.basket.push_back({static_cast<int>(s.at("count").integer()), s.at("order").linexpr(), s.at("a").linexpr(),
                         s.at("b").linexpr()});
  }
  auto k2 = r.at("k2");
  ms.k2.num = k2.at("num").integers();
  ms.k2.den = k2.at("den").integers();
  ms.k2.known_discrepant = k2.has("known_discrepant") && k2.at("known_discrepant").boolean();
  ms.h0 = r.at("h0").integer();
  if (r.has("target")) ms.target = r.at("target").string();
  if (r.has("note")) ms.note = r.at("note").string();
  return ms;
}

}  // namespace

std::string dump_catalog(const Catalog& cat) {
  json j{{"models", json::array()}};
  for (const auto& ms : cat) j["models"].push_back(model(ms));
  return j.dump(2) + "\n";
}

Catalog parse_catalog(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("Schema", e.what());
  }
  Reader root{j, "$"};
  auto models = root.at("models");
  Catalog cat;
  for (std::size_t i = 0; i < models.size(); ++i) cat.push_back(read_model(models.at(i)));
  validate_catalog(cat);
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("Schema", "cannot open catalog file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

}  // namespace dpc
