#pragma once

#include "dpc/error.hpp"
#include "dpc/linexpr.hpp"
#include "dpc/series.hpp"
#include "dpc/wps.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dpc {

enum class FormatKind { Hypersurface, CompleteIntersection, Pfaffian5, P2xP2 };

std::string to_string(FormatKind k);
FormatKind format_kind_from_string(const std::string& s);

/// What sits at one matrix position of a format placement.
struct EntrySpec {
  enum class Kind { Variable, Form, Zero };
  Kind kind = Kind::Form;
  std::string name;  // variable name or form label such as "F_r"
  LinExpr degree;    // degree of a form or a zero entry; ignored for variables

  static EntrySpec variable(std::string n) { return {Kind::Variable, std::move(n), {}}; }
  static EntrySpec form(std::string n, LinExpr d) { return {Kind::Form, std::move(n), d}; }
  static EntrySpec zero(LinExpr d) { return {Kind::Zero, "0", d}; }
  bool operator==(const EntrySpec&) const = default;
};

/// Pfaffian upper-triangle positions in the order 12,13,14,15,23,24,25,34,35,45 (0-based pairs).
inline constexpr std::array<std::pair<int, int>, 10> kPfPositions{
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
int pf_slot(int i, int j);

struct FormatSpec {
  FormatKind kind = FormatKind::CompleteIntersection;
  std::vector<LinExpr> degrees;      // hypersurface / complete intersection
  std::array<LinExpr, 10> pf{};      // Pfaffian entry degrees, kPfPositions order
  std::array<LinExpr, 3> u{}, v{};   // P2xP2 row and column weights
  /// Optional placement: 10 entries (Pfaffian) or 9 row-major entries (P2xP2).
  std::vector<EntrySpec> placement;

  static FormatSpec hypersurface(LinExpr d);
  static FormatSpec complete_intersection(std::vector<LinExpr> ds);
  static FormatSpec pfaffian(std::array<LinExpr, 10> entries);
  static FormatSpec p2xp2(std::array<LinExpr, 3> u, std::array<LinExpr, 3> v);

  int codim() const;
  LinExpr pf_degree(int i, int j) const { return pf[pf_slot(i, j)]; }
  LinExpr p2_degree(int i, int j) const { return u[i] + v[j]; }
  /// Degrees of the defining equations (Pfaffians, minors, ...).
  std::vector<LinExpr> equation_degrees() const;
  /// Positions (Pfaffian slots) recorded as zero entries.
  std::vector<std::pair<int, int>> zero_entries() const;
  std::string str() const;
  bool operator==(const FormatSpec&) const = default;
};

struct PfaffianData {
  std::array<LinExpr, 5> b;
  std::array<LinExpr, 5> d;  // degree of the Pfaffian omitting row i
  LinExpr s;
};

/// Splits entry degrees as b_i + b_j. Integrality of d_i and s is checked at
/// every r in `r_values`, or for all r when the list is empty.
PfaffianData pfaffian_data(const std::array<LinExpr, 10>& entries, const std::vector<long long>& r_values = {});

struct HilbertData {
  SeriesPoly numerator;
  long long k = 0;
  int codim = 0;
  long long socle = 0;
};

HilbertData hilbert_numerator(const FormatSpec& fs, const std::vector<int>& weights, long long r);

/// Degrees u_i + u_j + v_k + v_l of the nine 2x2 minors, row pairs outer.
std::vector<LinExpr> minor_degrees(const std::array<LinExpr, 3>& u, const std::array<LinExpr, 3>& v);

/// Checks a placement against ambient weights at r; throws EntryMismatch.
void format_entry_check(const FormatSpec& fs, const WeightedSpace& ambient, long long r);

}  // namespace dpc
