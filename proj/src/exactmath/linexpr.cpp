#include "dpc/linexpr.hpp"

#include <cctype>

namespace dpc {

namespace {

std::string coefficient_text(long long doubled, bool with_variable) {
  long long mag = doubled < 0 ? -doubled : doubled;
  std::string body;
  if (mag % 2 == 0) {
    long long v = mag / 2;
    if (with_variable) body = (v == 1 ? "" : std::to_string(v)) + "r";
    else body = std::to_string(v);
  } else {
    body = with_variable ? (mag == 1 ? "r/2" : std::to_string(mag) + "r/2")
                         : std::to_string(mag) + "/2";
  }
  return body;
}

}  // namespace

LinExpr LinExpr::half() const {
  if (slope2_ % 2 != 0 || offset2_ % 2 != 0)
    throw std::domain_error("cannot halve " + str() + " exactly");
  return {slope2_ / 2, offset2_ / 2, 0};
}

std::string LinExpr::str() const {
  std::string out;
  if (slope2_ != 0) {
    if (slope2_ < 0) out += "-";
    out += coefficient_text(slope2_, true);
  }
  if (offset2_ != 0 || slope2_ == 0) {
    if (!out.empty()) out += offset2_ < 0 ? "-" : "+";
    else if (offset2_ < 0) out += "-";
    out += coefficient_text(offset2_, false);
  }
  return out;
}

LinExpr LinExpr::parse(const std::string& text) {
  long long slope2 = 0, offset2 = 0;
  std::size_t i = 0;
  auto fail = [&]() -> LinExpr { throw std::invalid_argument("cannot parse affine expression '" + text + "'"); };
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == text.size()) return fail();
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      return fail();
    }
    first = false;
    long long num = -1;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = (num < 0 ? 0 : num * 10) + (text[i] - '0');
      ++i;
    }
    bool has_r = false;
    if (i < text.size() && text[i] == '*') ++i;
    if (i < text.size() && text[i] == 'r') {
      has_r = true;
      ++i;
    }
    if (num < 0 && !has_r) return fail();
    if (num < 0) num = 1;
    long long den = 1;
    if (i < text.size() && text[i] == '/') {
      ++i;
      den = 0;
      bool any = false;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        den = den * 10 + (text[i] - '0');
        ++i;
        any = true;
      }
      if (!any || (den != 1 && den != 2)) return fail();
    }
    long long doubled = sign * num * (den == 1 ? 2 : 1);
    if (has_r) slope2 += doubled;
    else offset2 += doubled;
  }
  return {slope2, offset2, 0};
}

}  // namespace dpc
