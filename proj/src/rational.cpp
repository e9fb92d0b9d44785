#include "whittaker/rational.hpp"

#include <cctype>
#include <string>

#include "whittaker/errors.hpp"

namespace whittaker {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  std::string t(s);
  while (!t.empty() && t.front() == ' ') t.erase(t.begin());
  while (!t.empty() && t.back() == ' ') t.pop_back();
  if (t.empty()) throw ParseError("empty rational");
  if (t.front() == '+') t.erase(t.begin());
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw ParseError("bad rational '" + t + "'");
  Rational r;
  if (r.set_str(t, 10) != 0) throw ParseError("bad rational '" + t + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + t + "'");
  r.canonicalize();
  return r;
}

std::string format_coords(const std::vector<int>& beta) {
  std::string s = "(";
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(beta[i]);
  }
  return s + ")";
}

}  // namespace whittaker
