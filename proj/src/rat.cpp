#include "tricolor/rat.hpp"

#include <cctype>

namespace tricolor {

Rat rat_from_decimal(std::string_view s) {
  std::size_t i = 0;
  auto fail = [&]() -> Rat { throw BadInput("not a decimal number: '" + std::string(s) + "'"); };
  if (s.empty()) return fail();
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  Int num = 0;
  long frac_digits = 0;
  bool any = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    num = num * 10 + (s[i] - '0');
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      num = num * 10 + (s[i] - '0');
      ++frac_digits;
      any = true;
    }
  }
  if (!any) return fail();
  long expo = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = (s[i] == '-');
      ++i;
    }
    if (i >= s.size()) return fail();
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
      expo = expo * 10 + (s[i] - '0');
    if (eneg) expo = -expo;
  }
  if (i != s.size()) return fail();
  long p = expo - frac_digits;
  Rat r(num);
  if (p > 0)
    r *= Rat(int_pow(10, static_cast<unsigned long>(p)));
  else if (p < 0)
    r /= Rat(int_pow(10, static_cast<unsigned long>(-p)));
  if (neg) r = -r;
  r.canonicalize();
  return r;
}

}  // namespace tricolor
