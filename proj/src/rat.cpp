#include "rquant/rat.hpp"

#include <cctype>

#include "rquant/errors.hpp"

namespace rquant {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_int(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("malformed rational literal component '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const mpz_class num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw ParseError("negative denominator in '" + std::string(text) + "'");
  }
  const mpz_class den = parse_int(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rat(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string pretty_rat(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return format_rat(c);
}

Rat binomial(const Rat& p, unsigned k) {
  Rat acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= (p - i);
    acc /= (i + 1);
  }
  return acc;
}

Rat factorial(unsigned k) {
  Rat acc = 1;
  for (unsigned i = 2; i <= k; ++i) acc *= i;
  return acc;
}

}  // namespace rquant
