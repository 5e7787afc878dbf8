#include <cubline/rational.hpp>

#include <cubline/errors.hpp>

#include <cctype>

namespace cubline {

Rational rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  bool saw_digit = false;
  bool saw_slash = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      saw_digit = true;
    } else if (c == '/' && saw_digit && !saw_slash) {
      saw_slash = true;
      saw_digit = false;
    } else {
      throw ParseError("bad rational literal: " + text);
    }
  }
  if (!saw_digit) throw ParseError("bad rational literal: " + text);
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) throw ParseError("bad rational literal: " + text);
  if (q.get_den() == 0) throw ParseError("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace cubline
