#include "brieskorn/rational.hpp"

#include <cctype>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected digits", offset);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected digit", offset + i);
    }
  }
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  auto slash = text.find('/', pos);
  Integer num = parse_integer(text.substr(pos, slash - pos), pos);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  Integer num;
  Integer den;
  mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rational g(num, den);
  g.canonicalize();
  return g;
}

}  // namespace brieskorn
