#include "brieskorn/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

bool is_name_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& x_vars,
         const std::vector<std::string>& s_vars)
      : text_(text), x_vars_(x_vars), s_vars_(s_vars) {}

  SparsePoly poly() {
    SparsePoly out;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_space();
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [mono, coeff] = term();
      out.add_term(mono, sign * coeff);
      first = false;
      skip_space();
      if (at_end()) break;
    }
    return out;
  }

  std::pair<Monomial, Rational> term() {
    Monomial mono = Monomial::one(s_vars_.size(), x_vars_.size());
    Rational coeff = 1;
    bool have_factor = false;
    while (true) {
      skip_space();
      if (have_factor) {
        if (peek() == '*') {
          ++pos_;
          skip_space();
          if (!starts_factor()) throw ParseError("expected factor after '*'", pos_);
        } else if (!starts_factor()) {
          break;
        }
      } else if (!starts_factor()) {
        throw ParseError("expected a coefficient or a variable", pos_);
      }
      if (is_digit(peek())) {
        coeff *= number();
      } else {
        variable(mono);
      }
      have_factor = true;
    }
    return {mono, coeff};
  }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

 private:
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool starts_factor() const { return is_digit(peek()) || is_name_start(peek()); }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational number() {
    Integer num(digits(), 10);
    Integer den = 1;
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      std::size_t at = pos_;
      den = Integer(digits(), 10);
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  void variable(Monomial& mono) {
    std::size_t start = pos_;
    while (!at_end() && is_name_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    std::uint32_t power = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t at = pos_;
      std::string d = digits();
      if (d.size() > 9) throw ParseError("exponent too large", at);
      power = static_cast<std::uint32_t>(std::stoul(d));
    }
    if (auto i = index_of(x_vars_, name)) {
      mono.x[*i] += power;
    } else if (auto j = index_of(s_vars_, name)) {
      mono.s[*j] += power;
    } else {
      throw ParseError("unknown variable '" + name + "'", start);
    }
  }

  static std::optional<std::size_t> index_of(const std::vector<std::string>& names,
                                             const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
  }

  std::string_view text_;
  const std::vector<std::string>& x_vars_;
  const std::vector<std::string>& s_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const std::vector<std::string>& x_vars,
                      const std::vector<std::string>& s_vars) {
  return Parser(text, x_vars, s_vars).poly();
}

Monomial parse_monomial(std::string_view text, const std::vector<std::string>& x_vars,
                        const std::vector<std::string>& s_vars) {
  Parser parser(text, x_vars, s_vars);
  auto [mono, coeff] = parser.term();
  parser.skip_space();
  if (!parser.at_end()) throw ParseError("trailing characters after monomial", text.size());
  if (coeff != 1) throw ParseError("monomial must have coefficient 1", 0);
  return mono;
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_name_start(text[i])) {
      std::size_t start = i;
      while (i < text.size() && is_name_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        names.push_back(std::move(name));
      }
    } else if (is_digit(text[i])) {
      while (i < text.size() && is_digit(text[i])) ++i;
    } else {
      ++i;
    }
  }
  return names;
}

}  // namespace brieskorn
