#include "brieskorn/ordering.hpp"

#include <algorithm>

#include "brieskorn/errors.hpp"

namespace brieskorn {

OrderingSpec::OrderingSpec(std::vector<std::string> x_vars,
                           std::vector<Rational> x_weights,
                           std::vector<std::string> s_vars,
                           std::vector<Rational> s_weights, TieBreak tie_break)
    : x_vars_(std::move(x_vars)),
      s_vars_(std::move(s_vars)),
      x_weights_(std::move(x_weights)),
      s_weights_(std::move(s_weights)),
      tie_break_(tie_break) {
  if (x_vars_.size() != x_weights_.size()) {
    throw DimensionMismatch("x-variables and x-weights differ in length");
  }
  if (s_vars_.size() != s_weights_.size()) {
    throw DimensionMismatch("s-variables and s-weights differ in length");
  }
  for (const auto& w : x_weights_) {
    if (w >= 0) throw InvalidWeights("x-weights must be strictly negative");
  }
  for (const auto& w : s_weights_) {
    if (w >= 0) throw InvalidWeights("s-weights must be strictly negative");
  }
  rescale();
}

OrderingSpec OrderingSpec::uniform(std::vector<std::string> x_vars,
                                   TieBreak tie_break) {
  std::vector<Rational> w(x_vars.size(), Rational(-1));
  return OrderingSpec(std::move(x_vars), std::move(w), {}, {}, tie_break);
}

OrderingSpec OrderingSpec::with_s_block(std::vector<std::string> s_vars,
                                        std::vector<Rational> s_weights) const {
  return OrderingSpec(x_vars_, x_weights_, std::move(s_vars),
                      std::move(s_weights), tie_break_);
}

void OrderingSpec::rescale() {
  Integer common = 1;
  auto absorb = [&](const Rational& w) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), w.get_den_mpz_t());
  };
  std::for_each(x_weights_.begin(), x_weights_.end(), absorb);
  std::for_each(s_weights_.begin(), s_weights_.end(), absorb);
  if (!common.fits_slong_p()) throw InvalidWeights("weight denominators too large");
  scale_ = common.get_si();
  auto scaled = [&](const Rational& w) {
    Rational v = w * Rational(common);
    if (!v.get_num().fits_slong_p()) throw InvalidWeights("weights too large");
    return static_cast<std::int64_t>(v.get_num().get_si());
  };
  x_scaled_.clear();
  s_scaled_.clear();
  for (const auto& w : x_weights_) x_scaled_.push_back(scaled(w));
  for (const auto& w : s_weights_) s_scaled_.push_back(scaled(w));
}

std::int64_t OrderingSpec::scaled_x_degree(const Exponents& x) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x_scaled_[i] * x[i];
  return d;
}

std::int64_t OrderingSpec::scaled_s_degree(const Exponents& s) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) d += s_scaled_[i] * s[i];
  return d;
}

Rational OrderingSpec::x_degree(const Exponents& x) const {
  return unscale(scaled_x_degree(x));
}

Rational OrderingSpec::s_degree(const Exponents& s) const {
  return unscale(scaled_s_degree(s));
}

Rational OrderingSpec::degree(const Monomial& mono) const {
  return unscale(scaled_degree(mono));
}

Rational OrderingSpec::min_x_degree() const {
  if (x_weights_.empty()) return 0;
  return *std::min_element(x_weights_.begin(), x_weights_.end());
}

Rational OrderingSpec::min_s_degree() const {
  if (s_weights_.empty()) return 0;
  return *std::min_element(s_weights_.begin(), s_weights_.end());
}

std::strong_ordering OrderingSpec::compare_block(
    const Exponents& a, const Exponents& b,
    const std::vector<std::int64_t>& w) const {
  std::int64_t da = 0;
  std::int64_t db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += w[i] * a[i];
    db += w[i] * b[i];
  }
  if (da != db) return da <=> db;
  if (tie_break_ == TieBreak::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
  } else {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering OrderingSpec::compare_x(const Exponents& a,
                                             const Exponents& b) const {
  return compare_block(a, b, x_scaled_);
}

std::strong_ordering OrderingSpec::compare_s(const Exponents& a,
                                             const Exponents& b) const {
  return compare_block(a, b, s_scaled_);
}

std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                  const OrderingSpec& ord) {
  if (!ord.fits(a) || !ord.fits(b)) {
    throw DimensionMismatch("monomial does not match the ordering's variables");
  }
  return ord.compare(a, b);
}

}  // namespace brieskorn
