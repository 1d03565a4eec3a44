#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "brieskorn/monomial.hpp"
#include "brieskorn/rational.hpp"

namespace brieskorn {

/// How monomials of equal weighted degree are ordered inside a block.
enum class TieBreak {
  /// The earlier variable with the larger exponent wins (x > y for x, y).
  Lex,
  /// Negative degree reverse lexicographic: the last differing variable with
  /// the smaller exponent wins.
  RevLex,
};

/// Local weighted degree orderings on the x and s blocks and the block
/// ordering (<_s, <_x) on K[[s, x]].
///
/// All weights must be strictly negative, so 1 is the largest monomial.
/// Degrees are kept exactly as rationals but comparisons run on integer
/// multiples scaled by the common denominator of all weights.
class OrderingSpec {
 public:
  OrderingSpec() = default;
  OrderingSpec(std::vector<std::string> x_vars, std::vector<Rational> x_weights,
               std::vector<std::string> s_vars = {},
               std::vector<Rational> s_weights = {},
               TieBreak tie_break = TieBreak::Lex);

  /// Every x-variable weighted -1, no s-variables.
  static OrderingSpec uniform(std::vector<std::string> x_vars,
                              TieBreak tie_break = TieBreak::Lex);

  /// Same x block, new s block.
  OrderingSpec with_s_block(std::vector<std::string> s_vars,
                            std::vector<Rational> s_weights) const;

  const std::vector<std::string>& x_vars() const { return x_vars_; }
  const std::vector<std::string>& s_vars() const { return s_vars_; }
  const std::vector<Rational>& x_weights() const { return x_weights_; }
  const std::vector<Rational>& s_weights() const { return s_weights_; }
  TieBreak tie_break() const { return tie_break_; }
  std::size_t num_x() const { return x_vars_.size(); }
  std::size_t num_s() const { return s_vars_.size(); }

  Rational x_degree(const Exponents& x) const;
  Rational s_degree(const Exponents& s) const;
  Rational degree(const Monomial& mono) const;

  /// min_i deg(x_i), resp. min_j deg(s_j).
  Rational min_x_degree() const;
  Rational min_s_degree() const;

  /// Degrees multiplied by scale(); exact integers.
  std::int64_t scaled_x_degree(const Exponents& x) const;
  std::int64_t scaled_s_degree(const Exponents& s) const;
  std::int64_t scaled_degree(const Monomial& mono) const {
    return scaled_s_degree(mono.s) + scaled_x_degree(mono.x);
  }
  const std::vector<std::int64_t>& scaled_x_weights() const {
    return x_scaled_;
  }
  std::int64_t scale() const { return scale_; }
  Rational unscale(std::int64_t scaled) const {
    Rational q(scaled, scale_);
    q.canonicalize();
    return q;
  }

  std::strong_ordering compare_x(const Exponents& a, const Exponents& b) const;
  std::strong_ordering compare_s(const Exponents& a, const Exponents& b) const;
  /// Block ordering: s-parts first, then x-parts. No dimension checks.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    auto c = compare_s(a.s, b.s);
    return c != 0 ? c : compare_x(a.x, b.x);
  }

  /// Does `mono` live in the variable sets of this ordering?
  bool fits(const Monomial& mono) const {
    return mono.s.size() == s_vars_.size() && mono.x.size() == x_vars_.size();
  }

 private:
  void rescale();
  std::strong_ordering compare_block(const Exponents& a, const Exponents& b,
                                     const std::vector<std::int64_t>& w) const;

  std::vector<std::string> x_vars_;
  std::vector<std::string> s_vars_;
  std::vector<Rational> x_weights_;
  std::vector<Rational> s_weights_;
  TieBreak tie_break_ = TieBreak::Lex;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> x_scaled_;
  std::vector<std::int64_t> s_scaled_;
};

/// Checked three-way comparison; throws DimensionMismatch when either
/// monomial does not fit the ordering.
std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b,
                                  const OrderingSpec& ord);

/// Strict weak order placing larger monomials first (lead at begin()).
struct Descending {
  const OrderingSpec* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ord->compare(a, b) > 0;
  }
};

struct DescendingX {
  const OrderingSpec* ord;
  bool operator()(const Exponents& a, const Exponents& b) const {
    return ord->compare_x(a, b) > 0;
  }
};

}  // namespace brieskorn
