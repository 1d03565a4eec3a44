#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "brieskorn/monomial.hpp"
#include "brieskorn/ordering.hpp"
#include "brieskorn/rational.hpp"

namespace brieskorn {

/// Finitely supported polynomial in K[s, x] with exact rational
/// coefficients; the working representative of a truncated power series.
/// No zero coefficient is ever stored, so equality of term maps is equality
/// of polynomials.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational>;
  using const_iterator = Terms::const_iterator;

  SparsePoly() = default;
  SparsePoly(const Monomial& mono, const Rational& coeff);

  static SparsePoly constant(const Rational& c, std::size_t num_s,
                             std::size_t num_x);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Rational coefficient(const Monomial& mono) const;

  /// Adds coeff * mono, dropping the entry if it cancels.
  void add_term(const Monomial& mono, const Rational& coeff);

  /// Smallest total s-degree among the terms; nullopt for zero.
  std::optional<std::uint64_t> s_order() const;
  bool is_s_free() const;

  SparsePoly times(const Monomial& mono, const Rational& coeff) const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    return a += b;
  }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    return a -= b;
  }
  friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) {
    return a *= c;
  }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) {
    return a *= c;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// d/dx_var applied `times` times.
SparsePoly derivative(const SparsePoly& p, std::size_t var,
                      std::uint32_t times = 1);
/// Mixed partial derivative with multi-index `beta` over the x-variables.
SparsePoly derivative(const SparsePoly& p, const Exponents& beta);

/// Drops every term with total s-degree >= s_order.
SparsePoly truncate(const SparsePoly& p, std::uint64_t s_order);

/// Leading exponent, coefficient and weighted degree under the block
/// ordering. Throws Error for the zero polynomial.
struct LeadingData {
  Monomial lexp;
  Rational coeff;
  Rational deg;
};
LeadingData leading_data(const SparsePoly& p, const OrderingSpec& ord);

/// The <_s-maximal s-exponent of p and the full slice of p sitting on it.
struct LeadingSlice {
  Exponents lexp_s;
  SparsePoly lead_s;
  Rational deg_s;
};
LeadingSlice leading_s_data(const SparsePoly& p, const OrderingSpec& ord);

/// Human-readable rendering, terms in descending block order.
std::string to_string(const SparsePoly& p, const OrderingSpec& ord);
std::string to_string(const Monomial& mono, const OrderingSpec& ord);

}  // namespace brieskorn
