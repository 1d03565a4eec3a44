#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>

namespace brieskorn {

using Exponents = boost::container::small_vector<std::uint32_t, 4>;

/// s^alpha * x^beta in the joined ring K[s_1..s_m, x_1..x_n].
///
/// The comparison operators below give a fixed storage order (lexicographic
/// on the raw exponent tuples). They have nothing to do with the local
/// orderings; use OrderingSpec for those.
struct Monomial {
  Exponents s;
  Exponents x;

  Monomial() = default;
  Monomial(Exponents s_exp, Exponents x_exp)
      : s(std::move(s_exp)), x(std::move(x_exp)) {}

  static Monomial one(std::size_t num_s, std::size_t num_x);
  static Monomial x_var(std::size_t num_s, std::size_t num_x, std::size_t i,
                        std::uint32_t power = 1);
  static Monomial s_var(std::size_t num_s, std::size_t num_x, std::size_t j,
                        std::uint32_t power = 1);

  std::size_t num_s() const { return s.size(); }
  std::size_t num_x() const { return x.size(); }

  bool is_one() const;
  std::uint64_t s_order() const;
  std::uint64_t x_total_degree() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.s == b.s && a.x == b.x;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.x < b.x;
  }
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

bool divides(const Exponents& a, const Exponents& b);

}  // namespace brieskorn
