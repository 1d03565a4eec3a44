#include "brieskorn/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace brieskorn {

Monomial Monomial::one(std::size_t num_s, std::size_t num_x) {
  return Monomial(Exponents(num_s, 0), Exponents(num_x, 0));
}

Monomial Monomial::x_var(std::size_t num_s, std::size_t num_x, std::size_t i,
                         std::uint32_t power) {
  Monomial m = one(num_s, num_x);
  m.x[i] = power;
  return m;
}

Monomial Monomial::s_var(std::size_t num_s, std::size_t num_x, std::size_t j,
                         std::uint32_t power) {
  Monomial m = one(num_s, num_x);
  m.s[j] = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(s.begin(), s.end(), [](auto e) { return e == 0; }) &&
         std::all_of(x.begin(), x.end(), [](auto e) { return e == 0; });
}

std::uint64_t Monomial::s_order() const {
  std::uint64_t total = 0;
  for (auto e : s) total += e;
  return total;
}

std::uint64_t Monomial::x_total_degree() const {
  std::uint64_t total = 0;
  for (auto e : x) total += e;
  return total;
}

bool divides(const Exponents& a, const Exponents& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  return brieskorn::divides(s, other.s) && brieskorn::divides(x, other.x);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.s.size(); ++i) r.s[i] += b.s[i];
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] += b.x[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial r = a;
  for (std::size_t i = 0; i < r.s.size(); ++i) r.s[i] -= b.s[i];
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] -= b.x[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.s.size(); ++i) r.s[i] = std::max(r.s[i], b.s[i]);
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] = std::max(r.x[i], b.x[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.s.size(); ++i) {
    if (a.s[i] != 0 && b.s[i] != 0) return false;
  }
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    if (a.x[i] != 0 && b.x[i] != 0) return false;
  }
  return true;
}

}  // namespace brieskorn
