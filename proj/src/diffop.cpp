#include "brieskorn/diffop.hpp"

#include <functional>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

Integer binomial(std::uint32_t n, std::uint32_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Calls fn(gamma) for every multi-index gamma <= beta.
void for_each_below(const Exponents& beta,
                    const std::function<void(const Exponents&)>& fn) {
  Exponents gamma(beta.size(), 0);
  while (true) {
    fn(gamma);
    std::size_t i = 0;
    while (i < beta.size() && gamma[i] == beta[i]) gamma[i++] = 0;
    if (i == beta.size()) return;
    ++gamma[i];
  }
}

}  // namespace

DiffOp DiffOp::multiplication(const SparsePoly& c) {
  DiffOp op;
  if (!c.is_zero()) {
    op.add_term(Exponents(c.begin()->first.x.size(), 0), c);
  }
  return op;
}

DiffOp DiffOp::partial(std::size_t i, std::size_t num_s, std::size_t num_x) {
  DiffOp op;
  Exponents beta(num_x, 0);
  beta[i] = 1;
  op.add_term(beta, SparsePoly::constant(1, num_s, num_x));
  return op;
}

void DiffOp::add_term(const Exponents& beta, const SparsePoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(beta, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly DiffOp::apply(const SparsePoly& p) const {
  SparsePoly r;
  for (const auto& [beta, c] : terms_) r += c * derivative(p, beta);
  return r;
}

DiffOp DiffOp::left_multiply(const SparsePoly& c) const {
  DiffOp r;
  for (const auto& [beta, coeff] : terms_) r.add_term(beta, c * coeff);
  return r;
}

DiffOp DiffOp::compose_function(const SparsePoly& c) const {
  // d^beta o c = sum_{gamma <= beta} binom(beta, gamma) d^{beta-gamma}(c) d^gamma
  DiffOp r;
  for (const auto& [beta, coeff] : terms_) {
    for_each_below(beta, [&](const Exponents& gamma) {
      Exponents rest = beta;
      Integer weight = 1;
      for (std::size_t i = 0; i < beta.size(); ++i) {
        rest[i] -= gamma[i];
        weight *= binomial(beta[i], gamma[i]);
      }
      SparsePoly term = coeff * (derivative(c, rest) * Rational(weight));
      r.add_term(gamma, term);
    });
  }
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  for (const auto& [beta, c] : other.terms_) add_term(beta, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  for (const auto& [beta, c] : other.terms_) add_term(beta, -c);
  return *this;
}

std::optional<Rational> DiffOp::max_degree(const OrderingSpec& ord) const {
  std::optional<Rational> best;
  for (const auto& [beta, c] : terms_) {
    Rational d_beta = -ord.x_degree(beta);
    for (const auto& [m, v] : c) {
      Rational d = ord.x_degree(m.x) + d_beta;
      if (ord.num_s() == m.s.size()) d += ord.s_degree(m.s);
      if (!best || d > *best) best = d;
    }
  }
  return best;
}

SparsePoly diff_apply(std::span<const DiffOp> row, std::span<const SparsePoly> v) {
  if (row.size() != v.size()) {
    throw DimensionMismatch("operator row and column have different lengths");
  }
  SparsePoly r;
  for (std::size_t i = 0; i < row.size(); ++i) r += row[i].apply(v[i]);
  return r;
}

std::string to_string(const DiffOp& op, const OrderingSpec& ord) {
  if (op.is_zero()) return "0";
  std::string out;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    const auto& [beta, c] = *it;
    std::string d;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (beta[i] == 0) continue;
      if (!d.empty()) d += '*';
      d += "d" + ord.x_vars()[i];
      if (beta[i] > 1) d += '^' + std::to_string(beta[i]);
    }
    std::string coeff = to_string(c, ord);
    if (!out.empty()) out += " + ";
    out += d.empty() ? coeff : "(" + coeff + ")*" + d;
  }
  return out;
}

}  // namespace brieskorn
