#include "brieskorn/poly.hpp"

#include <algorithm>
#include <vector>

#include "brieskorn/errors.hpp"

namespace brieskorn {

SparsePoly::SparsePoly(const Monomial& mono, const Rational& coeff) {
  if (coeff != 0) terms_.emplace(mono, coeff);
}

SparsePoly SparsePoly::constant(const Rational& c, std::size_t num_s,
                                std::size_t num_x) {
  return SparsePoly(Monomial::one(num_s, num_x), c);
}

Rational SparsePoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::uint64_t> SparsePoly::s_order() const {
  std::optional<std::uint64_t> best;
  for (const auto& [mono, c] : terms_) {
    auto o = mono.s_order();
    if (!best || o < *best) best = o;
  }
  return best;
}

bool SparsePoly::is_s_free() const {
  auto o = s_order();
  return !o || std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.first.s_order() == 0;
  });
}

SparsePoly SparsePoly::times(const Monomial& mono, const Rational& coeff) const {
  SparsePoly r;
  if (coeff == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c * coeff);
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  const SparsePoly& small = a.size() <= b.size() ? a : b;
  const SparsePoly& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small) r += large.times(m, c);
  return r;
}

SparsePoly derivative(const SparsePoly& p, std::size_t var, std::uint32_t times) {
  SparsePoly r;
  for (const auto& [m, c] : p) {
    if (m.x[var] < times) continue;
    Rational factor = c;
    for (std::uint32_t k = 0; k < times; ++k) factor *= m.x[var] - k;
    Monomial d = m;
    d.x[var] -= times;
    r.add_term(d, factor);
  }
  return r;
}

SparsePoly derivative(const SparsePoly& p, const Exponents& beta) {
  SparsePoly r = p;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] != 0) r = derivative(r, i, beta[i]);
  }
  return r;
}

SparsePoly truncate(const SparsePoly& p, std::uint64_t s_order) {
  SparsePoly r;
  for (const auto& [m, c] : p) {
    if (m.s_order() < s_order) r.add_term(m, c);
  }
  return r;
}

LeadingData leading_data(const SparsePoly& p, const OrderingSpec& ord) {
  if (p.is_zero()) throw Error("zero polynomial has no leading term");
  auto best = p.begin();
  for (auto it = std::next(p.begin()); it != p.end(); ++it) {
    if (ord.compare(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second, ord.degree(best->first)};
}

LeadingSlice leading_s_data(const SparsePoly& p, const OrderingSpec& ord) {
  if (p.is_zero()) throw Error("zero polynomial has no leading s-term");
  const Exponents* best = &p.begin()->first.s;
  for (const auto& [m, c] : p) {
    if (ord.compare_s(m.s, *best) > 0) best = &m.s;
  }
  LeadingSlice out{*best, {}, ord.s_degree(*best)};
  for (const auto& [m, c] : p) {
    if (m.s == out.lexp_s) out.lead_s.add_term(m, c);
  }
  return out;
}

namespace {

void append_power(std::string& out, const std::string& name, std::uint32_t e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += name;
  if (e > 1) out += '^' + std::to_string(e);
}

}  // namespace

std::string to_string(const Monomial& mono, const OrderingSpec& ord) {
  std::string out;
  for (std::size_t j = 0; j < mono.s.size(); ++j) {
    append_power(out, j < ord.num_s() ? ord.s_vars()[j] : "s" + std::to_string(j + 1),
                 mono.s[j]);
  }
  for (std::size_t i = 0; i < mono.x.size(); ++i) {
    append_power(out, i < ord.num_x() ? ord.x_vars()[i] : "x" + std::to_string(i + 1),
                 mono.x[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const SparsePoly& p, const OrderingSpec& ord) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return ord.compare(a.first, b.first) > 0;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (m.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += to_string(m, ord);
    }
  }
  return out;
}

}  // namespace brieskorn
