#include "brieskorn/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BRIESKORN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

SparsePoly s_part(const Exponents& s, const Rational& c) {
  return SparsePoly(Monomial(s, Exponents{}), c);
}

}  // namespace

std::vector<SparsePoly> basis_coordinates(const SparsePoly& r,
                                          const std::vector<Monomial>& basis) {
  std::vector<SparsePoly> col(basis.size());
  for (const auto& [mono, c] : r) {
    auto it = std::find_if(basis.begin(), basis.end(),
                           [&](const Monomial& b) { return b.x == mono.x; });
    if (it == basis.end()) throw Error("term outside the span of the monomial basis");
    col[static_cast<std::size_t>(it - basis.begin())] += s_part(mono.s, c);
  }
  return col;
}

LatticeMatrix permute(const LatticeMatrix& a, const std::vector<Monomial>& order) {
  const std::size_t mu = a.size();
  if (order.size() != mu) throw DimensionMismatch("basis order has the wrong length");
  std::vector<std::size_t> idx(mu);
  std::vector<bool> seen(mu, false);
  for (std::size_t i = 0; i < mu; ++i) {
    auto it = std::find_if(a.basis.begin(), a.basis.end(),
                           [&](const Monomial& b) { return b.x == order[i].x; });
    if (it == a.basis.end()) throw Error("basis order contains a monomial outside the basis");
    idx[i] = static_cast<std::size_t>(it - a.basis.begin());
    if (seen[idx[i]]) throw Error("basis order repeats a monomial");
    seen[idx[i]] = true;
  }
  LatticeMatrix out;
  out.basis.reserve(mu);
  for (std::size_t i = 0; i < mu; ++i) out.basis.push_back(a.basis[idx[i]]);
  out.s_trunc = a.s_trunc;
  out.entries.resize(mu * mu);
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t j = 0; j < mu; ++j) out(i, j) = a(idx[i], idx[j]);
  }
  return out;
}

LatticeMatrix lattice_matrix(const FamilyData& fam, std::uint64_t s_trunc,
                             const std::optional<std::vector<Monomial>>& basis_order,
                             unsigned threads) {
  if (!fam.f_poly) throw Error("the t-action needs a Brieskorn family");
  if (s_trunc == 0) throw Error("s truncation order must be positive");
  const auto& basis = fam.milnor.m;
  const std::size_t mu = basis.size();

  LatticeMatrix a;
  a.basis = basis;
  a.s_trunc = s_trunc;
  a.entries.resize(mu * mu);

  const auto column = [&](std::size_t j) {
    SparsePoly p = fam.f_poly->times(basis[j], 1);
    NormalFormResult nf = normal_form(p, fam, s_trunc);
    auto col = basis_coordinates(nf.r, basis);
    for (std::size_t i = 0; i < mu; ++i) a(i, j) = std::move(col[i]);
  };

  const unsigned workers = std::min<unsigned>(thread_count(threads), static_cast<unsigned>(mu));
  if (workers <= 1) {
    for (std::size_t j = 0; j < mu; ++j) column(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < mu; j = next++) {
          try {
            column(j);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }
  return basis_order ? permute(a, *basis_order) : a;
}

std::vector<Rational> s_coefficients(const SparsePoly& entry, std::uint64_t s_trunc) {
  std::vector<Rational> out(s_trunc);
  for (const auto& [mono, c] : entry) {
    if (mono.s.size() != 1) throw Error("expected a single s-variable");
    if (mono.s[0] < s_trunc) out[mono.s[0]] += c;
  }
  return out;
}

std::pair<RationalMatrix, RationalMatrix> saito_truncation(const LatticeMatrix& a) {
  if (a.s_trunc < 2) throw Error("the A0 + s A1 truncation needs s_trunc >= 2");
  const std::size_t mu = a.size();
  RationalMatrix a0(mu, mu), a1(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t j = 0; j < mu; ++j) {
      auto c = s_coefficients(a(i, j), 2);
      a0(i, j) = c[0];
      a1(i, j) = c[1];
    }
  }
  return {a0, a1};
}

std::string format_entry(const SparsePoly& entry, const std::string& s_name) {
  std::map<std::uint64_t, Rational> coeffs;
  for (const auto& [mono, c] : entry) {
    if (mono.s.size() > 1) throw Error("expected a single s-variable");
    coeffs[mono.s.empty() ? 0 : mono.s[0]] += c;
  }
  std::ostringstream out;
  out << to_string(coeffs.count(0) ? coeffs[0] : Rational(0));
  for (const auto& [k, c] : coeffs) {
    if (k == 0 || c == 0) continue;
    out << (c < 0 ? "-" : "+") << to_string(Rational(abs(c))) << "*" << s_name;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::vector<SparsePoly> relations(const FamilyData& fam, std::int64_t K) {
  if (K >= 0) throw Error("relations need K < 0");
  const OrderingSpec& ord = fam.ord;
  const std::size_t n = fam.num_x();
  const Rational nk = fam.n_k(K);
  std::vector<SparsePoly> out;

  for (std::size_t i = 0; i < fam.num_generators(); ++i) {
    // Highest degree F_i can add to x^alpha.
    std::optional<Rational> top;
    for (const auto& [m, c] : fam.f[i]) {
      const Rational d = ord.degree(m);
      if (!top || d > *top) top = d;
    }
    for (std::size_t j = 0; j < fam.num_s(); ++j) {
      if (auto d = fam.D.rows[j][i].max_degree(ord)) {
        const Rational v = ord.s_weights()[j] + *d;
        if (!top || v > *top) top = v;
      }
    }
    if (!top) continue;
    const Rational floor = nk - *top;

    // All x^alpha with deg(x^alpha) >= floor; weights are negative so the
    // search is a finite box walk.
    Exponents alpha(n, 0);
    std::vector<Exponents> stack{alpha};
    std::set<Exponents> seen{alpha};
    while (!stack.empty()) {
      Exponents e = stack.back();
      stack.pop_back();
      Monomial mono(Exponents(fam.num_s(), 0), e);
      SparsePoly F = apply_generator(fam, i, SparsePoly(mono, 1));
      if (!vk_contains(F, K, fam)) {
        NormalFormResult nf = normal_form(F, fam, static_cast<std::uint64_t>(-K));
        if (!nf.r.is_zero()) out.push_back(std::move(nf.r));
      }
      for (std::size_t v = 0; v < n; ++v) {
        Exponents next = e;
        ++next[v];
        if (ord.x_degree(next) < floor) continue;
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
  }
  return out;
}

}  // namespace brieskorn
