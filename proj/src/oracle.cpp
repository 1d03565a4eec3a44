#include "brieskorn/oracle.hpp"

#include <algorithm>

namespace brieskorn {

namespace {

// x-only copy of p; the oracle never tracks s explicitly.
SparsePoly x_only(const SparsePoly& p) {
  SparsePoly out;
  for (const auto& [m, c] : p) out.add_term(Monomial(Exponents{}, m.x), c);
  return out;
}

void check_deadline(const OracleOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
    throw OracleTimeout("oracle ran past its deadline");
  }
}

}  // namespace

LatticeMatrix oracle_matrix(const SparsePoly& f_poly, const OrderingSpec& ord_x,
                            std::uint64_t s_trunc, const OracleOptions& options) {
  if (s_trunc == 0) throw Error("s truncation order must be positive");
  require_critical_point(f_poly);
  const std::size_t n = ord_x.num_x();
  const SparsePoly f = x_only(f_poly);

  std::vector<SparsePoly> df;
  for (std::size_t i = 0; i < n; ++i) df.push_back(derivative(f, i));
  const StandardBasisResult sb = standard_basis_with_transform(df, ord_x);
  const std::vector<Monomial> basis = monomial_basis(sb, ord_x).m;
  const std::size_t mu = basis.size();

  Rational min_m = ord_x.x_degree(basis.front().x);
  for (const auto& b : basis) min_m = std::min(min_m, ord_x.x_degree(b.x));
  const Rational min_x = ord_x.min_x_degree();
  const Rational deg_s = min_m + 2 * min_x;
  // Everything of degree below this is zero modulo s^s_trunc, whatever power
  // of s it already carries.
  const Rational precision = Rational(static_cast<long>(s_trunc)) * deg_s - 2 * min_x;

  LatticeMatrix out;
  for (const auto& b : basis) out.basis.emplace_back(Exponents(1, 0), b.x);
  out.s_trunc = s_trunc;
  out.entries.resize(mu * mu);

  for (std::size_t j = 0; j < mu; ++j) {
    SparsePoly p = f * SparsePoly(basis[j], 1);
    for (std::uint64_t k = 0; k < s_trunc && !p.is_zero(); ++k) {
      check_deadline(options);
      DivisionResult div = weak_normal_form(p, sb, ord_x, precision);
      SparsePoly expanded = div.remainder + div.unreduced;
      for (std::size_t l = 0; l < sb.size(); ++l) {
        if (!div.quotients[l].is_zero()) expanded += sb.g[l] * div.quotients[l];
      }
      if (expanded != p) throw Error("division identity failed");
      for (const auto& [mono, c] : div.remainder) {
        auto it = std::find_if(basis.begin(), basis.end(),
                               [&](const Monomial& b) { return b.x == mono.x; });
        if (it == basis.end()) throw Error("remainder outside the monomial basis");
        const auto i = static_cast<std::size_t>(it - basis.begin());
        out(i, j).add_term(Monomial(Exponents{static_cast<std::uint32_t>(k)}, Exponents{}), c);
      }
      SparsePoly next;
      for (std::size_t i = 0; i < n; ++i) {
        SparsePoly a;
        for (std::size_t l = 0; l < sb.size(); ++l) {
          if (!sb.U[i][l].is_zero() && !div.quotients[l].is_zero()) {
            a += sb.U[i][l] * div.quotients[l];
          }
        }
        next += derivative(a, i);
      }
      p = std::move(next);
    }
  }
  return out;
}

}  // namespace brieskorn
