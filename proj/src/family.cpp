#include "brieskorn/family.hpp"

#include <algorithm>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

// Re-embeds p into a ring with num_s s-variables. p must be s-free.
SparsePoly lift_s(const SparsePoly& p, std::size_t num_s) {
  SparsePoly out;
  for (const auto& [m, c] : p) {
    if (m.s_order() != 0) throw Error("expected an s-free polynomial");
    out.add_term(Monomial(Exponents(num_s, 0), m.x), c);
  }
  return out;
}

std::vector<std::string> default_s_names(std::size_t m) {
  if (m == 1) return {"s"};
  std::vector<std::string> names;
  for (std::size_t j = 0; j < m; ++j) names.push_back("s" + std::to_string(j + 1));
  return names;
}

}  // namespace

Rational FamilyData::n_k(std::int64_t K) const {
  return Rational(-K) * ord.min_s_degree() - min_deg_x + max_deg_D;
}

FamilyData build_general_family(std::vector<SparsePoly> f, DiffOpMatrix D,
                                const OrderingSpec& ord_x, const FamilyOverrides& overrides) {
  const std::size_t m = D.num_rows();
  const std::size_t r = f.size();
  if (m == 0 || r == 0) throw DimensionMismatch("family needs at least one generator and one s");
  for (const auto& row : D.rows) {
    if (row.size() != r) throw DimensionMismatch("operator matrix has the wrong number of columns");
  }
  if (ord_x.num_s() != 0) throw Error("pass the x-ordering only; the s block is derived");

  FamilyData fam;
  for (auto& fi : f) fi = lift_s(fi, m);
  fam.f = std::move(f);
  fam.D = std::move(D);

  fam.sb = standard_basis_with_transform(fam.f, ord_x);
  fam.milnor = monomial_basis(fam.sb, ord_x);

  fam.min_deg_x = ord_x.min_x_degree();
  fam.min_deg_m = ord_x.x_degree(fam.milnor.m.front().x);
  for (const auto& mono : fam.milnor.m) {
    fam.min_deg_m = std::min(fam.min_deg_m, ord_x.x_degree(mono.x));
  }

  // max deg(d^j), measured on the x-block; s-parts of coefficients can only
  // lower it.
  std::vector<std::optional<Rational>> row_deg(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& entry : fam.D.rows[j]) {
      auto d = entry.max_degree(ord_x);
      if (d && (!row_deg[j] || *d > *row_deg[j])) row_deg[j] = d;
    }
  }
  std::vector<Rational> bound(m);
  for (std::size_t j = 0; j < m; ++j) {
    bound[j] = row_deg[j] ? Rational(fam.min_deg_m + fam.min_deg_x - *row_deg[j])
                          : Rational(fam.min_deg_m + 2 * fam.min_deg_x);
  }

  std::vector<Rational> s_weights = bound;
  if (overrides.s_weights) {
    if (overrides.s_weights->size() != m) throw InvalidWeights("need one weight per s-variable");
    s_weights = *overrides.s_weights;
    for (std::size_t j = 0; j < m; ++j) {
      if (s_weights[j] > bound[j]) {
        throw InvalidWeights("deg(s) = " + to_string(s_weights[j]) +
                             " violates the weight constraint deg(s) <= " + to_string(bound[j]));
      }
    }
  }
  for (const auto& w : s_weights) {
    if (w >= 0) throw InvalidWeights("derived deg(s) = " + to_string(w) + " is not negative");
  }
  std::vector<std::string> s_vars =
      overrides.s_vars.size() == m ? overrides.s_vars : default_s_names(m);
  fam.ord = ord_x.with_s_block(std::move(s_vars), std::move(s_weights));

  std::optional<Rational> max_d;
  for (const auto& row : fam.D.rows) {
    for (const auto& entry : row) {
      auto d = entry.max_degree(fam.ord);
      if (d && (!max_d || *d > *max_d)) max_d = d;
    }
  }
  fam.max_deg_D = max_d.value_or(Rational(0));

  for (std::size_t k = 0; k < fam.sb.size(); ++k) {
    fam.G.push_back({fam.sb.g[k], fam.sb.column(k)});
  }
  return fam;
}

FamilyData build_family(const SparsePoly& f_poly, const OrderingSpec& ord_x,
                        const FamilyOverrides& overrides) {
  require_critical_point(f_poly);
  const std::size_t n = ord_x.num_x();
  DiffOpMatrix D;
  D.rows.emplace_back();
  for (std::size_t i = 0; i < n; ++i) D.rows[0].push_back(DiffOp::partial(i, 1, n));
  FamilyData fam = build_general_family(jacobian(f_poly, n), std::move(D), ord_x, overrides);
  fam.f_poly = lift_s(f_poly, 1);
  return fam;
}

bool vk_contains(const SparsePoly& p, std::int64_t K, const FamilyData& fam) {
  const Rational nk = fam.n_k(K);
  const auto order = static_cast<std::uint64_t>(-K);
  return std::all_of(p.begin(), p.end(), [&](const auto& term) {
    return term.first.s_order() >= order || fam.ord.degree(term.first) < nk;
  });
}

SparsePoly apply_generator(const FamilyData& fam, std::size_t i, const SparsePoly& c) {
  SparsePoly out = fam.f[i] * c;
  for (std::size_t j = 0; j < fam.num_s(); ++j) {
    SparsePoly d = fam.D.rows[j][i].apply(c);
    out -= d.times(Monomial::s_var(fam.num_s(), fam.num_x(), j), 1);
  }
  return out;
}

SparsePoly apply_partial_basis(const FamilyData& fam, std::size_t k, const SparsePoly& c) {
  const auto& elem = fam.G[k];
  SparsePoly out = elem.g * c;
  for (std::size_t j = 0; j < fam.num_s(); ++j) {
    SparsePoly d;
    for (std::size_t i = 0; i < fam.num_generators(); ++i) {
      if (!elem.u[i].is_zero()) d += fam.D.rows[j][i].apply(c * elem.u[i]);
    }
    out -= d.times(Monomial::s_var(fam.num_s(), fam.num_x(), j), 1);
  }
  return out;
}

SparsePoly expand_certificate(const FamilyData& fam, const std::vector<SparsePoly>& cert) {
  SparsePoly out;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (!cert[i].is_zero()) out += apply_generator(fam, i, cert[i]);
  }
  return out;
}

DiffOp partial_basis_symbol(const FamilyData& fam, std::size_t k) {
  const auto& elem = fam.G[k];
  DiffOp out = DiffOp::multiplication(elem.g);
  for (std::size_t j = 0; j < fam.num_s(); ++j) {
    SparsePoly s_j(Monomial::s_var(fam.num_s(), fam.num_x(), j), 1);
    for (std::size_t i = 0; i < fam.num_generators(); ++i) {
      out -= fam.D.rows[j][i].left_multiply(s_j * elem.u[i]);
    }
  }
  return out;
}

DiffOp partial_basis_operator(const FamilyData& fam, std::size_t k) {
  const auto& elem = fam.G[k];
  DiffOp out = DiffOp::multiplication(elem.g);
  for (std::size_t j = 0; j < fam.num_s(); ++j) {
    SparsePoly s_j(Monomial::s_var(fam.num_s(), fam.num_x(), j), 1);
    for (std::size_t i = 0; i < fam.num_generators(); ++i) {
      out -= fam.D.rows[j][i].compose_function(elem.u[i]).left_multiply(s_j);
    }
  }
  return out;
}

}  // namespace brieskorn
