#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "brieskorn/poly.hpp"

namespace brieskorn {

/// Standard basis g of <f> K[[x]] under the local x-ordering together with
/// the transformation g = f * U.
///
/// Only the x-parts of monomials are meaningful here; inputs must be
/// s-free.
struct StandardBasisResult {
  std::vector<SparsePoly> g;
  /// r x l; U[i][k] is the coefficient of f_i in g_k.
  std::vector<std::vector<SparsePoly>> U;
  /// lead exponents of g, in the same order; minimal generators of
  /// <lead(g)>.
  std::vector<Monomial> staircase;

  std::size_t size() const { return g.size(); }
  /// The column u_k of U.
  std::vector<SparsePoly> column(std::size_t k) const;
};

/// Lazard's method: weighted homogenization, Buchberger on the homogeneous
/// system under a degree-compatible global ordering, dehomogenization, and
/// minimization. The result is sorted by decreasing lead.
///
/// Throws Error if every f_i is zero or the input is empty.
StandardBasisResult standard_basis_with_transform(std::span<const SparsePoly> f,
                                                  const OrderingSpec& ord);

/// p = sum_j g_j * quotients[j] + remainder + unreduced, exactly.
///
/// remainder has no term divisible by a staircase lead; unreduced collects
/// the tail below the degree floor, which is left untouched. Without a floor
/// the reduction need not terminate unless the caller knows it does.
struct DivisionResult {
  std::vector<SparsePoly> quotients;
  SparsePoly remainder;
  SparsePoly unreduced;
};

DivisionResult weak_normal_form(const SparsePoly& p, const StandardBasisResult& basis,
                                const OrderingSpec& ord,
                                std::optional<Rational> degree_floor = std::nullopt);

/// Monomial basis of K[[x]] / <lead(g)>, increasingly ordered under <_x.
struct MilnorData {
  std::vector<Monomial> m;
  std::size_t mu = 0;
};

/// Throws NonIsolatedSingularity if some variable has no pure power among
/// the staircase leads.
MilnorData monomial_basis(const StandardBasisResult& basis, const OrderingSpec& ord);

/// (d f / d x_1, ..., d f / d x_n).
std::vector<SparsePoly> jacobian(const SparsePoly& f, std::size_t num_x);

/// Throws NotACriticalPoint unless f lies in <x>^2.
void require_critical_point(const SparsePoly& f);

/// dim K[[x]] / <jacobian(f)>.
std::size_t milnor_number(const SparsePoly& f, const OrderingSpec& ord);

}  // namespace brieskorn
