#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brieskorn/diffop.hpp"
#include "brieskorn/stdbasis.hpp"

namespace brieskorn {

/// One element G_k = g_k - s D u_k of the partial standard basis, stored
/// through its data: G_k(c) = g_k c - sum_j s_j d^j(c u_k).
struct PartialBasisElement {
  SparsePoly g;
  std::vector<SparsePoly> u;
};

/// Immutable context of a formal family F = f - s D together with its
/// partial standard basis and the V-filtration data
///
///   deg(s_j) <= min deg(m) + min deg(x) - max deg(d^j),
///   N_K = -K min deg(s) - min deg(x) + max deg(D),
///   V_K = {deg < N_K} + <s>^{-K}.
struct FamilyData {
  /// x block as given, s block carrying the chosen deg(s_j).
  OrderingSpec ord;
  std::vector<SparsePoly> f;
  DiffOpMatrix D;
  StandardBasisResult sb;
  MilnorData milnor;
  std::vector<PartialBasisElement> G;
  Rational min_deg_m;
  Rational min_deg_x;
  Rational max_deg_D;
  /// The function whose t-action is represented; set for Brieskorn families.
  std::optional<SparsePoly> f_poly;

  std::size_t num_s() const { return ord.num_s(); }
  std::size_t num_x() const { return ord.num_x(); }
  std::size_t num_generators() const { return f.size(); }
  std::size_t mu() const { return milnor.mu; }

  Rational n_k(std::int64_t K) const;
};

struct FamilyOverrides {
  /// Tighter (more negative) s-weights; loosening past the weight
  /// constraint throws InvalidWeights.
  std::optional<std::vector<Rational>> s_weights;
  std::vector<std::string> s_vars{"s"};
};

/// The Brieskorn family of f_poly: m = 1, r = n, f = (d f_poly / d x_i),
/// D = (d_1, ..., d_n), deg(s) = min deg(m) + 2 min deg(x) by default.
///
/// Throws NotACriticalPoint, NonIsolatedSingularity or InvalidWeights.
FamilyData build_family(const SparsePoly& f_poly, const OrderingSpec& ord_x,
                        const FamilyOverrides& overrides = {});

/// Arbitrary family F = f - s D with D of size m x r. f must be s-free;
/// monomials carry m s-exponents. Default deg(s_j) is the largest value
/// allowed by the weight constraint.
FamilyData build_general_family(std::vector<SparsePoly> f, DiffOpMatrix D,
                                const OrderingSpec& ord_x,
                                const FamilyOverrides& overrides = {});

/// Every term of p has deg < N_K or s-order >= -K.
bool vk_contains(const SparsePoly& p, std::int64_t K, const FamilyData& fam);

/// F_i(c) = f_i c - sum_j s_j d^j_i(c).
SparsePoly apply_generator(const FamilyData& fam, std::size_t i, const SparsePoly& c);

/// G_k(c) = g_k c - sum_j s_j d^j(c u_k).
SparsePoly apply_partial_basis(const FamilyData& fam, std::size_t k, const SparsePoly& c);

/// sum_i F_i(cert[i]).
SparsePoly expand_certificate(const FamilyData& fam, const std::vector<SparsePoly>& cert);

/// G_k written as g_k - s (D U)_k with the entries of U multiplied into D
/// coefficientwise, ignoring commutators. This is the symbol notation
/// g_k - s sum_i u_ik d_i for Brieskorn families.
DiffOp partial_basis_symbol(const FamilyData& fam, std::size_t k);

/// G_k as an actual operator, g_k - sum_j s_j sum_i d^j_i o u_ik, brought to
/// normal order. Applying it to c gives apply_partial_basis(fam, k, c).
DiffOp partial_basis_operator(const FamilyData& fam, std::size_t k);

}  // namespace brieskorn
