#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brieskorn/poly.hpp"

namespace brieskorn {

/// Differential operator sum_beta c_beta(s, x) * d^beta, coefficients kept
/// to the left of the derivations. Keys are multi-indices over the
/// x-variables; zero coefficients are never stored.
class DiffOp {
 public:
  using Terms = std::map<Exponents, SparsePoly>;

  DiffOp() = default;

  static DiffOp multiplication(const SparsePoly& c);
  /// The derivation d/dx_i over n x-variables, with m s-variables in the
  /// coefficient ring.
  static DiffOp partial(std::size_t i, std::size_t num_s, std::size_t num_x);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Exponents& beta, const SparsePoly& coeff);

  /// The operator applied to a function.
  SparsePoly apply(const SparsePoly& p) const;

  /// Coefficientwise left multiplication c * D (no commutators arise).
  DiffOp left_multiply(const SparsePoly& c) const;

  /// The composition D o c, brought back to normal order with the
  /// Leibniz rule.
  DiffOp compose_function(const SparsePoly& c) const;

  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.terms_ == b.terms_;
  }

  /// deg(c * d^beta) = deg(c) - deg_x(x^beta); nullopt for the zero operator.
  std::optional<Rational> max_degree(const OrderingSpec& ord) const;

 private:
  Terms terms_;
};

/// Row-major m x r matrix of differential operators; row j is d^j.
struct DiffOpMatrix {
  std::vector<std::vector<DiffOp>> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return rows.empty() ? 0 : rows[0].size(); }
};

/// sum_i row[i](v[i]). Throws DimensionMismatch if the lengths differ.
SparsePoly diff_apply(std::span<const DiffOp> row, std::span<const SparsePoly> v);

std::string to_string(const DiffOp& op, const OrderingSpec& ord);

}  // namespace brieskorn
