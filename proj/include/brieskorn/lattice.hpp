#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/family.hpp"
#include "brieskorn/normal_form.hpp"

namespace brieskorn {

/// mu x mu matrix over K[s] / <s>^s_trunc. Column j holds the coordinates of
/// the image of basis[j]. Entries are polynomials in the s-variables only.
struct LatticeMatrix {
  std::vector<Monomial> basis;
  std::uint64_t s_trunc = 0;
  std::vector<SparsePoly> entries;  // row-major

  std::size_t size() const { return basis.size(); }
  const SparsePoly& operator()(std::size_t row, std::size_t col) const {
    return entries[row * basis.size() + col];
  }
  SparsePoly& operator()(std::size_t row, std::size_t col) {
    return entries[row * basis.size() + col];
  }
  friend bool operator==(const LatticeMatrix& a, const LatticeMatrix& b) {
    return a.basis == b.basis && a.s_trunc == b.s_trunc && a.entries == b.entries;
  }
};

/// Splits an element of the m-span over K[s] into coordinates, one column
/// of a LatticeMatrix. Throws Error if r has a term outside the m-span.
std::vector<SparsePoly> basis_coordinates(const SparsePoly& r,
                                          const std::vector<Monomial>& basis);

/// Re-expresses `a` in the reordered basis `order`, a permutation of
/// a.basis.
LatticeMatrix permute(const LatticeMatrix& a, const std::vector<Monomial>& order);

/// The matrix of the t-action, m A = NF_1(f m) modulo s^s_trunc.
///
/// Columns are computed independently; `threads` > 1 spreads them over
/// worker threads (0 reads BRIESKORN_THREADS, default 1).
LatticeMatrix lattice_matrix(const FamilyData& fam, std::uint64_t s_trunc,
                             const std::optional<std::vector<Monomial>>& basis_order = std::nullopt,
                             unsigned threads = 0);

/// Dense rational matrix, row-major.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
};

/// A = A0 + s A1 mod s^2. Needs a single s-variable and s_trunc >= 2.
std::pair<RationalMatrix, RationalMatrix> saito_truncation(const LatticeMatrix& a);

/// Coefficients c_0..c_{s_trunc-1} of an entry in the single s-variable.
std::vector<Rational> s_coefficients(const SparsePoly& entry, std::uint64_t s_trunc);

/// "c0+c1*s+c2*s^2..." with c0 always present and zero higher terms
/// omitted, e.g. "0+1/2*s" or "-1/2".
std::string format_entry(const SparsePoly& entry, const std::string& s_name = "s");

/// NF_1(F_i x^alpha, K) for the finitely many generators F_i x^alpha outside
/// V_K; only nonzero values are returned. They generate the relations of
/// H / <s>^{-K} H over the m-span, so the list is empty for free H.
std::vector<SparsePoly> relations(const FamilyData& fam, std::int64_t K);

}  // namespace brieskorn
