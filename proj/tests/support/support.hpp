#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brieskorn/family.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/normal_form.hpp"
#include "brieskorn/parse.hpp"

namespace brieskorn::testing {

/// Brieskorn family of `text` with default weights in the given variables.
FamilyData family_of(const std::string& text, const std::vector<std::string>& vars);

Rational random_rational(std::mt19937_64& rng, int range = 7);

/// Random polynomial with up to `terms` terms, x-exponents < x_bound,
/// s-exponent < s_bound (one s-variable when s_bound > 0).
SparsePoly random_poly(std::mt19937_64& rng, std::size_t num_x, std::size_t terms,
                       std::uint32_t x_bound, std::uint32_t s_bound);

/// Random element of the m-span over K[s].
SparsePoly random_span_element(std::mt19937_64& rng, const FamilyData& fam,
                               std::uint32_t s_bound);

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// The five normal form property suites, each over `cases` random inputs
/// spread across a few fixed families.
SuiteReport idempotence_suite(std::size_t cases, std::uint64_t seed);
SuiteReport linearity_suite(std::size_t cases, std::uint64_t seed);
SuiteReport section_suite(std::size_t cases, std::uint64_t seed);
SuiteReport level_sequence_suite(std::size_t cases, std::uint64_t seed);
SuiteReport certificate_suite(std::size_t cases, std::uint64_t seed);

/// For quasi-homogeneous f with sum w_i x_i d_i f = f, the t-action is
/// diagonal with entry s sum_i w_i (beta_i + 1) at x^beta. Returns the
/// expected matrix in the canonical basis.
LatticeMatrix euler_matrix(const FamilyData& fam, const std::vector<Rational>& weights,
                           std::uint64_t s_trunc);

/// Wall-clock seconds of fn(), best of `repeats`.
double best_seconds(const std::function<void()>& fn, int repeats);

}  // namespace brieskorn::testing
