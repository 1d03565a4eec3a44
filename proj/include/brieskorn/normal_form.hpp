#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "brieskorn/family.hpp"

namespace brieskorn {

/// Result of one NF(p, K) pass.
///
/// p = sum_k G_k(a[k]) + r + q, equivalently p = expand_certificate(cert) +
/// r + q; modulo <s>^N when the pass was truncated at N.
struct NFOutcome {
  SparsePoly r;
  std::vector<SparsePoly> a;
  SparsePoly q;
  /// certificate[i] is the multiplier c_i of F_i; equals U a.
  std::vector<SparsePoly> certificate;
};

/// One pass of the normal form algorithm at filtration level K <= 0.
///
/// A reduction step replaces r by r - c g_j + s D(c u_j) with
/// c = lead(r) / lead(g_j), j minimal. The leading s-slice is deferred into
/// q as soon as its leading degree drops below N_K. With s_trunc every
/// intermediate is reduced modulo <s>^s_trunc.
NFOutcome nf_step(const SparsePoly& p, std::int64_t K, const FamilyData& fam,
                  std::optional<std::uint64_t> s_trunc = std::nullopt);

struct NormalFormResult {
  /// m-span part, truncated modulo <s>^s_trunc.
  SparsePoly r;
  std::vector<SparsePoly> a;
  std::vector<SparsePoly> certificate;
  /// What is left after the last pass; lies in V_{-s_trunc}.
  SparsePoly residual;
};

/// NF_1 modulo <s>^s_trunc along K = -step, -2 step, ..., ending at
/// -s_trunc.
NormalFormResult normal_form(const SparsePoly& p, const FamilyData& fam,
                             std::uint64_t s_trunc, std::int64_t k_step = 1);

/// Same along an explicit strictly decreasing sequence of levels, which
/// must end at or below -s_trunc.
NormalFormResult normal_form(const SparsePoly& p, const FamilyData& fam,
                             std::uint64_t s_trunc, std::span<const std::int64_t> levels);

}  // namespace brieskorn
