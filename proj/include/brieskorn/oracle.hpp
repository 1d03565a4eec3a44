#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "brieskorn/errors.hpp"
#include "brieskorn/lattice.hpp"

namespace brieskorn {

struct OracleOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class OracleTimeout : public Error {
 public:
  using Error::Error;
};

/// The t-action matrix by iterated division, without the normal form
/// algorithm.
///
/// Starting from p_0 = f m_j, each round divides p_k by the standard basis
/// of the Jacobian ideal, p_k = sum_l g_l q_l + r_k, keeps r_k as the s^k
/// coefficient and continues with p_{k+1} = sum_i d_i(sum_l u_il q_l).
/// Terms below a fixed degree precision are dropped; they cannot reach
/// s^s_trunc. Columns are in the canonical basis order.
LatticeMatrix oracle_matrix(const SparsePoly& f_poly, const OrderingSpec& ord_x,
                            std::uint64_t s_trunc, const OracleOptions& options = {});

}  // namespace brieskorn
