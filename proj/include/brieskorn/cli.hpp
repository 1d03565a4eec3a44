#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "brieskorn/lattice.hpp"

namespace brieskorn {

enum class OutputFormat { Json, Text };

struct RunConfig {
  std::string subcommand;
  /// One polynomial per entry; only bench uses more than one.
  std::vector<std::string> polys;
  /// Empty: the scanned names, sorted.
  std::vector<std::string> vars;
  /// Empty: -1 per variable.
  std::vector<std::string> weights;
  TieBreak tie_break = TieBreak::Lex;
  std::optional<std::string> deg_s;
  /// "N" or "full".
  std::string trunc = "2";
  /// Bench truncations.
  std::vector<std::uint64_t> truncs;
  /// A built-in name such as "paper-t255" or a comma separated monomial list.
  std::optional<std::string> basis_order;
  OutputFormat format = OutputFormat::Json;
  bool saito = false;
  std::int64_t level = -4;
  /// Oracle time budget in seconds for verify and bench; <= 0 means none.
  double oracle_timeout = 0;
  bool bench_oracle = false;
};

struct RunOutput {
  int status = 0;
  std::string document;
  /// Warnings and error messages, meant for stderr.
  std::string diagnostics;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMismatch = 3;

RunOutput run(const RunConfig& config);

/// Parses argv into a RunConfig, runs it, writes the document to out and
/// diagnostics to err. Returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Built-in basis orders, by name.
std::optional<std::vector<std::string>> named_basis_order(const std::string& name);

nlohmann::json matrix_to_json(const LatticeMatrix& a, const OrderingSpec& ord);
/// Inverse of matrix_to_json for single-s matrices.
LatticeMatrix matrix_from_json(const nlohmann::json& doc, const OrderingSpec& ord);

}  // namespace brieskorn
