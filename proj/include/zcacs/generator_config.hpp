#ifndef ZCACS_GENERATOR_CONFIG_HPP
#define ZCACS_GENERATOR_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zcacs/mixed_radix.hpp"

namespace zcacs {

/// The prime/exponent skeleton of a construction.
///
/// Row side: blocks (p_i, m_i) with set-index exponents k_i, primed p'_i'.
/// Column side: blocks (q_j, n_j) with exponents r_j (written t_j in some
/// parameter statements), primed q'_j'.
struct ConstructionParams {
  RadixSpec spec;
  std::vector<int> row_exponents;
  std::vector<int> col_exponents;

  std::int64_t m() const { return spec.row.base_span(); }
  std::int64_t n() const { return spec.col.base_span(); }
  std::int64_t l1() const { return spec.row.extended_span(); }
  std::int64_t l2() const { return spec.col.extended_span(); }
  /// prod p_i^k_i * prod q_j^r_j: size of the theta and t index sets.
  std::int64_t alpha() const;
  /// alpha * prod p' * prod q'.
  std::int64_t alpha1() const;

  /// Radices of the theta / t index, row components first.
  std::vector<std::int64_t> exponent_radices() const;

  bool primed_trivial() const;
  bool row_trivial() const;

  void validate() const;

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Free choices of the construction on top of ConstructionParams.
/// Permutations are 1-based, as written pi_i(e). Coefficients live in Z_lambda.
struct GeneratorConfig {
  ConstructionParams params;
  std::vector<std::vector<int>> row_perms;
  std::vector<std::vector<int>> col_perms;
  std::vector<std::vector<std::int64_t>> row_linear;  // d_{i,e}
  std::vector<std::vector<std::int64_t>> col_linear;  // c_{j,o}
  /// d_theta indexed by the canonical rank of theta; empty means all zero.
  std::vector<std::int64_t> theta_offsets;

  /// Identity permutations and zero coefficients for `params`.
  static GeneratorConfig defaults_for(ConstructionParams params);

  /// lcm of every p_i and q_j.
  std::int64_t lambda() const;
  /// lcm of lambda and every primed base.
  std::int64_t delta() const;
  std::int64_t theta_offset(std::int64_t theta_rank) const;

  /// Throws ConfigError with the offending field path.
  void validate() const;

  friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

/// Non-fatal remarks about a valid config (duplicate primes and the like).
std::vector<std::string> config_warnings(const GeneratorConfig& cfg);

}  // namespace zcacs

#endif
