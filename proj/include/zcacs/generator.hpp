#ifndef ZCACS_GENERATOR_HPP
#define ZCACS_GENERATOR_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "zcacs/codeset.hpp"
#include "zcacs/generator_config.hpp"
#include "zcacs/mixed_radix.hpp"

namespace zcacs {

/// One component per p-block (0 <= . < p_i^k_i) and per q-block
/// (0 <= . < q_j^r_j).
struct ExponentIndex {
  std::vector<std::int64_t> row;
  std::vector<std::int64_t> col;

  friend bool operator==(const ExponentIndex&, const ExponentIndex&) = default;
};

/// Selects the array within a set: theta = (r_1..r_a, s_1..s_b).
struct ThetaIndex : ExponentIndex {};
/// Selects the inner CCC set: t = (x_1..x_a, y_1..y_b).
struct TIndex : ExponentIndex {};

/// Coset multipliers c (one per p'), d (one per q').
struct CosetIndex {
  std::vector<std::int64_t> c;
  std::vector<std::int64_t> d;

  friend bool operator==(const CosetIndex&, const CosetIndex&) = default;
};

/// All exponent indices in canonical order (last component fastest).
std::vector<ExponentIndex> exponent_indices(const ConstructionParams& params);
/// Position of `idx` in exponent_indices(params). Throws RangeError.
std::int64_t exponent_rank(const ExponentIndex& idx, const ConstructionParams& params);
/// All cosets in canonical order (c before d, last component fastest).
std::vector<CosetIndex> coset_indices(const ConstructionParams& params);

/// Quadratic path terms plus linear terms over the unprimed digits, mod lambda.
std::int64_t eval_f(const DigitVector& gamma, const DigitVector& mu, const GeneratorConfig& cfg);

/// f shifted by the theta/t selector terms and d_theta, mod lambda.
///
/// Each theta/t component is read as base-p digits. The lowest digit pairs
/// with gamma_{i,pi_i(1)} (theta) and gamma_{i,pi_i(m_i)} (t); higher digits
/// l contribute (lambda/p_i) * r_{i,l} * x_{i,l}, a DFT_p tensor factor
/// that keeps distinct sets orthogonal when k_i > 1. With every k_i and
/// r_j equal to 1 only the lowest digit exists.
std::int64_t eval_a(const ThetaIndex& theta, const TIndex& t, const DigitVector& gamma,
                    const DigitVector& mu, const GeneratorConfig& cfg);

/// (delta/lambda) f plus the coset terms on the primed digits, mod delta.
std::int64_t eval_m(const CosetIndex& coset, const DigitVector& ext_gamma, const DigitVector& ext_mu,
                    const GeneratorConfig& cfg);

/// Array-entry function of the extended family, mod delta. Expanded term by
/// term at scale delta; it does not go through eval_a, so
///   eval_b == (delta/lambda) eval_a + coset terms (mod delta)
/// is a genuine cross-check.
std::int64_t eval_b(const ThetaIndex& theta, const TIndex& t, const CosetIndex& coset,
                    const DigitVector& ext_gamma, const DigitVector& ext_mu, const GeneratorConfig& cfg);

/// Entry (row, col) = eval(row, col) mod modulus.
PhaseArray materialize_array(std::int64_t rows, std::int64_t cols, std::int64_t modulus,
                             const std::function<std::int64_t(std::int64_t, std::int64_t)>& eval);

/// Shape, moduli and optimality of the family `generate` would build.
CodeSetParams derive_params(const GeneratorConfig& cfg);

/// Inner 2D-(alpha, alpha, m, n)-CCC from eval_a. Requires a trivial primed part.
CodeSet build_ccc(const GeneratorConfig& cfg, int threads = 1);
/// Extended family over (t, c, d). Requires a non-empty q' list.
CodeSet build_zcacs(const GeneratorConfig& cfg, int threads = 1);
/// Single-row family. Requires every p-block and p' to be 1.
CodeSet reduce_to_1d(const GeneratorConfig& cfg, int threads = 1);

/// Dispatches on the config: CCC when the primed part is trivial, 1D when
/// the row side is trivial, 2D ZCACS otherwise.
CodeSet generate(const GeneratorConfig& cfg, int threads = 1);

}  // namespace zcacs

#endif
