#ifndef ZCACS_CYCLOTOMIC_HPP
#define ZCACS_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zcacs {

/// Integer polynomials are coefficient vectors, constant term first.
using IntPoly = std::vector<std::int64_t>;

/// Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
IntPoly cyclotomic_polynomial(std::int64_t n);

/// Remainder of `poly` modulo Phi_n (degree < phi(n)), trailing zeros trimmed.
IntPoly reduce_mod_cyclotomic(std::span<const std::int64_t> poly, std::int64_t n);

/// True iff sum_k poly[k] * w_n^k == 0 exactly.
bool vanishes_at_root_of_unity(std::span<const std::int64_t> poly, std::int64_t n);

/// The exact value of sum_k poly[k] * w_n^k if it is a rational integer.
std::optional<std::int64_t> integer_value_at_root_of_unity(std::span<const std::int64_t> poly, std::int64_t n);

}  // namespace zcacs

#endif
