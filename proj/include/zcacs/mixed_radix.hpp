#ifndef ZCACS_MIXED_RADIX_HPP
#define ZCACS_MIXED_RADIX_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace zcacs {

bool is_prime(std::int64_t v);

/// One block of digits sharing a base. A base of 1 is a placeholder block:
/// its digits are always zero and it spans a single value.
struct RadixBlock {
  std::int64_t base = 1;
  int digits = 1;

  std::int64_t span() const;  // base^digits

  friend bool operator==(const RadixBlock&, const RadixBlock&) = default;
};

/// One axis of the index space: prime-power blocks followed by scalar
/// "primed" digits. A value v decomposes as
///   v = x_1 + x_2*B_1 + ... + x_a*B_1*...*B_{a-1} + m*(y_1 + y_2*P_1 + ...)
/// where B_i = base_i^digits_i, m = prod B_i, and each x_i is itself written
/// in base base_i with its first digit least significant.
struct RadixSide {
  std::vector<RadixBlock> blocks;
  std::vector<std::int64_t> primed;

  std::int64_t base_span() const;      // prod base^digits
  std::int64_t primed_span() const;    // prod primed
  std::int64_t extended_span() const;  // base_span * primed_span

  friend bool operator==(const RadixSide&, const RadixSide&) = default;
};

/// The row (p) and column (q) sides of the construction's index space.
/// Row bases may be 1 or prime; column bases must be prime.
struct RadixSpec {
  RadixSide row;
  RadixSide col;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  friend bool operator==(const RadixSpec&, const RadixSpec&) = default;
};

/// Digits of a decomposed index. `blocks[i][k]` is digit k (0-based; the
/// 1-based digit k+1 in permutation configs) of block i. `primed` is empty
/// unless the primed part was requested.
struct DigitVector {
  std::vector<std::vector<std::int64_t>> blocks;
  std::vector<std::int64_t> primed;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

/// Throws RangeError unless 0 <= value < span of the selected part.
DigitVector decompose(std::int64_t value, const RadixSide& side, bool include_primed);

/// Inverse of decompose. A DigitVector without primed digits composes over
/// the base span only. Throws ShapeError on a structural mismatch.
std::int64_t compose(const DigitVector& vec, const RadixSide& side);

/// Digits of value+1 over `bases` (first base least significant).
std::vector<std::int64_t> successor_digits(std::int64_t value, std::span<const std::int64_t> bases);

/// Plain mixed-radix split, first base least significant.
std::vector<std::int64_t> split_digits(std::int64_t value, std::span<const std::int64_t> bases);

}  // namespace zcacs

#endif
