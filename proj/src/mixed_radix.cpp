#include "zcacs/mixed_radix.hpp"

#include <string>

#include "zcacs/errors.hpp"

namespace zcacs {

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::int64_t RadixBlock::span() const {
  std::int64_t s = 1;
  for (int k = 0; k < digits; ++k) s *= base;
  return s;
}

std::int64_t RadixSide::base_span() const {
  std::int64_t s = 1;
  for (const auto& b : blocks) s *= b.span();
  return s;
}

std::int64_t RadixSide::primed_span() const {
  std::int64_t s = 1;
  for (auto p : primed) s *= p;
  return s;
}

std::int64_t RadixSide::extended_span() const { return base_span() * primed_span(); }

namespace {

void validate_side(const RadixSide& side, const char* name, bool allow_unit) {
  const std::string blocks = std::string(name) + "_blocks";
  for (std::size_t i = 0; i < side.blocks.size(); ++i) {
    const auto& b = side.blocks[i];
    const std::string path = blocks + "[" + std::to_string(i) + "]";
    if (b.digits < 1) throw ConfigError(path, "digit count must be >= 1");
    if (b.base == 1 && !allow_unit) throw ConfigError(path, "base must be prime");
    if (b.base != 1 && !is_prime(b.base))
      throw ConfigError(path, "base " + std::to_string(b.base) + " is not prime" +
                                  (allow_unit ? " or 1" : ""));
  }
  const std::string primed = std::string(name) + "_primed";
  for (std::size_t i = 0; i < side.primed.size(); ++i) {
    auto p = side.primed[i];
    const std::string path = primed + "[" + std::to_string(i) + "]";
    if (p == 1 && !allow_unit) throw ConfigError(path, "must be prime");
    if (p != 1 && !is_prime(p))
      throw ConfigError(path, std::to_string(p) + " is not prime" + (allow_unit ? " or 1" : ""));
  }
}

}  // namespace

void RadixSpec::validate() const {
  validate_side(row, "row", true);
  validate_side(col, "col", false);
  if (col.blocks.empty()) throw ConfigError("col_blocks", "at least one q-block is required");
}

std::vector<std::int64_t> split_digits(std::int64_t value, std::span<const std::int64_t> bases) {
  const auto original = value;
  std::vector<std::int64_t> out;
  out.reserve(bases.size());
  for (auto b : bases) {
    out.push_back(value % b);
    value /= b;
  }
  if (original < 0 || value != 0) throw RangeError(std::to_string(original) + " is outside the digit span");
  return out;
}

DigitVector decompose(std::int64_t value, const RadixSide& side, bool include_primed) {
  const std::int64_t span = include_primed ? side.extended_span() : side.base_span();
  if (value < 0 || value >= span)
    throw RangeError("value " + std::to_string(value) + " outside [0, " + std::to_string(span) + ")");

  DigitVector out;
  out.blocks.reserve(side.blocks.size());
  std::int64_t rest = value;
  for (const auto& b : side.blocks) {
    std::int64_t part = rest % b.span();
    rest /= b.span();
    std::vector<std::int64_t> digits(static_cast<std::size_t>(b.digits), 0);
    if (b.base > 1) {
      for (auto& d : digits) {
        d = part % b.base;
        part /= b.base;
      }
    }
    out.blocks.push_back(std::move(digits));
  }
  if (include_primed) out.primed = split_digits(rest, side.primed);
  return out;
}

std::int64_t compose(const DigitVector& vec, const RadixSide& side) {
  if (vec.blocks.size() != side.blocks.size())
    throw ShapeError("expected " + std::to_string(side.blocks.size()) + " blocks, got " +
                     std::to_string(vec.blocks.size()));
  if (!vec.primed.empty() && vec.primed.size() != side.primed.size())
    throw ShapeError("expected " + std::to_string(side.primed.size()) + " primed digits, got " +
                     std::to_string(vec.primed.size()));

  std::int64_t value = 0;
  std::int64_t place = 1;
  for (std::size_t i = 0; i < side.blocks.size(); ++i) {
    const auto& b = side.blocks[i];
    const auto& digits = vec.blocks[i];
    if (digits.size() != static_cast<std::size_t>(b.digits))
      throw ShapeError("block " + std::to_string(i) + ": expected " + std::to_string(b.digits) +
                       " digits, got " + std::to_string(digits.size()));
    std::int64_t digit_place = 1;
    for (auto d : digits) {
      if (d < 0 || d >= b.base)
        throw ShapeError("block " + std::to_string(i) + ": digit " + std::to_string(d) +
                         " not below base " + std::to_string(b.base));
      value += d * digit_place * place;
      digit_place *= b.base;
    }
    place *= b.span();
  }
  for (std::size_t i = 0; i < vec.primed.size(); ++i) {
    auto d = vec.primed[i];
    if (d < 0 || d >= side.primed[i])
      throw ShapeError("primed digit " + std::to_string(i) + ": " + std::to_string(d) +
                       " not below base " + std::to_string(side.primed[i]));
    value += d * place;
    place *= side.primed[i];
  }
  return value;
}

std::vector<std::int64_t> successor_digits(std::int64_t value, std::span<const std::int64_t> bases) {
  std::int64_t span = 1;
  for (auto b : bases) span *= b;
  if (value < 0 || value + 1 >= span)
    throw RangeError("successor of " + std::to_string(value) + " leaves span " + std::to_string(span));
  return split_digits(value + 1, bases);
}

}  // namespace zcacs
