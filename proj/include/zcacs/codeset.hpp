#ifndef ZCACS_CODESET_HPP
#define ZCACS_CODESET_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zcacs/generator_config.hpp"

namespace zcacs {

/// A unimodular array stored as phase exponents: entry e stands for
/// exp(2*pi*i*e/modulus). Row-major.
class PhaseArray {
 public:
  PhaseArray() = default;
  PhaseArray(std::int64_t rows, std::int64_t cols, std::int64_t modulus);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t modulus() const { return modulus_; }

  std::uint32_t at(std::int64_t r, std::int64_t c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  /// Stores value reduced into [0, modulus).
  void set(std::int64_t r, std::int64_t c, std::int64_t value);

  const std::vector<std::uint32_t>& entries() const { return entries_; }
  std::vector<std::uint32_t>& entries() { return entries_; }

  friend bool operator==(const PhaseArray&, const PhaseArray&) = default;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::int64_t modulus_ = 1;
  std::vector<std::uint32_t> entries_;
};

enum class CodeKind { Ccc, Zcacs2d, Zccs1d };

std::string_view to_string(CodeKind kind);
/// Accepts "CCC", "ZCACS-2D", "ZCCS-1D"; throws FormatError otherwise.
CodeKind parse_code_kind(std::string_view text);

/// Shape and correlation-zone metadata of a code set family.
/// 2D notation: 2D-(set_count, zcz_rows x zcz_cols)-ZCACS_{set_size}^{rows x cols}.
struct CodeSetParams {
  CodeKind kind = CodeKind::Zcacs2d;
  std::int64_t set_count = 0;  // number of sets (codes)
  std::int64_t set_size = 0;   // arrays per set (flock size)
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t zcz_rows = 0;
  std::int64_t zcz_cols = 0;
  std::int64_t lambda = 1;  // inner phase modulus
  std::int64_t delta = 1;   // alphabet modulus of the arrays
  std::int64_t alpha = 1;   // flock size of the inner CCC
  std::int64_t alpha1 = 1;  // set count of the extended family
  bool optimal = false;

  friend bool operator==(const CodeSetParams&, const CodeSetParams&) = default;
};

/// The family S: `family[k][i]` is array i of set k. Sets are ordered
/// lexicographically by (t, c, d) and arrays by theta, last component fastest.
struct CodeSet {
  std::vector<std::vector<PhaseArray>> family;
  CodeSetParams meta;
  GeneratorConfig provenance;

  /// Throws ShapeError if the family disagrees with `meta`.
  void check_shape() const;

  friend bool operator==(const CodeSet&, const CodeSet&) = default;
};

}  // namespace zcacs

#endif
