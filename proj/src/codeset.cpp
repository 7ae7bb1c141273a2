#include "zcacs/codeset.hpp"

#include "zcacs/errors.hpp"

namespace zcacs {

PhaseArray::PhaseArray(std::int64_t rows, std::int64_t cols, std::int64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(static_cast<std::size_t>(rows * cols), 0) {
  if (rows < 1 || cols < 1) throw ShapeError("array dimensions must be positive");
  if (modulus < 1) throw ShapeError("modulus must be positive");
}

void PhaseArray::set(std::int64_t r, std::int64_t c, std::int64_t value) {
  value %= modulus_;
  if (value < 0) value += modulus_;
  entries_[static_cast<std::size_t>(r * cols_ + c)] = static_cast<std::uint32_t>(value);
}

std::string_view to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::Ccc: return "CCC";
    case CodeKind::Zcacs2d: return "ZCACS-2D";
    case CodeKind::Zccs1d: return "ZCCS-1D";
  }
  return "?";
}

CodeKind parse_code_kind(std::string_view text) {
  if (text == "CCC") return CodeKind::Ccc;
  if (text == "ZCACS-2D") return CodeKind::Zcacs2d;
  if (text == "ZCCS-1D") return CodeKind::Zccs1d;
  throw FormatError("unknown code kind '" + std::string(text) + "'");
}

void CodeSet::check_shape() const {
  if (static_cast<std::int64_t>(family.size()) != meta.set_count)
    throw ShapeError("family holds " + std::to_string(family.size()) + " sets, metadata says " +
                     std::to_string(meta.set_count));
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (static_cast<std::int64_t>(family[k].size()) != meta.set_size)
      throw ShapeError("set " + std::to_string(k) + " holds " + std::to_string(family[k].size()) + " arrays");
    for (const auto& a : family[k])
      if (a.rows() != meta.rows || a.cols() != meta.cols || a.modulus() != meta.delta)
        throw ShapeError("set " + std::to_string(k) + " has an array of the wrong shape or modulus");
  }
}

}  // namespace zcacs
