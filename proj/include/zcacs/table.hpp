#ifndef ZCACS_TABLE_HPP
#define ZCACS_TABLE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zcacs/codeset.hpp"

namespace zcacs {

/// Parameter grid for the table enumerator. Every block on a side draws its
/// (base, digits, exponent) from the listed values; a side with c blocks
/// takes every multiset of c such triples. Primed candidates are whole lists.
struct TableGrid {
  std::vector<std::int64_t> p, m, k;
  std::vector<std::int64_t> q, n, r;
  std::vector<std::vector<std::int64_t>> p_prime{{1}};
  std::vector<std::vector<std::int64_t>> q_prime;
  std::vector<int> row_block_counts{1};
  std::vector<int> col_block_counts{1};
  std::int64_t max_sets = 0;  // 0 = unlimited
  std::int64_t max_area = 0;  // rows*cols, 0 = unlimited
};

/// JSON keys: p, m, k, q, n, r (integer lists), p_prime, q_prime (lists
/// whose items are integers or integer lists), row_blocks, col_blocks
/// (block counts), max_sets, max_area. Throws ConfigError.
TableGrid parse_grid(std::string_view text);

struct TableRow {
  CodeSetParams params;
  std::string source;  // first parameter choice that produced the row
};

/// One row per distinct parameter tuple, sorted by set count then shape.
/// Throws ConfigError if the grid has no admissible point.
std::vector<TableRow> enumerate_table(const TableGrid& grid);

std::string format_table(const std::vector<TableRow>& rows, bool csv);

}  // namespace zcacs

#endif
