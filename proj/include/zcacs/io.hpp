#ifndef ZCACS_IO_HPP
#define ZCACS_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "zcacs/codeset.hpp"
#include "zcacs/correlation.hpp"
#include "zcacs/generator_config.hpp"

namespace zcacs {

/// Parses a JSON config document:
///
///   {
///     "row_blocks":  [[p, m, k], ...],   // p prime or 1
///     "col_blocks":  [[q, n, r], ...],   // q prime
///     "row_primed":  [p', ...],          // optional, prime or 1
///     "col_primed":  [q', ...],          // optional, prime
///     "row_perms":   [[1-based permutation of 1..m], ...],  // default identity
///     "col_perms":   [[...], ...],
///     "row_linear":  [[d_{i,1}, ..., d_{i,m}], ...],         // default zeros
///     "col_linear":  [[c_{j,1}, ..., c_{j,n}], ...],
///     "theta_offsets": [d_theta, ...]    // canonical theta order, default zeros
///   }
///
/// Throws ConfigError whose field() is the JSON path of the problem.
GeneratorConfig parse_config(std::string_view text);
GeneratorConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const GeneratorConfig& cfg, bool pretty = false);

enum class Encoding { Text, Binary };

/// Code set file: a text header (format version, kind, shape, zone, moduli,
/// provenance config) followed by the arrays. Text bodies list each array as
/// rows of integers; binary bodies store every entry as a little-endian
/// unsigned integer of the smallest width holding delta-1, row-major, sets
/// then arrays in canonical order.
void write_codeset(std::ostream& out, const CodeSet& cs, Encoding encoding = Encoding::Text);
void save_codeset(const std::filesystem::path& path, const CodeSet& cs, Encoding encoding = Encoding::Text);

/// Throws FormatError on anything malformed or truncated.
CodeSet read_codeset(std::istream& in);
CodeSet load_codeset(const std::filesystem::path& path);

/// Smallest byte width (1, 2 or 4) able to hold values below `modulus`.
int entry_width(std::int64_t modulus);

/// "key value" lines describing derived parameters.
std::string format_params(const CodeSetParams& params);
/// "key value" lines describing a verification run.
std::string format_report(const VerificationReport& report);

}  // namespace zcacs

#endif
