#include "zcacs/generator_config.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "zcacs/errors.hpp"

namespace zcacs {

namespace {

// Products above this are rejected before any span arithmetic can overflow.
constexpr std::int64_t kMaxSpan = std::int64_t{1} << 40;

std::int64_t checked_pow(std::int64_t base, int exp, const std::string& field) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (base > 1 && v > kMaxSpan / base) throw ConfigError(field, "parameter too large");
    v *= base;
  }
  return v;
}

void checked_mul(std::int64_t& acc, std::int64_t factor, const std::string& field) {
  if (factor > 1 && acc > kMaxSpan / factor) throw ConfigError(field, "parameter too large");
  acc *= factor;
}

std::string at(const char* name, std::size_t i) { return std::string(name) + "[" + std::to_string(i) + "]"; }

void check_perms(const std::vector<std::vector<int>>& perms, const std::vector<RadixBlock>& blocks,
                 const char* name) {
  if (perms.size() != blocks.size())
    throw ConfigError(name, "expected " + std::to_string(blocks.size()) + " permutations, got " +
                                std::to_string(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto& p = perms[i];
    if (p.size() != static_cast<std::size_t>(blocks[i].digits))
      throw ConfigError(at(name, i), "expected a permutation of 1.." + std::to_string(blocks[i].digits));
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t e = 0; e < sorted.size(); ++e)
      if (sorted[e] != static_cast<int>(e) + 1)
        throw ConfigError(at(name, i), "not a permutation of 1.." + std::to_string(blocks[i].digits));
  }
}

void check_linear(const std::vector<std::vector<std::int64_t>>& coeffs, const std::vector<RadixBlock>& blocks,
                  std::int64_t lambda, const char* name) {
  if (coeffs.size() != blocks.size())
    throw ConfigError(name, "expected " + std::to_string(blocks.size()) + " coefficient lists, got " +
                                std::to_string(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].size() != static_cast<std::size_t>(blocks[i].digits))
      throw ConfigError(at(name, i), "expected " + std::to_string(blocks[i].digits) + " coefficients");
    for (std::size_t e = 0; e < coeffs[i].size(); ++e)
      if (coeffs[i][e] < 0 || coeffs[i][e] >= lambda)
        throw ConfigError(at(name, i) + "[" + std::to_string(e) + "]",
                          "coefficient must lie in [0, " + std::to_string(lambda) + ")");
  }
}

}  // namespace

std::int64_t ConstructionParams::alpha() const {
  std::int64_t a = 1;
  for (std::size_t i = 0; i < spec.row.blocks.size(); ++i)
    a *= checked_pow(spec.row.blocks[i].base, row_exponents.at(i), "row_blocks");
  for (std::size_t j = 0; j < spec.col.blocks.size(); ++j)
    a *= checked_pow(spec.col.blocks[j].base, col_exponents.at(j), "col_blocks");
  return a;
}

std::int64_t ConstructionParams::alpha1() const {
  return alpha() * spec.row.primed_span() * spec.col.primed_span();
}

std::vector<std::int64_t> ConstructionParams::exponent_radices() const {
  std::vector<std::int64_t> radices;
  for (std::size_t i = 0; i < spec.row.blocks.size(); ++i)
    radices.push_back(checked_pow(spec.row.blocks[i].base, row_exponents.at(i), "row_blocks"));
  for (std::size_t j = 0; j < spec.col.blocks.size(); ++j)
    radices.push_back(checked_pow(spec.col.blocks[j].base, col_exponents.at(j), "col_blocks"));
  return radices;
}

bool ConstructionParams::primed_trivial() const {
  auto unit = [](std::int64_t p) { return p == 1; };
  return std::all_of(spec.row.primed.begin(), spec.row.primed.end(), unit) &&
         std::all_of(spec.col.primed.begin(), spec.col.primed.end(), unit);
}

bool ConstructionParams::row_trivial() const {
  return std::all_of(spec.row.blocks.begin(), spec.row.blocks.end(), [](const RadixBlock& b) { return b.base == 1; }) &&
         std::all_of(spec.row.primed.begin(), spec.row.primed.end(), [](std::int64_t p) { return p == 1; });
}

void ConstructionParams::validate() const {
  spec.validate();
  if (row_exponents.size() != spec.row.blocks.size())
    throw ConfigError("row_blocks", "every p-block needs an exponent k");
  if (col_exponents.size() != spec.col.blocks.size())
    throw ConfigError("col_blocks", "every q-block needs an exponent r");
  for (std::size_t i = 0; i < row_exponents.size(); ++i)
    if (row_exponents[i] < 1) throw ConfigError(at("row_blocks", i), "exponent k must be >= 1");
  for (std::size_t j = 0; j < col_exponents.size(); ++j)
    if (col_exponents[j] < 1) throw ConfigError(at("col_blocks", j), "exponent r must be >= 1");

  // Reject anything whose spans or set counts would overflow.
  std::int64_t rows = 1, cols = 1, count = 1;
  for (std::size_t i = 0; i < spec.row.blocks.size(); ++i) {
    const auto& b = spec.row.blocks[i];
    checked_mul(rows, checked_pow(b.base, b.digits, at("row_blocks", i)), at("row_blocks", i));
    checked_mul(count, checked_pow(b.base, row_exponents[i], at("row_blocks", i)), at("row_blocks", i));
  }
  for (std::size_t j = 0; j < spec.col.blocks.size(); ++j) {
    const auto& b = spec.col.blocks[j];
    checked_mul(cols, checked_pow(b.base, b.digits, at("col_blocks", j)), at("col_blocks", j));
    checked_mul(count, checked_pow(b.base, col_exponents[j], at("col_blocks", j)), at("col_blocks", j));
  }
  for (std::size_t i = 0; i < spec.row.primed.size(); ++i) {
    checked_mul(rows, spec.row.primed[i], at("row_primed", i));
    checked_mul(count, spec.row.primed[i], at("row_primed", i));
  }
  for (std::size_t j = 0; j < spec.col.primed.size(); ++j) {
    checked_mul(cols, spec.col.primed[j], at("col_primed", j));
    checked_mul(count, spec.col.primed[j], at("col_primed", j));
  }
  checked_mul(rows, cols, "col_blocks");
}

GeneratorConfig GeneratorConfig::defaults_for(ConstructionParams params) {
  GeneratorConfig cfg;
  for (const auto& b : params.spec.row.blocks) {
    std::vector<int> id(static_cast<std::size_t>(b.digits));
    std::iota(id.begin(), id.end(), 1);
    cfg.row_perms.push_back(std::move(id));
    cfg.row_linear.emplace_back(static_cast<std::size_t>(b.digits), 0);
  }
  for (const auto& b : params.spec.col.blocks) {
    std::vector<int> id(static_cast<std::size_t>(b.digits));
    std::iota(id.begin(), id.end(), 1);
    cfg.col_perms.push_back(std::move(id));
    cfg.col_linear.emplace_back(static_cast<std::size_t>(b.digits), 0);
  }
  cfg.params = std::move(params);
  return cfg;
}

std::int64_t GeneratorConfig::lambda() const {
  std::int64_t l = 1;
  for (const auto& b : params.spec.row.blocks) l = std::lcm(l, b.base);
  for (const auto& b : params.spec.col.blocks) l = std::lcm(l, b.base);
  return l;
}

std::int64_t GeneratorConfig::delta() const {
  std::int64_t d = lambda();
  for (auto p : params.spec.row.primed) d = std::lcm(d, p);
  for (auto q : params.spec.col.primed) d = std::lcm(d, q);
  return d;
}

std::int64_t GeneratorConfig::theta_offset(std::int64_t theta_rank) const {
  if (theta_offsets.empty()) return 0;
  return theta_offsets.at(static_cast<std::size_t>(theta_rank));
}

void GeneratorConfig::validate() const {
  params.validate();
  const auto lam = lambda();
  check_perms(row_perms, params.spec.row.blocks, "row_perms");
  check_perms(col_perms, params.spec.col.blocks, "col_perms");
  check_linear(row_linear, params.spec.row.blocks, lam, "row_linear");
  check_linear(col_linear, params.spec.col.blocks, lam, "col_linear");
  if (!theta_offsets.empty()) {
    const auto alpha = params.alpha();
    if (static_cast<std::int64_t>(theta_offsets.size()) != alpha)
      throw ConfigError("theta_offsets", "expected " + std::to_string(alpha) + " offsets (one per theta), got " +
                                             std::to_string(theta_offsets.size()));
    for (std::size_t i = 0; i < theta_offsets.size(); ++i)
      if (theta_offsets[i] < 0 || theta_offsets[i] >= lam)
        throw ConfigError(at("theta_offsets", i), "offset must lie in [0, " + std::to_string(lam) + ")");
  }
}

std::vector<std::string> config_warnings(const GeneratorConfig& cfg) {
  std::vector<std::string> out;
  const auto& spec = cfg.params.spec;
  std::multiset<std::int64_t> row, col;
  for (const auto& b : spec.row.blocks)
    if (b.base > 1) row.insert(b.base);
  for (const auto& b : spec.col.blocks) col.insert(b.base);
  for (auto p : std::set<std::int64_t>(row.begin(), row.end()))
    if (row.count(p) > 1) out.push_back("prime " + std::to_string(p) + " appears in more than one p-block");
  for (auto q : std::set<std::int64_t>(col.begin(), col.end()))
    if (col.count(q) > 1) out.push_back("prime " + std::to_string(q) + " appears in more than one q-block");
  for (auto p : std::set<std::int64_t>(row.begin(), row.end()))
    if (col.count(p) > 0) out.push_back("prime " + std::to_string(p) + " appears on both the p-side and the q-side");
  return out;
}

}  // namespace zcacs
