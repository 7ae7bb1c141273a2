#ifndef ZCACS_TESTS_FIXTURES_HPP
#define ZCACS_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "zcacs/generator.hpp"

namespace zcacs::testing {

struct Block {
  std::int64_t base;
  int digits;
  int exponent;
};

inline GeneratorConfig make_config(std::vector<Block> row, std::vector<Block> col, std::vector<std::int64_t> row_primed,
                                   std::vector<std::int64_t> col_primed) {
  ConstructionParams p;
  for (auto b : row) {
    p.spec.row.blocks.push_back({b.base, b.digits});
    p.row_exponents.push_back(b.exponent);
  }
  for (auto b : col) {
    p.spec.col.blocks.push_back({b.base, b.digits});
    p.col_exponents.push_back(b.exponent);
  }
  p.spec.row.primed = std::move(row_primed);
  p.spec.col.primed = std::move(col_primed);
  return GeneratorConfig::defaults_for(std::move(p));
}

/// p=2, m1=2, k1=1; q=3, n1=2, r1=1; p'=3, q'=2;
/// f = 3*g12*g11 + g11 + 2*g12 + 2*u12*u11 + 2*u11 + u12.
inline GeneratorConfig example1() {
  auto cfg = make_config({{2, 2, 1}}, {{3, 2, 1}}, {3}, {2});
  cfg.row_perms = {{2, 1}};
  cfg.col_perms = {{1, 2}};
  cfg.row_linear = {{1, 2}};
  cfg.col_linear = {{2, 1}};
  return cfg;
}

inline GeneratorConfig lemma3_small() { return make_config({{2, 1, 1}}, {{3, 1, 1}}, {}, {}); }

/// q=2, n1=2, r1=2 with p'=1 and the given q' list.
inline GeneratorConfig one_dim(int r1, std::vector<std::int64_t> q_primed) {
  return make_config({{1, 1, 1}}, {{2, 2, r1}}, {1}, std::move(q_primed));
}

/// Random permutations, linear coefficients in Z_lambda and theta offsets.
inline void randomize(GeneratorConfig& cfg, std::mt19937_64& rng) {
  const auto lambda = cfg.lambda();
  std::uniform_int_distribution<std::int64_t> coef(0, lambda - 1);
  for (auto& p : cfg.row_perms) std::shuffle(p.begin(), p.end(), rng);
  for (auto& p : cfg.col_perms) std::shuffle(p.begin(), p.end(), rng);
  for (auto& l : cfg.row_linear)
    for (auto& v : l) v = coef(rng);
  for (auto& l : cfg.col_linear)
    for (auto& v : l) v = coef(rng);
  cfg.theta_offsets.resize(static_cast<std::size_t>(cfg.params.alpha()));
  for (auto& v : cfg.theta_offsets) v = coef(rng);
}

/// One block per side drawn from p in {1,2,3}, q in {2,3,5}, m,n,k,r in {1,2},
/// p' in {1,2,3}, q' in {2,3}; rejection-sampled on the size limits.
inline GeneratorConfig random_grid_config(std::mt19937_64& rng, std::int64_t max_area, std::int64_t max_sets) {
  const std::int64_t ps[] = {1, 2, 3}, qs[] = {2, 3, 5}, pps[] = {1, 2, 3}, qps[] = {2, 3};
  const int small[] = {1, 2};
  auto pick = [&](const auto& arr) { return arr[std::uniform_int_distribution<std::size_t>(0, std::size(arr) - 1)(rng)]; };
  for (;;) {
    auto cfg = make_config({{pick(ps), pick(small), pick(small)}}, {{pick(qs), pick(small), pick(small)}},
                           {pick(pps)}, {pick(qps)});
    const auto& p = cfg.params;
    if (p.l1() * p.l2() > max_area || p.alpha1() > max_sets) continue;
    randomize(cfg, rng);
    return cfg;
  }
}

}  // namespace zcacs::testing

#endif
