#include <doctest.h>

#include <vector>

#include "zcacs/errors.hpp"
#include "zcacs/mixed_radix.hpp"

using namespace zcacs;

namespace {

RadixSide side(std::vector<RadixBlock> blocks, std::vector<std::int64_t> primed) { return {std::move(blocks), std::move(primed)}; }

// Flattened digits, most significant first, so value order is lexicographic order.
std::vector<std::int64_t> significance_order(const DigitVector& v) {
  std::vector<std::int64_t> out(v.primed.rbegin(), v.primed.rend());
  for (auto b = v.blocks.rbegin(); b != v.blocks.rend(); ++b) out.insert(out.end(), b->rbegin(), b->rend());
  return out;
}

}  // namespace

TEST_CASE("decompose: worked values") {
  const auto row = side({{2, 2}}, {3});
  const auto col = side({{3, 2}}, {2});

  auto zero = decompose(0, row, true);
  CHECK(zero.blocks == std::vector<std::vector<std::int64_t>>{{0, 0}});
  CHECK(zero.primed == std::vector<std::int64_t>{0});

  auto seven = decompose(7, row, true);
  CHECK(seven.blocks == std::vector<std::vector<std::int64_t>>{{1, 1}});
  CHECK(seven.primed == std::vector<std::int64_t>{1});

  auto thirteen = decompose(13, col, true);
  CHECK(thirteen.blocks == std::vector<std::vector<std::int64_t>>{{1, 1}});
  CHECK(thirteen.primed == std::vector<std::int64_t>{1});

  auto inner = decompose(3, row, false);
  CHECK(inner.blocks == std::vector<std::vector<std::int64_t>>{{1, 1}});
  CHECK(inner.primed.empty());
}

TEST_CASE("decompose: range errors") {
  const auto row = side({{2, 2}}, {3});
  CHECK_THROWS_AS(decompose(12, row, true), RangeError);
  CHECK_THROWS_AS(decompose(4, row, false), RangeError);
  CHECK_THROWS_AS(decompose(-1, row, true), RangeError);
}

TEST_CASE("compose: worked values and shape errors") {
  const auto row = side({{2, 2}}, {3});
  CHECK(compose(DigitVector{{{0, 0}}, {0}}, row) == 0);
  CHECK(compose(DigitVector{{{1, 1}}, {1}}, row) == 7);
  CHECK(compose(DigitVector{{{1, 1}}, {}}, row) == 3);

  CHECK_THROWS_AS(compose(DigitVector{{{1, 1}, {0}}, {1}}, row), ShapeError);  // block count
  CHECK_THROWS_AS(compose(DigitVector{{{1}}, {1}}, row), ShapeError);          // digit count
  CHECK_THROWS_AS(compose(DigitVector{{{2, 0}}, {0}}, row), ShapeError);       // digit >= base
  CHECK_THROWS_AS(compose(DigitVector{{{0, 0}}, {3}}, row), ShapeError);       // primed digit >= base
  CHECK_THROWS_AS(compose(DigitVector{{{0, 0}}, {0, 0}}, row), ShapeError);    // primed count
}

TEST_CASE("successor_digits") {
  const std::vector<std::int64_t> bases{3, 2};
  CHECK(successor_digits(0, bases) == std::vector<std::int64_t>{1, 0});
  CHECK(successor_digits(2, bases) == std::vector<std::int64_t>{0, 1});
  CHECK(successor_digits(4, bases) == std::vector<std::int64_t>{2, 1});
  CHECK_THROWS_AS(successor_digits(5, bases), RangeError);
}

TEST_CASE("split_digits") {
  const std::vector<std::int64_t> bases{2, 3, 5};
  CHECK(split_digits(0, bases) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(split_digits(29, bases) == std::vector<std::int64_t>{1, 2, 4});
  CHECK_THROWS_AS(split_digits(30, bases), RangeError);
}

TEST_CASE("bijection, digit bounds and ordering over full spans") {
  const std::vector<RadixSide> sides{
      side({{2, 2}}, {3}),
      side({{3, 2}}, {2}),
      side({{2, 1}, {3, 2}}, {2, 3}),
      side({{1, 2}, {2, 3}}, {1}),
      side({{5, 1}, {2, 2}, {2, 1}}, {}),
      side({{1, 1}}, {2, 2, 3}),
  };
  for (const auto& s : sides) {
    for (bool primed : {false, true}) {
      const auto span = primed ? s.extended_span() : s.base_span();
      std::vector<std::int64_t> prev;
      for (std::int64_t v = 0; v < span; ++v) {
        const auto d = decompose(v, s, primed);
        REQUIRE(compose(d, s) == v);
        for (std::size_t i = 0; i < d.blocks.size(); ++i)
          for (auto x : d.blocks[i]) {
            CHECK(x >= 0);
            CHECK(x < s.blocks[i].base);
            if (s.blocks[i].base == 1) CHECK(x == 0);
          }
        for (std::size_t i = 0; i < d.primed.size(); ++i) CHECK(d.primed[i] < s.primed[i]);
        const auto key = significance_order(d);
        if (v > 0) CHECK(prev < key);
        prev = key;
      }
      CHECK_THROWS_AS(decompose(span, s, primed), RangeError);
    }
  }
}

TEST_CASE("decompose: base-1 block spans one value") {
  const auto s = side({{1, 3}, {2, 1}}, {});
  CHECK(s.base_span() == 2);
  CHECK(decompose(1, s, false).blocks == std::vector<std::vector<std::int64_t>>{{0, 0, 0}, {1}});
}

TEST_CASE("RadixSpec::validate") {
  RadixSpec ok{side({{1, 1}, {2, 2}}, {1}), side({{3, 1}}, {2})};
  CHECK_NOTHROW(ok.validate());

  RadixSpec bad_row{side({{4, 1}}, {}), side({{3, 1}}, {})};
  CHECK_THROWS_AS(bad_row.validate(), ConfigError);

  RadixSpec bad_col{side({{2, 1}}, {}), side({{1, 1}}, {})};
  CHECK_THROWS_AS(bad_col.validate(), ConfigError);

  RadixSpec no_col{side({{2, 1}}, {}), side({}, {})};
  CHECK_THROWS_AS(no_col.validate(), ConfigError);

  RadixSpec bad_primed{side({{2, 1}}, {4}), side({{3, 1}}, {})};
  CHECK_THROWS_AS(bad_primed.validate(), ConfigError);

  RadixSpec bad_digits{side({{2, 0}}, {}), side({{3, 1}}, {})};
  CHECK_THROWS_AS(bad_digits.validate(), ConfigError);
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}
