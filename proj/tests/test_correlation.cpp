#include <doctest.h>

#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "zcacs/correlation.hpp"
#include "zcacs/cyclotomic.hpp"
#include "zcacs/errors.hpp"
#include "zcacs/generator.hpp"

using namespace zcacs;
using namespace zcacs::testing;

namespace {

PhaseArray row_array(std::vector<std::int64_t> phases, std::int64_t modulus) {
  PhaseArray a(1, static_cast<std::int64_t>(phases.size()), modulus);
  for (std::size_t i = 0; i < phases.size(); ++i) a.set(0, static_cast<std::int64_t>(i), phases[i]);
  return a;
}

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

const CodeSet& example1_set() {
  static const CodeSet cs = build_zcacs(example1());
  return cs;
}

}  // namespace

TEST_CASE("accf_2d: worked values") {
  std::mt19937_64 rng(1);
  const auto a = random_array(rng, 3, 4, 5);
  CHECK(near(accf_2d(a, a, 0, 0).value, 12.0));

  const auto b = row_array({0, 1}, 4);
  CHECK(near(accf_2d(b, b, 0, 1).value, std::complex<double>(0, -1)));
  CHECK(near(accf_2d(b, b, 0, -1).value, std::complex<double>(0, 1)));

  CHECK(accf_2d(a, a, 3, 0).value == std::complex<double>(0));
  CHECK(accf_2d(a, a, 0, -4).value == std::complex<double>(0));

  CHECK_THROWS_AS(accf_2d(a, random_array(rng, 3, 5, 5), 0, 0), ShapeError);
  CHECK_THROWS_AS(accf_2d(a, random_array(rng, 3, 4, 6), 0, 0), ShapeError);
}

TEST_CASE("accf_2d: oracle, conjugate symmetry and peak bound") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t rows = trial % 2 ? 3 : 4, cols = trial % 2 ? 4 : 5;
    const std::int64_t modulus = 2 + trial % 7;
    const auto a = random_array(rng, rows, cols, modulus);
    const auto b = random_array(rng, rows, cols, modulus);
    const auto ma = to_matrix(a), mb = to_matrix(b);
    for (std::int64_t t1 = -rows; t1 <= rows; ++t1)
      for (std::int64_t t2 = -cols; t2 <= cols; ++t2) {
        const auto v = accf_2d(a, b, t1, t2).value;
        REQUIRE(near(v, padded_correlation(ma, mb, t1, t2)));
        REQUIRE(near(v, std::conj(accf_2d(b, a, -t1, -t2).value)));
        const auto overlap = std::max<std::int64_t>(0, rows - std::abs(t1)) * std::max<std::int64_t>(0, cols - std::abs(t2));
        REQUIRE(std::abs(v) <= overlap + 1e-9);
      }
  }
}

TEST_CASE("accf_1d: worked values") {
  const auto ones = row_array({0, 0, 0, 0}, 2);
  CHECK(near(accf_1d(ones, ones, 1).value, 3.0));
  CHECK(accf_1d(ones, ones, 4).value == std::complex<double>(0));
  CHECK(accf_1d(ones, ones, -4).value == std::complex<double>(0));

  const auto a = row_array({0, 0, 0, 1}, 2), b = row_array({0, 0, 1, 0}, 2);
  for (std::int64_t t = 1; t < 4; ++t) CHECK(near(accf_1d(a, a, t).value + accf_1d(b, b, t).value, 0.0));
  CHECK(near(accf_1d(a, a, 1).value, 1.0));

  PhaseArray two_rows(2, 4, 2);
  CHECK_THROWS_AS(accf_1d(two_rows, two_rows, 0), ShapeError);
}

TEST_CASE("accf_1d agrees with accf_2d on single rows") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_array(rng, 1, 7, 6), b = random_array(rng, 1, 7, 6);
    for (std::int64_t t = -8; t <= 8; ++t) REQUIRE(near(accf_1d(a, b, t).value, accf_2d(a, b, 0, t).value));
  }
}

TEST_CASE("exact and float arithmetic agree") {
  std::mt19937_64 rng(4);
  for (std::int64_t modulus : {2, 3, 4, 6, 10, 12, 30}) {
    const auto a = random_array(rng, 4, 5, modulus), b = random_array(rng, 4, 5, modulus);
    for (std::int64_t t1 = -3; t1 <= 3; ++t1)
      for (std::int64_t t2 = -4; t2 <= 4; ++t2) {
        const auto f = accf_2d(a, b, t1, t2);
        const auto e = accf_2d(a, b, t1, t2, Arithmetic::Exact);
        REQUIRE(e.exact.has_value());
        REQUIRE(near(f.value, e.value, 1e-9 * 20));
        REQUIRE(e.is_zero() == (std::abs(f.value) < 1e-9));
      }
  }
}

TEST_CASE("set_correlation") {
  const auto& cs = example1_set();
  const std::span<const PhaseArray> s0(cs.family[0]), s1(cs.family[1]);
  CHECK(near(set_correlation(s0, s0, 0, 0).value, 6.0 * 12 * 18));
  CHECK(near(set_correlation(s0, s0, 1, 1).value, 0.0));
  CHECK(set_correlation(s0, s0, 1, 1, Arithmetic::Exact).is_zero());
  CHECK(near(set_correlation(s0, s1, 0, 0).value, 0.0));
  CHECK_THROWS_AS(set_correlation(s0, s1.subspan(1), 0, 0), ShapeError);
}

TEST_CASE("verify_zcacs: Example 1") {
  const auto& cs = example1_set();
  const auto ok = verify_zcacs(cs, 4, 9);
  CHECK(ok.pass);
  CHECK(ok.structure_ok);
  CHECK(ok.peak_expected == 1296);
  CHECK(ok.peak_observed == doctest::Approx(1296));
  CHECK(ok.worst_cross.magnitude < 1e-9);

  VerifyOptions verbose;
  verbose.verbose = true;
  const auto inflated = verify_zcacs(cs, 5, 9, verbose);
  CHECK_FALSE(inflated.pass);
  CHECK_FALSE(inflated.violations.empty());
  CHECK(inflated.worst_auto.magnitude > 1);
  CHECK(std::abs(inflated.worst_auto.tau1) == 4);
  CHECK(std::abs(inflated.worst_cross.tau1) == 4);
  for (const auto& v : inflated.violations) CHECK(std::abs(v.tau1) == 4);
  CHECK(verify_zcacs(cs, 5, 9).violations.empty());

  VerifyOptions lax;
  lax.tolerance = std::numeric_limits<double>::infinity();
  CHECK(verify_zcacs(cs, 12, 18, lax).pass);

  CHECK_THROWS_AS(verify_zcacs(cs, 13, 9), RangeError);
}

TEST_CASE("verify_zcacs: thread count does not change the report") {
  const auto& cs = example1_set();
  VerifyOptions one, three;
  three.threads = 3;
  const auto a = verify_zcacs(cs, 6, 9, one);
  const auto b = verify_zcacs(cs, 6, 9, three);
  CHECK(a.pass == b.pass);
  CHECK(a.shifts_checked == b.shifts_checked);
  CHECK(a.worst_auto.tau1 == b.worst_auto.tau1);
  CHECK(a.worst_auto.tau2 == b.worst_auto.tau2);
  CHECK(a.worst_auto.set_a == b.worst_auto.set_a);
  CHECK(a.worst_cross.set_a == b.worst_cross.set_a);
  CHECK(a.worst_cross.set_b == b.worst_cross.set_b);
  CHECK(a.worst_cross.tau1 == b.worst_cross.tau1);
  CHECK(a.worst_cross.tau2 == b.worst_cross.tau2);
  CHECK(a.worst_cross.magnitude == doctest::Approx(b.worst_cross.magnitude));
}

TEST_CASE("verify_ccc") {
  const auto small = build_ccc(lemma3_small());
  VerifyOptions exact;
  exact.exact = true;
  const auto r = verify_ccc(small, exact);
  CHECK(r.pass);
  CHECK(r.peak_expected == 36);

  CHECK_FALSE(verify_ccc(example1_set()).pass);

  CodeSet unit;
  unit.family = {{PhaseArray(1, 1, 2)}};
  unit.meta.kind = CodeKind::Ccc;
  unit.meta.set_count = unit.meta.set_size = unit.meta.rows = unit.meta.cols = 1;
  unit.meta.zcz_rows = unit.meta.zcz_cols = 1;
  unit.meta.lambda = unit.meta.delta = 2;
  const auto u = verify_ccc(unit);
  CHECK(u.pass);
  CHECK(u.peak_observed == doctest::Approx(1));

  CodeSet lopsided = small;
  lopsided.family.pop_back();
  lopsided.meta.set_count = 5;
  const auto l = verify_ccc(lopsided);
  CHECK_FALSE(l.structure_ok);
  CHECK_FALSE(l.pass);
}

TEST_CASE("verify_zcacs: tampered entry is caught") {
  CodeSet cs = build_ccc(lemma3_small());
  cs.family[2][3].set(1, 2, cs.family[2][3].at(1, 2) + 1);
  CHECK_FALSE(verify_ccc(cs).pass);
  VerifyOptions exact;
  exact.exact = true;
  const auto r = verify_ccc(cs, exact);
  CHECK_FALSE(r.pass);
  CHECK((r.worst_auto.nonzero || r.worst_cross.nonzero || !r.peak_ok));
}

TEST_CASE("optimality") {
  const auto e1 = optimality(36, 6, 12, 18, 4, 9);
  CHECK(e1.optimal);
  CHECK(e1.optimal_set_count == 36);
  CHECK(e1.bound_holds);
  CHECK(e1.lhs == 36 * 4 * 9);
  CHECK(e1.rhs == 6 * 15 * 26);

  CHECK(optimality(6, 6, 2, 3, 2, 3).optimal);
  CHECK_FALSE(optimality(35, 6, 12, 18, 4, 9).optimal);
  CHECK_FALSE(optimality(1000, 6, 12, 18, 4, 9).bound_holds);
  CHECK_THROWS_AS(optimality(0, 6, 12, 18, 4, 9), RangeError);
  CHECK_THROWS_AS(optimality(36, 6, 12, 18, -4, 9), RangeError);
}

TEST_CASE("root_sum") {
  CHECK(root_sum(1, 0, 3).is_zero());
  CHECK(root_sum(1, 0, 3).magnitude() < 1e-12);
  for (std::int64_t t = 0; t < 5; ++t) CHECK(root_sum(t, t, 5).value.real() == doctest::Approx(5));
  CHECK(root_sum(4, 1, 3).value.real() == doctest::Approx(3));
  CHECK_FALSE(root_sum(4, 1, 3).is_zero());
  CHECK_THROWS_AS(root_sum(1, 0, 4), DomainError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});

  const std::vector<std::int64_t> three{1, 1, 1};
  CHECK(vanishes_at_root_of_unity(three, 3));
  CHECK_FALSE(vanishes_at_root_of_unity(three, 6));
  const std::vector<std::int64_t> mixed{2, 0, 1, 0, 0, 1};  // 2 + w^2 + w^5 over w_6
  CHECK(integer_value_at_root_of_unity(std::vector<std::int64_t>{4, 1, 0, 1}, 6) == std::nullopt);
  CHECK(integer_value_at_root_of_unity(std::vector<std::int64_t>{5, 1, 1, 1, 1, 1}, 6) == 4);
  CHECK_FALSE(vanishes_at_root_of_unity(mixed, 6));
}
