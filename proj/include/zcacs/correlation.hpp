#ifndef ZCACS_CORRELATION_HPP
#define ZCACS_CORRELATION_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zcacs/codeset.hpp"

namespace zcacs {

/// A correlation sum. In exact mode `exact[k]` counts the products equal to
/// w_delta^k, so value == sum_k exact[k] * w_delta^k.
struct CorrelationValue {
  std::complex<double> value;
  std::optional<std::vector<std::int64_t>> exact;

  double magnitude() const { return std::abs(value); }
  /// Exact zero test when coefficients are present, otherwise value == 0.
  bool is_zero() const;
};

enum class Arithmetic { Float, Exact };

/// Aperiodic cross-correlation sum_{g,i} a[g][i] * conj(b[g+tau1][i+tau2])
/// over the overlap, evaluated with the four sign-quadrant formulas.
/// Zero outside -rows < tau1 < rows, -cols < tau2 < cols.
CorrelationValue accf_2d(const PhaseArray& a, const PhaseArray& b, std::int64_t tau1, std::int64_t tau2,
                         Arithmetic mode = Arithmetic::Float);

/// Single-row correlation; equals accf_2d(a, b, 0, tau).
CorrelationValue accf_1d(const PhaseArray& a, const PhaseArray& b, std::int64_t tau,
                         Arithmetic mode = Arithmetic::Float);

/// sum_i accf_2d(set_a[i], set_b[i], tau1, tau2).
CorrelationValue set_correlation(std::span<const PhaseArray> set_a, std::span<const PhaseArray> set_b,
                                 std::int64_t tau1, std::int64_t tau2, Arithmetic mode = Arithmetic::Float);

/// Worst correlation found in one category. Shifts are reported for the
/// ordered pair (set_a, set_b) with set_a <= set_b.
struct Offender {
  bool found = false;  // false when the category had nothing to check
  double magnitude = 0.0;
  bool nonzero = false;  // exact mode: the value is provably nonzero
  std::int64_t tau1 = 0;
  std::int64_t tau2 = 0;
  std::int64_t set_a = 0;
  std::int64_t set_b = 0;
};

struct Violation {
  bool cross = false;
  std::int64_t set_a = 0;
  std::int64_t set_b = 0;
  std::int64_t tau1 = 0;
  std::int64_t tau2 = 0;
  double magnitude = 0.0;
};

struct VerifyOptions {
  /// Zero threshold; <= 0 selects 1e-9 * set_size * rows * cols.
  double tolerance = 0.0;
  bool exact = false;
  int threads = 1;
  /// Collect every violation, not only the worst per category.
  bool verbose = false;
};

struct VerificationReport {
  CodeKind kind = CodeKind::Zcacs2d;
  std::int64_t zcz_rows = 0;
  std::int64_t zcz_cols = 0;
  double tolerance = 0.0;
  bool exact = false;

  bool structure_ok = true;
  std::string structure_note;

  std::int64_t peak_expected = 0;
  double peak_observed = 0.0;  // the set whose peak deviates most
  std::int64_t peak_set = 0;
  bool peak_ok = true;

  Offender worst_auto;
  Offender worst_cross;
  std::int64_t shifts_checked = 0;
  std::vector<Violation> violations;

  bool pass = false;
};

/// Checks the zero-correlation-zone property of `cs` for |tau1| < z1,
/// |tau2| < z2 over every set and set pair. Failures are reported, not thrown.
/// Throws RangeError if the zone exceeds the array shape.
VerificationReport verify_zcacs(const CodeSet& cs, std::int64_t z1, std::int64_t z2, const VerifyOptions& opts = {});

/// verify_zcacs over the full shift range plus the set_count == set_size check.
VerificationReport verify_ccc(const CodeSet& cs, const VerifyOptions& opts = {});

/// Both sides of the set-size bound  set_count*z1*z2 <= set_size*(l1+z1-1)*(l2+z2-1)
/// and the optimality equality  set_count == set_size*floor(l1/z1)*floor(l2/z2).
struct OptimalityReport {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool bound_holds = false;
  std::int64_t optimal_set_count = 0;
  bool optimal = false;
};

OptimalityReport optimality(std::int64_t set_count, std::int64_t set_size, std::int64_t l1, std::int64_t l2,
                            std::int64_t z1, std::int64_t z2);
OptimalityReport optimality(const CodeSetParams& params);

/// sum_{j<p} w_p^{(t - t2) j}: p when t == t2 (mod p), 0 otherwise.
/// Throws DomainError unless p is prime.
CorrelationValue root_sum(std::int64_t t, std::int64_t t2, std::int64_t p);

}  // namespace zcacs

#endif
