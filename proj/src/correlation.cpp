#include "zcacs/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <tuple>

#include "zcacs/cyclotomic.hpp"
#include "zcacs/errors.hpp"
#include "zcacs/mixed_radix.hpp"

namespace zcacs {

namespace {

std::vector<std::complex<double>> unit_roots(std::int64_t n) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k)
    w[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  return w;
}

std::complex<double> evaluate(std::span<const std::int64_t> counts, std::int64_t n) {
  const auto w = unit_roots(n);
  std::complex<double> v;
  for (std::size_t k = 0; k < counts.size(); ++k) v += static_cast<double>(counts[k]) * w[k];
  return v;
}

void require_compatible(const PhaseArray& a, const PhaseArray& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("arrays differ in shape: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (a.modulus() != b.modulus())
    throw ShapeError("arrays differ in modulus: " + std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
}

// Accumulates a[ga][ia] * conj(b[gb][ib]) over the given overlap window.
struct Window {
  std::int64_t a_row, b_row, a_col, b_col, rows, cols;
};

Window quadrant(std::int64_t l1, std::int64_t l2, std::int64_t tau1, std::int64_t tau2) {
  Window w{};
  if (tau1 >= 0) {
    w.a_row = 0;  // a_{g,.} b*_{g+tau1,.}
    w.b_row = tau1;
    w.rows = l1 - tau1;
  } else {
    w.a_row = -tau1;  // a_{g-tau1,.} b*_{g,.}
    w.b_row = 0;
    w.rows = l1 + tau1;
  }
  if (tau2 >= 0) {
    w.a_col = 0;
    w.b_col = tau2;
    w.cols = l2 - tau2;
  } else {
    w.a_col = -tau2;
    w.b_col = 0;
    w.cols = l2 + tau2;
  }
  return w;
}

void accumulate(const PhaseArray& a, const PhaseArray& b, std::int64_t tau1, std::int64_t tau2, Arithmetic mode,
                std::complex<double>& value, std::vector<std::int64_t>& counts) {
  const auto n = a.modulus();
  const auto win = quadrant(a.rows(), a.cols(), tau1, tau2);
  if (mode == Arithmetic::Exact) {
    for (std::int64_t g = 0; g < win.rows; ++g)
      for (std::int64_t i = 0; i < win.cols; ++i) {
        auto d = static_cast<std::int64_t>(a.at(win.a_row + g, win.a_col + i)) -
                 static_cast<std::int64_t>(b.at(win.b_row + g, win.b_col + i));
        if (d < 0) d += n;
        ++counts[static_cast<std::size_t>(d)];
      }
    return;
  }
  const auto w = unit_roots(n);
  for (std::int64_t g = 0; g < win.rows; ++g)
    for (std::int64_t i = 0; i < win.cols; ++i)
      value += w[a.at(win.a_row + g, win.a_col + i)] * std::conj(w[b.at(win.b_row + g, win.b_col + i)]);
}

CorrelationValue finish(std::complex<double> value, std::vector<std::int64_t> counts, std::int64_t n, Arithmetic mode) {
  CorrelationValue out;
  if (mode == Arithmetic::Exact) {
    out.value = evaluate(counts, n);
    out.exact = std::move(counts);
  } else {
    out.value = value;
  }
  return out;
}

bool in_range(const PhaseArray& a, std::int64_t tau1, std::int64_t tau2) {
  return -a.rows() < tau1 && tau1 < a.rows() && -a.cols() < tau2 && tau2 < a.cols();
}

// ---------------------------------------------------------------------------
// Bulk verification kernels. Each set is flattened into split real/imaginary
// planes (float mode) or kept as phase exponents (exact mode).

struct FlatSet {
  std::vector<double> re;
  std::vector<double> im;
  std::vector<std::uint32_t> phase;
};

class ZoneScanner {
 public:
  ZoneScanner(const CodeSet& cs, bool exact) : exact_(exact) {
    const auto& meta = cs.meta;
    rows_ = meta.rows;
    cols_ = meta.cols;
    area_ = rows_ * cols_;
    size_ = meta.set_size;
    modulus_ = meta.delta;
    roots_ = unit_roots(modulus_);
    sets_.reserve(cs.family.size());
    for (const auto& set : cs.family) {
      FlatSet flat;
      for (const auto& arr : set) {
        if (exact_) {
          flat.phase.insert(flat.phase.end(), arr.entries().begin(), arr.entries().end());
        } else {
          for (auto e : arr.entries()) {
            flat.re.push_back(roots_[e].real());
            flat.im.push_back(roots_[e].imag());
          }
        }
      }
      sets_.push_back(std::move(flat));
    }
  }

  // C(set a, set b)(tau1, tau2) with tau1 >= 0.
  CorrelationValue correlate(std::size_t a, std::size_t b, std::int64_t tau1, std::int64_t tau2) const {
    const auto win = quadrant(rows_, cols_, tau1, tau2);
    if (exact_) {
      std::vector<std::int64_t> counts(static_cast<std::size_t>(modulus_), 0);
      const auto* pa = sets_[a].phase.data();
      const auto* pb = sets_[b].phase.data();
      const auto n = static_cast<std::int64_t>(modulus_);
      for (std::int64_t i = 0; i < size_; ++i)
        for (std::int64_t g = 0; g < win.rows; ++g) {
          const auto* ra = pa + i * area_ + (win.a_row + g) * cols_ + win.a_col;
          const auto* rb = pb + i * area_ + (win.b_row + g) * cols_ + win.b_col;
          for (std::int64_t c = 0; c < win.cols; ++c) {
            auto d = static_cast<std::int64_t>(ra[c]) - static_cast<std::int64_t>(rb[c]);
            d += (d < 0) ? n : 0;
            ++counts[static_cast<std::size_t>(d)];
          }
        }
      CorrelationValue out;
      std::complex<double> v;
      for (std::size_t k = 0; k < counts.size(); ++k) v += static_cast<double>(counts[k]) * roots_[k];
      out.value = v;
      out.exact = std::move(counts);
      return out;
    }
    double acc_re[4] = {0, 0, 0, 0};
    double acc_im[4] = {0, 0, 0, 0};
    const auto& A = sets_[a];
    const auto& B = sets_[b];
    for (std::int64_t i = 0; i < size_; ++i)
      for (std::int64_t g = 0; g < win.rows; ++g) {
        const auto oa = static_cast<std::size_t>(i * area_ + (win.a_row + g) * cols_ + win.a_col);
        const auto ob = static_cast<std::size_t>(i * area_ + (win.b_row + g) * cols_ + win.b_col);
        const double* ar = A.re.data() + oa;
        const double* ai = A.im.data() + oa;
        const double* br = B.re.data() + ob;
        const double* bi = B.im.data() + ob;
        std::int64_t c = 0;
        for (; c + 4 <= win.cols; c += 4)
          for (int u = 0; u < 4; ++u) {
            acc_re[u] += ar[c + u] * br[c + u] + ai[c + u] * bi[c + u];
            acc_im[u] += ai[c + u] * br[c + u] - ar[c + u] * bi[c + u];
          }
        for (; c < win.cols; ++c) {
          acc_re[0] += ar[c] * br[c] + ai[c] * bi[c];
          acc_im[0] += ai[c] * br[c] - ar[c] * bi[c];
        }
      }
    CorrelationValue out;
    out.value = {(acc_re[0] + acc_re[1]) + (acc_re[2] + acc_re[3]), (acc_im[0] + acc_im[1]) + (acc_im[2] + acc_im[3])};
    return out;
  }

  std::int64_t modulus() const { return modulus_; }

 private:
  bool exact_;
  std::int64_t rows_ = 0, cols_ = 0, area_ = 0, size_ = 0, modulus_ = 1;
  std::vector<std::complex<double>> roots_;
  std::vector<FlatSet> sets_;
};

// Total order used to pick the worst offender: provably nonzero first (exact
// mode), then larger magnitude, then smaller shift, then smaller pair.
bool worse(const Offender& x, const Offender& y) {
  if (x.found != y.found) return x.found;
  if (x.nonzero != y.nonzero) return x.nonzero;
  if (x.magnitude != y.magnitude) return x.magnitude > y.magnitude;
  return std::tie(x.tau1, x.tau2, x.set_a, x.set_b) < std::tie(y.tau1, y.tau2, y.set_a, y.set_b);
}

struct ScanResult {
  Offender worst_auto;
  Offender worst_cross;
  std::int64_t shifts = 0;
  std::vector<Violation> violations;
};

struct ScanContext {
  const ZoneScanner& scanner;
  std::int64_t z1, z2;
  double tol;
  bool exact;
  bool verbose;
};

void record(const ScanContext& ctx, ScanResult& res, std::size_t a, std::size_t b, std::int64_t tau1, std::int64_t tau2,
            const CorrelationValue& v) {
  ++res.shifts;
  Offender o;
  o.found = true;
  o.magnitude = v.magnitude();
  o.nonzero = ctx.exact && !v.is_zero();
  o.tau1 = tau1;
  o.tau2 = tau2;
  o.set_a = static_cast<std::int64_t>(a);
  o.set_b = static_cast<std::int64_t>(b);
  const bool cross = a != b;
  auto& slot = cross ? res.worst_cross : res.worst_auto;
  if (worse(o, slot)) slot = o;
  const bool violated = ctx.exact ? o.nonzero : o.magnitude > ctx.tol;
  if (ctx.verbose && violated) res.violations.push_back({cross, o.set_a, o.set_b, tau1, tau2, o.magnitude});
}

void scan_pair(const ScanContext& ctx, ScanResult& res, std::size_t a, std::size_t b) {
  const auto& sc = ctx.scanner;
  if (a == b) {
    // C(A,A)(-t) = conj(C(A,A)(t)): tau1 = 0 needs only tau2 > 0.
    for (std::int64_t tau2 = 1; tau2 < ctx.z2; ++tau2) record(ctx, res, a, a, 0, tau2, sc.correlate(a, a, 0, tau2));
    for (std::int64_t tau1 = 1; tau1 < ctx.z1; ++tau1)
      for (std::int64_t tau2 = -ctx.z2 + 1; tau2 < ctx.z2; ++tau2)
        record(ctx, res, a, a, tau1, tau2, sc.correlate(a, a, tau1, tau2));
    return;
  }
  for (std::int64_t tau1 = 0; tau1 < ctx.z1; ++tau1)
    for (std::int64_t tau2 = -ctx.z2 + 1; tau2 < ctx.z2; ++tau2)
      record(ctx, res, a, b, tau1, tau2, sc.correlate(a, b, tau1, tau2));
  // C(A,B)(-tau1,-tau2) = conj(C(B,A)(tau1,tau2)); magnitudes agree.
  for (std::int64_t tau1 = 1; tau1 < ctx.z1; ++tau1)
    for (std::int64_t tau2 = -ctx.z2 + 1; tau2 < ctx.z2; ++tau2)
      record(ctx, res, a, b, -tau1, -tau2, sc.correlate(b, a, tau1, tau2));
}

void merge(ScanResult& into, ScanResult&& from) {
  if (worse(from.worst_auto, into.worst_auto)) into.worst_auto = from.worst_auto;
  if (worse(from.worst_cross, into.worst_cross)) into.worst_cross = from.worst_cross;
  into.shifts += from.shifts;
  into.violations.insert(into.violations.end(), std::make_move_iterator(from.violations.begin()),
                         std::make_move_iterator(from.violations.end()));
}

}  // namespace

bool CorrelationValue::is_zero() const {
  if (exact) return vanishes_at_root_of_unity(*exact, static_cast<std::int64_t>(exact->size()));
  return value == std::complex<double>{};
}

CorrelationValue accf_2d(const PhaseArray& a, const PhaseArray& b, std::int64_t tau1, std::int64_t tau2,
                         Arithmetic mode) {
  require_compatible(a, b);
  std::complex<double> value;
  std::vector<std::int64_t> counts(mode == Arithmetic::Exact ? static_cast<std::size_t>(a.modulus()) : 0, 0);
  if (in_range(a, tau1, tau2)) accumulate(a, b, tau1, tau2, mode, value, counts);
  return finish(value, std::move(counts), a.modulus(), mode);
}

CorrelationValue accf_1d(const PhaseArray& a, const PhaseArray& b, std::int64_t tau, Arithmetic mode) {
  require_compatible(a, b);
  if (a.rows() != 1) throw ShapeError("accf_1d needs single-row arrays, got " + std::to_string(a.rows()) + " rows");
  const auto len = a.cols();
  const auto n = a.modulus();
  std::complex<double> value;
  std::vector<std::int64_t> counts(mode == Arithmetic::Exact ? static_cast<std::size_t>(n) : 0, 0);
  const auto w = unit_roots(n);
  auto add = [&](std::int64_t ia, std::int64_t ib) {
    if (mode == Arithmetic::Exact) {
      auto d = static_cast<std::int64_t>(a.at(0, ia)) - static_cast<std::int64_t>(b.at(0, ib));
      if (d < 0) d += n;
      ++counts[static_cast<std::size_t>(d)];
    } else {
      value += w[a.at(0, ia)] * std::conj(w[b.at(0, ib)]);
    }
  };
  if (0 <= tau && tau < len) {
    for (std::int64_t i = 0; i <= len - 1 - tau; ++i) add(i, i + tau);
  } else if (-len < tau && tau < 0) {
    for (std::int64_t i = 0; i <= len + tau - 1; ++i) add(i - tau, i);
  }
  return finish(value, std::move(counts), n, mode);
}

CorrelationValue set_correlation(std::span<const PhaseArray> set_a, std::span<const PhaseArray> set_b,
                                 std::int64_t tau1, std::int64_t tau2, Arithmetic mode) {
  if (set_a.size() != set_b.size())
    throw ShapeError("sets differ in size: " + std::to_string(set_a.size()) + " vs " + std::to_string(set_b.size()));
  if (set_a.empty()) return {};
  const auto n = set_a.front().modulus();
  std::complex<double> value;
  std::vector<std::int64_t> counts(mode == Arithmetic::Exact ? static_cast<std::size_t>(n) : 0, 0);
  for (std::size_t i = 0; i < set_a.size(); ++i) {
    require_compatible(set_a[i], set_b[i]);
    require_compatible(set_a[i], set_a.front());
    if (in_range(set_a[i], tau1, tau2)) accumulate(set_a[i], set_b[i], tau1, tau2, mode, value, counts);
  }
  return finish(value, std::move(counts), n, mode);
}

VerificationReport verify_zcacs(const CodeSet& cs, std::int64_t z1, std::int64_t z2, const VerifyOptions& opts) {
  const auto& meta = cs.meta;
  VerificationReport rep;
  rep.kind = meta.kind;
  rep.zcz_rows = z1;
  rep.zcz_cols = z2;
  rep.exact = opts.exact;
  rep.peak_expected = meta.set_size * meta.rows * meta.cols;
  rep.tolerance = opts.tolerance > 0 ? opts.tolerance : 1e-9 * static_cast<double>(rep.peak_expected);

  try {
    cs.check_shape();
  } catch (const ShapeError& e) {
    rep.structure_ok = false;
    rep.structure_note = e.what();
    rep.pass = false;
    return rep;
  }
  if (z1 < 1 || z2 < 1 || z1 > meta.rows || z2 > meta.cols)
    throw RangeError("zone " + std::to_string(z1) + "x" + std::to_string(z2) + " does not fit arrays of shape " +
                     std::to_string(meta.rows) + "x" + std::to_string(meta.cols));

  const ZoneScanner scanner(cs, opts.exact);
  const ScanContext ctx{scanner, z1, z2, rep.tolerance, opts.exact, opts.verbose};
  const auto count = cs.family.size();

  // Peaks.
  double worst_dev = -1.0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto v = scanner.correlate(k, k, 0, 0);
    bool ok;
    double dev;
    if (opts.exact) {
      const auto exact_val = integer_value_at_root_of_unity(*v.exact, scanner.modulus());
      ok = exact_val && *exact_val == rep.peak_expected;
      dev = std::abs(v.value - std::complex<double>(static_cast<double>(rep.peak_expected), 0.0));
    } else {
      dev = std::abs(v.value - std::complex<double>(static_cast<double>(rep.peak_expected), 0.0));
      ok = dev <= rep.tolerance;
    }
    if (!ok) rep.peak_ok = false;
    if (dev > worst_dev) {
      worst_dev = dev;
      rep.peak_observed = v.value.real();
      rep.peak_set = static_cast<std::int64_t>(k);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(count * (count + 1) / 2);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a; b < count; ++b) pairs.emplace_back(a, b);

  const auto threads = static_cast<std::size_t>(std::max(1, opts.threads));
  std::vector<ScanResult> partial(threads);
  auto work = [&](std::size_t tid) {
    for (std::size_t i = tid; i < pairs.size(); i += threads) scan_pair(ctx, partial[tid], pairs[i].first, pairs[i].second);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  ScanResult total;
  for (auto& p : partial) merge(total, std::move(p));
  std::sort(total.violations.begin(), total.violations.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.set_a, x.set_b, x.tau1, x.tau2) < std::tie(y.set_a, y.set_b, y.tau1, y.tau2);
  });

  rep.worst_auto = total.worst_auto;
  rep.worst_cross = total.worst_cross;
  rep.shifts_checked = total.shifts;
  rep.violations = std::move(total.violations);

  auto clean = [&](const Offender& o) { return !o.found || (opts.exact ? !o.nonzero : o.magnitude <= rep.tolerance); };
  rep.pass = rep.structure_ok && rep.peak_ok && clean(rep.worst_auto) && clean(rep.worst_cross);
  return rep;
}

VerificationReport verify_ccc(const CodeSet& cs, const VerifyOptions& opts) {
  auto rep = verify_zcacs(cs, std::max<std::int64_t>(cs.meta.rows, 1), std::max<std::int64_t>(cs.meta.cols, 1), opts);
  rep.kind = CodeKind::Ccc;
  if (cs.meta.set_count != cs.meta.set_size) {
    rep.structure_ok = false;
    rep.structure_note = "complete complementary code needs as many sets (" + std::to_string(cs.meta.set_count) +
                         ") as arrays per set (" + std::to_string(cs.meta.set_size) + ")";
    rep.pass = false;
  }
  return rep;
}

OptimalityReport optimality(std::int64_t set_count, std::int64_t set_size, std::int64_t l1, std::int64_t l2,
                            std::int64_t z1, std::int64_t z2) {
  if (set_count < 1 || set_size < 1 || l1 < 1 || l2 < 1 || z1 < 1 || z2 < 1)
    throw RangeError("optimality parameters must all be positive");
  if (z1 > l1 || z2 > l2) throw RangeError("zone must not exceed the array size");
  OptimalityReport r;
  r.lhs = set_count * z1 * z2;
  r.rhs = set_size * (l1 + z1 - 1) * (l2 + z2 - 1);
  r.bound_holds = r.lhs <= r.rhs;
  r.optimal_set_count = set_size * (l1 / z1) * (l2 / z2);
  r.optimal = set_count == r.optimal_set_count;
  return r;
}

OptimalityReport optimality(const CodeSetParams& p) {
  return optimality(p.set_count, p.set_size, p.rows, p.cols, p.zcz_rows, p.zcz_cols);
}

CorrelationValue root_sum(std::int64_t t, std::int64_t t2, std::int64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
  const auto step = (((t - t2) % p) + p) % p;
  for (std::int64_t j = 0; j < p; ++j) ++counts[static_cast<std::size_t>((step * j) % p)];
  CorrelationValue out;
  out.value = evaluate(counts, p);
  out.exact = std::move(counts);
  return out;
}

}  // namespace zcacs
