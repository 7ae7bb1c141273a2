#include "zcacs/generator.hpp"

#include <algorithm>
#include <thread>

#include "zcacs/correlation.hpp"
#include "zcacs/errors.hpp"

namespace zcacs {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

void check_digits(const DigitVector& v, const RadixSide& side, bool need_primed, const char* what) {
  if (v.blocks.size() != side.blocks.size())
    throw ShapeError(std::string(what) + ": expected " + std::to_string(side.blocks.size()) + " digit blocks");
  for (std::size_t i = 0; i < side.blocks.size(); ++i) {
    const auto& b = side.blocks[i];
    if (v.blocks[i].size() != static_cast<std::size_t>(b.digits))
      throw ShapeError(std::string(what) + ": block " + std::to_string(i) + " needs " + std::to_string(b.digits) +
                       " digits");
    for (auto d : v.blocks[i])
      if (d < 0 || d >= std::max<std::int64_t>(b.base, 1))
        throw ShapeError(std::string(what) + ": digit " + std::to_string(d) + " not below base " +
                         std::to_string(b.base));
  }
  if (need_primed) {
    if (v.primed.size() != side.primed.size())
      throw ShapeError(std::string(what) + ": expected " + std::to_string(side.primed.size()) + " primed digits");
    for (std::size_t i = 0; i < side.primed.size(); ++i)
      if (v.primed[i] < 0 || v.primed[i] >= side.primed[i])
        throw ShapeError(std::string(what) + ": primed digit " + std::to_string(i) + " out of range");
  }
}

void check_index(const ExponentIndex& idx, const ConstructionParams& params, const char* what) {
  const auto radices = params.exponent_radices();
  const auto a = params.spec.row.blocks.size();
  if (idx.row.size() != a || idx.col.size() != params.spec.col.blocks.size())
    throw RangeError(std::string(what) + ": wrong number of components");
  for (std::size_t i = 0; i < radices.size(); ++i) {
    const auto v = i < a ? idx.row[i] : idx.col[i - a];
    if (v < 0 || v >= radices[i])
      throw RangeError(std::string(what) + " component " + std::to_string(i) + " = " + std::to_string(v) +
                       " outside [0, " + std::to_string(radices[i]) + ")");
  }
}

void check_coset(const CosetIndex& coset, const ConstructionParams& params) {
  const auto& rp = params.spec.row.primed;
  const auto& cp = params.spec.col.primed;
  if (coset.c.size() != rp.size() || coset.d.size() != cp.size())
    throw RangeError("coset index has the wrong number of components");
  for (std::size_t i = 0; i < rp.size(); ++i)
    if (coset.c[i] < 0 || coset.c[i] >= rp[i])
      throw RangeError("coset c[" + std::to_string(i) + "] = " + std::to_string(coset.c[i]) + " outside [0, " +
                       std::to_string(rp[i]) + ")");
  for (std::size_t j = 0; j < cp.size(); ++j)
    if (coset.d[j] < 0 || coset.d[j] >= cp[j])
      throw RangeError("coset d[" + std::to_string(j) + "] = " + std::to_string(coset.d[j]) + " outside [0, " +
                       std::to_string(cp[j]) + ")");
}

// Base-p digits of every theta/t component (empty for base-1 blocks).
struct IndexDigits {
  std::vector<std::vector<std::int64_t>> row;
  std::vector<std::vector<std::int64_t>> col;
};

IndexDigits split_index(const ExponentIndex& idx, const ConstructionParams& params) {
  IndexDigits out;
  for (std::size_t i = 0; i < idx.row.size(); ++i) {
    const auto p = params.spec.row.blocks[i].base;
    if (p == 1) {
      out.row.emplace_back();
      continue;
    }
    const std::vector<std::int64_t> bases(static_cast<std::size_t>(params.row_exponents[i]), p);
    out.row.push_back(split_digits(idx.row[i], bases));
  }
  for (std::size_t j = 0; j < idx.col.size(); ++j) {
    const std::vector<std::int64_t> bases(static_cast<std::size_t>(params.col_exponents[j]),
                                          params.spec.col.blocks[j].base);
    out.col.push_back(split_digits(idx.col[j], bases));
  }
  return out;
}

// f without reduction.
std::int64_t f_raw(const DigitVector& gamma, const DigitVector& mu, const GeneratorConfig& cfg) {
  const auto lambda = cfg.lambda();
  const auto& spec = cfg.params.spec;
  std::int64_t v = 0;
  for (std::size_t i = 0; i < spec.row.blocks.size(); ++i) {
    const auto& g = gamma.blocks[i];
    const auto& pi = cfg.row_perms[i];
    const auto scale = lambda / spec.row.blocks[i].base;
    for (std::size_t e = 0; e + 1 < g.size(); ++e) v += scale * g[pi[e] - 1] * g[pi[e + 1] - 1];
    for (std::size_t e = 0; e < g.size(); ++e) v += cfg.row_linear[i][e] * g[e];
  }
  for (std::size_t j = 0; j < spec.col.blocks.size(); ++j) {
    const auto& u = mu.blocks[j];
    const auto& sigma = cfg.col_perms[j];
    const auto scale = lambda / spec.col.blocks[j].base;
    for (std::size_t o = 0; o + 1 < u.size(); ++o) v += scale * u[sigma[o] - 1] * u[sigma[o + 1] - 1];
    for (std::size_t o = 0; o < u.size(); ++o) v += cfg.col_linear[j][o] * u[o];
  }
  return v;
}

std::int64_t a_value(const IndexDigits& theta, const IndexDigits& t, std::int64_t d_theta, const DigitVector& gamma,
                     const DigitVector& mu, const GeneratorConfig& cfg) {
  const auto lambda = cfg.lambda();
  const auto& spec = cfg.params.spec;
  std::int64_t v = f_raw(gamma, mu, cfg);
  for (std::size_t i = 0; i < spec.row.blocks.size(); ++i) {
    if (theta.row[i].empty()) continue;
    const auto& g = gamma.blocks[i];
    const auto& pi = cfg.row_perms[i];
    std::int64_t term = g[pi.front() - 1] * theta.row[i][0] + g[pi.back() - 1] * t.row[i][0];
    for (std::size_t l = 1; l < theta.row[i].size(); ++l) term += theta.row[i][l] * t.row[i][l];
    v += (lambda / spec.row.blocks[i].base) * term;
  }
  for (std::size_t j = 0; j < spec.col.blocks.size(); ++j) {
    const auto& u = mu.blocks[j];
    const auto& sigma = cfg.col_perms[j];
    std::int64_t term = u[sigma.front() - 1] * theta.col[j][0] + u[sigma.back() - 1] * t.col[j][0];
    for (std::size_t l = 1; l < theta.col[j].size(); ++l) term += theta.col[j][l] * t.col[j][l];
    v += (lambda / spec.col.blocks[j].base) * term;
  }
  return mod(v + d_theta, lambda);
}

std::int64_t m_raw(const CosetIndex& coset, const DigitVector& ext_gamma, const DigitVector& ext_mu,
                   const GeneratorConfig& cfg) {
  const auto delta = cfg.delta();
  const auto& spec = cfg.params.spec;
  std::int64_t v = (delta / cfg.lambda()) * f_raw(ext_gamma, ext_mu, cfg);
  for (std::size_t i = 0; i < spec.row.primed.size(); ++i)
    v += coset.c[i] * (delta / spec.row.primed[i]) * ext_gamma.primed[i];
  for (std::size_t j = 0; j < spec.col.primed.size(); ++j)
    v += coset.d[j] * (delta / spec.col.primed[j]) * ext_mu.primed[j];
  return v;
}

// M plus the selector terms expanded directly at scale delta.
std::int64_t b_value(const IndexDigits& theta, const IndexDigits& t, std::int64_t d_theta, const CosetIndex& coset,
                     const DigitVector& ext_gamma, const DigitVector& ext_mu, const GeneratorConfig& cfg) {
  const auto delta = cfg.delta();
  const auto& spec = cfg.params.spec;
  std::int64_t v = m_raw(coset, ext_gamma, ext_mu, cfg);
  for (std::size_t i = 0; i < spec.row.blocks.size(); ++i) {
    if (theta.row[i].empty()) continue;
    const auto w = delta / spec.row.blocks[i].base;
    const auto& g = ext_gamma.blocks[i];
    const auto& pi = cfg.row_perms[i];
    v += w * g[pi.front() - 1] * theta.row[i][0];
    v += w * g[pi.back() - 1] * t.row[i][0];
    for (std::size_t l = 1; l < theta.row[i].size(); ++l) v += w * theta.row[i][l] * t.row[i][l];
  }
  for (std::size_t j = 0; j < spec.col.blocks.size(); ++j) {
    const auto w = delta / spec.col.blocks[j].base;
    const auto& u = ext_mu.blocks[j];
    const auto& sigma = cfg.col_perms[j];
    v += w * u[sigma.front() - 1] * theta.col[j][0];
    v += w * u[sigma.back() - 1] * t.col[j][0];
    for (std::size_t l = 1; l < theta.col[j].size(); ++l) v += w * theta.col[j][l] * t.col[j][l];
  }
  v += (delta / cfg.lambda()) * d_theta;
  return mod(v, delta);
}

std::vector<std::vector<std::int64_t>> enumerate(std::span<const std::int64_t> radices) {
  std::int64_t total = 1;
  for (auto r : radices) total *= r;
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::int64_t> cur(radices.size(), 0);
  for (std::int64_t n = 0; n < total; ++n) {
    out.push_back(cur);
    for (std::size_t k = radices.size(); k-- > 0;) {
      if (++cur[k] < radices[k]) break;
      cur[k] = 0;
    }
  }
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const auto n = static_cast<std::size_t>(std::max(1, threads));
  if (n == 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t tid = 0; tid < n; ++tid)
    pool.emplace_back([&, tid] {
      for (std::size_t k = tid; k < count; k += n) fn(k);
    });
}

enum class Layout { Inner, Extended };

CodeSet build_family(const GeneratorConfig& cfg, CodeKind kind, Layout layout, int threads) {
  cfg.validate();
  const auto& params = cfg.params;
  const auto& spec = params.spec;
  const auto thetas = exponent_indices(params);
  std::vector<IndexDigits> theta_digits;
  for (const auto& th : thetas) theta_digits.push_back(split_index(th, params));

  const bool extended = layout == Layout::Extended;
  const std::vector<CosetIndex> cosets = extended ? coset_indices(params) : std::vector<CosetIndex>{CosetIndex{}};
  const auto rows = extended ? params.l1() : params.m();
  const auto cols = extended ? params.l2() : params.n();
  const auto modulus = extended ? cfg.delta() : cfg.lambda();

  std::vector<DigitVector> row_digits, col_digits;
  for (std::int64_t r = 0; r < rows; ++r) row_digits.push_back(decompose(r, spec.row, extended));
  for (std::int64_t c = 0; c < cols; ++c) col_digits.push_back(decompose(c, spec.col, extended));

  CodeSet cs;
  cs.meta = derive_params(cfg);
  cs.meta.kind = kind;
  cs.provenance = cfg;
  cs.family.resize(thetas.size() * cosets.size());

  parallel_for(cs.family.size(), threads, [&](std::size_t k) {
    const auto& t = theta_digits[k / cosets.size()];
    const auto& coset = cosets[k % cosets.size()];
    auto& set = cs.family[k];
    set.reserve(thetas.size());
    for (std::size_t th = 0; th < thetas.size(); ++th) {
      const auto d_theta = cfg.theta_offset(static_cast<std::int64_t>(th));
      set.push_back(materialize_array(rows, cols, modulus, [&](std::int64_t r, std::int64_t c) {
        const auto& g = row_digits[static_cast<std::size_t>(r)];
        const auto& u = col_digits[static_cast<std::size_t>(c)];
        return extended ? b_value(theta_digits[th], t, d_theta, coset, g, u, cfg)
                        : a_value(theta_digits[th], t, d_theta, g, u, cfg);
      }));
    }
  });
  cs.check_shape();
  return cs;
}

}  // namespace

std::vector<ExponentIndex> exponent_indices(const ConstructionParams& params) {
  const auto radices = params.exponent_radices();
  const auto a = params.spec.row.blocks.size();
  std::vector<ExponentIndex> out;
  for (auto& flat : enumerate(radices)) {
    ExponentIndex idx;
    idx.row.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(a));
    idx.col.assign(flat.begin() + static_cast<std::ptrdiff_t>(a), flat.end());
    out.push_back(std::move(idx));
  }
  return out;
}

std::int64_t exponent_rank(const ExponentIndex& idx, const ConstructionParams& params) {
  check_index(idx, params, "index");
  const auto radices = params.exponent_radices();
  const auto a = params.spec.row.blocks.size();
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) rank = rank * radices[i] + (i < a ? idx.row[i] : idx.col[i - a]);
  return rank;
}

std::vector<CosetIndex> coset_indices(const ConstructionParams& params) {
  std::vector<std::int64_t> radices = params.spec.row.primed;
  radices.insert(radices.end(), params.spec.col.primed.begin(), params.spec.col.primed.end());
  const auto a = params.spec.row.primed.size();
  std::vector<CosetIndex> out;
  for (auto& flat : enumerate(radices)) {
    CosetIndex c;
    c.c.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(a));
    c.d.assign(flat.begin() + static_cast<std::ptrdiff_t>(a), flat.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::int64_t eval_f(const DigitVector& gamma, const DigitVector& mu, const GeneratorConfig& cfg) {
  check_digits(gamma, cfg.params.spec.row, false, "gamma");
  check_digits(mu, cfg.params.spec.col, false, "mu");
  return mod(f_raw(gamma, mu, cfg), cfg.lambda());
}

std::int64_t eval_a(const ThetaIndex& theta, const TIndex& t, const DigitVector& gamma, const DigitVector& mu,
                    const GeneratorConfig& cfg) {
  check_digits(gamma, cfg.params.spec.row, false, "gamma");
  check_digits(mu, cfg.params.spec.col, false, "mu");
  check_index(theta, cfg.params, "theta");
  check_index(t, cfg.params, "t");
  const auto d_theta = cfg.theta_offset(exponent_rank(theta, cfg.params));
  return a_value(split_index(theta, cfg.params), split_index(t, cfg.params), d_theta, gamma, mu, cfg);
}

std::int64_t eval_m(const CosetIndex& coset, const DigitVector& ext_gamma, const DigitVector& ext_mu,
                    const GeneratorConfig& cfg) {
  check_coset(coset, cfg.params);
  check_digits(ext_gamma, cfg.params.spec.row, true, "gamma");
  check_digits(ext_mu, cfg.params.spec.col, true, "mu");
  return mod(m_raw(coset, ext_gamma, ext_mu, cfg), cfg.delta());
}

std::int64_t eval_b(const ThetaIndex& theta, const TIndex& t, const CosetIndex& coset, const DigitVector& ext_gamma,
                    const DigitVector& ext_mu, const GeneratorConfig& cfg) {
  check_coset(coset, cfg.params);
  check_digits(ext_gamma, cfg.params.spec.row, true, "gamma");
  check_digits(ext_mu, cfg.params.spec.col, true, "mu");
  check_index(theta, cfg.params, "theta");
  check_index(t, cfg.params, "t");
  const auto d_theta = cfg.theta_offset(exponent_rank(theta, cfg.params));
  return b_value(split_index(theta, cfg.params), split_index(t, cfg.params), d_theta, coset, ext_gamma, ext_mu, cfg);
}

PhaseArray materialize_array(std::int64_t rows, std::int64_t cols, std::int64_t modulus,
                             const std::function<std::int64_t(std::int64_t, std::int64_t)>& eval) {
  PhaseArray arr(rows, cols, modulus);
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) arr.set(r, c, eval(r, c));
  return arr;
}

CodeSetParams derive_params(const GeneratorConfig& cfg) {
  const auto& p = cfg.params;
  CodeSetParams out;
  out.lambda = cfg.lambda();
  out.delta = cfg.delta();
  out.alpha = p.alpha();
  out.alpha1 = p.alpha1();
  out.set_size = out.alpha;
  out.set_count = out.alpha1;
  out.rows = p.l1();
  out.cols = p.l2();
  out.zcz_rows = p.m();
  out.zcz_cols = p.n();
  if (p.primed_trivial()) {
    out.kind = CodeKind::Ccc;
    out.delta = out.lambda;
  } else if (p.row_trivial()) {
    out.kind = CodeKind::Zccs1d;
  } else {
    out.kind = CodeKind::Zcacs2d;
  }
  out.optimal = optimality(out).optimal;
  return out;
}

CodeSet build_ccc(const GeneratorConfig& cfg, int threads) {
  if (!cfg.params.primed_trivial())
    throw ConfigError("row_primed/col_primed", "a non-trivial primed part builds a ZCACS; use build_zcacs");
  return build_family(cfg, CodeKind::Ccc, Layout::Inner, threads);
}

CodeSet build_zcacs(const GeneratorConfig& cfg, int threads) {
  if (cfg.params.spec.col.primed.empty())
    throw ConfigError("col_primed", "the extended construction needs at least one q' prime");
  return build_family(cfg, CodeKind::Zcacs2d, Layout::Extended, threads);
}

CodeSet reduce_to_1d(const GeneratorConfig& cfg, int threads) {
  if (!cfg.params.row_trivial())
    throw ConfigError("row_blocks", "1D reduction needs every p-block and p' equal to 1");
  return build_family(cfg, CodeKind::Zccs1d, Layout::Extended, threads);
}

CodeSet generate(const GeneratorConfig& cfg, int threads) {
  switch (derive_params(cfg).kind) {
    case CodeKind::Ccc: return build_ccc(cfg, threads);
    case CodeKind::Zccs1d: return reduce_to_1d(cfg, threads);
    case CodeKind::Zcacs2d: break;
  }
  return build_zcacs(cfg, threads);
}

}  // namespace zcacs
