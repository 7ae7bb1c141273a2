#include "zcacs/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "zcacs/errors.hpp"

namespace zcacs {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; throws if it does not divide.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) throw DomainError("cyclotomic division underflow");
  IntPoly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const auto c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
  }
  trim(num);
  if (!num.empty()) throw DomainError("cyclotomic division left a remainder");
  return q;
}

IntPoly compute_cyclotomic(std::int64_t n) {
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

}  // namespace

IntPoly cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p = compute_cyclotomic(n);
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

IntPoly reduce_mod_cyclotomic(std::span<const std::int64_t> poly, std::int64_t n) {
  const IntPoly phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  IntPoly r(poly.begin(), poly.end());
  for (std::size_t i = r.size(); i-- > deg;) {
    const auto c = r[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= deg; ++k) r[i - deg + k] -= c * phi[k];
  }
  if (r.size() > deg) r.resize(deg);
  trim(r);
  return r;
}

bool vanishes_at_root_of_unity(std::span<const std::int64_t> poly, std::int64_t n) {
  return reduce_mod_cyclotomic(poly, n).empty();
}

std::optional<std::int64_t> integer_value_at_root_of_unity(std::span<const std::int64_t> poly, std::int64_t n) {
  const IntPoly r = reduce_mod_cyclotomic(poly, n);
  if (r.empty()) return 0;
  if (r.size() == 1) return r[0];
  return std::nullopt;
}

}  // namespace zcacs
