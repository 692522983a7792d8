#include "mulpart/recursive.hpp"

#include <algorithm>
#include <mutex>
#include <span>

namespace mulpart {

using u64 = std::uint64_t;
using Kind = MemoStore::Kind;

std::size_t MemoStore::KeyHash::operator()(const Key& key) const noexcept {
  std::size_t h = std::hash<u64>{}(key.m);
  auto mix = [&h](u64 v) { h ^= std::hash<u64>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(key.k);
  mix(key.ell);
  mix(static_cast<u64>(key.kind));
  return h;
}

std::optional<ExactCount> MemoStore::find(Kind kind, u64 m, unsigned k, u64 ell) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(Key{kind, m, k, ell});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MemoStore::insert(Kind kind, u64 m, unsigned k, u64 ell, const ExactCount& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(Key{kind, m, k, ell}, value);
}

std::size_t MemoStore::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

namespace {

// `pool` holds every divisor of the top-level m, sorted; each m reached by
// the recursion divides it, so its divisors are the pool entries dividing m.
ExactCount mu_impl(u64 m, unsigned k, u64 ell, std::span<const u64> pool, MemoStore* memo) {
  ell = std::min(ell, m + 1);
  if (k == 1) return m >= ell ? 1 : 0;
  if (memo) {
    if (auto hit = memo->find(Kind::mu, m, k, ell)) return *hit;
  }
  const u64 root = integer_nth_root(m, k);
  ExactCount total = 0;
  for (auto it = std::lower_bound(pool.begin(), pool.end(), ell); it != pool.end() && *it <= root;
       ++it) {
    if (m % *it == 0) total += mu_impl(m / *it, k - 1, *it, pool, memo);
  }
  if (memo) memo->insert(Kind::mu, m, k, ell, total);
  return total;
}

ExactCount nu_impl(u64 m, unsigned k, u64 ell, std::span<const u64> pool, MemoStore* memo) {
  ell = std::min(ell, m + 1);
  if (k == 1) return m >= ell ? 1 : 0;
  if (memo) {
    if (auto hit = memo->find(Kind::nu, m, k, ell)) return *hit;
  }
  ExactCount total = 0;
  for (auto it = std::lower_bound(pool.begin(), pool.end(), ell); it != pool.end() && *it <= m;
       ++it) {
    if (m % *it == 0) total += nu_impl(m / *it, k - 1, ell, pool, memo);
  }
  if (memo) memo->insert(Kind::nu, m, k, ell, total);
  return total;
}

void require_k(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
}

// Largest k with ell^k <= m.
unsigned max_factor_count(u64 m, u64 ell) {
  unsigned k = 0;
  unsigned __int128 p = ell;
  while (p <= m) {
    ++k;
    p *= ell;
  }
  return k;
}

template <typename Fn>
ExactCount total_over_k(const PrimeSignature& f, u64 ell, MemoStore* memo, Fn&& count) {
  if (ell < 2) throw std::invalid_argument("totals require ell >= 2");
  const u64 m = f.value_u64();
  if (m <= 1) throw std::invalid_argument("totals require m > 1");
  MemoStore local;
  MemoStore* store = memo ? memo : &local;
  const auto pool = divisors(f);
  ExactCount total = 0;
  for (unsigned k = 1, kmax = max_factor_count(m, ell); k <= kmax; ++k) {
    total += count(m, k, ell, std::span<const u64>(pool), store);
  }
  return total;
}

}  // namespace

ExactCount mu_rec(const PrimeSignature& f, unsigned k, u64 ell, MemoStore* memo) {
  require_k(k);
  const auto pool = divisors(f);
  return mu_impl(f.value_u64(), k, std::max<u64>(ell, 1), pool, memo);
}

ExactCount mu_rec(const CountQuery& q, MemoStore* memo) {
  return mu_rec(factorize(q.m), q.k, q.ell, memo);
}

ExactCount nu_rec(const PrimeSignature& f, unsigned k, u64 ell, MemoStore* memo) {
  require_k(k);
  const auto pool = divisors(f);
  return nu_impl(f.value_u64(), k, std::max<u64>(ell, 1), pool, memo);
}

ExactCount nu_rec(const CountQuery& q, MemoStore* memo) {
  return nu_rec(factorize(q.m), q.k, q.ell, memo);
}

ExactCount mu_via_shift(const CountQuery& q, MemoStore* memo) {
  require_k(q.k);
  if (q.ell < 2) throw std::invalid_argument("mu_via_shift: ell must be >= 2");
  if (q.m == 0) throw std::invalid_argument("mu_via_shift: m must be >= 1");
  const auto pool = divisors(factorize(q.m));
  ExactCount total = 0;
  u64 rest = q.m;
  for (unsigned i = 0; i <= q.k; ++i) {
    const unsigned remaining = q.k - i;
    if (remaining == 0) {
      total += rest == 1 ? 1 : 0;
    } else {
      total += mu_impl(rest, remaining, q.ell + 1, pool, memo);
    }
    if (rest % q.ell != 0) break;
    rest /= q.ell;
  }
  return total;
}

ExactCount mu_one_from_two(u64 m, unsigned k, MemoStore* memo) {
  require_k(k);
  if (m <= 1) throw std::invalid_argument("mu_one_from_two: m must be > 1");
  const auto pool = divisors(factorize(m));
  ExactCount total = 0;
  for (unsigned i = 1; i <= k; ++i) total += mu_impl(m, i, 2, pool, memo);
  return total;
}

ExactCount mu_total(const PrimeSignature& f, u64 ell, MemoStore* memo) {
  return total_over_k(f, ell, memo, mu_impl);
}

ExactCount mu_total(u64 m, u64 ell, MemoStore* memo) {
  if (m <= 1) throw std::invalid_argument("mu_total: m must be > 1");
  return mu_total(factorize(m), ell, memo);
}

ExactCount nu_total(const PrimeSignature& f, u64 ell, MemoStore* memo) {
  return total_over_k(f, ell, memo, nu_impl);
}

ExactCount nu_total(u64 m, u64 ell, MemoStore* memo) {
  if (m <= 1) throw std::invalid_argument("nu_total: m must be > 1");
  return nu_total(factorize(m), ell, memo);
}

ExactCount additive_partition(u64 n, u64 k, MemoStore* memo) {
  if (k == 0) return n == 0 ? 1 : 0;
  if (k > n) return 0;
  if (k == n || k == 1) return 1;
  if (memo) {
    if (auto hit = memo->find(Kind::partition, n, static_cast<unsigned>(k), 0)) return *hit;
  }
  ExactCount total = 0;
  for (u64 i = 0; i <= k; ++i) total += additive_partition(n - k, i, memo);
  if (memo) memo->insert(Kind::partition, n, static_cast<unsigned>(k), 0, total);
  return total;
}

}  // namespace mulpart
