#ifndef MULPART_RECURSIVE_HPP
#define MULPART_RECURSIVE_HPP

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "mulpart/arith.hpp"

namespace mulpart {

/// Addresses one counting value: factorizations of m into k factors >= ell.
struct CountQuery {
  std::uint64_t m;
  unsigned k;
  std::uint64_t ell;
};

/// Write-once cache for the divisor recursions and the additive partition
/// function. Safe for concurrent use; a key, once stored, keeps its value.
class MemoStore {
 public:
  enum class Kind : std::uint8_t { mu, nu, partition };

  std::optional<ExactCount> find(Kind kind, std::uint64_t m, unsigned k, std::uint64_t ell) const;
  void insert(Kind kind, std::uint64_t m, unsigned k, std::uint64_t ell, const ExactCount& value);
  std::size_t size() const;

 private:
  struct Key {
    Kind kind;
    std::uint64_t m;
    unsigned k;
    std::uint64_t ell;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, ExactCount, KeyHash> table_;
};

// All counters accept an optional memo; nullptr evaluates without caching.

/// mu_ell(m,k) by recursion on the smallest factor d (ell <= d | m,
/// d^k <= m), continuing with mu_d(m/d, k-1).
ExactCount mu_rec(const CountQuery& q, MemoStore* memo = nullptr);

/// Same, with m given by its signature (saves refactoring in batch runs).
ExactCount mu_rec(const PrimeSignature& f, unsigned k, std::uint64_t ell,
                  MemoStore* memo = nullptr);

/// nu_ell(m,k) by recursion on the first factor.
ExactCount nu_rec(const CountQuery& q, MemoStore* memo = nullptr);
ExactCount nu_rec(const PrimeSignature& f, unsigned k, std::uint64_t ell,
                  MemoStore* memo = nullptr);

/// mu_ell(m,k) by stripping the leading run of factors equal to ell:
/// sum over i = 0..min(k, s) of mu_{ell+1}(m / ell^i, k - i), where ell^s
/// exactly divides m and a zero-factor count is 1 iff the quotient is 1.
/// Requires ell >= 2.
ExactCount mu_via_shift(const CountQuery& q, MemoStore* memo = nullptr);

/// mu_1(m,k) as sum_{i=1..k} mu_2(m,i). Requires m > 1.
ExactCount mu_one_from_two(std::uint64_t m, unsigned k, MemoStore* memo = nullptr);

/// Unordered factorizations into factors >= ell, any number of factors.
/// Requires m > 1 and ell >= 2 (for ell = 1 the total is infinite).
ExactCount mu_total(std::uint64_t m, std::uint64_t ell, MemoStore* memo = nullptr);
ExactCount mu_total(const PrimeSignature& f, std::uint64_t ell, MemoStore* memo = nullptr);

/// Ordered counterpart of mu_total.
ExactCount nu_total(std::uint64_t m, std::uint64_t ell, MemoStore* memo = nullptr);
ExactCount nu_total(const PrimeSignature& f, std::uint64_t ell, MemoStore* memo = nullptr);

/// Pi(n,k): partitions of n into exactly k positive parts, via
/// Pi(n,k) = sum_{i=0..k} Pi(n-k, i) with Pi(0,0) = 1, Pi(n,0) = 0 for n > 0
/// and Pi(n,k) = 0 for k > n.
ExactCount additive_partition(std::uint64_t n, std::uint64_t k, MemoStore* memo = nullptr);

}  // namespace mulpart

#endif  // MULPART_RECURSIVE_HPP
