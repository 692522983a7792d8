#ifndef MULPART_ORACLE_HPP
#define MULPART_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "mulpart/arith.hpp"
#include "mulpart/pattern.hpp"

namespace mulpart::oracle {

// Brute-force enumeration. Deliberately shares nothing with the formula or
// recursion code beyond divisor listing; it is the reference everything
// else is tested against.

/// Enumeration budget. Queries beyond it throw std::out_of_range.
struct Limits {
  std::uint64_t max_m = 1'000'000;
  unsigned max_k = 8;

  /// Defaults overridden by MULPART_ORACLE_MAX_M / MULPART_ORACLE_MAX_K.
  static Limits from_env();
};

using FactorTuple = std::vector<std::uint64_t>;

/// Every m_1 <= ... <= m_k, all >= ell, with product m, lexicographic.
std::vector<FactorTuple> enum_nondecreasing(std::uint64_t m, unsigned k, std::uint64_t ell,
                                            const Limits& limits = {});

/// Ordered k-tuples, by walking every first factor recursively.
ExactCount count_ordered(std::uint64_t m, unsigned k, std::uint64_t ell,
                         const Limits& limits = {});

/// Ordered k-tuples, as the sum of k! / prod(multiplicity!) over
/// enum_nondecreasing. Must agree with count_ordered.
ExactCount count_ordered_via_multisets(std::uint64_t m, unsigned k, std::uint64_t ell,
                                       const Limits& limits = {});

/// Nondecreasing k-tuples (size of enum_nondecreasing).
ExactCount count_nondecreasing(std::uint64_t m, unsigned k, std::uint64_t ell,
                               const Limits& limits = {});

/// Factorizations whose sorted multiplicity profile equals beta.
ExactCount count_by_pattern(std::uint64_t m, const MultiplicityPattern& beta, std::uint64_t ell,
                            const Limits& limits = {});

/// Sum over k = 1..floor(log2 m) of the per-k count. Requires m > 1 and
/// ell >= 2. Only the m budget applies; k is bounded by log2 m.
ExactCount count_all_k(std::uint64_t m, std::uint64_t ell, bool ordered,
                       const Limits& limits = {});

/// Multiplicity profile of a sorted tuple, e.g. (1,2,2,9) -> {1,1,2}.
MultiplicityPattern profile(const FactorTuple& sorted_tuple);

}  // namespace mulpart::oracle

#endif  // MULPART_ORACLE_HPP
