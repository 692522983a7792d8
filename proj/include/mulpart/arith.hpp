#ifndef MULPART_ARITH_HPP
#define MULPART_ARITH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mulpart {

/// Exact, unbounded count. Every counting function returns one of these.
using ExactCount = boost::multiprecision::cpp_int;

/// Raised when a closed-form numerator fails its exact-division check.
/// Only a transcription bug in a formula can trigger it.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime decomposition of a positive integer m, primes strictly increasing.
///
/// The represented value is kept as an ExactCount so that signatures such as
/// 2^200 can be fed to the closed forms even though factorize() itself only
/// accepts 64-bit inputs.
class PrimeSignature {
 public:
  /// The empty signature, m = 1.
  PrimeSignature() = default;

  /// Validates primality, ordering and exponents; throws std::invalid_argument.
  static PrimeSignature from_factors(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  const ExactCount& value() const { return value_; }
  std::size_t size() const { return factors_.size(); }
  bool is_one() const { return factors_.empty(); }

  /// Value as uint64; throws std::overflow_error when it does not fit.
  std::uint64_t value_u64() const;

  /// Signature of the exact i-th root. Requires is_perfect_power(*this, i).
  PrimeSignature root(unsigned i) const;

  friend bool operator==(const PrimeSignature& a, const PrimeSignature& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<PrimePower> factors_;
  ExactCount value_{1};
};

std::string to_string(const PrimeSignature& f);

bool is_prime(std::uint64_t n);

/// Unique prime signature of m. Rejects m = 0.
PrimeSignature factorize(std::uint64_t m);

/// Number of divisors, prod(alpha_j + 1).
ExactCount tau(const PrimeSignature& f);

/// floor(m^(1/i)) by exact integer search.
std::uint64_t integer_nth_root(std::uint64_t m, unsigned i);

/// 1 iff m is a perfect i-th power.
int epsilon(std::uint64_t m, unsigned i);

/// Same predicate read off the exponents; works for values beyond 64 bits.
bool is_perfect_power(const PrimeSignature& f, unsigned i);

ExactCount binomial(std::uint64_t n, std::uint64_t k);

/// Division rounding toward negative infinity. Rejects b <= 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// All divisors in increasing order. Requires value() to fit in 64 bits.
std::vector<std::uint64_t> divisors(const PrimeSignature& f);

}  // namespace mulpart

#endif  // MULPART_ARITH_HPP
