#include "mulpart/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace mulpart {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>(static_cast<u128>(a) * b % mod);
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

// Pollard-Brent; n must be odd and composite.
u64 find_factor(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    constexpr u64 kBatch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = find_factor(n);
  split(d, primes);
  split(n / d, primes);
}

// a^e, or 0 if it exceeds limit.
u64 checked_pow(u64 a, unsigned e, u64 limit) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= a;
    if (r > limit) return 0;
  }
  return static_cast<u64>(r);
}

}  // namespace

PrimeSignature PrimeSignature::from_factors(std::vector<PrimePower> factors) {
  PrimeSignature f;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& pp = factors[i];
    if (pp.exponent == 0) throw std::invalid_argument("exponent must be >= 1");
    if (!is_prime(pp.prime)) {
      throw std::invalid_argument("not a prime: " + std::to_string(pp.prime));
    }
    if (i > 0 && factors[i - 1].prime >= pp.prime) {
      throw std::invalid_argument("primes must be strictly increasing");
    }
    f.value_ *= boost::multiprecision::pow(ExactCount(pp.prime), pp.exponent);
  }
  f.factors_ = std::move(factors);
  return f;
}

std::uint64_t PrimeSignature::value_u64() const {
  if (value_ > std::numeric_limits<u64>::max()) {
    throw std::overflow_error("signature value exceeds 64 bits");
  }
  return value_.convert_to<u64>();
}

PrimeSignature PrimeSignature::root(unsigned i) const {
  if (!is_perfect_power(*this, i)) {
    throw std::invalid_argument("not a perfect power");
  }
  std::vector<PrimePower> out = factors_;
  for (auto& pp : out) pp.exponent /= i;
  return from_factors(std::move(out));
}

std::string to_string(const PrimeSignature& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << '(' << f.factors()[i].prime << ',' << f.factors()[i].exponent << ')';
  }
  os << ']';
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeSignature factorize(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("factorize: m must be >= 1");
  std::vector<u64> primes;
  auto strip = [&](u64 p) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  };
  strip(2);
  strip(3);
  // 6k +/- 1 trial division for small factors, rho for what is left.
  constexpr u64 kTrialLimit = 1u << 12;
  for (u64 p = 5; p <= kTrialLimit && p * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  split(m, primes);
  std::sort(primes.begin(), primes.end());

  std::vector<PrimePower> factors;
  for (u64 p : primes) {
    if (!factors.empty() && factors.back().prime == p) {
      ++factors.back().exponent;
    } else {
      factors.push_back({p, 1});
    }
  }
  return PrimeSignature::from_factors(std::move(factors));
}

ExactCount tau(const PrimeSignature& f) {
  ExactCount t = 1;
  for (const auto& pp : f.factors()) t *= pp.exponent + 1;
  return t;
}

std::uint64_t integer_nth_root(std::uint64_t m, unsigned i) {
  if (i == 0) throw std::invalid_argument("integer_nth_root: i must be >= 1");
  if (i == 1 || m <= 1) return m;
  if (i >= 64) return 1;
  // Largest r with r^i <= m; r < 2^(ceil(64/i)).
  u64 lo = 1;
  u64 hi = u64{1} << ((64 + i - 1) / i);
  while (hi - lo > 1) {
    u64 mid = lo + (hi - lo) / 2;
    if (checked_pow(mid, i, m) != 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

int epsilon(std::uint64_t m, unsigned i) {
  u64 r = integer_nth_root(m, i);
  return checked_pow(r, i, std::numeric_limits<u64>::max()) == m ? 1 : 0;
}

bool is_perfect_power(const PrimeSignature& f, unsigned i) {
  if (i == 0) throw std::invalid_argument("is_perfect_power: i must be >= 1");
  return std::all_of(f.factors().begin(), f.factors().end(),
                     [i](const PrimePower& pp) { return pp.exponent % i == 0; });
}

ExactCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactCount r = 1;
  for (u64 j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be > 0");
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

std::vector<std::uint64_t> divisors(const PrimeSignature& f) {
  (void)f.value_u64();
  std::vector<u64> out{1};
  for (const auto& pp : f.factors()) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mulpart
