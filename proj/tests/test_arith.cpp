#include <doctest.h>

#include <numeric>
#include <random>

#include "mulpart/arith.hpp"

using namespace mulpart;

namespace {

std::vector<PrimePower> pp(std::initializer_list<std::pair<std::uint64_t, unsigned>> xs) {
  std::vector<PrimePower> out;
  for (auto [p, e] : xs) out.push_back({p, e});
  return out;
}

std::uint64_t reconstruct(const PrimeSignature& f) {
  std::uint64_t v = 1;
  for (const auto& x : f.factors()) {
    for (unsigned i = 0; i < x.exponent; ++i) v *= x.prime;
  }
  return v;
}

}  // namespace

TEST_CASE("factorize examples") {
  CHECK(factorize(12).factors() == pp({{2, 2}, {3, 1}}));
  CHECK(factorize(1).factors().empty());
  CHECK(factorize(1).is_one());
  CHECK(factorize(9699690).factors() ==
        pp({{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}}));
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize handles large 64-bit inputs") {
  // 2^32 - 5 and 2^32 - 17 are primes
  const std::uint64_t p = 4294967291ULL, q = 4294967279ULL;
  CHECK(factorize(p * q).factors() == pp({{q, 1}, {p, 1}}));
  CHECK(factorize(18446744073709551557ULL).factors() == pp({{18446744073709551557ULL, 1}}));
  CHECK(factorize(std::uint64_t{1} << 63).factors() == pp({{2, 63}}));
  CHECK(factorize(18446744073709551615ULL).factors() ==
        pp({{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}}));
}

TEST_CASE("factorize reconstructs m for m up to 1e5") {
  for (std::uint64_t m = 1; m <= 100000; ++m) {
    const auto f = factorize(m);
    REQUIRE(reconstruct(f) == m);
    REQUIRE(f.value() == m);
    for (std::size_t i = 0; i < f.size(); ++i) {
      REQUIRE(is_prime(f.factors()[i].prime));
      REQUIRE(f.factors()[i].exponent >= 1);
      if (i) REQUIRE(f.factors()[i - 1].prime < f.factors()[i].prime);
    }
  }
}

TEST_CASE("PrimeSignature validation") {
  CHECK_THROWS_AS(PrimeSignature::from_factors(pp({{4, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSignature::from_factors(pp({{3, 1}, {2, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSignature::from_factors(pp({{2, 0}})), std::invalid_argument);
  const auto big = PrimeSignature::from_factors(pp({{2, 200}}));
  CHECK(big.value() == boost::multiprecision::pow(ExactCount(2), 200));
  CHECK_THROWS_AS(big.value_u64(), std::overflow_error);
  CHECK(big.root(4) == PrimeSignature::from_factors(pp({{2, 50}})));
}

TEST_CASE("tau") {
  CHECK(tau(factorize(12)) == 6);
  CHECK(tau(factorize(1)) == 1);
  CHECK(tau(factorize(36)) == 9);
}

TEST_CASE("tau is multiplicative on coprime pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(2, 10000);
  int tested = 0;
  while (tested < 2000) {
    const auto a = dist(rng), b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    REQUIRE(tau(factorize(a * b)) == tau(factorize(a)) * tau(factorize(b)));
    ++tested;
  }
}

TEST_CASE("integer_nth_root and epsilon") {
  CHECK(integer_nth_root(35, 2) == 5);
  CHECK(integer_nth_root(36, 2) == 6);
  CHECK(integer_nth_root(1, 7) == 1);
  CHECK(integer_nth_root(18446744073709551615ULL, 2) == 4294967295ULL);
  CHECK(integer_nth_root(18446744073709551615ULL, 64) == 1);
  CHECK(integer_nth_root(999999999999999999ULL, 3) == 999999);
  CHECK(integer_nth_root(1000000000000000000ULL, 3) == 1000000);

  CHECK(epsilon(36, 2) == 1);
  CHECK(epsilon(16, 3) == 0);
  CHECK(epsilon(std::uint64_t{1} << 60, 4) == 1);
  // near-powers where a floating root would round the wrong way
  CHECK(epsilon(4294967295ULL * 4294967295ULL, 2) == 1);
  CHECK(epsilon(4294967295ULL * 4294967295ULL - 1, 2) == 0);
}

TEST_CASE("epsilon agrees with exact root and with the exponent test") {
  for (std::uint64_t m = 1; m <= 20000; ++m) {
    const auto f = factorize(m);
    for (unsigned i = 1; i <= 6; ++i) {
      const auto r = integer_nth_root(m, i);
      std::uint64_t p = 1;
      for (unsigned j = 0; j < i; ++j) p *= r;
      REQUIRE((epsilon(m, i) == 1) == (p == m));
      REQUIRE((epsilon(m, i) == 1) == is_perfect_power(f, i));
      REQUIRE(p <= m);
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(100, 50) == ExactCount("100891344545564193334812497256"));
}

TEST_CASE("floor_div rounds toward negative infinity") {
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(7, 3) == 2);
  CHECK(floor_div(0, 5) == 0);
  CHECK(floor_div(-6, 3) == -2);
  CHECK_THROWS_AS(floor_div(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(floor_div(1, -2), std::invalid_argument);
  for (std::int64_t a = -100; a <= 100; ++a) {
    for (std::int64_t b = 1; b <= 20; ++b) {
      const auto q = floor_div(a, b);
      REQUIRE(q * b <= a);
      REQUIRE(a < q * b + b);
    }
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(factorize(12)) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(factorize(1)) == std::vector<std::uint64_t>{1});
  CHECK(divisors(factorize(49)) == std::vector<std::uint64_t>{1, 7, 49});
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    const auto f = factorize(m);
    const auto ds = divisors(f);
    REQUIRE(ExactCount(ds.size()) == tau(f));
    REQUIRE(std::is_sorted(ds.begin(), ds.end()));
    for (auto d : ds) REQUIRE(m % d == 0);
  }
}
