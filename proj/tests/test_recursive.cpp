#include <doctest.h>

#include <thread>

#include "mulpart/closed_forms.hpp"
#include "mulpart/oracle.hpp"
#include "mulpart/recursive.hpp"

using namespace mulpart;

namespace {

// Nondecreasing k-tuples of integers >= lo summing to n, by enumeration.
std::uint64_t brute_partitions(std::uint64_t n, std::uint64_t k, std::uint64_t lo = 1) {
  if (k == 0) return n == 0 ? 1 : 0;
  std::uint64_t c = 0;
  for (std::uint64_t first = lo; first * k <= n; ++first) c += brute_partitions(n - first, k - 1, first);
  return c;
}

// p(n,k) = p(n-1,k-1) + p(n-k,k): either a part equals 1, or subtract 1 from every part.
std::vector<std::vector<ExactCount>> partition_table(std::size_t n_max) {
  std::vector<std::vector<ExactCount>> p(n_max + 1, std::vector<ExactCount>(n_max + 1, 0));
  p[0][0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t k = 1; k <= n; ++k) p[n][k] = p[n - 1][k - 1] + p[n - k][k];
  return p;
}

}  // namespace

TEST_CASE("mu_rec examples") {
  CHECK(mu_rec({12, 3, 1}) == 4);
  CHECK(mu_rec({8, 2, 2}) == 1);
  CHECK(mu_rec({10, 2, 4}) == 0);  // 4^2 > 10
  CHECK(mu_rec({1, 3, 1}) == 1);
  CHECK(mu_rec({1, 3, 2}) == 0);
  CHECK(mu_rec({12, 3, 1}) == mu_closed(factorize(12), 3, 1));
}

TEST_CASE("nu_rec examples") {
  CHECK(nu_rec({16, 2, 2}) == 3);
  CHECK(nu_rec({12, 2, 1}) == 6);
  CHECK(nu_rec({13, 3, 2}) == 0);
  CHECK(nu_rec({1, 4, 1}) == 1);
}

TEST_CASE("recursions match the oracle on m <= 3000, k <= 6, ell <= 4") {
  MemoStore memo;
  for (std::uint64_t m = 2; m <= 3000; ++m) {
    for (unsigned k = 1; k <= 6; ++k) {
      for (std::uint64_t ell = 1; ell <= 4; ++ell) {
        INFO("m=" << m << " k=" << k << " ell=" << ell);
        REQUIRE(mu_rec({m, k, ell}, &memo) == oracle::count_nondecreasing(m, k, ell));
        REQUIRE(nu_rec({m, k, ell}, &memo) == oracle::count_ordered(m, k, ell));
      }
      REQUIRE(mu_one_from_two(m, k, &memo) == mu_rec({m, k, 1}, &memo));
    }
  }
}

TEST_CASE("mu_via_shift") {
  CHECK(mu_via_shift({8, 2, 2}) == 1);
  CHECK(mu_via_shift({12, 2, 2}) == 2);
  CHECK(mu_via_shift({4, 2, 2}) == 1);  // the all-ell tuple (2,2)
  CHECK(mu_via_shift({35, 2, 2}) == mu_rec({35, 2, 3}));
  CHECK_THROWS_AS(mu_via_shift({12, 2, 1}), std::invalid_argument);

  MemoStore memo;
  for (std::uint64_t m = 1; m <= 3000; ++m)
    for (unsigned k = 1; k <= 6; ++k)
      for (std::uint64_t ell = 2; ell <= 6; ++ell)
        REQUIRE(mu_via_shift({m, k, ell}, &memo) == mu_rec({m, k, ell}, &memo));
}

TEST_CASE("mu_one_from_two examples") {
  CHECK(mu_one_from_two(12, 3) == 4);
  CHECK(mu_one_from_two(7919, 5) == 1);
  CHECK(mu_one_from_two(36, 4) == 9);
  CHECK_THROWS_AS(mu_one_from_two(1, 2), std::invalid_argument);
}

TEST_CASE("totals") {
  CHECK(mu_total(12, 2) == 4);
  CHECK(mu_total(7919, 2) == 1);
  CHECK(nu_total(7919, 2) == 1);
  CHECK(nu_total(12, 2) == 8);
  for (unsigned a = 1; a <= 20; ++a) {
    const std::uint64_t m = std::uint64_t{1} << a;
    CHECK(nu_total(m, 2) == (std::uint64_t{1} << (a - 1)));
    ExactCount partitions = 0;
    for (unsigned k = 1; k <= a; ++k) partitions += additive_partition(a, k);
    CHECK(mu_total(m, 2) == partitions);
  }
  CHECK_THROWS_AS(mu_total(12, 1), std::invalid_argument);
  CHECK_THROWS_AS(nu_total(12, 1), std::invalid_argument);
  CHECK_THROWS_AS(mu_total(1, 2), std::invalid_argument);
  for (std::uint64_t m = 2; m <= 1500; ++m) {
    REQUIRE(mu_total(m, 2) == oracle::count_all_k(m, 2, false));
    REQUIRE(nu_total(m, 3) == oracle::count_all_k(m, 3, true));
  }
}

TEST_CASE("additive_partition") {
  CHECK(additive_partition(7, 3) == 4);
  CHECK(additive_partition(9, 1) == 1);
  CHECK(additive_partition(5, 7) == 0);
  CHECK(additive_partition(0, 0) == 1);
  CHECK(additive_partition(4, 0) == 0);
  CHECK(additive_partition(6, 6) == 1);

  MemoStore memo;
  const auto table = partition_table(120);
  for (std::uint64_t n = 0; n <= 120; ++n) {
    for (std::uint64_t k = 0; k <= n + 1; ++k) {
      const ExactCount want = k <= n ? table[n][k] : ExactCount(0);
      REQUIRE(additive_partition(n, k, &memo) == want);
      if (n <= 40) REQUIRE(additive_partition(n, k, &memo) == brute_partitions(n, k));
    }
  }
}

TEST_CASE("prime-power bridge: mu_2(p^n, k) = Pi(n, k)") {
  for (std::uint64_t p : {2, 3}) {
    std::uint64_t m = 1;
    for (unsigned n = 1; n <= 25; ++n) {
      m *= p;
      for (unsigned k = 1; k <= n; ++k) REQUIRE(mu_rec({m, k, 2}) == additive_partition(n, k));
    }
  }
}

TEST_CASE("memo is transparent and write-once") {
  MemoStore memo;
  for (std::uint64_t m = 2; m <= 600; ++m) {
    for (unsigned k = 1; k <= 5; ++k) {
      for (std::uint64_t ell = 1; ell <= 3; ++ell) {
        REQUIRE(mu_rec({m, k, ell}, &memo) == mu_rec({m, k, ell}));
        REQUIRE(nu_rec({m, k, ell}, &memo) == nu_rec({m, k, ell}));
      }
    }
  }
  CHECK(memo.size() > 0);
  memo.insert(MemoStore::Kind::mu, 10, 2, 1, 99);
  memo.insert(MemoStore::Kind::mu, 10, 2, 1, 5);
  CHECK(*memo.find(MemoStore::Kind::mu, 10, 2, 1) == 2);  // first stored value from the sweep
}

TEST_CASE("shared memo under concurrent use") {
  MemoStore memo;
  std::vector<std::vector<ExactCount>> results(4);
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < 4; ++t) {
      workers.emplace_back([&, t] {
        for (std::uint64_t m = 2; m <= 400; ++m) results[t].push_back(mu_rec({m, 4, 1}, &memo));
      });
    }
  }
  for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
  for (std::uint64_t m = 2; m <= 400; ++m) CHECK(results[0][m - 2] == mu_rec({m, 4, 1}));
}
