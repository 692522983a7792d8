#include <doctest.h>

#include <algorithm>

#include "mulpart/oracle.hpp"

using namespace mulpart;
using oracle::FactorTuple;

TEST_CASE("enum_nondecreasing examples") {
  CHECK(oracle::enum_nondecreasing(12, 3, 1) ==
        std::vector<FactorTuple>{{1, 1, 12}, {1, 2, 6}, {1, 3, 4}, {2, 2, 3}});
  CHECK(oracle::enum_nondecreasing(7919, 2, 2).empty());
  CHECK(oracle::enum_nondecreasing(360, 1, 1) == std::vector<FactorTuple>{{360}});
}

TEST_CASE("enum_nondecreasing output is well-formed") {
  for (std::uint64_t m = 1; m <= 1500; ++m) {
    for (unsigned k = 1; k <= 5; ++k) {
      for (std::uint64_t ell = 1; ell <= 3; ++ell) {
        const auto tuples = oracle::enum_nondecreasing(m, k, ell);
        REQUIRE(std::is_sorted(tuples.begin(), tuples.end()));
        REQUIRE(std::adjacent_find(tuples.begin(), tuples.end()) == tuples.end());
        for (const auto& t : tuples) {
          REQUIRE(t.size() == k);
          REQUIRE(std::is_sorted(t.begin(), t.end()));
          REQUIRE(t.front() >= ell);
          std::uint64_t prod = 1;
          for (auto x : t) prod *= x;
          REQUIRE(prod == m);
        }
      }
    }
  }
}

TEST_CASE("count_ordered examples") {
  CHECK(oracle::count_ordered(16, 2, 2) == 3);
  CHECK(oracle::count_ordered(12, 2, 1) == 6);
  CHECK(oracle::count_ordered(5, 1, 5) == 1);
  CHECK(oracle::count_ordered(5, 1, 6) == 0);
}

TEST_CASE("count_ordered paths agree") {
  for (std::uint64_t m = 2; m <= 2000; ++m)
    for (unsigned k = 1; k <= 5; ++k)
      for (std::uint64_t ell = 1; ell <= 3; ++ell)
        REQUIRE(oracle::count_ordered(m, k, ell) == oracle::count_ordered_via_multisets(m, k, ell));
}

TEST_CASE("count_by_pattern") {
  CHECK(oracle::count_by_pattern(12, {1, 2}, 1) == 2);
  CHECK(oracle::count_by_pattern(36, {2, 2}, 1) == 2);
  for (std::uint64_t m : {2, 8, 16, 27, 64, 81, 100, 729}) {
    for (unsigned k = 1; k <= 6; ++k) {
      const std::uint64_t want = epsilon(m, k);
      CHECK(oracle::count_by_pattern(m, MultiplicityPattern{k}, 1) == want);
    }
  }
}

TEST_CASE("pattern counts partition the nondecreasing enumeration") {
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    for (unsigned k = 1; k <= 5; ++k) {
      for (std::uint64_t ell = 1; ell <= 2; ++ell) {
        ExactCount sum = 0;
        for (const auto& beta : patterns_of(k)) sum += oracle::count_by_pattern(m, beta, ell);
        REQUIRE(sum == oracle::enum_nondecreasing(m, k, ell).size());
      }
    }
  }
}

TEST_CASE("count_all_k") {
  CHECK(oracle::count_all_k(12, 2, false) == 4);
  CHECK(oracle::count_all_k(32, 2, true) == 16);
  CHECK(oracle::count_all_k(101, 2, true) == 1);
  CHECK(oracle::count_all_k(101, 2, false) == 1);
  CHECK_THROWS_AS(oracle::count_all_k(12, 1, false), std::invalid_argument);
}

TEST_CASE("budget is enforced") {
  oracle::Limits tight{100, 3};
  CHECK_THROWS_AS(oracle::count_ordered(101, 2, 1, tight), std::out_of_range);
  CHECK_THROWS_AS(oracle::enum_nondecreasing(12, 4, 1, tight), std::out_of_range);
  CHECK_NOTHROW(oracle::count_all_k(64, 2, false, tight));  // k up to 6 is allowed here
}

TEST_CASE("profile") {
  CHECK(oracle::profile({1, 2, 2, 9}) == MultiplicityPattern{1, 1, 2});
  CHECK(oracle::profile({3, 3, 3}) == MultiplicityPattern{3});
  CHECK(patterns_of(4).size() == 5);
}
