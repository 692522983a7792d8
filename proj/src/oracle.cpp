#include "mulpart/oracle.hpp"

#include <cstdlib>
#include <functional>
#include <string>

namespace mulpart::oracle {

namespace {

using u64 = std::uint64_t;

void check_budget(u64 m, unsigned k, const Limits& limits) {
  if (m == 0) throw std::invalid_argument("oracle: m must be >= 1");
  if (k == 0) throw std::invalid_argument("oracle: k must be >= 1");
  if (m > limits.max_m) {
    throw std::out_of_range("oracle: m = " + std::to_string(m) + " exceeds budget " +
                            std::to_string(limits.max_m));
  }
  if (k > limits.max_k) {
    throw std::out_of_range("oracle: k = " + std::to_string(k) + " exceeds budget " +
                            std::to_string(limits.max_k));
  }
}

u64 env_or(const char* name, u64 fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  return std::stoull(raw);
}

// Visits each nondecreasing tuple; `divs` are the divisors of the top m.
void walk_nondecreasing(u64 rem, unsigned slots, u64 lo, const std::vector<u64>& divs,
                        FactorTuple& cur, const std::function<void(const FactorTuple&)>& visit) {
  if (slots == 1) {
    if (rem >= lo) {
      cur.push_back(rem);
      visit(cur);
      cur.pop_back();
    }
    return;
  }
  for (u64 d : divs) {
    if (d < lo || rem % d != 0) continue;
    // d^slots <= rem, checked without roots or overflow.
    u64 p = 1;
    bool fits = true;
    for (unsigned i = 0; i < slots && fits; ++i) {
      if (p > rem / d) fits = false;
      else p *= d;
    }
    if (!fits) break;
    cur.push_back(d);
    walk_nondecreasing(rem / d, slots - 1, d, divs, cur, visit);
    cur.pop_back();
  }
}

u64 walk_ordered(u64 rem, unsigned slots, u64 lo, const std::vector<u64>& divs) {
  if (slots == 1) return rem >= lo ? 1 : 0;
  u64 n = 0;
  for (u64 d : divs) {
    if (d > rem) break;
    if (d >= lo && rem % d == 0) n += walk_ordered(rem / d, slots - 1, lo, divs);
  }
  return n;
}

ExactCount factorial(unsigned n) {
  ExactCount r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  l.max_m = env_or("MULPART_ORACLE_MAX_M", l.max_m);
  l.max_k = static_cast<unsigned>(env_or("MULPART_ORACLE_MAX_K", l.max_k));
  return l;
}

std::vector<FactorTuple> enum_nondecreasing(u64 m, unsigned k, u64 ell, const Limits& limits) {
  check_budget(m, k, limits);
  const auto divs = divisors(factorize(m));
  std::vector<FactorTuple> out;
  FactorTuple cur;
  walk_nondecreasing(m, k, ell, divs, cur, [&](const FactorTuple& t) { out.push_back(t); });
  return out;
}

ExactCount count_ordered(u64 m, unsigned k, u64 ell, const Limits& limits) {
  check_budget(m, k, limits);
  return walk_ordered(m, k, ell, divisors(factorize(m)));
}

ExactCount count_ordered_via_multisets(u64 m, unsigned k, u64 ell, const Limits& limits) {
  ExactCount total = 0;
  const ExactCount k_fact = factorial(k);
  for (const auto& t : enum_nondecreasing(m, k, ell, limits)) {
    ExactCount denom = 1;
    const auto beta = profile(t);
    for (unsigned part : beta.parts()) denom *= factorial(part);
    total += k_fact / denom;
  }
  return total;
}

ExactCount count_nondecreasing(u64 m, unsigned k, u64 ell, const Limits& limits) {
  return enum_nondecreasing(m, k, ell, limits).size();
}

ExactCount count_by_pattern(u64 m, const MultiplicityPattern& beta, u64 ell,
                            const Limits& limits) {
  u64 n = 0;
  for (const auto& t : enum_nondecreasing(m, beta.k(), ell, limits)) {
    if (profile(t) == beta) ++n;
  }
  return n;
}

ExactCount count_all_k(u64 m, u64 ell, bool ordered, const Limits& limits) {
  if (ell < 2) throw std::invalid_argument("count_all_k: ell must be >= 2");
  if (m <= 1) throw std::invalid_argument("count_all_k: m must be > 1");
  Limits relaxed = limits;
  relaxed.max_k = 64;
  ExactCount total = 0;
  for (unsigned k = 1; (u64{1} << k) <= m; ++k) {
    total += ordered ? count_ordered(m, k, ell, relaxed) : count_nondecreasing(m, k, ell, relaxed);
  }
  return total;
}

MultiplicityPattern profile(const FactorTuple& t) {
  std::vector<unsigned> parts;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    parts.push_back(static_cast<unsigned>(j - i));
    i = j;
  }
  return MultiplicityPattern(std::move(parts));
}

}  // namespace mulpart::oracle
