#include "mulpart/closed_forms.hpp"

#include <functional>
#include <string>

namespace mulpart {

namespace {

void require_m_gt_one(const PrimeSignature& f, const char* what) {
  if (f.is_one()) throw std::invalid_argument(std::string(what) + ": m must be > 1");
}

ExactCount product(const PrimeSignature& f, const std::function<ExactCount(unsigned)>& term) {
  ExactCount r = 1;
  for (const auto& pp : f.factors()) r *= term(pp.exponent);
  return r;
}

ExactCount exact_div(const ExactCount& numerator, unsigned denominator, const char* what) {
  if (numerator % denominator != 0) {
    throw IntegrityError(std::string(what) + ": numerator " + numerator.str() +
                         " not divisible by " + std::to_string(denominator));
  }
  return numerator / denominator;
}

ExactCount ceil_half(const ExactCount& x) { return (x + 1) / 2; }

int eps(const PrimeSignature& f, unsigned i) { return is_perfect_power(f, i) ? 1 : 0; }

// prod floor((alpha + 2) / 2): number of z with z^2 | m.
ExactCount square_divisor_count(const PrimeSignature& f) {
  return product(f, [](unsigned a) { return ExactCount((a + 2) / 2); });
}

// prod floor((alpha+2)/2) * (alpha - floor((alpha-2)/2)); twice the sum of
// tau(m/z^2) over z^2 | m. At alpha = 1 the inner floor must be -1.
ExactCount square_quotient_tau_term(const PrimeSignature& f) {
  return product(f, [](unsigned a) {
    const auto alpha = static_cast<std::int64_t>(a);
    return ExactCount((alpha + 2) / 2) * ExactCount(alpha - floor_div(alpha - 2, 2));
  });
}

// ceil(tau(sqrt m) / 2) for square m, else 0.
ExactCount half_tau_of_root(const PrimeSignature& f) {
  if (!is_perfect_power(f, 2)) return 0;
  return ceil_half(tau(f.root(2)));
}

ExactCount mu1_k2(const PrimeSignature& f) { return ceil_half(tau(f)); }

ExactCount mu1_k3(const PrimeSignature& f) {
  return exact_div(mu3_numerator(f), 6, "mu_1(m,3)");
}

ExactCount mu1_k4(const PrimeSignature& f) {
  return exact_div(mu4_numerator(f), 24, "mu_1(m,4)");
}

}  // namespace

ExactCount nu1(const PrimeSignature& f, unsigned k) {
  require_m_gt_one(f, "nu1");
  if (k == 0) throw std::invalid_argument("nu1: k must be >= 1");
  return product(f, [k](unsigned a) { return binomial(a + k - 1, k - 1); });
}

ExactCount nu2(const PrimeSignature& f, unsigned k) {
  require_m_gt_one(f, "nu2");
  if (k == 0) throw std::invalid_argument("nu2: k must be >= 1");
  ExactCount total = 0;
  for (unsigned i = 0; i < k; ++i) {
    const unsigned cells = k - i;
    ExactCount term = binomial(k, i) *
        product(f, [cells](unsigned a) { return binomial(a + cells - 1, cells - 1); });
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  if (total < 0) throw IntegrityError("nu2: negative inclusion-exclusion total");
  return total;
}

ExactCount mu3_numerator(const PrimeSignature& f) {
  // 6 * [ (1/6) prod C(a+2,2) + (1/2) prod floor((a+2)/2) + eps3/3 ]
  return product(f, [](unsigned a) { return binomial(a + 2, 2); }) +
         3 * square_divisor_count(f) + 2 * eps(f, 3);
}

ExactCount mu4_numerator(const PrimeSignature& f) {
  const int e2 = eps(f, 2);
  const int e4 = eps(f, 4);
  ExactCount n = product(f, [](unsigned a) { return binomial(a + 3, 3); });
  n += 8 * product(f, [](unsigned a) { return ExactCount((a + 3) / 3); });
  n += 6 * square_quotient_tau_term(f);
  n += 6 * e2 * square_divisor_count(f);
  n -= 6 * half_tau_of_root(f);
  n += 9 * e4;
  return n;
}

ExactCount mu_closed(const PrimeSignature& f, unsigned k, unsigned ell) {
  require_m_gt_one(f, "mu_closed");
  if (ell != 1 && ell != 2) throw std::invalid_argument("mu_closed: ell must be 1 or 2");
  switch (k) {
    case 1:
      return 1;
    case 2:
      return ell == 1 ? mu1_k2(f) : mu1_k2(f) - 1;
    case 3:
      return ell == 1 ? mu1_k3(f) : mu1_k3(f) - mu1_k2(f);
    case 4:
      return ell == 1 ? mu1_k4(f) : mu1_k4(f) - mu1_k3(f);
    default:
      throw std::invalid_argument("mu_closed: k must be in 1..4");
  }
}

ExactCount mu_pattern(const PrimeSignature& f, const MultiplicityPattern& beta) {
  require_m_gt_one(f, "mu_pattern");
  const auto& p = beta.parts();
  using Parts = std::vector<unsigned>;
  const int e3 = eps(f, 3);
  const int e4 = eps(f, 4);

  auto mu_13 = [&] {
    return product(f, [](unsigned a) { return ExactCount((a + 3) / 3); }) - e4;
  };
  auto mu_22 = [&] { return half_tau_of_root(f) - e4; };

  if (p == Parts{1, 2}) return square_divisor_count(f) - e3;
  if (p == Parts{3}) return e3;
  if (p == Parts{4}) return e4;
  if (p == Parts{1, 3}) return mu_13();
  if (p == Parts{2, 2}) return mu_22();
  if (p == Parts{1, 1, 2}) {
    // S counts (z, {x <= y}) with x y z^2 = m. A {2,2} factorization a^2 b^2
    // appears twice in S (z = a and z = b), {1,3} and {4} once each.
    ExactCount s = exact_div(square_quotient_tau_term(f) + eps(f, 2) * square_divisor_count(f), 2,
                             "sum of ceil(tau(m/z^2)/2)");
    return s - mu_13() - 2 * mu_22() - e4;
  }
  throw std::invalid_argument("mu_pattern: no closed form for pattern " + to_string(beta));
}

ExactCount sum_tau_over_divisors(const PrimeSignature& f) {
  return product(f, [](unsigned b) { return binomial(b + 2, 2); });
}

ExactCount sum_eps_over_divisors(const PrimeSignature& f, unsigned ell) {
  if (ell < 2) throw std::invalid_argument("sum_eps_over_divisors: ell must be >= 2");
  return product(f, [ell](unsigned b) { return ExactCount((b + ell) / ell); });
}

}  // namespace mulpart
