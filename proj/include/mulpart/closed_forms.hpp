#ifndef MULPART_CLOSED_FORMS_HPP
#define MULPART_CLOSED_FORMS_HPP

#include "mulpart/arith.hpp"
#include "mulpart/pattern.hpp"

namespace mulpart {

// Explicit counting formulas. Everything here depends on m only through its
// prime signature, so values far beyond 64 bits (2^200, say) are fine.
//
// Notation: nu_l(m,k) counts ordered k-tuples of factors >= l with product m,
// mu_l(m,k) counts nondecreasing ones. All entry points reject m = 1.

/// nu_1(m,k) = prod C(alpha_j + k - 1, k - 1).
ExactCount nu1(const PrimeSignature& f, unsigned k);

/// nu_2(m,k), inclusion-exclusion over empty cells.
ExactCount nu2(const PrimeSignature& f, unsigned k);

/// mu_l(m,k) for k in 1..4 and l in {1,2}.
///
/// Fractional coefficients are assembled as a single integer numerator over
/// 6 (k = 3) or 24 (k = 4) and divided exactly; a nonzero remainder raises
/// IntegrityError. The l = 2 values are derived from the l = 1 ones by
/// subtraction: mu_2(m,2) = mu_1(m,2) - 1, mu_2(m,3) = mu_1(m,3) - ceil(tau/2),
/// mu_2(m,4) = mu_1(m,4) - mu_1(m,3).
ExactCount mu_closed(const PrimeSignature& f, unsigned k, unsigned ell);

/// Integer numerator of mu_1(m,3) over denominator 6.
ExactCount mu3_numerator(const PrimeSignature& f);

/// Integer numerator of mu_1(m,4) over denominator 24.
ExactCount mu4_numerator(const PrimeSignature& f);

/// mu'_1(m; beta): factorizations over distinct bases with multiplicity
/// multiset beta. Supported: {1,2} {3} {1,1,2} {1,3} {2,2} {4}; anything
/// else throws std::invalid_argument (use the oracle for those).
ExactCount mu_pattern(const PrimeSignature& f, const MultiplicityPattern& beta);

/// Sum of tau(d) over d | m, as prod C(beta_j + 2, 2).
ExactCount sum_tau_over_divisors(const PrimeSignature& f);

/// Number of ell-th power divisors, prod floor((beta_j + ell) / ell).
ExactCount sum_eps_over_divisors(const PrimeSignature& f, unsigned ell);

}  // namespace mulpart

#endif  // MULPART_CLOSED_FORMS_HPP
