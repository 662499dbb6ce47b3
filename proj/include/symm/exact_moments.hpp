#pragma once

#include "symm/numeric_core.hpp"
#include "symm/symmetry.hpp"

#include <cstdint>

namespace symm {

/// Exact moment constant g_k together with its factorization.
struct MomentConstant {
  Symmetry sym;
  std::uint64_t k;
  BigInt value;
  FactoredInteger factored;
  std::int64_t b_exponent;
};

/// g_{k,sym} for k >= 1 from the odd-double-factorial product:
///   U:  (k^2)! 2^{k-k^2} prod_{j<k} 1/((2j-1)!! (2j+1)!!)
///   O:  B_O(k)! 2^{k-1}  prod_{j<k} 1/(2j-1)!!
///   Sp: B_Sp(k)!         prod_{j<=k} 1/(2j-1)!!
/// Throws IntegralityViolation if the quotient is not an integer.
BigInt g_exact(Symmetry sym, std::uint64_t k);

/// The same constant from the ordinary-factorial product; kept as an
/// independent route for cross-checks.
BigInt g_exact_factorial_form(Symmetry sym, std::uint64_t k);

/// Factorization of g_{k,sym}. Odd primes use the closed-form valuations,
/// p = 2 uses exact division of g_exact.
FactoredInteger g_factored(Symmetry sym, std::uint64_t k);

MomentConstant moment_constant(Symmetry sym, std::uint64_t k);

}  // namespace symm
