#pragma once

#include "symm/symmetry.hpp"
#include "symm/types.hpp"

#include <cstdint>
#include <string>

namespace symm {

/// d_k(p^j) = Gamma(k+j) / (Gamma(k) j!), independent of the prime p.
Real dk(const Real& k, std::uint64_t p, std::uint64_t j);

/// d_k(p^j) = C(k+j-1, j) for integer k >= 1.
BigInt dk_exact(std::uint64_t k, std::uint64_t p, std::uint64_t j);

/// Local factor of a_k for zeta at p, integer k >= 0:
///   (1 - 1/p)^{k^2} sum_j d_k(p^j)^2 p^{-j}
///     = (1 - 1/p)^{(k-1)^2} sum_{i<k} C(k-1, i)^2 p^{-i}.
Rational zeta_local_factor_exact(std::uint64_t k, std::uint64_t p);

/// Local factor of a_k for the quadratic Dirichlet family at p, k >= 1:
///   (1 - 1/p)^{k(k+1)/2} / (1 + 1/p)
///     * ((1 + p^{-1/2})^{-k} + (1 - p^{-1/2})^{-k}) / 2 + 1/p).
Rational sp_quadratic_local_factor(std::uint64_t k, std::uint64_t p);

/// Prime zeta function P(s) = sum_p p^{-s} for integer s >= 2.
Real prime_zeta(unsigned s);

struct EulerProductOptions {
  std::uint64_t prime_cutoff = 100000;
  double inner_eps = 1e-40;
};

/// a_k for the Riemann zeta function, k > -1/2. The product is taken over
/// p <= cutoff; the neglected primes are accounted for through the leading
/// x^2 term of the log local factor and the prime zeta function.
/// err_estimate is the change against the same estimate at cutoff/2.
RealApprox<Real> ak_zeta(const Real& k, const EulerProductOptions& opts = {});

/// a_k for the symplectic family of quadratic Dirichlet L-functions, k >= 1.
RealApprox<Real> ak_sp_quadratic(std::uint64_t k, const EulerProductOptions& opts = {});

struct FamilyDescriptor {
  Symmetry sym;
  Rational A;
  std::string label;
};

/// Leading term coefficient * (log Q^A)^log_power of the conjectured mean value.
struct MeanValueLeadingTerm {
  RealApprox<Real> coefficient;
  std::int64_t log_power;
  Rational log_argument_exponent;
};

/// coefficient = g_k a_k / Gamma(1 + B(k)).
MeanValueLeadingTerm assemble_mean_value(const FamilyDescriptor& family, std::uint64_t k,
                                         const RealApprox<Real>& ak);

}  // namespace symm
