#include "symm/euler_products.hpp"

#include "symm/errors.hpp"
#include "symm/exact_moments.hpp"
#include "symm/numeric_core.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace symm {
namespace {

using boost::multiprecision::pow;

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.backend().data(), n, r);
  return out;
}

Rational power(const Rational& base, std::uint64_t e) {
  Rational out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out *= base;
  return out;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

Real eps() { return std::numeric_limits<Real>::epsilon(); }

// zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!) for small m, direct
// summation otherwise (the terms fall off like j^{-2m}).
Real zeta_even(unsigned two_m) {
  if (two_m <= 120) {
    const auto& bern = bernoulli_numbers(120);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    Real v = abs(to_real<Real>(bern[two_m])) * pow(two_pi, static_cast<int>(two_m)) /
             (2 * Real(factorial(two_m)));
    return v;
  }
  Real s = 1;
  for (std::uint64_t j = 2;; ++j) {
    const Real t = pow(Real(j), -static_cast<int>(two_m));
    s += t;
    if (t < eps()) break;
  }
  return s;
}

Real zeta_integer(unsigned s) {
  if (s % 2 == 0) return zeta_even(s);
  // Odd s >= 3: direct sum with an Euler-Maclaurin tail.
  const std::uint64_t n = 40;
  Real sum = 0;
  for (std::uint64_t j = 1; j < n; ++j) sum += pow(Real(j), -static_cast<int>(s));
  const Real tn(n);
  sum += pow(tn, 1 - static_cast<int>(s)) / (s - 1) + pow(tn, -static_cast<int>(s)) / 2;
  const auto& bern = bernoulli_numbers(200);
  // B_{2k}/(2k)! f^(2k-1)(N), f = x^{-s}: f^(m) = (-1)^m s(s+1)...(s+m-1) x^{-s-m}.
  Real rising = s;  // s(s+1)...(s+m-1) / m!, m = 1
  for (unsigned m = 1; m + 1 < bern.size(); ++m) {
    if (m > 1) rising = rising * (s + m - 1) / m;
    if (m % 2 == 0) continue;
    const Real term = to_real<Real>(bern[m + 1]) / (m + 1) * rising * pow(tn, -static_cast<int>(s + m));
    sum += term;
    if (abs(term) < eps()) break;
  }
  return sum;
}

// Dense list of primes up to `cutoff`, cached for repeated products.
const std::vector<std::uint64_t>& primes_cached(std::uint64_t cutoff) {
  thread_local std::uint64_t cached_cutoff = 0;
  thread_local std::vector<std::uint64_t> primes;
  if (cutoff != cached_cutoff) {
    primes = primes_up_to(cutoff);
    cached_cutoff = cutoff;
  }
  return primes;
}

// Product over p <= cutoff of local(p), corrected by exp(c2 * sum_{p > cutoff} p^{-2}).
// err_estimate compares with the corrected product at cutoff / 2.
template <class Local>
RealApprox<Real> corrected_product(std::uint64_t cutoff, const Real& c2, Local&& local) {
  const auto& primes = primes_cached(cutoff);
  const Real p2 = prime_zeta(2);
  const std::uint64_t half = cutoff / 2;
  Real prod = 1, inv_sq = 0, half_value = 0;
  bool have_half = false;
  for (std::uint64_t p : primes) {
    if (!have_half && p > half) {
      half_value = prod * exp(c2 * (p2 - inv_sq));
      have_half = true;
    }
    prod *= local(p);
    const Real x = Real(1) / p;
    inv_sq += x * x;
  }
  if (!have_half) half_value = prod * exp(c2 * (p2 - inv_sq));
  RealApprox<Real> r;
  r.value = prod * exp(c2 * (p2 - inv_sq));
  const double rounding = static_cast<double>(abs(r.value) * eps()) * (primes.size() + 1);
  r.err_estimate = static_cast<double>(abs(r.value - half_value)) + rounding;
  return r;
}

void check_cutoff(std::uint64_t cutoff) {
  if (cutoff < 100) throw DomainError("prime cutoff must be at least 100");
}

}  // namespace

Real dk(const Real& k, std::uint64_t p, std::uint64_t j) {
  require_prime(p);
  if (!(k > 0)) throw DomainError("dk requires k > 0");
  Real d = 1;
  for (std::uint64_t i = 0; i < j; ++i) d = d * (k + i) / (i + 1);
  return d;
}

BigInt dk_exact(std::uint64_t k, std::uint64_t p, std::uint64_t j) {
  require_prime(p);
  if (k < 1) throw DomainError("dk_exact requires k >= 1");
  return binomial(k + j - 1, j);
}

Rational zeta_local_factor_exact(std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  if (k == 0) return Rational(1);
  const Rational x(1, p);
  Rational sum = 0, xi = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    const BigInt c = binomial(k - 1, i);
    sum += Rational(c * c) * xi;
    xi *= x;
  }
  return power(Rational(1) - x, (k - 1) * (k - 1)) * sum;
}

Rational sp_quadratic_local_factor(std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  if (k < 1) throw DomainError("sp_quadratic_local_factor requires k >= 1");
  const Rational x(1, p);
  const Rational one_minus = Rational(1) - x;
  // ((1+s)^k + (1-s)^k) / 2 with s^2 = x.
  Rational n = 0, xi = 1;
  for (std::uint64_t i = 0; 2 * i <= k; ++i) {
    n += Rational(binomial(k, 2 * i)) * xi;
    xi *= x;
  }
  const Rational inner = n / power(one_minus, k) + x;
  return power(one_minus, k * (k + 1) / 2) / (Rational(1) + x) * inner;
}

Real prime_zeta(unsigned s) {
  if (s < 2) throw DomainError("prime_zeta requires s >= 2");
  // P(s) = sum_n mu(n)/n log zeta(n s)
  Real total = 0;
  for (unsigned n = 1;; ++n) {
    const Real l = log(zeta_integer(n * s));
    if (l < eps() * 1e-2) break;
    const int mu = moebius(n);
    if (mu != 0) total += Real(mu) / n * l;
  }
  return total;
}

RealApprox<Real> ak_zeta(const Real& k, const EulerProductOptions& opts) {
  check_cutoff(opts.prime_cutoff);
  if (!(k > Real(-0.5))) throw DomainError("ak_zeta requires k > -1/2");
  const Real k2 = k * k;
  const Real c2 = -k2 * (k - 1) * (k - 1) / 4;
  const bool integral = k == floor(k);
  const Real inner_eps(opts.inner_eps);

  auto local = [&](std::uint64_t p) -> Real {
    const Real x = Real(1) / p;
    Real sum = 0;
    if (integral) {
      if (k == 0) return Real(1);
      const auto ki = k.convert_to<std::uint64_t>();
      Real xi = 1, c = 1;
      for (std::uint64_t i = 0; i < ki; ++i) {
        sum += c * c * xi;
        c = c * (ki - 1 - i) / (i + 1);
        xi *= x;
      }
      return pow(1 - x, (k - 1) * (k - 1)) * sum;
    }
    Real d = 1, xj = 1;
    for (std::uint64_t j = 0;; ++j) {
      const Real term = d * d * xj;
      sum += term;
      if (abs(term) < inner_eps * abs(sum)) break;
      if (j > 100000 || !isfinite(sum)) {
        throw DivergentInner("inner series for a_k does not settle at p = " + std::to_string(p));
      }
      d = d * (k + j) / (j + 1);
      xj *= x;
    }
    return pow(1 - x, k2) * sum;
  };
  return corrected_product(opts.prime_cutoff, c2, local);
}

RealApprox<Real> ak_sp_quadratic(std::uint64_t k, const EulerProductOptions& opts) {
  check_cutoff(opts.prime_cutoff);
  if (k < 1) throw DomainError("ak_sp_quadratic requires k >= 1");
  const Real b(k * (k + 1) / 2);
  const Real q = Real(binomial(k, 4)) + Real(k) * Real(binomial(k, 2)) + b;
  const Real c2 = q - (b + 1) * (b + 1) / 2 - b / 2 + Real(1) / 2;
  std::vector<Real> binom_even;
  for (std::uint64_t i = 0; 2 * i <= k; ++i) binom_even.emplace_back(binomial(k, 2 * i));

  auto local = [&](std::uint64_t p) -> Real {
    const Real x = Real(1) / p;
    const Real one_minus = 1 - x;
    Real n = 0, xi = 1;
    for (const Real& c : binom_even) {
      n += c * xi;
      xi *= x;
    }
    return pow(one_minus, b) / (1 + x) * (n / pow(one_minus, static_cast<int>(k)) + x);
  };
  return corrected_product(opts.prime_cutoff, c2, local);
}

MeanValueLeadingTerm assemble_mean_value(const FamilyDescriptor& family, std::uint64_t k,
                                         const RealApprox<Real>& ak) {
  if (k < 1) throw DomainError("assemble_mean_value requires k >= 1");
  if (family.A <= 0) throw DomainError("family exponent A must be positive");
  const std::int64_t b = b_exponent(family.sym, static_cast<std::int64_t>(k));
  const Real ratio = Real(g_exact(family.sym, k)) / Real(factorial(static_cast<std::uint64_t>(b)));
  MeanValueLeadingTerm out;
  out.coefficient.value = ratio * ak.value;
  out.coefficient.err_estimate = static_cast<double>(ratio) * ak.err_estimate;
  out.log_power = b;
  out.log_argument_exponent = family.A;
  return out;
}

}  // namespace symm
