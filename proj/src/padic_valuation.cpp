#include "symm/padic_valuation.hpp"

#include "symm/errors.hpp"
#include "symm/exact_moments.hpp"
#include "symm/numeric_core.hpp"

#include <string>

namespace symm {

namespace {

using i128 = __int128;

// k is bounded so that k^2 and q * [n/q]^2 stay far inside 128 bits.
constexpr std::uint64_t kMaxK = std::uint64_t{1} << 30;

void check_args(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("valuations are defined for k >= 1");
  if (k > kMaxK) throw DomainError("k too large for closed-form valuation");
}

/// p^ell, or 0 if it exceeds `bound`.
i128 prime_power(std::uint64_t p, unsigned ell, i128 bound) {
  i128 q = 1;
  for (unsigned i = 0; i < ell; ++i) {
    q *= p;
    if (q > bound) return 0;
  }
  return q;
}

i128 fdiv(i128 n, i128 q) {
  i128 d = n / q;
  if ((n % q != 0) && (n < 0)) --d;
  return d;
}

std::uint64_t to_valuation(i128 v) {
  if (v < 0) throw IntegralityViolation("negative valuation summand");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t term_unitary(i128 q, i128 k) {
  const i128 m = fdiv(k - 1, q);
  const i128 n = fdiv(2 * k - 1, q);
  const i128 head = fdiv(k * k, q);
  if (n == 2 * m) return to_valuation(head - 2 * k * m + q * m * m);
  if (n == 2 * m + 1) return to_valuation(head + (2 * q - 2 * k) * m + q * m * m + q - 2 * k);
  throw IntegralityViolation("floor relation between (k-1)/q and (2k-1)/q violated");
}

std::uint64_t term_orthogonal(i128 q, i128 k) {
  const i128 b = fdiv(fdiv(2 * k - 3, q) + 1, 2);
  // twice the summand: 2[k(k-1)/2/q] - (2k-1) b + q b^2
  const i128 twice = 2 * fdiv(k * (k - 1) / 2, q) - (2 * k - 1) * b + q * b * b;
  if (twice % 2 != 0) throw IntegralityViolation("odd doubled valuation summand");
  return to_valuation(twice / 2);
}

std::uint64_t vp_exact_division(Symmetry sym, std::uint64_t p, std::uint64_t k) {
  BigInt g = g_exact(sym, k);
  BigInt prime(p);
  return mpz_remove(g.backend().data(), g.backend().data(), prime.backend().data());
}

}  // namespace

std::uint64_t vp_term(Symmetry sym, std::uint64_t p, unsigned ell, std::uint64_t k) {
  if (sym == Symmetry::Sp)
    throw UnsupportedClass("no closed-form summand for Sp; use g_{k+1,O} = 2^k g_{k,Sp}");
  if (p == 2) throw UnsupportedClass("closed-form summands are stated for odd primes only");
  check_args(p, k);
  if (ell == 0) throw DomainError("ell must be >= 1");
  const i128 kk = k;
  const i128 q = prime_power(p, ell, kk * kk);
  if (q == 0) return 0;
  return sym == Symmetry::U ? term_unitary(q, kk) : term_orthogonal(q, kk);
}

std::uint64_t vp_closed(Symmetry sym, std::uint64_t p, std::uint64_t k) {
  check_args(p, k);
  if (p == 2) return vp_exact_division(sym, p, k);
  if (sym == Symmetry::Sp) return vp_closed(Symmetry::O, p, k + 1);
  std::uint64_t total = 0;
  const i128 kk = k;
  for (unsigned ell = 1;; ++ell) {
    const i128 q = prime_power(p, ell, kk * kk);
    if (q == 0) break;
    total += sym == Symmetry::U ? term_unitary(q, kk) : term_orthogonal(q, kk);
  }
  return total;
}

bool zero_window(Symmetry sym, std::uint64_t p, std::uint64_t k) {
  if (sym == Symmetry::Sp)
    throw UnsupportedClass("the window criterion is stated for U and O; Sp follows from O");
  if (p == 2) throw UnsupportedClass("the window criterion is stated for odd primes");
  check_args(p, k);
  const i128 b = b_exponent(sym, static_cast<std::int64_t>(k));
  const i128 pp = p;
  if (pp >= b) throw OutOfRegime("p >= B(k): the valuation is trivially zero there");
  if (pp * pp <= b) throw OutOfRegime("p^2 <= B(k): no window criterion applies");
  const i128 d = pp - static_cast<i128>(k);
  if (sym == Symmetry::U) return d > 0 && d * d < pp;
  return d * d < static_cast<i128>(k) + pp;
}

std::uint64_t vp_superfactorial(std::uint64_t p, std::uint64_t J) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  i128 total = 0;
  for (i128 q = p; q <= static_cast<i128>(J); q *= p) {
    const i128 n = J / q;
    // (J+1) n - (q/2)(n^2 + n); n^2 + n is even
    total += (static_cast<i128>(J) + 1) * n - q * (n * n + n) / 2;
  }
  return to_valuation(total);
}

std::uint64_t vp_odd_superfactorial(std::uint64_t p, std::uint64_t J) {
  if (p == 2) throw UnsupportedClass("odd double factorials have no factor 2");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (J == 0) return 0;
  i128 twice = 0;
  for (i128 q = p; q <= 2 * static_cast<i128>(J) - 1; q *= p) {
    const i128 n = fdiv(fdiv(2 * static_cast<i128>(J) - 1, q) + 1, 2);
    // 2 * [ (J + 1/2) n - (q/2) n^2 ]
    twice += (2 * static_cast<i128>(J) + 1) * n - q * n * n;
  }
  if (twice % 2 != 0) throw IntegralityViolation("odd doubled valuation");
  return to_valuation(twice / 2);
}

}  // namespace symm
