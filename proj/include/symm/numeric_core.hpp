#pragma once

#include "symm/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symm {

/// Prime factorization of a positive integer: prime -> exponent (all >= 1).
struct FactoredInteger {
  std::map<BigInt, std::uint64_t> exponents;

  BigInt value() const;
  /// Exponent of `p`, zero when absent.
  std::uint64_t exponent(const BigInt& p) const;
  BigInt largest_prime() const;
  /// "2^3*3*7", or "1" for the empty factorization.
  std::string to_string() const;

  bool operator==(const FactoredInteger&) const = default;
};

BigInt factorial(std::uint64_t n);

/// (2j-1)!! = 1*3*5*...*(2j-1), for j >= 1.
BigInt odd_double_factorial(std::uint64_t j);

BigInt floor(const Rational& x);

/// [x]_2 = [([x] + 1) / 2].
BigInt bracket2(const Rational& x);

/// Floor division for signed integers, q > 0.
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t q) {
  std::int64_t d = n / q;
  if ((n % q != 0) && (n < 0)) --d;
  return d;
}

/// [n/q]_2 for integers, q > 0.
constexpr std::int64_t bracket2(std::int64_t n, std::int64_t q) {
  return floor_div(floor_div(n, q) + 1, 2);
}

/// The representative m of n mod b with -b/2 < m <= b/2.
std::int64_t abs_least_residue(std::int64_t n, std::int64_t b);

/// Ascending list of primes <= n.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Smallest r > 0 with p^r = 1 (mod b); requires gcd(p, b) = 1.
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t b);

/// Exact factorization by trial division over an expanding prime sieve. A
/// large cofactor that passes a strong probable-prime test is taken as prime.
FactoredInteger factor_integer(const BigInt& n);

/// Bernoulli numbers B_0..B_n (B_1 = -1/2), exact, cached.
const std::vector<Rational>& bernoulli_numbers(std::size_t n);

/// Moebius function for n >= 1.
int moebius(std::uint64_t n);

/// Parse "a/b", an integer, or a decimal such as "-0.125" or "1e-3" as an exact rational.
Rational parse_rational(const std::string& text);

/// Exact rational value of a finite double.
Rational rational_from_double(double x);

/// "num/den", or "num" when the denominator is one.
std::string to_string(const Rational& q);

}  // namespace symm
