#include "symm/exact_moments.hpp"

#include "symm/errors.hpp"
#include "symm/padic_valuation.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace symm {

namespace mp = boost::multiprecision;

std::string_view to_string(Symmetry sym) {
  switch (sym) {
    case Symmetry::U: return "U";
    case Symmetry::O: return "O";
    case Symmetry::Sp: return "Sp";
  }
  return "?";
}

Symmetry parse_symmetry(std::string_view text) {
  std::string s(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "u") return Symmetry::U;
  if (s == "o") return Symmetry::O;
  if (s == "sp") return Symmetry::Sp;
  throw DomainError("unknown symmetry class '" + std::string(text) + "' (expected U, O or Sp)");
}

namespace {

void require_positive(std::uint64_t k) {
  if (k == 0) throw DomainError("moment constants are defined for k >= 1");
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, Symmetry sym, std::uint64_t k) {
  BigInt q, r;
  mp::divide_qr(num, den, q, r);
  if (r != 0)
    throw IntegralityViolation("g_" + std::to_string(k) + "," + std::string(to_string(sym)) +
                               " is not an integer");
  return q;
}

BigInt pow2(std::uint64_t e) {
  BigInt out = 1;
  return out << static_cast<unsigned>(e);
}

}  // namespace

BigInt g_exact(Symmetry sym, std::uint64_t k) {
  require_positive(k);
  const auto b = static_cast<std::uint64_t>(b_exponent(sym, static_cast<std::int64_t>(k)));
  BigInt num = factorial(b);
  BigInt den = 1;
  switch (sym) {
    case Symmetry::U:
      num <<= static_cast<unsigned>(k);
      den = pow2(k * k);
      for (std::uint64_t j = 1; j < k; ++j) den *= odd_double_factorial(j) * odd_double_factorial(j + 1);
      break;
    case Symmetry::O:
      num <<= static_cast<unsigned>(k - 1);
      for (std::uint64_t j = 1; j < k; ++j) den *= odd_double_factorial(j);
      break;
    case Symmetry::Sp:
      for (std::uint64_t j = 1; j <= k; ++j) den *= odd_double_factorial(j);
      break;
  }
  return exact_quotient(num, den, sym, k);
}

BigInt g_exact_factorial_form(Symmetry sym, std::uint64_t k) {
  require_positive(k);
  const auto b = static_cast<std::uint64_t>(b_exponent(sym, static_cast<std::int64_t>(k)));
  BigInt num = factorial(b);
  BigInt den = 1;
  switch (sym) {
    case Symmetry::U:
      for (std::uint64_t j = 1; j < k; ++j) {
        BigInt f = factorial(j);
        num *= f * f;
      }
      for (std::uint64_t j = 1; j < 2 * k; ++j) den *= factorial(j);
      break;
    case Symmetry::O:
      num <<= static_cast<unsigned>(b + k - 1);
      for (std::uint64_t j = 1; j < k; ++j) {
        num *= factorial(j);
        den *= factorial(2 * j);
      }
      break;
    case Symmetry::Sp:
      num <<= static_cast<unsigned>(b);
      for (std::uint64_t j = 1; j <= k; ++j) {
        num *= factorial(j);
        den *= factorial(2 * j);
      }
      break;
  }
  return exact_quotient(num, den, sym, k);
}

FactoredInteger g_factored(Symmetry sym, std::uint64_t k) {
  require_positive(k);
  FactoredInteger out;
  const auto b = static_cast<std::uint64_t>(b_exponent(sym, static_cast<std::int64_t>(k)));
  // the power of two in the O prefactor can exceed B (k = 2)
  for (std::uint64_t p : primes_up_to(std::max<std::uint64_t>(b, 2))) {
    std::uint64_t e = vp_closed(sym, p, k);
    if (e > 0) out.exponents[BigInt(p)] = e;
  }
  return out;
}

MomentConstant moment_constant(Symmetry sym, std::uint64_t k) {
  BigInt value = g_exact(sym, k);
  FactoredInteger factored = g_factored(sym, k);
  if (factored.value() != value)
    throw IntegralityViolation("closed-form valuations disagree with g_exact");
  return {sym, k, std::move(value), std::move(factored), b_exponent(sym, static_cast<std::int64_t>(k))};
}

}  // namespace symm
