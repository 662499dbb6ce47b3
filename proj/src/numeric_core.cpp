#include "symm/numeric_core.hpp"

#include "symm/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

namespace symm {

namespace mp = boost::multiprecision;

BigInt FactoredInteger::value() const {
  BigInt out = 1;
  for (const auto& [p, e] : exponents) out *= mp::pow(p, static_cast<unsigned>(e));
  return out;
}

std::uint64_t FactoredInteger::exponent(const BigInt& p) const {
  auto it = exponents.find(p);
  return it == exponents.end() ? 0 : it->second;
}

BigInt FactoredInteger::largest_prime() const {
  return exponents.empty() ? BigInt(1) : exponents.rbegin()->first;
}

std::string FactoredInteger::to_string() const {
  if (exponents.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : exponents) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.backend().data(), n);
  return out;
}

BigInt odd_double_factorial(std::uint64_t j) {
  if (j == 0) throw DomainError("odd_double_factorial requires j >= 1");
  BigInt out;
  mpz_2fac_ui(out.backend().data(), 2 * j - 1);
  return out;
}

BigInt floor(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.backend().data(), mp::numerator(x).backend().data(),
             mp::denominator(x).backend().data());
  return q;
}

BigInt bracket2(const Rational& x) {
  BigInt q;
  BigInt f = floor(x) + 1;
  mpz_fdiv_q_ui(q.backend().data(), f.backend().data(), 2);
  return q;
}

std::int64_t abs_least_residue(std::int64_t n, std::int64_t b) {
  if (b < 1) throw DomainError("abs_least_residue requires b >= 1");
  std::int64_t m = n % b;
  if (m < 0) m += b;
  if (2 * m > b) m -= b;
  return m;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t m = i * i; m <= n; m += i) composite[m] = true;
  }
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t b) {
  if (b == 0) throw DomainError("multiplicative_order requires b >= 1");
  if (std::gcd(p, b) != 1) throw PreconditionError("multiplicative_order requires gcd(p, b) = 1");
  if (b == 1) return 1;
  const unsigned __int128 mod = b;
  unsigned __int128 t = p % b;
  std::uint64_t r = 1;
  while (t != 1) {
    t = (t * p) % mod;
    ++r;
  }
  return r;
}

FactoredInteger factor_integer(const BigInt& n) {
  if (n < 1) throw DomainError("factor_integer requires n >= 1");
  FactoredInteger out;
  BigInt rest = n;
  boost::random::mt19937 gen(12345u);
  std::uint64_t limit = 1 << 12;
  std::uint64_t start = 0;
  while (rest > 1) {
    const auto primes = primes_up_to(limit);
    for (std::uint64_t p : primes) {
      if (p <= start) continue;
      if (BigInt(p) * p > rest) {
        out.exponents[rest] += 1;
        return out;
      }
      if (mpz_divisible_ui_p(rest.backend().data(), p)) {
        BigInt factor(p);
        auto e = mpz_remove(rest.backend().data(), rest.backend().data(), factor.backend().data());
        out.exponents[factor] += e;
        if (rest == 1) return out;
      }
    }
    start = limit;
    if (mp::miller_rabin_test(rest, 25, gen)) {
      out.exponents[rest] += 1;
      return out;
    }
    limit *= 2;
  }
  return out;
}

const std::vector<Rational>& bernoulli_numbers(std::size_t n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    const std::size_t m = table.size();
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    Rational acc = 0;
    BigInt binom = 1;  // C(m+1, 0)
    for (std::size_t k = 0; k < m; ++k) {
      acc += Rational(binom) * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    table.push_back(-acc / Rational(m + 1));
  }
  return table;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw DomainError("moebius requires n >= 1");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw DomainError("malformed integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw DomainError("malformed integer '" + s + "'");
  BigInt out;
  mpz_set_str(out.backend().data(), s.c_str() + (s[0] == '+' ? 1 : 0), 10);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_integer(s.substr(0, slash));
    BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }

  std::string mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    exponent = std::stol(parse_integer(s.substr(e + 1)).str());
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    std::string frac = mantissa.substr(dot + 1);
    digits = mantissa.substr(0, dot) + frac;
    exponent -= static_cast<long>(frac.size());
  } else {
    digits = mantissa;
  }
  if (digits.empty()) throw DomainError("malformed number '" + text + "'");
  Rational out(parse_integer(digits));
  BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
  out = exponent >= 0 ? out * Rational(scale) : out / Rational(scale);
  return negative ? Rational(-out) : out;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite floating-point value");
  int e = 0;
  double m = std::frexp(x, &e);
  // m * 2^53 is an exact integer
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  e -= 53;
  Rational out(mant);
  BigInt scale = mp::pow(BigInt(2), static_cast<unsigned>(std::abs(e)));
  return e >= 0 ? Rational(out * Rational(scale)) : Rational(out / Rational(scale));
}

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

}  // namespace symm
