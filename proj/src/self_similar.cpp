#include "symm/self_similar.hpp"

#include "symm/errors.hpp"
#include "symm/padic_valuation.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace symm {

namespace mp = boost::multiprecision;

namespace {

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

void check_positive(const Rational& x) {
  if (x <= 0) throw DomainError("c_p(x) is defined for x > 0 only");
}

/// ||r/b||^2 for 0 <= r < b.
Rational dist_sq(const BigInt& r, const BigInt& b) {
  BigInt d = 2 * r > b ? BigInt(b - r) : r;
  return Rational(d * d, b * b);
}

/// sum_{m >= 1} p^m ||x / p^m||^2, exact.
Rational negative_tail(std::uint64_t p, const Rational& x) {
  Rational sum = 0;
  Rational pm = p;
  // ||y|| = y once y <= 1/2, after which the terms form x^2 p^{-m}.
  while (x / pm > Rational(1, 2)) {
    Rational y = x / pm;
    BigInt f = floor(y);
    Rational frac = y - Rational(f);
    Rational d = frac > Rational(1, 2) ? Rational(1 - frac) : frac;
    sum += pm * d * d;
    pm *= p;
  }
  // sum_{m >= M} x^2 p^{-m} = x^2 p^{-M} / (1 - 1/p), with p^M = pm
  sum += x * x / pm * Rational(p, p - 1);
  return sum;
}

}  // namespace

Rational cp_exact(std::uint64_t p, const Rational& x_in) {
  check_prime(p);
  check_positive(x_in);
  Rational x = x_in;
  // c_p(px) = c_p(x): strip p from the denominator
  while (mp::denominator(x) % p == 0) x *= p;

  Rational sum = negative_tail(p, x);
  const BigInt b = mp::denominator(x);
  if (b > 1) {
    const BigInt bp = p % b;
    BigInt r = mp::numerator(x) % b;
    // period of r -> r p mod b is the order of p mod b
    Rational period_sum = 0;
    Rational weight = 1;
    std::uint64_t steps = 0;
    const BigInt r0 = r;
    do {
      period_sum += weight * dist_sq(r, b);
      weight /= p;
      r = (r * p) % b;
      ++steps;
    } while (r != r0);
    // weight == p^{-steps}
    sum += period_sum / (1 - weight);
  }
  return sum / x;
}

template <class T>
RealApprox<T> cp_numeric(std::uint64_t p, const Rational& x, double eps) {
  check_prime(p);
  check_positive(x);
  if (!(eps > 0)) throw DomainError("eps must be positive");

  const Rational neg = negative_tail(p, x);
  const BigInt a = mp::numerator(x);
  const BigInt b = mp::denominator(x);
  const double xd = x.convert_to<double>();

  // l >= 0 terms are at most p^{-l}/4; stop once the remainder over x is < eps/2.
  T sum = to_real<T>(neg);
  T weight = 1;
  const T inv_p = T(1) / T(p);
  BigInt r = a % b;
  double tail = 1.0 / (4.0 * (1.0 - 1.0 / static_cast<double>(p)));  // sum_{l>=L} p^{-l}/4
  for (unsigned l = 0; tail / xd >= eps / 2; ++l) {
    BigInt d = 2 * r > b ? BigInt(b - r) : r;
    sum += weight * to_real<T>(Rational(d * d, b * b));
    weight *= inv_p;
    tail /= static_cast<double>(p);
    r = (r * p) % b;
  }
  RealApprox<T> out;
  out.value = sum / to_real<T>(x);
  out.err_estimate = tail / xd + 16 * std::numeric_limits<T>::epsilon().template convert_to<double>();
  return out;
}

template <>
RealApprox<double> cp_numeric<double>(std::uint64_t p, const Rational& x, double eps) {
  auto hi = cp_numeric<Real>(p, x, eps);
  return {hi.value.convert_to<double>(), 53, hi.err_estimate + 4e-16};
}

template RealApprox<Real> cp_numeric<Real>(std::uint64_t, const Rational&, double);

RealApprox<Real> cp_numeric(std::uint64_t p, double x, double eps) {
  if (!(x > 0)) throw DomainError("c_p(x) is defined for x > 0 only");
  return cp_numeric<Real>(p, rational_from_double(x), eps);
}

const char* to_string(PointClass::Kind kind) {
  switch (kind) {
    case PointClass::Kind::SelfSimilar: return "SelfSimilar";
    case PointClass::Kind::Cusp: return "Cusp";
    case PointClass::Kind::VerticalTangent: return "VerticalTangent";
  }
  return "?";
}

PointClass classify_point(std::uint64_t p, std::int64_t a, std::int64_t b) {
  check_prime(p);
  if (a < 1 || b < 1) throw PreconditionError("classify_point requires a, b >= 1");
  const auto ua = static_cast<std::uint64_t>(a);
  const auto ub = static_cast<std::uint64_t>(b);
  if (std::gcd(ua, ub) != 1 || std::gcd(p, ua) != 1 || std::gcd(p, ub) != 1)
    throw PreconditionError("p, a and b must be pairwise coprime; rescale by p first");

  PointClass out{};
  out.period = multiplicative_order(p, ub);
  std::int64_t sum = 0;
  unsigned __int128 t = ua % ub;
  for (std::uint64_t j = 0; j < out.period; ++j) {
    sum += abs_least_residue(static_cast<std::int64_t>(t), b);
    t = (t * p) % ub;
  }
  out.residue_sum = sum;
  if (sum == 0) {
    out.kind = PointClass::Kind::SelfSimilar;
  } else if (b == 2) {
    out.kind = PointClass::Kind::Cusp;
  } else {
    out.kind = PointClass::Kind::VerticalTangent;
    out.slope_sign = sum > 0 ? 1 : -1;
  }
  return out;
}

DensityRatios vp_density_check(std::uint64_t p, const Rational& x, unsigned j) {
  check_prime(p);
  if (p == 2) throw DomainError("vp_density_check needs an odd prime");
  check_positive(x);
  BigInt kb = floor(x * Rational(mp::pow(BigInt(p), j)));
  if (kb < 1) throw DomainError("[p^j x] must be at least 1");
  if (kb > 10'000'000) throw DomainError("[p^j x] too large for a density check");
  const auto k = kb.convert_to<std::uint64_t>();
  const double c = cp_exact(p, x).convert_to<double>();
  const double kc = static_cast<double>(k) * c;
  return {k, static_cast<double>(vp_closed(Symmetry::U, p, k)) / kc,
          static_cast<double>(vp_closed(Symmetry::O, p, k)) / (kc / 2)};
}

std::vector<CpSample> sample_cp(std::uint64_t p, double x_min, double x_max, std::size_t n,
                                double eps) {
  if (!(x_min > 0) || !(x_max > x_min)) throw DomainError("sample_cp needs 0 < x_min < x_max");
  if (n < 2) throw DomainError("sample_cp needs n >= 2");
  std::vector<CpSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = i + 1 == n ? x_max
                          : x_min + (x_max - x_min) * static_cast<double>(i) /
                                        static_cast<double>(n - 1);
    out.push_back({x, cp_numeric(p, x, eps).value.convert_to<double>()});
  }
  return out;
}

}  // namespace symm
