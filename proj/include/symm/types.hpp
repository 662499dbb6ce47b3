#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <limits>

namespace symm {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Default working real: 77 decimal digits, about 256 bits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<77>,
                                           boost::multiprecision::et_off>;

/// A real value with the precision it was computed at and a heuristic bound on
/// its distance from the true value.
template <class T>
struct RealApprox {
  T value{};
  int precision_bits = std::numeric_limits<T>::digits;
  double err_estimate = 0.0;
};

template <class T>
T to_real(const Rational& q) {
  return T(boost::multiprecision::numerator(q)) / T(boost::multiprecision::denominator(q));
}

template <>
inline double to_real<double>(const Rational& q) {
  return q.convert_to<double>();
}

}  // namespace symm
