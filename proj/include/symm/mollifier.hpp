#pragma once

#include "symm/symmetry.hpp"
#include "symm/types.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symm {

/// Polynomial with exact rational coefficients, lowest degree first.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  /// x^n
  static RationalPolynomial monomial(unsigned n, const Rational& c = 1);
  /// Comma-separated coefficients, constant term first: "0,1" is x.
  static RationalPolynomial parse(std::string_view text);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_even() const;
  bool is_odd() const;

  Rational operator()(const Rational& x) const;
  RationalPolynomial derivative() const;
  /// Antiderivative vanishing at 0.
  RationalPolynomial antiderivative() const;
  Rational integrate01() const;

  RationalPolynomial operator-() const;
  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a);
  bool operator==(const RationalPolynomial&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Finite Laurent polynomial in theta with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const Rational& c) { return term(0, c); }
  static LaurentPoly term(int power, const Rational& c);

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int power) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a);
  bool operator==(const LaurentPoly&) const = default;

  /// Highest power first, e.g. "1 + 2*theta^-1 + theta^-2"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

/// Main term of the mollified mean square for unitary families, valid for theta < 4/7.
///   P(1)^2 Q(0)^2 + theta^{-1} int int (P'(x) Q(y) + theta P(x) Q'(y))^2 dx dy
LaurentPoly m_unitary(const RationalPolynomial& P, const RationalPolynomial& Q);

/// Orthogonal families, Q even or odd, theta < 1.
///   (P(1) Q'(1) + theta^{-1} P'(1) Q(1))^2
///     + theta^{-1} int int (theta^{-1} P''(x) Q(y) - theta P(x) Q''(y))^2 dx dy
LaurentPoly m_orthogonal(const RationalPolynomial& P, const RationalPolynomial& Q);

/// Symplectic families, Q even or odd, theta < 1; zero for odd Q. With
/// Qh(y) = int_0^y Q:
///   (P(1) Q(1) + theta^{-1} P'(1) Qh(1))^2
///     + theta^{-1} int int (theta^{-1} P''(x) Qh(y) - theta P(x) Q'(y))^2 dx dy
LaurentPoly m_symplectic(const RationalPolynomial& P, const RationalPolynomial& Q);

LaurentPoly mollified_mean_square(Symmetry sym, const RationalPolynomial& P,
                                  const RationalPolynomial& Q);

/// Upper end of the theta range in which the main term is known to hold.
Rational theta_limit(Symmetry sym);

Rational evaluate_at_theta(const LaurentPoly& m, const Rational& theta);

}  // namespace symm
