#include "symm/mollifier.hpp"

#include "symm/errors.hpp"
#include "symm/numeric_core.hpp"

#include <algorithm>
#include <sstream>

namespace symm {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::monomial(unsigned n, const Rational& c) {
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::parse(std::string_view text) {
  std::vector<Rational> v;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw DomainError("empty coefficient in polynomial '" + std::string(text) + "'");
    v.push_back(parse_rational(item));
  }
  return RationalPolynomial(std::move(v));
}

bool RationalPolynomial::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool RationalPolynomial::is_odd() const {
  for (std::size_t i = 0; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * static_cast<long>(i));
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> v{Rational(0)};
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v.push_back(coeffs_[i] / Rational(static_cast<long>(i + 1)));
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::integrate01() const {
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s += coeffs_[i] / Rational(static_cast<long>(i + 1));
  return s;
}

RationalPolynomial RationalPolynomial::operator-() const { return Rational(-1) * *this; }

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += symm::to_string(coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::term(int power, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_[power] = c;
  return p;
}

Rational LaurentPoly::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    Rational& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + Rational(-1) * b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out += LaurentPoly::term(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, x] : a.terms_) out += LaurentPoly::term(e, c * x);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string power;
    if (e == 1) power = "theta";
    else if (e != 0) power = "theta^" + std::to_string(e);
    if (power.empty()) out += symm::to_string(mag);
    else if (mag == 1) out += power;
    else out += symm::to_string(mag) + "*" + power;
  }
  return out;
}

namespace {

// One summand theta^power * X(x) * Y(y) of a double-integral integrand.
struct Piece {
  int power;
  RationalPolynomial x;
  RationalPolynomial y;
};

// int_0^1 int_0^1 (sum_i theta^{e_i} X_i(x) Y_i(y))^2 dx dy
LaurentPoly square_integral(const std::vector<Piece>& pieces) {
  LaurentPoly out;
  for (const auto& a : pieces)
    for (const auto& b : pieces)
      out += LaurentPoly::term(a.power + b.power,
                               (a.x * b.x).integrate01() * (a.y * b.y).integrate01());
  return out;
}

const LaurentPoly kInvTheta = LaurentPoly::term(-1, 1);

void require_p_vanishes(const RationalPolynomial& P) {
  if (P(0) != 0) throw ConstraintError("P(0) must be 0");
}

void require_parity(const RationalPolynomial& Q) {
  if (!Q.is_even() && !Q.is_odd()) throw ConstraintError("Q must be even or odd");
}

}  // namespace

LaurentPoly m_unitary(const RationalPolynomial& P, const RationalPolynomial& Q) {
  require_p_vanishes(P);
  const Rational lead = P(1) * Q(0);
  return LaurentPoly::constant(lead * lead) +
         kInvTheta * square_integral({{0, P.derivative(), Q}, {1, P, Q.derivative()}});
}

LaurentPoly m_orthogonal(const RationalPolynomial& P, const RationalPolynomial& Q) {
  require_p_vanishes(P);
  require_parity(Q);
  const auto dP = P.derivative();
  const auto dQ = Q.derivative();
  const LaurentPoly lead = LaurentPoly::constant(P(1) * dQ(1)) + LaurentPoly::term(-1, dP(1) * Q(1));
  return lead * lead +
         kInvTheta * square_integral({{-1, dP.derivative(), Q}, {1, -P, dQ.derivative()}});
}

LaurentPoly m_symplectic(const RationalPolynomial& P, const RationalPolynomial& Q) {
  require_p_vanishes(P);
  require_parity(Q);
  if (Q.is_odd()) return {};
  const auto dP = P.derivative();
  const auto Qh = Q.antiderivative();
  const LaurentPoly lead = LaurentPoly::constant(P(1) * Q(1)) + LaurentPoly::term(-1, dP(1) * Qh(1));
  return lead * lead +
         kInvTheta * square_integral({{-1, dP.derivative(), Qh}, {1, -P, Q.derivative()}});
}

LaurentPoly mollified_mean_square(Symmetry sym, const RationalPolynomial& P,
                                  const RationalPolynomial& Q) {
  switch (sym) {
    case Symmetry::U: return m_unitary(P, Q);
    case Symmetry::O: return m_orthogonal(P, Q);
    case Symmetry::Sp: return m_symplectic(P, Q);
  }
  throw DomainError("unknown symmetry class");
}

Rational theta_limit(Symmetry sym) { return sym == Symmetry::U ? Rational(4, 7) : Rational(1); }

Rational evaluate_at_theta(const LaurentPoly& m, const Rational& theta) {
  if (theta <= 0) throw DomainError("theta must be positive");
  Rational s = 0;
  for (const auto& [e, c] : m.terms()) {
    Rational p = 1;
    const Rational base = e >= 0 ? theta : Rational(1) / theta;
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    s += c * p;
  }
  return s;
}

}  // namespace symm
