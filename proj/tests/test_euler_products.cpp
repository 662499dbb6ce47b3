#include "symm/errors.hpp"
#include "symm/euler_products.hpp"
#include "symm/numeric_core.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

using namespace symm;

namespace {

double rel_err(const Real& a, const Real& b) { return static_cast<double>(abs(a - b) / abs(b)); }

const Real kPi = boost::math::constants::pi<Real>();

}  // namespace

TEST_CASE("divisor coefficients") {
  CHECK(dk(Real(1), 7, 5) == 1);
  CHECK(dk(Real(2), 3, 3) == 4);
  CHECK(dk(Real(3), 5, 2) == 6);
  CHECK(dk(Real(2.5), 5, 0) == 1);
  CHECK(dk_exact(3, 5, 2) == 6);
  CHECK(dk_exact(4, 2, 10) == 286);
  CHECK_THROWS_AS(dk(Real(2), 4, 1), DomainError);
  for (std::uint64_t k = 1; k <= 6; ++k)
    for (std::uint64_t j = 0; j <= 12; ++j) REQUIRE(dk(Real(k), 2, j) == Real(dk_exact(k, 2, j)));

  // sum_j d_k(p^j) x^j = (1 - x)^{-k}
  for (double k : {0.5, 1.0, 2.0, 3.7}) {
    for (double xd : {-0.5, 0.25, 0.5}) {
      const Real x(xd);
      Real s = 0, xj = 1;
      for (std::uint64_t j = 0; j < 400; ++j) {
        s += dk(Real(k), 3, j) * xj;
        xj *= x;
      }
      REQUIRE(rel_err(s, pow(1 - x, -Real(k))) < 1e-60);
    }
  }
}

TEST_CASE("local factors") {
  for (std::uint64_t p : primes_up_to(100)) REQUIRE(zeta_local_factor_exact(1, p) == 1);
  for (std::uint64_t p : {3, 5, 7}) {
    const Rational pp(p);
    CHECK(sp_quadratic_local_factor(1, p) == 1 - 1 / (pp * pp + pp));
  }
  // k = 2: (1 - 1/p)^4 (1 + 4/p + 9/p^2 + ...) = (1 - 1/p)(1 + 1/p)
  CHECK(zeta_local_factor_exact(2, 3) == Rational(8, 9));
  // The series sum_j d_k(p^j)^2 p^{-j} against the closed polynomial form.
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const Real x = Real(1) / 5;
    Real s = 0, xj = 1;
    for (std::uint64_t j = 0; j < 300; ++j) {
      const Real d(dk_exact(k, 5, j));
      s += d * d * xj;
      xj *= x;
    }
    s *= pow(1 - x, Real(k * k));
    REQUIRE(rel_err(s, to_real<Real>(zeta_local_factor_exact(k, 5))) < 1e-60);
  }
}

TEST_CASE("prime zeta") {
  CHECK(rel_err(prime_zeta(2), Real("0.4522474200410654985065433648322479341732")) < 1e-38);
  CHECK(rel_err(prime_zeta(3), Real("0.1747626392994435364231133146657067009754")) < 1e-38);
}

TEST_CASE("a_k for zeta") {
  CHECK(ak_zeta(Real(0)).value == 1);
  CHECK(std::abs(static_cast<double>(ak_zeta(Real(1)).value) - 1) < 1e-10);
  CHECK(rel_err(ak_zeta(Real(2)).value, 6 / (kPi * kPi)) < 1e-6);
  CHECK_THROWS_AS(ak_zeta(Real(-0.5)), DomainError);
  CHECK_THROWS_AS(ak_zeta(Real(2), {50, 1e-40}), DomainError);

  for (int k = 1; k <= 4; ++k) {
    const auto a = ak_zeta(Real(k), {10000, 1e-40});
    const auto b = ak_zeta(Real(k), {20000, 1e-40});
    REQUIRE(static_cast<double>(abs(a.value - b.value)) < a.err_estimate);
  }
}

TEST_CASE("a_k = a_{1-k} (informational)") {
  const auto a = ak_zeta(Real(0.25), {20000, 1e-40});
  const auto b = ak_zeta(Real(0.75), {20000, 1e-40});
  CHECK(rel_err(a.value, b.value) < 1e-8);
}

TEST_CASE("a_k for quadratic Dirichlet L-functions") {
  const auto a1 = ak_sp_quadratic(1, {100000, 1e-40});
  const auto b1 = ak_sp_quadratic(1, {200000, 1e-40});
  CHECK(rel_err(a1.value, b1.value) < 1e-8);
  CHECK(static_cast<double>(abs(a1.value - b1.value)) < a1.err_estimate);
  const auto a2 = ak_sp_quadratic(2, {100000, 1e-40});
  const auto b2 = ak_sp_quadratic(2, {200000, 1e-40});
  CHECK(rel_err(a2.value, b2.value) < 1e-6);
  // k = 1 directly: prod_p (1 - 1/(p^2 + p)).
  Real direct = 1;
  for (std::uint64_t p : primes_up_to(100000)) direct *= 1 - Real(1) / (Real(p) * p + p);
  CHECK(rel_err(a1.value, direct) < 1e-5);
}

TEST_CASE("assembled mean values") {
  const FamilyDescriptor zeta{Symmetry::U, Rational(1), "zeta"};
  RealApprox<Real> a2;
  a2.value = 6 / (kPi * kPi);
  const auto t2 = assemble_mean_value(zeta, 2, a2);
  CHECK(rel_err(t2.coefficient.value, 1 / (2 * kPi * kPi)) < 1e-60);
  CHECK(t2.log_power == 4);
  RealApprox<Real> a1;
  a1.value = 1;
  const auto t1 = assemble_mean_value(zeta, 1, a1);
  CHECK(t1.coefficient.value == 1);
  CHECK(t1.log_power == 1);

  const FamilyDescriptor quad{Symmetry::Sp, Rational(1, 2), "quadratic"};
  const auto sp = ak_sp_quadratic(1);
  const auto t = assemble_mean_value(quad, 1, sp);
  CHECK(t.log_power == 1);
  CHECK(t.coefficient.value == sp.value);
  CHECK(t.log_argument_exponent == Rational(1, 2));
  CHECK_THROWS_AS(assemble_mean_value(FamilyDescriptor{Symmetry::U, Rational(0), ""}, 1, a1), DomainError);
}
