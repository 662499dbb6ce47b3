// Acceptance checks. With no argument every criterion runs; with a number only
// that one. One PASS/FAIL line per criterion; exit status 1 if any failed.

#include "oracles.hpp"

#include "symm/analytic_g.hpp"
#include "symm/euler_products.hpp"
#include "symm/exact_moments.hpp"
#include "symm/mollifier.hpp"
#include "symm/padic_valuation.hpp"
#include "symm/self_similar.hpp"

#include <boost/math/constants/constants.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace symm;

namespace {

// Tolerances and limits.
constexpr double kLimit1 = 1.0, kLimit2 = 5.0, kLimit3 = 30.0, kLimit7 = 10.0, kLimit11 = 30.0, kLimit12 = 5.0;
constexpr double kCpEps = 1e-12;
constexpr double kDensityTol = 0.05;
constexpr double kHalfUTol = 1e-10;
constexpr double kHalfULimitDigits = 1e-6;
constexpr double kClosedVsLimit = 1e-8;
constexpr double kProductIdentity = 1e-10;
constexpr double kRatioLo = 1.5, kRatioHi = 2.5;
constexpr double kLogSumTol = 1e-6, kJLogSumTol = 1e-2, kLogSumSmallN = 0.01;
constexpr double kAk1 = 1e-10, kAk2 = 1e-6, kIngham = 1e-6;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) note << "; ";
      note << what;
      pass = false;
    }
  }
};

double rel_err(const Real& a, const Real& b) { return static_cast<double>(abs(a - b) / abs(b)); }

Rational random_rational(std::mt19937_64& gen) {
  std::uniform_int_distribution<long> num(1, 100000), den(1, 1000);
  return Rational(num(gen), den(gen));
}

void c1(Outcome& o) {
  const std::uint64_t u[] = {1, 2, 42, 24024}, ort[] = {1, 2, 8, 128}, sp[] = {1, 2, 16, 768};
  for (std::uint64_t k = 1; k <= 4; ++k) {
    o.require(g_exact(Symmetry::U, k) == u[k - 1], "U k=" + std::to_string(k));
    o.require(g_exact(Symmetry::O, k) == ort[k - 1], "O k=" + std::to_string(k));
    o.require(g_exact(Symmetry::Sp, k) == sp[k - 1], "Sp k=" + std::to_string(k));
  }
}

void c2(Outcome& o) {
  const std::pair<int, int> shown[] = {
      {2, 95},   {3, 65},   {5, 24},   {7, 33},   {11, 10},  {13, 33},  {17, 36},  {19, 29},  {23, 20},
      {29, 16},  {31, 11},  {37, 10},  {41, 12},  {43, 9},   {47, 4},   {53, 3},   {59, 7},   {61, 9},
      {67, 18},  {71, 12},  {73, 10},  {79, 6},   {83, 4},   {89, 2},   {97, 1},   {101, 0},  {103, 0},
      {107, 0},  {109, 0},  {113, 1},  {127, 5},  {131, 7},  {137, 9},  {139, 10}, {149, 16}, {151, 17},
      {157, 20}, {163, 24}, {167, 26}, {173, 30}, {179, 34}, {181, 36}, {191, 43}, {193, 44}, {197, 47},
      {199, 47}, {211, 47}, {223, 44}};
  const FactoredInteger f = g_factored(Symmetry::U, 100);
  o.require(f.value() == g_exact(Symmetry::U, 100), "factorization does not reconstruct g_100");
  for (auto [p, e] : shown) {
    const auto got = f.exponent(p);
    o.require(got == static_cast<std::uint64_t>(e),
              std::to_string(p) + "^" + std::to_string(got) + " (expected " + std::to_string(e) + ")");
  }
  o.require(f.largest_prime() == 9973, "largest prime " + f.largest_prime().str());
  o.require(factor_integer(g_exact(Symmetry::U, 100)) == f, "independent factoring disagrees");
}

void c3(Outcome& o) {
  std::size_t checked = 0, bad = 0;
  for (Symmetry s : kAllSymmetries) {
    for (std::uint64_t k = 1; k <= 60; ++k) {
      const auto f = factor_integer(g_exact(s, k));
      const auto b = static_cast<std::uint64_t>(b_exponent(s, static_cast<std::int64_t>(k)));
      for (std::uint64_t p : primes_up_to(b)) {
        ++checked;
        if (vp_closed(s, p, k) != f.exponent(p)) ++bad;
      }
    }
  }
  o.note << checked << " valuations";
  o.require(bad == 0, std::to_string(bad) + " mismatches");
}

void c4(Outcome& o) {
  std::size_t checked = 0, bad = 0;
  for (Symmetry s : {Symmetry::U, Symmetry::O}) {
    for (std::uint64_t k = 1; k <= 300; ++k) {
      const auto b = static_cast<std::uint64_t>(b_exponent(s, static_cast<std::int64_t>(k)));
      for (std::uint64_t p : primes_up_to(b)) {
        if (p == 2 || p * p <= b || p >= b) continue;
        ++checked;
        if (zero_window(s, p, k) != (vp_closed(s, p, k) == 0)) ++bad;
      }
    }
  }
  o.note << checked << " (class, p, k) cases";
  o.require(bad == 0, std::to_string(bad) + " mismatches");
}

void c5(Outcome& o) {
  o.require(cp_exact(5, Rational(3, 13)) == Rational(23, 72), "c_5(3/13) != 23/72");
  auto gen = oracle::rng(2024);
  for (int i = 0; i < 100; ++i) {
    const Rational x = random_rational(gen);
    o.require(cp_exact(2, x) == 1, "c_2(" + to_string(x) + ") != 1");
  }
  const std::uint64_t ps[] = {3, 5, 7, 11, 13, 17, 19, 23};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(ps) - 1);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t p = ps[pick(gen)];
    const Rational x = random_rational(gen);
    o.require(cp_exact(p, x * p) == cp_exact(p, x), "scaling fails at p=" + std::to_string(p));
  }
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t p = ps[pick(gen)];
    const Rational x = random_rational(gen);
    const double err = static_cast<double>(abs(cp_numeric<Real>(p, x, kCpEps).value - to_real<Real>(cp_exact(p, x))));
    worst = std::max(worst, err);
  }
  o.note << "max numeric error " << worst;
  o.require(worst <= kCpEps, "numeric error above eps");
}

void c6(Outcome& o) {
  double prev = INFINITY;
  for (unsigned j = 4; j <= 7; ++j) {
    const auto d = vp_density_check(3, Rational(1), j);
    const double dev = std::abs(d.ratio_u - 1);
    o.note << "j=" << j << ":" << d.ratio_u << " ";
    o.require(dev < prev, "not monotone at j=" + std::to_string(j));
    prev = dev;
  }
  o.require(prev <= kDensityTol, "j=7 ratio off by more than 0.05");
}

void c7(Outcome& o) {
  const Real g = g_half_U<Real>().value;
  const std::string digits = g.str(20, std::ios_base::fixed);
  o.note << digits.substr(0, 14);
  o.require(digits.rfind("1.0362329154", 0) == 0, "displayed digits differ");
  o.require(std::abs(static_cast<double>(g) - 1.0362329154) < kHalfUTol, "beyond the displayed digits");
  o.require(g >= 1 && g <= Real(16) / 15, "outside [1, 16/15]");
  const Real lim = g_lambda_limit<Real>(Symmetry::U, Real(0.5), 10).value;
  o.require(rel_err(lim, g) < kHalfULimitDigits, "limit disagrees");
}

void c8(Outcome& o) {
  double worst = 0;
  for (Symmetry s : kAllSymmetries) {
    for (const char* l : {"0.5", "1", "1.7", "2.5"}) {
      const Real lambda(l);
      const double e = rel_err(g_lambda_closed(s, lambda).value, g_lambda_limit(s, lambda).value);
      worst = std::max(worst, e);
      o.require(e < kClosedVsLimit, std::string(to_string(s)) + " at " + l);
    }
    for (int k = 1; k <= 5; ++k) {
      const Real exact(g_exact(s, static_cast<std::uint64_t>(k)));
      o.require(rel_err(g_lambda_closed(s, Real(k)).value, exact) < kClosedVsLimit, "closed vs exact");
      o.require(rel_err(g_lambda_limit(s, Real(k)).value, exact) < kClosedVsLimit, "limit vs exact");
    }
  }
  for (const char* l : {"0.3", "0.9", "1.4", "2.2"}) {
    const Real lambda(l);
    const Real lhs = g_ratio_closed(Symmetry::O, lambda).value * g_ratio_closed(Symmetry::Sp, lambda).value;
    const Real rhs = pow(Real(2), lambda * lambda - 1) * g_ratio_closed(Symmetry::U, lambda).value;
    o.require(rel_err(lhs, rhs) < kProductIdentity, std::string("product identity at ") + l);
  }
  o.note << "max closed/limit rel. error " << worst;
}

void c9(Outcome& o) {
  const int expected[3][2] = {{1, 3}, {1, 2}, {0, 1}};
  int i = 0;
  for (Symmetry s : kAllSymmetries) {
    for (int k = 1; k <= 2; ++k) {
      const int got = pole_order(s, static_cast<std::uint64_t>(k));
      o.note << to_string(s) << k << "=" << got << " ";
      o.require(got == expected[i][k - 1], std::string(to_string(s)) + " k=" + std::to_string(k));
    }
    ++i;
  }
}

void c10(Outcome& o) {
  for (Symmetry s : kAllSymmetries) {
    const double e50 = std::abs(static_cast<double>(log_g_exact<Real>(s, 50) - log_gk_asymptotic<Real>(s, 50)));
    const double e100 = std::abs(static_cast<double>(log_g_exact<Real>(s, 100) - log_gk_asymptotic<Real>(s, 100)));
    const double ratio = e50 / e100;
    o.note << to_string(s) << " ratio " << ratio << " ";
    o.require(e100 < e50, std::string(to_string(s)) + " error did not shrink");
    o.require(ratio >= kRatioLo && ratio <= kRatioHi,
              std::string(to_string(s)) + " error ratio " + std::to_string(ratio) + " outside [1.5, 2.5]");
  }
  auto diff = [](LogSum w, std::uint64_t n) {
    auto [exact, asym] = log_sum_expansion<Real>(w, n);
    return std::abs(static_cast<double>(exact - asym));
  };
  o.require(diff(LogSum::LogJ, 1000) < kLogSumTol, "sum log j at n=1000");
  o.require(diff(LogSum::JLogOdd, 1000) < kJLogSumTol, "sum j log(2j-1) at n=1000");
  o.require(diff(LogSum::LogJ, 1) < kLogSumSmallN, "sum log j at n=1");
}

void c11(Outcome& o) {
  const Real pi = boost::math::constants::pi<Real>();
  const auto a1 = ak_zeta(Real(1));
  const auto a2 = ak_zeta(Real(2), {100000, 1e-40});
  o.require(std::abs(static_cast<double>(a1.value) - 1) < kAk1, "a_1 != 1");
  o.require(rel_err(a2.value, 6 / (pi * pi)) < kAk2, "a_2 != 6/pi^2");
  const auto t = assemble_mean_value(FamilyDescriptor{Symmetry::U, Rational(1), "zeta"}, 2, a2);
  o.require(rel_err(t.coefficient.value, 1 / (2 * pi * pi)) < kIngham, "coefficient != 1/(2 pi^2)");
  o.require(t.log_power == 4, "log power != 4");
  o.note << "a_2 = " << a2.value.str(12);
}

void c12(Outcome& o) {
  using Poly = RationalPolynomial;
  const Poly x({Rational(0), Rational(1)}), one({Rational(1)});
  LaurentPoly u = LaurentPoly::constant(1) + LaurentPoly::term(-1, 1);
  o.require(m_unitary(x, one) == u, "U example");
  o.require(m_orthogonal(x, one) == LaurentPoly::term(-2, 1), "O example");
  o.require(m_symplectic(x, one) == u * u, "Sp example");
  auto gen = oracle::rng(77);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  std::uniform_int_distribution<int> deg(1, 5);
  int bad = 0;
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> p(deg(gen) + 1), q(deg(gen) + 1);
    for (std::size_t j = 1; j < p.size(); ++j) p[j] = Rational(num(gen), den(gen));
    for (std::size_t j = 1; j < q.size(); j += 2) q[j] = Rational(num(gen), den(gen));
    const Poly P(p), Q(q);
    if (!(m_symplectic(P, Q.derivative()) == m_orthogonal(P, Q))) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " of 50 random pairs differ");
}

struct Criterion {
  const char* title;
  void (*check)(Outcome&);
  double time_limit;  // seconds, 0 for none
};

const Criterion kCriteria[] = {
    {"exact moment table", c1, kLimit1},
    {"factorization of g_100 (U)", c2, kLimit2},
    {"closed-form valuations equal factored exponents, k <= 60", c3, kLimit3},
    {"zero-valuation window, k <= 300", c4, 0},
    {"exact and numeric c_p", c5, 0},
    {"valuation density tends to c_3(1)", c6, 0},
    {"g_{1/2} for the unitary class", c7, kLimit7},
    {"closed form, limit and exact values agree", c8, 0},
    {"pole orders at 1/2 - k", c9, 0},
    {"large-k expansions", c10, 0},
    {"arithmetic factors and assembled mean value", c11, kLimit11},
    {"mollified mean squares", c12, kLimit12},
};

bool run_one(int n) {
  const Criterion& c = kCriteria[n - 1];
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.check(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.time_limit > 0 && secs >= c.time_limit) {
    o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit) + " s");
  }
  std::printf("%s %2d %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", n, c.title, secs, o.note.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr int count = static_cast<int>(std::size(kCriteria));
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > count) {
      std::fprintf(stderr, "criterion must be between 1 and %d\n", count);
      return 2;
    }
    return run_one(n) ? 0 : 1;
  }
  bool all = true;
  for (int n = 1; n <= count; ++n) all = run_one(n) && all;
  return all ? 0 : 1;
}
