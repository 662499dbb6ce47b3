#include "symm/analytic_g.hpp"

#include "symm/errors.hpp"
#include "symm/exact_moments.hpp"
#include "symm/numeric_core.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

namespace symm {
namespace {

template <class T>
T eps_of() {
  return std::numeric_limits<T>::epsilon();
}

template <class T>
double to_double(const T& x) {
  return static_cast<double>(x);
}

template <class T>
RealApprox<T> approx(const T& value, double rel_err) {
  RealApprox<T> r;
  r.value = value;
  r.err_estimate = std::abs(to_double(value)) * rel_err;
  return r;
}

template <class T>
double working_rel_err() {
  return std::ldexp(1.0, 24 - std::numeric_limits<T>::digits);
}

// log A = sum_{j<=n} j log j - (n^2/2 + n/2 + 1/12) log n + n^2/4
//         + sum_{k>=2} B_{2k} / (2k (2k-1) (2k-2)) n^{2-2k}
template <class T>
T log_glaisher_em() {
  const std::uint64_t n = 40;
  const auto& bern = bernoulli_numbers(200);
  T s = 0;
  for (std::uint64_t j = 2; j <= n; ++j) s += T(j) * log(T(j));
  const T tn(n);
  const T logn = log(tn);
  s -= (tn * tn / 2 + tn / 2 + T(1) / 12) * logn;
  s += tn * tn / 4;
  const T inv_n2 = 1 / (tn * tn);
  T npow = 1;
  for (std::uint64_t k = 2; 2 * k < bern.size(); ++k) {
    npow *= inv_n2;
    const T term = to_real<T>(bern[2 * k]) / T((2 * k) * (2 * k - 1) * (2 * k - 2)) * npow;
    s += term;
    if (abs(term) < eps_of<T>() * 1e-3) break;
  }
  return s;
}

// zeta'(2) = -sum_{j>=1} log j / j^2 by Euler-Maclaurin at N, using
//   f^(m)(x) = (-1)^m (m+1)! x^{-2-m} (log x - (H_{m+1} - 1)).
template <class T>
T zeta_prime_2_em() {
  const std::uint64_t n = 40;
  const auto& bern = bernoulli_numbers(200);
  T s = 0;
  for (std::uint64_t j = 2; j < n; ++j) s += log(T(j)) / (T(j) * T(j));
  const T tn(n);
  const T logn = log(tn);
  s += (logn + 1) / tn;                 // integral from N to infinity
  s += logn / (tn * tn) / 2;            // f(N)/2
  // Remainder term k: B_{2k}/(2k)! f^(2k-1)(N) = -B_{2k} N^{-1-2k} (log N - H_{2k} + 1).
  T harmonic = 1;
  for (std::uint64_t m = 1; m + 1 < bern.size(); ++m) {
    harmonic += T(1) / T(m + 1);
    if (m % 2 == 0) continue;
    const T term = -to_real<T>(bern[m + 1]) * pow(tn, -T(2 + m)) * (logn - (harmonic - 1));
    s -= term;
    if (abs(term) < eps_of<T>() * 1e-3) break;
  }
  return -s;
}

template <class T>
FundamentalConstants<T> build_constants() {
  static_assert(std::numeric_limits<T>::digits >= 64, "working precision below 64 bits");
  const double rel = working_rel_err<T>();
  FundamentalConstants<T> c;
  const T pi = boost::math::constants::pi<T>();
  const T log2 = log(T(2));
  const T log2pi = log(2 * pi);
  const T log_a = log_glaisher_em<T>();
  c.pi = approx(pi, rel);
  c.euler_gamma = approx(boost::math::constants::euler<T>(), rel);
  c.log_2 = approx(log2, rel);
  c.log_2pi = approx(log2pi, rel);
  c.zeta_prime_0 = approx(T(-log2pi / 2), rel);
  c.log_glaisher = approx(log_a, rel);
  c.zeta_prime_minus1 = approx(T(T(1) / 12 - log_a), rel);
  c.zeta_prime_2 = approx(zeta_prime_2_em<T>(), rel);
  return c;
}

bool near_nonpositive_integer(double x, double tol) {
  if (x > tol) return false;
  return std::abs(x - std::round(x)) < tol;
}

// True when lambda is within tol of 1/2 - k for some k >= k_min.
bool near_known_pole(Symmetry sym, double lambda, double tol) {
  const double k = std::round(0.5 - lambda);
  const double k_min = sym == Symmetry::Sp ? 2.0 : 1.0;
  return k >= k_min && std::abs(lambda - (0.5 - k)) < tol;
}

template <class T>
void check_known_pole(Symmetry sym, const T& lambda) {
  const double l = to_double(lambda);
  if (near_known_pole(sym, l, 1e-8)) {
    std::ostringstream os;
    os << "lambda = " << l << " is at a pole of g_lambda for class " << to_string(sym);
    throw PoleError(os.str());
  }
}

// Running sum over m = m0..M of sum_t c_t log|Gamma(m + x_t)| with sign tracking.
template <class T>
class LogGammaPrefix {
 public:
  struct Term {
    int coef;
    T shift;
  };

  LogGammaPrefix(std::vector<Term> terms, std::uint64_t m0) : terms_(std::move(terms)), next_(m0) {
    for (const auto& t : terms_) {
      auto [lg, s] = log_abs_gamma<T>(T(m0) + t.shift);
      current_.push_back(lg);
      signs_.push_back(s);
    }
    cache_[m0 - 1] = {T(0), 1};
  }

  /// Sum over m0..M (empty when M < m0). Queries must be nondecreasing apart
  /// from values already returned.
  std::pair<T, int> at(std::uint64_t m) {
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    if (m + 1 < next_) throw std::logic_error("LogGammaPrefix queried out of order");
    while (next_ <= m) {
      for (std::size_t i = 0; i < terms_.size(); ++i) {
        sum_ += terms_[i].coef * current_[i];
        if (signs_[i] < 0 && terms_[i].coef % 2 != 0) sign_ = -sign_;
        const T arg = T(next_) + terms_[i].shift;
        current_[i] += log(abs(arg));
        if (arg < 0) signs_[i] = -signs_[i];
      }
      ++next_;
    }
    cache_[m] = {sum_, sign_};
    return {sum_, sign_};
  }

 private:
  std::vector<Term> terms_;
  std::vector<T> current_;
  std::vector<int> signs_;
  std::uint64_t next_;
  T sum_ = 0;
  int sign_ = 1;
  std::map<std::uint64_t, std::pair<T, int>> cache_;
};

// log|g_lambda / Gamma(1 + B)| at finite N, from the Gamma-function form of the
// random-matrix product.
template <class T>
class FiniteNLimit {
 public:
  FiniteNLimit(Symmetry sym, const T& lambda, std::uint64_t n0)
      : sym_(sym),
        lambda_(lambda),
        b_(b_exponent(sym, lambda)),
        log2_(constants<T>().log_2.value),
        a_({{1, T(0)}, {-1, lambda}}, n0),
        c_(make_c(sym, lambda)) {}

  std::pair<T, int> operator()(std::uint64_t n) {
    const T tn(n);
    const T logn = log(tn);
    switch (sym_) {
      case Symmetry::U: {
        auto [s, sign] = c_.at(n);
        return {s - b_ * logn, sign};
      }
      case Symmetry::O: {
        const T a = a_.at(2 * n - 1).first - a_.at(n - 1).first;
        auto [s, sign] = c_.at(n);
        return {a + s + 2 * tn * lambda_ * log2_ - b_ * logn - log2_, sign};
      }
      case Symmetry::Sp: {
        const T a = a_.at(2 * n + 1).first - a_.at(n + 1).first;
        auto [s, sign] = c_.at(n);
        return {a + s + 2 * tn * lambda_ * log2_ - b_ * logn, sign};
      }
    }
    return {T(0), 1};
  }

 private:
  static LogGammaPrefix<T> make_c(Symmetry sym, const T& lambda) {
    using Term = typename LogGammaPrefix<T>::Term;
    const T half = T(1) / 2;
    switch (sym) {
      case Symmetry::U:
        return LogGammaPrefix<T>({Term{1, T(0)}, Term{1, T(2 * lambda)}, Term{-2, lambda}}, 1);
      case Symmetry::O:
        return LogGammaPrefix<T>({Term{1, T(lambda - half)}, Term{-1, T(-half)}}, 1);
      case Symmetry::Sp:
        return LogGammaPrefix<T>({Term{1, T(lambda + half)}, Term{-1, half}}, 1);
    }
    throw DomainError("unknown symmetry class");
  }

  Symmetry sym_;
  T lambda_;
  T b_;
  T log2_;
  LogGammaPrefix<T> a_;
  LogGammaPrefix<T> c_;
};

template <class T>
RealApprox<T> from_log(const T& log_abs, int sign, double rel_err) {
  T v = exp(log_abs);
  if (sign < 0) v = -v;
  return approx(v, rel_err);
}

template <class T>
RealApprox<T> times_gamma_one_plus_b(const RealApprox<T>& ratio, Symmetry sym, const T& lambda) {
  auto [lg, s] = log_abs_gamma<T>(T(1) + b_exponent(sym, lambda));
  T factor = exp(lg);
  if (s < 0) factor = -factor;
  RealApprox<T> r = ratio;
  r.value = ratio.value * factor;
  r.err_estimate = ratio.err_estimate * std::abs(to_double(factor));
  return r;
}

}  // namespace

template <class T>
const FundamentalConstants<T>& constants() {
  static const FundamentalConstants<T> c = build_constants<T>();
  return c;
}

template <class T>
std::pair<T, int> log_abs_gamma(const T& x) {
  T r;
  int sign = 1;
  mpfr_lgamma(r.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
  if (!isfinite(r)) {
    std::ostringstream os;
    os << "Gamma has a pole at " << to_double(x);
    throw PoleError(os.str());
  }
  return {r, sign};
}

// log G(1+y) = y^2/2 log y - 3y^2/4 + y/2 log 2 pi - log(y)/12 + zeta'(-1)
//              + sum_{n>=1} B_{2n+2} / (4 n (n+1) y^{2n}),
// applied after shifting the argument up far enough that the series is
// accurate to working precision.
template <class T>
std::pair<T, int> log_abs_barnes_g(const T& z) {
  const double zd = to_double(z);
  if (zd <= 0 && z == floor(z)) {
    std::ostringstream os;
    os << "Barnes G vanishes at the nonpositive integer " << zd;
    throw PoleError(os.str());
  }
  const auto& c = constants<T>();
  const double y_min = std::max(12.0, 0.75 * std::numeric_limits<T>::digits10 + 4.0);
  std::uint64_t shift = 0;
  if (zd - 1.0 < y_min) shift = static_cast<std::uint64_t>(std::ceil(y_min - (zd - 1.0)));
  const T y = z - 1 + T(shift);

  const auto& bern = bernoulli_numbers(240);
  const T logy = log(y);
  T s = y * y / 2 * logy - 3 * y * y / 4 + y / 2 * c.log_2pi.value - logy / 12 +
        c.zeta_prime_minus1.value;
  const T inv_y2 = 1 / (y * y);
  T ypow = 1;
  for (std::uint64_t n = 1; 2 * n + 2 < bern.size(); ++n) {
    ypow *= inv_y2;
    const T term = to_real<T>(bern[2 * n + 2]) / T(4 * n * (n + 1)) * ypow;
    s += term;
    if (abs(term) < eps_of<T>() * 1e-3) break;
  }

  // G(z) = G(z + shift) / prod_{i<shift} Gamma(z + i)
  int sign = 1;
  if (shift > 0) {
    auto [lg, gs] = log_abs_gamma<T>(z);
    for (std::uint64_t i = 0; i < shift; ++i) {
      s -= lg;
      if (gs < 0) sign = -sign;
      const T arg = z + T(i);
      lg += log(abs(arg));
      if (arg < 0) gs = -gs;
    }
  }
  return {s, sign};
}

template <class T>
RealApprox<T> barnes_g(const T& z) {
  auto [l, s] = log_abs_barnes_g(z);
  return from_log(l, s, working_rel_err<T>() * (1.0 + std::abs(to_double(l))));
}

template <class T>
RealApprox<T> gamma2(const T& z) {
  auto [l, s] = log_abs_barnes_g(z);
  return from_log(T(-l), s, working_rel_err<T>() * (1.0 + std::abs(to_double(l))));
}

template <class T>
RealApprox<T> g_ratio_closed(Symmetry sym, const T& lambda) {
  check_known_pole(sym, lambda);
  const auto& c = constants<T>();
  const T log2 = c.log_2.value;
  const T zp0 = c.zeta_prime_0.value;
  const T zpm1 = c.zeta_prime_minus1.value;
  const T z = lambda + T(1) / 2;
  const T l2 = lambda * lambda;
  T log_abs;
  int sign = 1;
  switch (sym) {
    case Symmetry::U: {
      auto [g0, s0] = log_abs_barnes_g(z);
      auto [g1, s1] = log_abs_barnes_g(T(z + 1));
      log_abs = log2 / 12 + 3 * zpm1 - 2 * lambda * zp0 - 2 * l2 * log2 - g0 - g1;
      sign = s0 * s1;
      break;
    }
    case Symmetry::O: {
      auto [g0, s0] = log_abs_barnes_g(z);
      log_abs = -T(17) / 24 * log2 + T(3) / 2 * zpm1 + zp0 / 2 - lambda * zp0 + lambda * log2 -
                l2 / 2 * log2 - g0;
      sign = s0;
      break;
    }
    case Symmetry::Sp: {
      auto [g1, s1] = log_abs_barnes_g(T(z + 1));
      log_abs = -T(5) / 24 * log2 + T(3) / 2 * zpm1 - zp0 / 2 - lambda * zp0 - lambda * log2 -
                l2 / 2 * log2 - g1;
      sign = s1;
      break;
    }
  }
  return from_log(log_abs, sign, working_rel_err<T>() * (1.0 + std::abs(to_double(log_abs))));
}

template <class T>
RealApprox<T> g_lambda_closed(Symmetry sym, const T& lambda) {
  return times_gamma_one_plus_b(g_ratio_closed(sym, lambda), sym, lambda);
}

template <class T>
RealApprox<T> g_ratio_limit(Symmetry sym, const T& lambda, int target_digits) {
  check_known_pole(sym, lambda);
  const double l = to_double(lambda);
  if (sym == Symmetry::U && near_nonpositive_integer(2 * l, 2e-8)) {
    std::ostringstream os;
    os << "the unitary limit product has a Gamma pole at lambda = " << l;
    throw PoleError(os.str());
  }
  if (target_digits < 1 || target_digits > std::numeric_limits<T>::digits10 - 10) {
    throw DomainError("target_digits out of range");
  }

  constexpr std::uint64_t kMaxN = std::uint64_t{1} << 20;
  constexpr std::size_t kMaxDepth = 12;
  const std::uint64_t n0 =
      std::max<std::uint64_t>(16, 2 * static_cast<std::uint64_t>(std::ceil(std::abs(l))) + 8);
  const T tol = pow(T(10), -target_digits);

  FiniteNLimit<T> finite(sym, lambda, n0);
  std::vector<std::vector<T>> table;
  T prev_diag = 0;
  int converged_levels = 0;
  int sign = 1;
  for (std::uint64_t n = n0; n <= kMaxN; n *= 2) {
    auto [y, s] = finite(n);
    sign = s;
    std::vector<T> row{y};
    const std::size_t i = table.size();
    for (std::size_t m = 1; m <= std::min(i, kMaxDepth); ++m) {
      const T p = pow(T(2), static_cast<int>(m));
      row.push_back((p * row[m - 1] - table[i - 1][m - 1]) / (p - 1));
    }
    table.push_back(std::move(row));
    const T diag = table.back().back();
    if (i >= 2) {
      const T diff = abs(diag - prev_diag);
      converged_levels = diff < tol ? converged_levels + 1 : 0;
      if (converged_levels >= 2) {
        RealApprox<T> r = from_log(diag, sign, 0.0);
        r.err_estimate = std::abs(to_double(r.value)) * std::max(to_double(diff), working_rel_err<T>());
        return r;
      }
    }
    prev_diag = diag;
  }
  throw NoConvergence("finite-N extrapolation did not stabilize by N = 2^20");
}

template <class T>
RealApprox<T> g_lambda_limit(Symmetry sym, const T& lambda, int target_digits) {
  return times_gamma_one_plus_b(g_ratio_limit(sym, lambda, target_digits), sym, lambda);
}

template <class T>
RealApprox<T> g_half_U() {
  const auto& c = constants<T>();
  const T pi = c.pi.value;
  const T zeta2 = pi * pi / 6;
  auto [lg, s] = log_abs_gamma<T>(T(5) / 4);
  (void)s;
  const T log_v = lg + log(pi) / 4 - c.log_2.value / 6 +
                  (c.zeta_prime_2.value / zeta2 - c.euler_gamma.value + 1) / 4;
  return from_log(log_v, 1, working_rel_err<T>());
}

int pole_order(Symmetry sym, std::uint64_t k, std::span<const double> probe_radii) {
  if (k < 1) throw DomainError("pole_order requires k >= 1");
  if (probe_radii.size() < 2) throw DomainError("pole_order needs at least two probe radii");
  const Real lambda0 = Real(0.5) - Real(k);
  std::vector<double> xs, ys;
  for (double eps : probe_radii) {
    if (!(eps > 0)) throw DomainError("probe radii must be positive");
    const Real f = g_ratio_closed<Real>(sym, Real(lambda0 + Real(eps))).value;
    xs.push_back(std::log(eps));
    ys.push_back(static_cast<double>(log(abs(f))));
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double residual = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    residual = std::max(residual, std::abs(ys[i] - (intercept + slope * xs[i])));
  }
  if (residual > 0.1) {
    std::ostringstream os;
    os << "pole-order fit residual " << residual << " exceeds 0.1";
    throw NoConvergence(os.str());
  }
  const long order = std::lround(-slope);
  return static_cast<int>(order);
}

template <class T>
T log_gk_asymptotic(Symmetry sym, std::uint64_t k) {
  if (k < 2) throw DomainError("log_gk_asymptotic requires k >= 2");
  const auto& c = constants<T>();
  const T log2 = c.log_2.value;
  const T zp0 = c.zeta_prime_0.value;
  const T zpm1 = c.zeta_prime_minus1.value;
  const T tk(k);
  const T lk = log(tk);
  const T k2 = tk * tk;
  switch (sym) {
    case Symmetry::U:
      return k2 * lk + (T(1) / 2 - 2 * log2) * k2 + T(11) / 12 * lk + log2 / 12 - zp0 + zpm1;
    case Symmetry::O:
      return k2 * lk / 2 + (T(1) / 4 - log2) * k2 - tk * lk / 2 + (T(3) / 2 * log2 - T(1) / 2) * tk +
             T(23) / 24 * lk - T(29) / 24 * log2 + T(1) / 4 - zp0 + zpm1 / 2;
    case Symmetry::Sp:
      return k2 * lk / 2 + (T(1) / 4 - log2) * k2 + tk * lk / 2 + (T(1) / 2 - T(3) / 2 * log2) * tk +
             T(23) / 24 * lk - T(17) / 24 * log2 + T(1) / 4 - zp0 + zpm1 / 2;
  }
  return T(0);
}

template <class T>
T log_g_exact(Symmetry sym, std::uint64_t k) {
  return log(T(g_exact(sym, k)));
}

template <class T>
std::pair<T, T> log_sum_expansion(LogSum which, std::uint64_t n) {
  if (n < 1) throw DomainError("log_sum_expansion requires n >= 1");
  const auto& c = constants<T>();
  const T log2 = c.log_2.value;
  const T zp0 = c.zeta_prime_0.value;
  const T zpm1 = c.zeta_prime_minus1.value;
  T exact = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    const T tj(j);
    switch (which) {
      case LogSum::LogJ: exact += log(tj); break;
      case LogSum::LogOdd: exact += log(2 * tj - 1); break;
      case LogSum::JLogJ: exact += tj * log(tj); break;
      case LogSum::JLogOdd: exact += tj * log(2 * tj - 1); break;
    }
  }
  const T tn(n);
  const T ln = log(tn);
  const T l2n = log(2 * tn);
  T asym = 0;
  switch (which) {
    case LogSum::LogJ:
      asym = tn * ln - tn + ln / 2 - zp0 + 1 / (12 * tn);
      break;
    case LogSum::LogOdd:
      asym = tn * l2n - tn + log2 / 2 - 1 / (24 * tn);
      break;
    case LogSum::JLogJ:
      asym = tn * tn * ln / 2 - tn * tn / 4 + tn * ln / 2 + ln / 12 + T(1) / 12 - zpm1;
      break;
    case LogSum::JLogOdd:
      asym = tn * tn * l2n / 2 - tn * tn / 4 + tn * l2n / 2 - tn / 2 - ln / 24 + T(7) / 24 * log2 -
             T(1) / 24 + zpm1 / 2;
      break;
  }
  return {exact, asym};
}

#define SYMM_INSTANTIATE(T)                                                          \
  template const FundamentalConstants<T>& constants<T>();                            \
  template std::pair<T, int> log_abs_gamma<T>(const T&);                             \
  template std::pair<T, int> log_abs_barnes_g<T>(const T&);                          \
  template RealApprox<T> barnes_g<T>(const T&);                                      \
  template RealApprox<T> gamma2<T>(const T&);                                        \
  template RealApprox<T> g_ratio_closed<T>(Symmetry, const T&);                      \
  template RealApprox<T> g_lambda_closed<T>(Symmetry, const T&);                     \
  template RealApprox<T> g_ratio_limit<T>(Symmetry, const T&, int);                  \
  template RealApprox<T> g_lambda_limit<T>(Symmetry, const T&, int);                 \
  template RealApprox<T> g_half_U<T>();                                              \
  template T log_gk_asymptotic<T>(Symmetry, std::uint64_t);                          \
  template T log_g_exact<T>(Symmetry, std::uint64_t);                                \
  template std::pair<T, T> log_sum_expansion<T>(LogSum, std::uint64_t);

SYMM_INSTANTIATE(Real)

#undef SYMM_INSTANTIATE

}  // namespace symm
