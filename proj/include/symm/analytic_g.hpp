#pragma once

#include "symm/symmetry.hpp"
#include "symm/types.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <utility>

// Analytic continuation of the moment constants g_lambda.
//
// Every routine is templated on the scalar; the working precision is the
// precision of that type (std::numeric_limits<T>::digits). The library ships
// instantiations for symm::Real.

namespace symm {

template <class T>
struct FundamentalConstants {
  RealApprox<T> pi;
  RealApprox<T> euler_gamma;
  RealApprox<T> log_2;
  RealApprox<T> log_2pi;
  RealApprox<T> zeta_prime_0;        // -log(2 pi) / 2
  RealApprox<T> zeta_prime_minus1;   // 1/12 - log A
  RealApprox<T> zeta_prime_2;
  RealApprox<T> log_glaisher;        // log A
};

/// Built once per scalar type; immutable afterwards.
template <class T>
const FundamentalConstants<T>& constants();

/// log|Gamma(x)| and the sign of Gamma(x), x not a nonpositive integer.
template <class T>
std::pair<T, int> log_abs_gamma(const T& x);

/// log|G(z)| and sign of the Barnes G-function, G(1) = 1, G(z+1) = Gamma(z) G(z).
/// PoleError at nonpositive integers (zeros of G).
template <class T>
std::pair<T, int> log_abs_barnes_g(const T& z);

template <class T>
RealApprox<T> barnes_g(const T& z);

/// Double Gamma function normalized as 1/G: Gamma_2(1) = 1,
/// Gamma_2(z+1) = Gamma_2(z) / Gamma(z).
template <class T>
RealApprox<T> gamma2(const T& z);

/// g_lambda / Gamma(1 + B(lambda)) from the double-Gamma representation.
template <class T>
RealApprox<T> g_ratio_closed(Symmetry sym, const T& lambda);

/// g_lambda (Gamma(1 + B(lambda)) included) from the double-Gamma representation.
template <class T>
RealApprox<T> g_lambda_closed(Symmetry sym, const T& lambda);

/// g_lambda / Gamma(1 + B(lambda)) from the random-matrix limit in N, evaluated
/// at N0, 2 N0, 4 N0, ... and Richardson-extrapolated in 1/N until two
/// consecutive extrapolants agree to `target_digits`.
/// PoleError near a pole, NoConvergence if N would exceed 2^20.
template <class T>
RealApprox<T> g_ratio_limit(Symmetry sym, const T& lambda, int target_digits = 14);

template <class T>
RealApprox<T> g_lambda_limit(Symmetry sym, const T& lambda, int target_digits = 14);

/// Gamma(5/4) pi^{1/4} 2^{-1/6} exp((zeta'(2)/zeta(2) - gamma + 1) / 4).
template <class T>
RealApprox<T> g_half_U();

inline constexpr std::array<double, 3> kDefaultProbeRadii{1e-2, 1e-3, 1e-4};

/// Order of the pole of g_lambda / Gamma(1 + B(lambda)) at lambda = 1/2 - k,
/// estimated from the slope of log|f| against log(eps) on one side of the
/// point. Zero means a regular point. NoConvergence if the fit residual
/// exceeds 0.1.
int pole_order(Symmetry sym, std::uint64_t k,
               std::span<const double> probe_radii = kDefaultProbeRadii);

/// Large-k expansion of log g_k with the O(1/k) remainder dropped.
template <class T>
T log_gk_asymptotic(Symmetry sym, std::uint64_t k);

/// log of the exact integer g_k.
template <class T>
T log_g_exact(Symmetry sym, std::uint64_t k);

enum class LogSum {
  LogJ,      // sum log j
  LogOdd,    // sum log(2j - 1)
  JLogJ,     // sum j log j
  JLogOdd,   // sum j log(2j - 1)
};

/// (direct sum over j = 1..n, asymptotic expansion at n).
template <class T>
std::pair<T, T> log_sum_expansion(LogSum which, std::uint64_t n);

}  // namespace symm
