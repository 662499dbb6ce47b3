#pragma once

#include "symm/numeric_core.hpp"
#include "symm/types.hpp"

#include <cstdint>
#include <vector>

namespace symm {

// c_p(x) = x^{-1} sum_{l in Z} p^{-l} ||p^l x||^2,  x > 0,
// where ||y|| is the distance from y to the nearest integer.

/// Exact value of c_p at a positive rational. The l < 0 tail and the
/// eventually periodic l >= 0 part are both summed as closed geometric series.
Rational cp_exact(std::uint64_t p, const Rational& x);

/// c_p(x) by truncating the l >= 0 sum once its tail is below eps. The l < 0
/// tail is summed exactly. Fractional parts are taken in exact arithmetic.
template <class T>
RealApprox<T> cp_numeric(std::uint64_t p, const Rational& x, double eps);

/// Floating-point argument, read as the exact binary rational it represents.
RealApprox<Real> cp_numeric(std::uint64_t p, double x, double eps);

/// Behaviour of c_p at a rational point a/b.
struct PointClass {
  enum class Kind { SelfSimilar, Cusp, VerticalTangent };
  Kind kind;
  /// Multiplicative order of p mod b.
  std::uint64_t period;
  /// Sum of absolute least residues of a p^j mod b over one period.
  std::int64_t residue_sum;
  /// Sign of the infinite slope for VerticalTangent, 0 otherwise.
  int slope_sign;
};

const char* to_string(PointClass::Kind kind);

/// Self-similar when the residue sum over one period vanishes; otherwise a
/// cusp for b = 2 and a vertical tangent for every other b. Requires p, a, b
/// pairwise coprime, a, b >= 1 (PreconditionError otherwise).
PointClass classify_point(std::uint64_t p, std::int64_t a, std::int64_t b);

struct DensityRatios {
  std::uint64_t k;
  double ratio_u;
  double ratio_o;
};

/// With k = [p^j x]: v_p(g_{k,U}) / (k c_p(x)) and v_p(g_{k,O}) / (k c_p(x) / 2).
/// Both tend to 1 as j grows.
DensityRatios vp_density_check(std::uint64_t p, const Rational& x, unsigned j);

struct CpSample {
  double x;
  double cp;
};

/// n equally spaced samples of c_p on [x_min, x_max], each within eps.
std::vector<CpSample> sample_cp(std::uint64_t p, double x_min, double x_max, std::size_t n,
                                double eps);

}  // namespace symm
