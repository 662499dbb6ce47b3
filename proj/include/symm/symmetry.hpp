#pragma once

#include <cstdint>
#include <string_view>

namespace symm {

/// Symmetry type of a family: unitary, orthogonal, or symplectic.
enum class Symmetry { U, O, Sp };

inline constexpr Symmetry kAllSymmetries[] = {Symmetry::U, Symmetry::O, Symmetry::Sp};

std::string_view to_string(Symmetry sym);

/// Accepts "U", "O", "Sp" (case-insensitive). Throws DomainError otherwise.
Symmetry parse_symmetry(std::string_view text);

/// Exponent of the logarithm in the mean value: k^2, k(k-1)/2 or k(k+1)/2.
constexpr std::int64_t b_exponent(Symmetry sym, std::int64_t k) {
  switch (sym) {
    case Symmetry::U: return k * k;
    case Symmetry::O: return k * (k - 1) / 2;
    case Symmetry::Sp: return k * (k + 1) / 2;
  }
  return 0;
}

/// Real (or complex) continuation of b_exponent.
template <class T>
T b_exponent(Symmetry sym, const T& lambda) {
  switch (sym) {
    case Symmetry::U: return lambda * lambda;
    case Symmetry::O: return lambda * (lambda - 1) / 2;
    case Symmetry::Sp: return lambda * (lambda + 1) / 2;
  }
  return T(0);
}

}  // namespace symm
