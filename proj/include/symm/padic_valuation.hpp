#pragma once

#include "symm/symmetry.hpp"

#include <cstdint>

namespace symm {

/// The ell-th summand v_{p,ell}(g_k) of the closed-form p-adic valuation, for
/// U and O and odd primes p. Each summand is a nonnegative integer; p^ell > k^2
/// gives zero.
///
/// U splits on [(2k-1)/q] (q = p^ell):
///   [(2k-1)/q] = 2m     ->  [k^2/q] - 2km + q m^2
///   [(2k-1)/q] = 2m + 1 ->  [k^2/q] + (2q-2k)m + q m^2 + q - 2k
/// with m = [(k-1)/q]. O uses
///   [k(k-1)/2/q] - (k - 1/2) [(2k-3)/q]_2 + (q/2) [(2k-3)/q]_2^2.
///
/// Throws UnsupportedClass for Sp or p = 2, DomainError if p is not prime or
/// ell, k are zero.
std::uint64_t vp_term(Symmetry sym, std::uint64_t p, unsigned ell, std::uint64_t k);

/// v_p(g_{k,sym}) for any prime p and k >= 1. Odd p sums vp_term up to the
/// last ell with p^ell <= k^2; Sp reduces to O through g_{k+1,O} = 2^k g_{k,Sp};
/// p = 2 is read off g_exact.
std::uint64_t vp_closed(Symmetry sym, std::uint64_t p, std::uint64_t k);

/// The zero-valuation window for B(k)^{1/2} < p < B(k):
///   U: k < p < k + sqrt(p)
///   O: k - sqrt(k+p) < p < k + sqrt(k+p)
/// True exactly when p does not divide g_k. Throws OutOfRegime outside
/// sqrt(B(k)) < p < B(k), UnsupportedClass for Sp.
bool zero_window(Symmetry sym, std::uint64_t p, std::uint64_t k);

/// v_p(prod_{j=1}^J j!) by the floor-sum formula.
std::uint64_t vp_superfactorial(std::uint64_t p, std::uint64_t J);

/// v_p(prod_{j=1}^J (2j-1)!!) for odd p by the [.]_2 floor-sum formula.
std::uint64_t vp_odd_superfactorial(std::uint64_t p, std::uint64_t J);

}  // namespace symm
