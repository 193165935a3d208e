#pragma once

#include "preschwarz/kernel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace preschwarz::series {

/// Value and first two derivatives of a power series at one point.
struct Jet {
    Complex value;
    Complex first;
    Complex second;
};

/// Horner evaluation of sum_{n>=0} c[n] z^n and its first two derivatives.
[[nodiscard]] Jet evaluate(std::span<const Complex> c, Complex z) noexcept;

/// Coefficients of 1/g given g's coefficients g[0] != 0, truncated to n terms.
/// Throws DomainError if g[0] == 0.
[[nodiscard]] std::vector<Complex> reciprocal(std::span<const Complex> g, std::size_t n);

/// Coefficients a_1..a_N of the normalized f with z f'/f = 1 + sum_k driver[k-1] z^k,
/// from (n-1) a_n = sum_{k=1}^{n-1} p_k a_{n-k}, a_1 = 1.
[[nodiscard]] std::vector<Complex> starlike_from_driver(std::span<const Complex> driver,
                                                        std::size_t n_terms);

/// Relative tolerance for the empirical truncation budget of f, f', f''.
inline constexpr double kTruncationTolerance = 1e-10;

/// Empirical radius inside which the truncated series (c[0..N]) and its first
/// two derivatives are trusted to kTruncationTolerance.
///
/// The tail is modelled as A (N+1)^2 r^{N-1} / (1-r)^3 with A the largest
/// coefficient modulus in the upper half of the index range; this covers
/// polynomially growing coefficients. It is a heuristic, not a proof.
[[nodiscard]] double certified_radius(std::span<const Complex> c,
                                      double tolerance = kTruncationTolerance);

} // namespace preschwarz::series
