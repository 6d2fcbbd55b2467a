#pragma once

#include "specdist/linalg.hpp"
#include "specdist/numtheory.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace specdist::gramform {

// Closed-form Gram matrix of the n-th cyclotomic polynomial. The generator is
// populated exactly when n is squarefree, in which case the matrix is the
// symmetric Toeplitz matrix it generates.
struct CyclotomicGram {
    std::uint64_t n = 1;
    linalg::IntSymMatrix matrix;
    std::vector<std::int64_t> generator;
};

// Single Gram entry: phi(n) on the diagonal, 0 when (n/rad n) does not divide
// i-j, otherwise (-1)^(omega(n)+omega(d)) * (n/rad n) * phi(rad d) with
// d = gcd((i-j)/(n/rad n), n). Zero-based indices in [0, phi(n)).
std::int64_t gram_entry(std::uint64_t n, std::size_t i, std::size_t j);

// Toeplitz generator for squarefree t: a constant vector of (-1)^omega(t)
// scaled by -phi(p) at every index each prime p of t divides. Index 0 comes
// out as phi(t), the diagonal.
std::vector<std::int64_t> toeplitz_generator(std::uint64_t t);

// (n/rad n) * Gram(rad n) kron I_(n/rad n), built from the Toeplitz generator
// of the radical.
CyclotomicGram gram_cyclotomic(std::uint64_t n);

// out[i][j] = (-1)^(i+j) * a[i][j]; an involution that preserves eigenvalues.
linalg::IntSymMatrix sign_flip(const linalg::IntSymMatrix& a);
linalg::SymMatrix sign_flip(const linalg::SymMatrix& a);

// Gram matrix of f(x) = h(x^k) summed over the roots of h only: zero whenever
// k does not divide i-j, else k * sum_t gamma_t^i * conj(gamma_t)^j with
// gamma_t a fixed k-th root of the root alpha_t. The branch choice cancels on
// the nonzero pattern.
struct PowerSubstitutionGram {
    numtheory::IntPolynomial h;
    std::uint64_t k = 1;
    linalg::SymMatrix matrix;
};

PowerSubstitutionGram gram_power_substitution(const numtheory::IntPolynomial& h,
                                              std::uint64_t k);

// Coefficients of h(x^k).
numtheory::IntPolynomial substitute_power(const numtheory::IntPolynomial& h,
                                          std::uint64_t k);

// Quadratic h = x^2 + b x + c with negative discriminant.
linalg::SymMatrix quadratic_gram(double b, double c);
// Eigenvalues 1 + c -/+ sqrt(b^2 + (c-1)^2) of the quadratic Gram, returned
// ascending. The radicand is the matrix-consistent one.
std::pair<double, double> quadratic_eigenvalues(double b, double c);
// Diagonal-Kronecker form for f = h(x^k) with quadratic h:
// k * (quadratic_gram kron diag(c^(s/k), s = 0..k-1)).
linalg::SymMatrix gram_quadratic_power(double b, double c, std::uint64_t k);

}  // namespace specdist::gramform
