#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace specdist::numtheory {

using BigInt = boost::multiprecision::cpp_int;

// Prime-power decomposition of a positive integer. Primes are strictly
// increasing, exponents >= 1, and the factor list is empty exactly for n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;
};

// Monic integer polynomial, coefficients in ascending degree order.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {}

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    std::vector<double> coeff_doubles() const;
    std::complex<double> eval(std::complex<double> x) const;

    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);
// Exact polynomial division by a monic divisor; throws if the remainder is
// nonzero.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);
IntPolynomial derivative(const IntPolynomial& p);
// gcd(p, p') is constant, decided exactly via a primitive pseudo-remainder
// sequence.
bool is_squarefree(const IntPolynomial& p);

// Trial division; rejects n = 0.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
int omega(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Ascending residues c in [1, n] with gcd(c, n) = 1. For n > 2 the list is
// closed under c -> n - c. coprime_residues(1) = {1}.
std::vector<std::uint64_t> coprime_residues(std::uint64_t n);

// Coefficients of the n-th cyclotomic polynomial, computed by exact division
// of x^n - 1 by the proper-divisor cyclotomics. Memoized; safe to call
// concurrently.
IntPolynomial cyclotomic_coeffs(std::uint64_t n);

// |Disc(Phi_n)| = n^phi(n) / prod_{p | n} p^(phi(n)/(p-1)), exact.
BigInt abs_disc_cyclotomic(std::uint64_t n);
// Natural log of the same value, computed directly from the factorization so
// it stays finite where the integer no longer fits in a double.
double log_abs_disc_cyclotomic(std::uint64_t n);

}  // namespace specdist::numtheory
