#include "specdist/gramform.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace specdist::gramform {

std::int64_t gram_entry(std::uint64_t n, std::size_t i, std::size_t j) {
    if (n == 0) throw std::invalid_argument("gram_entry: n must be positive");
    const std::uint64_t phi = numtheory::euler_phi(n);
    if (i >= phi || j >= phi) throw std::out_of_range("gram_entry: index out of range");
    if (i == j) return static_cast<std::int64_t>(phi);

    const std::uint64_t m = n / numtheory::radical(n);
    const std::uint64_t diff = i > j ? i - j : j - i;
    if (diff % m != 0) return 0;

    const std::uint64_t d = std::gcd(diff / m, n);
    const int sign = (numtheory::omega(n) + numtheory::omega(d)) % 2 == 0 ? 1 : -1;
    const std::int64_t mag =
        static_cast<std::int64_t>(m) *
        static_cast<std::int64_t>(numtheory::euler_phi(numtheory::radical(d)));
    return sign * mag;
}

std::vector<std::int64_t> toeplitz_generator(std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("toeplitz_generator: t must be positive");
    const auto factors = numtheory::factorize(t).factors;
    for (const auto& [p, e] : factors)
        if (e > 1) throw std::invalid_argument("toeplitz_generator: t must be squarefree");

    const std::uint64_t phi = numtheory::euler_phi(t);
    const std::int64_t start = factors.size() % 2 == 0 ? 1 : -1;
    std::vector<std::int64_t> v(phi, start);
    for (const auto& [p, e] : factors)
        for (std::size_t i = 0; i < v.size(); i += p)
            v[i] *= -static_cast<std::int64_t>(p - 1);
    v[0] = static_cast<std::int64_t>(phi);  // diagonal; the loop already lands here
    return v;
}

CyclotomicGram gram_cyclotomic(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("gram_cyclotomic: n must be positive");
    CyclotomicGram out;
    out.n = n;

    const std::uint64_t rad = numtheory::radical(n);
    const std::uint64_t m = n / rad;
    const auto gen = toeplitz_generator(rad);
    const linalg::IntSymMatrix base = linalg::toeplitz_from_vector(gen);
    if (m == 1) {
        out.matrix = base;
        out.generator = gen;
        return out;
    }
    linalg::IntSymMatrix scaled(base.dim());
    for (std::size_t i = 0; i < base.dim(); ++i)
        for (std::size_t j = i; j < base.dim(); ++j)
            scaled.set(i, j, static_cast<std::int64_t>(m) * base(i, j));
    out.matrix = linalg::kron(scaled, linalg::IntSymMatrix::identity(m));
    return out;
}

linalg::IntSymMatrix sign_flip(const linalg::IntSymMatrix& a) {
    linalg::IntSymMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            out.set(i, j, (i + j) % 2 == 0 ? a(i, j) : -a(i, j));
    return out;
}

linalg::SymMatrix sign_flip(const linalg::SymMatrix& a) {
    linalg::SymMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            out.set(i, j, (i + j) % 2 == 0 ? a(i, j) : -a(i, j));
    return out;
}

numtheory::IntPolynomial substitute_power(const numtheory::IntPolynomial& h,
                                          std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
    std::vector<numtheory::BigInt> out(h.degree() * k + 1);
    for (std::size_t i = 0; i < h.coeffs.size(); ++i) out[i * k] = h.coeffs[i];
    return numtheory::IntPolynomial{std::move(out)};
}

PowerSubstitutionGram gram_power_substitution(const numtheory::IntPolynomial& h,
                                              std::uint64_t k) {
    using C = std::complex<double>;
    if (!h.is_monic() || h.degree() < 1)
        throw std::invalid_argument("gram_power_substitution: need monic h of degree >= 1");
    if (k == 0) throw std::invalid_argument("gram_power_substitution: k must be positive");
    if (k > 1 && h.coeffs[0] == 0)
        throw std::invalid_argument(
            "gram_power_substitution: h(0) = 0 makes h(x^k) have a repeated root at 0");
    if (!numtheory::is_squarefree(h))
        throw std::invalid_argument("gram_power_substitution: h has repeated roots");

    const std::vector<C> alphas = linalg::polynomial_roots(h);

    // Principal k-th roots; conjugate pairs of h stay conjugate under pow()
    // off the negative real axis, and real roots contribute real terms once
    // k | i-j, so the accumulated entries are real.
    const std::size_t dim = alphas.size() * k;
    std::vector<std::vector<C>> pow_table(alphas.size(), std::vector<C>(dim));
    for (std::size_t t = 0; t < alphas.size(); ++t) {
        const C gamma = std::pow(alphas[t], 1.0 / static_cast<double>(k));
        C pw = 1.0;
        for (std::size_t e = 0; e < dim; ++e) {
            pow_table[t][e] = pw;
            pw *= gamma;
        }
    }

    linalg::SymMatrix g(dim);
    double max_imag = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            if ((j - i) % k != 0) continue;  // exact structural zero
            C acc = 0.0;
            for (std::size_t t = 0; t < alphas.size(); ++t)
                acc += pow_table[t][i] * std::conj(pow_table[t][j]);
            acc *= static_cast<double>(k);
            max_imag = std::max(max_imag, std::abs(acc.imag()));
            g.set(i, j, acc.real());
        }
    if (max_imag > 1e-8)
        throw std::runtime_error("gram_power_substitution: imaginary residue above 1e-8");

    return PowerSubstitutionGram{h, k, std::move(g)};
}

linalg::SymMatrix quadratic_gram(double b, double c) {
    if (!(b * b - 4.0 * c < 0.0))
        throw std::invalid_argument("quadratic_gram: discriminant must be negative");
    linalg::SymMatrix g(2);
    g.set(0, 0, 2.0);
    g.set(0, 1, -b);
    g.set(1, 1, 2.0 * c);
    return g;
}

std::pair<double, double> quadratic_eigenvalues(double b, double c) {
    if (!(b * b - 4.0 * c < 0.0))
        throw std::invalid_argument("quadratic_eigenvalues: discriminant must be negative");
    const double root = std::sqrt(b * b + (c - 1.0) * (c - 1.0));
    return {1.0 + c - root, 1.0 + c + root};
}

linalg::SymMatrix gram_quadratic_power(double b, double c, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("gram_quadratic_power: k must be positive");
    const linalg::SymMatrix quad = quadratic_gram(b, c);
    const std::size_t dim = 2 * k;
    linalg::SymMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            const std::size_t s = i % k;
            if (j % k != s) continue;
            const double diag = std::pow(c, static_cast<double>(s) / static_cast<double>(k));
            g.set(i, j, static_cast<double>(k) * quad(i / k, j / k) * diag);
        }
    return g;
}

}  // namespace specdist::gramform
