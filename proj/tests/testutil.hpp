#pragma once

#include "specdist/linalg.hpp"
#include "specdist/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace testutil {

using specdist::numtheory::BigInt;
using specdist::numtheory::IntPolynomial;

inline IntPolynomial poly(std::initializer_list<long long> coeffs) {
    std::vector<BigInt> c;
    for (long long v : coeffs) c.emplace_back(v);
    return IntPolynomial{std::move(c)};
}

// Exact Sylvester-matrix resultant via fraction-free Bareiss elimination.
// Test-only oracle; independent of the multiplicative discriminant formula.
inline BigInt sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g) {
    const std::size_t m = f.degree();
    const std::size_t n = g.degree();
    if (m == 0 || n == 0) {
        // Res(f, c) = c^deg(f), Res(c, g) = c^deg(g).
        using boost::multiprecision::pow;
        if (m == 0) return pow(f.coeffs[0], static_cast<unsigned>(n));
        return pow(g.coeffs[0], static_cast<unsigned>(m));
    }
    const std::size_t dim = m + n;
    std::vector<std::vector<BigInt>> a(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) a[r][r + k] = f.coeffs[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) a[n + r][r + k] = g.coeffs[n - k];

    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k;
            while (piv < dim && a[piv][k] == 0) ++piv;
            if (piv == dim) return BigInt(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i)
            for (std::size_t j = k + 1; j < dim; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[dim - 1][dim - 1];
}

// |Disc(f)| for monic f, straight from the definition via the resultant.
inline BigInt abs_disc_resultant(const IntPolynomial& f) {
    using specdist::numtheory::derivative;
    BigInt r = sylvester_resultant(f, derivative(f));
    return r < 0 ? BigInt(-r) : r;
}

// Independent construction of Phi_n: multiply the real quadratic factors
// x^2 - 2cos(2 pi c / n) x + 1 over the conjugate pairs of primitive roots,
// combined in a balanced product tree to keep intermediate coefficients tame,
// then round. Usable for n up to a few hundred.
inline std::vector<long long> cyclotomic_coeffs_numeric(std::uint64_t n) {
    using Poly = std::vector<long double>;
    const long double pi = 3.14159265358979323846264338327950288L;

    std::vector<Poly> factors;
    if (n == 1) {
        factors.push_back({-1.0L, 1.0L});
    } else if (n == 2) {
        factors.push_back({1.0L, 1.0L});
    } else {
        std::vector<std::uint64_t> reps;
        for (std::uint64_t c : specdist::numtheory::coprime_residues(n))
            if (2 * c < n) reps.push_back(c);  // one factor per conjugate pair
        // alternate ends so paired subproducts mix small and large angles,
        // keeping intermediate coefficients small
        std::vector<std::uint64_t> order;
        for (std::size_t l = 0, r = reps.size(); l < r;) {
            order.push_back(reps[l++]);
            if (l < r) order.push_back(reps[--r]);
        }
        for (std::uint64_t c : order) {
            const long double theta =
                2.0L * pi * static_cast<long double>(c) / static_cast<long double>(n);
            factors.push_back({1.0L, -2.0L * std::cos(theta), 1.0L});
        }
    }
    auto mul = [](const Poly& a, const Poly& b) {
        Poly out(a.size() + b.size() - 1, 0.0L);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    while (factors.size() > 1) {
        std::vector<Poly> next;
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2)
            next.push_back(mul(factors[i], factors[i + 1]));
        if (factors.size() % 2 == 1) next.push_back(factors.back());
        factors = std::move(next);
    }

    const Poly& coeffs = factors.front();
    std::vector<long long> out(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        out[j] = static_cast<long long>(std::llround(static_cast<double>(coeffs[j])));
        if (std::abs(static_cast<double>(coeffs[j]) - static_cast<double>(out[j])) > 1e-3)
            throw std::runtime_error("cyclotomic_coeffs_numeric: rounding residue too large");
    }
    return out;
}

inline double max_abs_diff(const specdist::linalg::SymMatrix& a,
                           const specdist::linalg::SymMatrix& b) {
    if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
    double err = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            err = std::max(err, std::abs(a(i, j) - b(i, j)));
    return err;
}

inline double max_abs_diff(const specdist::linalg::IntSymMatrix& a,
                           const specdist::linalg::SymMatrix& b) {
    return max_abs_diff(a.to_sym(), b);
}

inline double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline specdist::linalg::SymMatrix random_sym(std::mt19937& rng, std::size_t dim,
                                              double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    specdist::linalg::SymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) m.set(i, j, dist(rng));
    return m;
}

}  // namespace testutil
