#include "specdist/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace specdist::numtheory {

std::vector<double> IntPolynomial::coeff_doubles() const {
    std::vector<double> out;
    out.reserve(coeffs.size());
    for (const BigInt& c : coeffs) out.push_back(c.convert_to<double>());
    return out;
}

std::complex<double> IntPolynomial::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * x + coeffs[i].convert_to<double>();
    return acc;
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return IntPolynomial{};
    std::vector<BigInt> out(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPolynomial{std::move(out)};
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (!den.is_monic()) throw std::invalid_argument("divide_exact: divisor must be monic");
    if (num.coeffs.size() < den.coeffs.size())
        throw std::invalid_argument("divide_exact: degree(num) < degree(den)");
    std::vector<BigInt> rem = num.coeffs;
    const std::size_t dd = den.degree();
    std::vector<BigInt> quot(num.degree() - dd + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt q = rem[k + dd];
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * den.coeffs[j];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw std::invalid_argument("divide_exact: nonzero remainder");
    return IntPolynomial{std::move(quot)};
}

IntPolynomial derivative(const IntPolynomial& p) {
    if (p.coeffs.size() <= 1) return IntPolynomial{{BigInt(0)}};
    std::vector<BigInt> out(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) out[i - 1] = p.coeffs[i] * i;
    return IntPolynomial{std::move(out)};
}

namespace {

void trim(std::vector<BigInt>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

bool is_zero_poly(const std::vector<BigInt>& c) { return c.size() == 1 && c[0] == 0; }

std::vector<BigInt> primitive_part(std::vector<BigInt> c) {
    trim(c);
    if (is_zero_poly(c)) return c;
    BigInt g = 0;
    for (const BigInt& x : c) g = boost::multiprecision::gcd(g, x);
    if (c.back() < 0) g = -g;
    for (BigInt& x : c) x /= g;
    return c;
}

// lc(b)^k * a mod b over the integers.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const BigInt lcb = b.back();
    while (a.size() >= b.size() && !is_zero_poly(a)) {
        const BigInt lca = a.back();
        const std::size_t shift = a.size() - b.size();
        for (BigInt& x : a) x *= lcb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lca * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

bool is_squarefree(const IntPolynomial& p) {
    if (p.coeffs.empty()) throw std::invalid_argument("is_squarefree: empty polynomial");
    if (p.degree() <= 1) return true;
    std::vector<BigInt> a = primitive_part(p.coeffs);
    std::vector<BigInt> b = primitive_part(derivative(p).coeffs);
    while (!is_zero_poly(b)) {
        if (b.size() == 1) return true;  // gcd divides a nonzero constant
        a = std::exchange(b, primitive_part(pseudo_rem(a, b)));
    }
    return a.size() == 1;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::uint64_t m = n;
    auto push = [&](std::uint64_t p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) f.factors.emplace_back(p, e);
    };
    push(2);
    for (std::uint64_t p = 3; p * p <= m; p += 2) push(p);
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::uint64_t radical(std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : factorize(n).factors) r *= p;
    return r;
}

int omega(std::uint64_t n) { return static_cast<int>(factorize(n).factors.size()); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    const auto f = factorize(n).factors;
    return f.size() == 1 && f[0].second == 1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> coprime_residues(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("coprime_residues: n must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 1; c <= n; ++c)
        if (std::gcd(c, n) == 1) out.push_back(c);
    return out;
}

namespace {

// Memo table for cyclotomic polynomials. A single lock serializes fills; the
// recursion below runs entirely under it.
std::map<std::uint64_t, IntPolynomial> g_cyclo;
std::mutex g_cyclo_mutex;

const IntPolynomial& cyclotomic_locked(std::uint64_t n) {
    auto it = g_cyclo.find(n);
    if (it != g_cyclo.end()) return it->second;
    IntPolynomial phi;
    if (n == 1) {
        phi.coeffs = {BigInt(-1), BigInt(1)};
    } else {
        std::vector<BigInt> c(n + 1);
        c[0] = -1;
        c[n] = 1;
        phi = IntPolynomial{std::move(c)};
        for (std::uint64_t d : divisors(n))
            if (d < n) phi = divide_exact(phi, cyclotomic_locked(d));
    }
    return g_cyclo.emplace(n, std::move(phi)).first->second;
}

}  // namespace

IntPolynomial cyclotomic_coeffs(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_coeffs: n must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_locked(n);
}

BigInt abs_disc_cyclotomic(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("abs_disc_cyclotomic: n must be positive");
    const std::uint64_t phi = euler_phi(n);
    BigInt num = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(phi));
    for (const auto& [p, e] : factorize(n).factors) {
        const std::uint64_t exp = phi / (p - 1);  // (p-1) | phi(n) for p | n
        const BigInt den = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(exp));
        BigInt q, r;
        boost::multiprecision::divide_qr(num, den, q, r);
        if (r != 0) throw std::logic_error("abs_disc_cyclotomic: non-exact division");
        num = q;
    }
    return num;
}

double log_abs_disc_cyclotomic(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("log_abs_disc_cyclotomic: n must be positive");
    const double phi = static_cast<double>(euler_phi(n));
    double acc = phi * std::log(static_cast<double>(n));
    for (const auto& [p, e] : factorize(n).factors)
        acc -= phi / static_cast<double>(p - 1) * std::log(static_cast<double>(p));
    return acc;
}

}  // namespace specdist::numtheory
