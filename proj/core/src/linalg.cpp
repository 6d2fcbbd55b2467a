#include "specdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace specdist::linalg {

namespace {
constexpr std::size_t kKronDimCap = std::size_t(1) << 20;
}

SymMatrix SymMatrix::identity(std::size_t dim) {
    SymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
    return m;
}

IntSymMatrix IntSymMatrix::identity(std::size_t dim) {
    IntSymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

SymMatrix IntSymMatrix::to_sym() const {
    SymMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            m.set(i, j, static_cast<double>((*this)(i, j)));
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

template <typename M>
static M kron_impl(const M& a, const M& b) {
    const std::size_t da = a.dim(), db = b.dim();
    if (da != 0 && db > kKronDimCap / da)
        throw std::invalid_argument("kron: dimension overflow");
    M out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const auto aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out.set(i * db + k, j * db + l, aij * b(k, l));
        }
    return out;
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) { return kron_impl(a, b); }
IntSymMatrix kron(const IntSymMatrix& a, const IntSymMatrix& b) { return kron_impl(a, b); }

template <typename M, typename T>
static M toeplitz_impl(const std::vector<T>& v) {
    if (v.empty()) throw std::invalid_argument("toeplitz_from_vector: empty generator");
    M out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j) out.set(i, j, v[j - i]);
    return out;
}

SymMatrix toeplitz_from_vector(const std::vector<double>& v) {
    return toeplitz_impl<SymMatrix>(v);
}
IntSymMatrix toeplitz_from_vector(const std::vector<std::int64_t>& v) {
    return toeplitz_impl<IntSymMatrix>(v);
}

double frobenius_norm(const SymMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

std::vector<double> row_norms(const ComplexMatrix& a) {
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
        out[i] = std::sqrt(s);
    }
    return out;
}

std::vector<double> col_norms(const ComplexMatrix& a) {
    std::vector<double> out(a.cols(), 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
        out[j] = std::sqrt(s);
    }
    return out;
}

namespace {

double offdiag_norm(const std::vector<double>& w, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * w[p * n + q] * w[p * n + q];
    return std::sqrt(s);
}

}  // namespace

EigenSystem jacobi_eigensystem(const SymMatrix& a) {
    const std::size_t n = a.dim();
    if (n == 0) throw std::invalid_argument("jacobi_eigensystem: empty matrix");

    std::vector<double> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = a(i, j);
    Matrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    const double fro = frobenius_norm(a);
    const double threshold = 1e-12 * fro;
    constexpr int kMaxSweeps = 100;

    bool converged = (n == 1) || offdiag_norm(w, n) <= threshold;
    int polish = 1;  // one extra sweep after crossing the threshold
    for (int sweep = 0; sweep < kMaxSweeps && (!converged || polish-- > 0); ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = w[p * n + q];
                if (apq == 0.0) continue;
                const double tau = (w[q * n + q] - w[p * n + p]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                w[p * n + p] -= t * apq;
                w[q * n + q] += t * apq;
                w[p * n + q] = w[q * n + p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = w[r * n + p];
                    const double arq = w[r * n + q];
                    w[r * n + p] = w[p * n + r] = c * arp - s * arq;
                    w[r * n + q] = w[q * n + r] = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
        if (!converged && offdiag_norm(w, n) <= threshold) converged = true;
    }
    if (!converged) throw std::runtime_error("jacobi_eigensystem: no convergence in sweep budget");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return w[i * n + i] < w[j * n + j]; });

    EigenSystem out;
    out.spectrum.eigenvalues.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.spectrum.eigenvalues[k] = w[order[k] * n + order[k]];
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

Spectrum jacobi_eigenvalues(const SymMatrix& a) { return jacobi_eigensystem(a).spectrum; }

std::vector<std::complex<double>> polynomial_roots(const numtheory::IntPolynomial& p) {
    using C = std::complex<double>;
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("polynomial_roots: need a monic polynomial of degree >= 1");

    const std::vector<double> coeffs = p.coeff_doubles();
    const std::size_t deg = coeffs.size() - 1;
    double max_abs_coeff = 0.0;
    for (double c : coeffs) max_abs_coeff = std::max(max_abs_coeff, std::abs(c));

    std::vector<C> z(deg);
    if (deg == 1) {
        z[0] = C(-coeffs[0], 0.0);
        return z;
    }

    auto eval = [&](C x) {
        C acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    };

    const double radius = 1.0 + max_abs_coeff;
    const double offset = std::numbers::sqrt2 - 1.0;  // breaks root-of-unity symmetry
    for (std::size_t k = 0; k < deg; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / deg + offset;
        z[k] = radius * C(std::cos(theta), std::sin(theta));
    }

    const double step_tol = 1e-12 * std::max(1.0, radius);
    constexpr int kMaxIter = 1000;
    bool converged = false;
    for (int iter = 0; iter < kMaxIter && !converged; ++iter) {
        double max_step = 0.0;
        for (std::size_t k = 0; k < deg; ++k) {
            C denom = 1.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == C(0.0, 0.0)) denom = C(1e-300, 0.0);
            const C step = eval(z[k]) / denom;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step <= step_tol;
    }
    if (!converged)
        throw std::runtime_error("polynomial_roots: Durand-Kerner did not converge");

    // Conjugate closure: snap near-real roots, then average conjugate pairs.
    const double pair_tol = 1e-9 * std::max(1.0, radius);
    std::vector<C> reals, uppers, lowers;
    for (const C& r : z) {
        if (std::abs(r.imag()) <= pair_tol)
            reals.emplace_back(r.real(), 0.0);
        else if (r.imag() > 0.0)
            uppers.push_back(r);
        else
            lowers.push_back(r);
    }
    if (uppers.size() != lowers.size())
        throw std::runtime_error("polynomial_roots: unpaired complex roots");
    std::vector<bool> used(lowers.size(), false);
    std::vector<C> out = reals;
    for (const C& u : uppers) {
        std::size_t best = lowers.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < lowers.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(u - std::conj(lowers[j]));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        const C w = 0.5 * (u + std::conj(lowers[best]));
        out.push_back(w);
        out.push_back(std::conj(w));
    }

    double max_residual = 0.0;
    for (const C& r : out) max_residual = std::max(max_residual, std::abs(eval(r)));
    if (max_residual > 1e-8 * (1.0 + max_abs_coeff))
        throw std::runtime_error("polynomial_roots: residual too large after convergence");
    return out;
}

namespace {

// Shared LU elimination; returns pivots and swap parity, or nullopt-equivalent
// via the zero-pivot flag.
struct LuResult {
    std::vector<std::complex<double>> pivots;
    int swaps = 0;
    bool singular = false;
};

LuResult lu_pivots(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("lu: matrix must be square");
    const std::size_t n = a.rows();
    std::vector<std::complex<double>> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = a(i, j);

    LuResult res;
    res.pivots.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(w[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = std::abs(w[i * n + k]);
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best == 0.0) {
            res.singular = true;
            return res;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w[k * n + j], w[piv * n + j]);
            ++res.swaps;
        }
        const std::complex<double> pivot = w[k * n + k];
        res.pivots.push_back(pivot);
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::complex<double> f = w[i * n + k] / pivot;
            if (f == std::complex<double>(0.0, 0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) w[i * n + j] -= f * w[k * n + j];
        }
    }
    return res;
}

}  // namespace

std::complex<double> complex_det(const ComplexMatrix& a) {
    const LuResult lu = lu_pivots(a);
    if (lu.singular) return {0.0, 0.0};
    std::complex<double> det = (lu.swaps % 2 == 0) ? 1.0 : -1.0;
    for (const auto& p : lu.pivots) det *= p;
    return det;
}

double lu_log_abs_det(const ComplexMatrix& a) {
    const LuResult lu = lu_pivots(a);
    if (lu.singular) return -std::numeric_limits<double>::infinity();
    double acc = 0.0;
    for (const auto& p : lu.pivots) acc += std::log(std::abs(p));
    return acc;
}

}  // namespace specdist::linalg
