#include "specdist/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace specdist::embedding {

using std::complex;
using C = complex<double>;

RootSet make_root_set(std::vector<C> roots) {
    if (roots.empty()) throw std::invalid_argument("make_root_set: no roots");

    double scale = 0.0;
    for (const C& r : roots) scale = std::max(scale, std::abs(r));
    const double tol = 1e-9 * std::max(1.0, scale);

    double min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            min_dist = std::min(min_dist, std::abs(roots[i] - roots[j]));
    if (roots.size() > 1 && min_dist <= 10.0 * tol)
        throw std::invalid_argument("make_root_set: repeated roots");

    std::vector<double> reals;
    std::vector<C> uppers, lowers;
    for (const C& r : roots) {
        if (std::abs(r.imag()) <= tol)
            reals.push_back(r.real());
        else if (r.imag() > 0.0)
            uppers.push_back(r);
        else
            lowers.push_back(r);
    }
    if (uppers.size() != lowers.size())
        throw std::invalid_argument("make_root_set: conjugate pairing failed");

    std::sort(reals.begin(), reals.end());
    std::sort(uppers.begin(), uppers.end(),
              [](const C& a, const C& b) { return std::arg(a) < std::arg(b); });

    std::vector<bool> used(lowers.size(), false);
    std::vector<C> conj_mirror(uppers.size());
    for (std::size_t t = 0; t < uppers.size(); ++t) {
        std::size_t best = lowers.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < lowers.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(std::conj(uppers[t]) - lowers[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best_d > 10.0 * tol)
            throw std::invalid_argument("make_root_set: conjugate pairing failed");
        used[best] = true;
        conj_mirror[uppers.size() - 1 - t] = lowers[best];
    }

    RootSet rs;
    rs.real_count = reals.size();
    rs.pair_count = uppers.size();
    for (double r : reals) rs.roots.emplace_back(r, 0.0);
    rs.roots.insert(rs.roots.end(), uppers.begin(), uppers.end());
    rs.roots.insert(rs.roots.end(), conj_mirror.begin(), conj_mirror.end());
    return rs;
}

RootSet cyclotomic_roots(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_roots: n must be positive");
    RootSet rs;
    if (n == 1) {
        rs.roots = {C(1.0, 0.0)};
        rs.real_count = 1;
        return rs;
    }
    if (n == 2) {
        rs.roots = {C(-1.0, 0.0)};
        rs.real_count = 1;
        return rs;
    }
    const auto residues = numtheory::coprime_residues(n);
    rs.pair_count = residues.size() / 2;
    rs.roots.reserve(residues.size());
    for (std::uint64_t c : residues) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(c) / n;
        rs.roots.emplace_back(std::cos(theta), std::sin(theta));
    }
    return rs;
}

linalg::ComplexMatrix vandermonde(const RootSet& rs) {
    const std::size_t deg = rs.size();
    if (deg == 0) throw std::invalid_argument("vandermonde: empty root set");
    linalg::ComplexMatrix m(deg, deg);
    for (std::size_t i = 0; i < deg; ++i) {
        C pw = 1.0;
        for (std::size_t j = 0; j < deg; ++j) {
            m(i, j) = pw;
            pw *= rs.roots[i];
        }
    }
    return m;
}

linalg::ComplexMatrix b_matrix(const RootSet& rs) {
    const std::size_t n = rs.size();
    const std::size_t r1 = rs.real_count, r2 = rs.pair_count;
    const double h = std::numbers::sqrt2 / 2.0;
    linalg::ComplexMatrix b(n, n);
    for (std::size_t i = 0; i < r1; ++i) b(i, i) = 1.0;
    for (std::size_t t = 0; t < r2; ++t) {
        const std::size_t rep = r1 + t;
        const std::size_t cnj = n - 1 - t;  // mirrored conjugate position
        b(rep, r1 + t) = C(h, 0.0);
        b(cnj, r1 + t) = C(h, 0.0);
        b(rep, r1 + r2 + t) = C(0.0, h);
        b(cnj, r1 + r2 + t) = C(0.0, -h);
    }
    return b;
}

linalg::Matrix realify(const linalg::ComplexMatrix& m, const RootSet& rs) {
    const std::size_t n = rs.size();
    const std::size_t r1 = rs.real_count, r2 = rs.pair_count;
    if (m.rows() != n) throw std::invalid_argument("realify: row count does not match root set");
    const double h = std::numbers::sqrt2 / 2.0;

    linalg::Matrix out(n, m.cols());
    double residue = 0.0;
    auto assign = [&](std::size_t row, std::size_t col, C v) {
        residue = std::max(residue, std::abs(v.imag()));
        out(row, col) = v.real();
    };
    for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) assign(i, j, m(i, j));
    for (std::size_t t = 0; t < r2; ++t) {
        const std::size_t rep = r1 + t;
        const std::size_t cnj = n - 1 - t;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            assign(r1 + t, j, h * (m(rep, j) + m(cnj, j)));
            assign(r1 + r2 + t, j, C(0.0, -h) * (m(rep, j) - m(cnj, j)));
        }
    }
    if (residue > 1e-8)
        throw std::invalid_argument("realify: imaginary residue signals row-ordering violation");
    return out;
}

EmbeddingMatrix embedding_matrix(const RootSet& rs) {
    EmbeddingMatrix em;
    em.complex_form = vandermonde(rs);
    em.real_form = realify(em.complex_form, rs);
    return em;
}

namespace {

linalg::SymMatrix gram_from_complex(const linalg::ComplexMatrix& m) {
    const std::size_t n = m.cols();
    linalg::SymMatrix g(n);
    double max_imag = 0.0;
    std::vector<std::vector<C>> raw(n, std::vector<C>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            C acc = 0.0;
            for (std::size_t l = 0; l < m.rows(); ++l) acc += std::conj(m(l, i)) * m(l, j);
            raw[i][j] = acc;
            raw[j][i] = std::conj(acc);
            max_imag = std::max(max_imag, std::abs(acc.imag()));
        }
    if (max_imag > 1e-9)
        throw std::runtime_error("gram: imaginary part of M^dagger M above 1e-9");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            g.set(i, j, 0.5 * (raw[i][j].real() + raw[j][i].real()));
    return g;
}

}  // namespace

linalg::SymMatrix gram_from_roots(const RootSet& rs) {
    return gram_from_complex(vandermonde(rs));
}

linalg::SymMatrix gram_oracle(const numtheory::IntPolynomial& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("gram_oracle: need a monic polynomial of degree >= 1");
    if (!numtheory::is_squarefree(f))
        throw std::invalid_argument("gram_oracle: polynomial has repeated roots");
    return gram_from_roots(make_root_set(linalg::polynomial_roots(f)));
}

linalg::SymMatrix gram_oracle_cyclotomic(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("gram_oracle_cyclotomic: n must be positive");
    if (n <= 2) {
        linalg::SymMatrix g(1);
        g.set(0, 0, 1.0);
        return g;
    }
    const auto residues = numtheory::coprime_residues(n);
    const std::size_t phi = residues.size();

    // Vandermonde with power entries zeta_n^(c*j) evaluated at reduced angles.
    linalg::ComplexMatrix m(phi, phi);
    for (std::size_t i = 0; i < phi; ++i)
        for (std::size_t j = 0; j < phi; ++j) {
            const std::uint64_t e = (residues[i] * static_cast<std::uint64_t>(j)) % n;
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(e) / n;
            m(i, j) = C(std::cos(theta), std::sin(theta));
        }
    return gram_from_complex(m);
}

}  // namespace specdist::embedding
