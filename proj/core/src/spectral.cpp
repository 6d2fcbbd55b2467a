#include "specdist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace specdist::spectral {

double sd_from_gram(const linalg::SymMatrix& gram, double abs_det_m) {
    if (!(abs_det_m > 0.0)) throw std::invalid_argument("sd_from_gram: |det M| must be positive");
    const linalg::Spectrum spec = linalg::jacobi_eigenvalues(gram);
    if (!(spec.min() > 0.0))
        throw std::domain_error("sd_from_gram: Gram matrix not positive definite");
    return std::pow(abs_det_m, 1.0 / static_cast<double>(gram.dim())) / std::sqrt(spec.min());
}

double sd_prime_closed(std::uint64_t p) {
    if (!numtheory::is_prime(p)) throw std::invalid_argument("sd_prime_closed: p must be prime");
    const double pd = static_cast<double>(p);
    return std::pow(pd, (pd - 2.0) / (2.0 * (pd - 1.0)));
}

namespace {

SDReport finish_report(std::string label, std::size_t degree, double log_abs_det,
                       linalg::Spectrum spectrum, const linalg::ComplexMatrix& m) {
    if (!(spectrum.min() > 0.0))
        throw std::domain_error("sd report: Gram matrix not positive definite");
    SDReport r;
    r.label = std::move(label);
    r.degree = degree;
    r.log_abs_det_m = log_abs_det;
    r.abs_det_m = std::exp(log_abs_det);
    r.sigma_min = std::sqrt(spectrum.min());
    r.sd = std::exp(log_abs_det / static_cast<double>(degree) - 0.5 * std::log(spectrum.min()));
    r.hong_pan_bound = hong_pan_sd_bound(m, log_abs_det);
    r.yu_gu_bound = yu_gu_sd_bound(m, log_abs_det);
    r.eigenvalues = std::move(spectrum);
    return r;
}

}  // namespace

SDReport sd_cyclotomic(std::uint64_t n) {
    const gramform::CyclotomicGram gram = gramform::gram_cyclotomic(n);
    linalg::Spectrum spec = linalg::jacobi_eigenvalues(gram.matrix.to_sym());
    const double log_det = 0.5 * numtheory::log_abs_disc_cyclotomic(n);
    const linalg::ComplexMatrix m = embedding::vandermonde(embedding::cyclotomic_roots(n));
    return finish_report("Phi_" + std::to_string(n), gram.matrix.dim(), log_det,
                         std::move(spec), m);
}

SDReport sd_cyclotomic_reduced(std::uint64_t n) {
    const std::uint64_t rad = numtheory::radical(n);
    const std::uint64_t mult = n / rad;
    const gramform::CyclotomicGram gram_rad = gramform::gram_cyclotomic(rad);
    const linalg::Spectrum spec_rad = linalg::jacobi_eigenvalues(gram_rad.matrix.to_sym());

    // Kronecker structure: each radical eigenvalue scales by n/rad(n) and
    // appears with that multiplicity; scaling preserves the ascending order.
    linalg::Spectrum spec;
    spec.eigenvalues.reserve(spec_rad.dim() * mult);
    for (double lam : spec_rad.eigenvalues)
        for (std::uint64_t i = 0; i < mult; ++i)
            spec.eigenvalues.push_back(static_cast<double>(mult) * lam);

    const double log_det = 0.5 * numtheory::log_abs_disc_cyclotomic(n);
    const linalg::ComplexMatrix m = embedding::vandermonde(embedding::cyclotomic_roots(n));
    const std::size_t degree = spec.dim();
    return finish_report("Phi_" + std::to_string(n), degree, log_det, std::move(spec), m);
}

SDReport sd_for_polynomial(std::string label, const numtheory::IntPolynomial& f) {
    const embedding::RootSet rs = embedding::make_root_set(linalg::polynomial_roots(f));
    const linalg::ComplexMatrix m = embedding::vandermonde(rs);
    linalg::Spectrum spec = linalg::jacobi_eigenvalues(embedding::gram_from_roots(rs));
    const double log_det = linalg::lu_log_abs_det(m);
    if (!std::isfinite(log_det))
        throw std::domain_error("sd_for_polynomial: singular embedding matrix");
    const std::size_t degree = rs.size();
    return finish_report(std::move(label), degree, log_det, std::move(spec), m);
}

SDReport sd_for_power_substitution(const numtheory::IntPolynomial& h, std::uint64_t k) {
    const gramform::PowerSubstitutionGram closed = gramform::gram_power_substitution(h, k);
    const numtheory::IntPolynomial f = gramform::substitute_power(h, k);
    const embedding::RootSet rs = embedding::make_root_set(linalg::polynomial_roots(f));
    const linalg::ComplexMatrix m = embedding::vandermonde(rs);
    linalg::Spectrum spec = linalg::jacobi_eigenvalues(closed.matrix);
    const double log_det = linalg::lu_log_abs_det(m);
    if (!std::isfinite(log_det))
        throw std::domain_error("sd_for_power_substitution: singular embedding matrix");
    std::string label = "h(x^" + std::to_string(k) + ") deg " + std::to_string(f.degree());
    return finish_report(std::move(label), closed.matrix.dim(), log_det, std::move(spec), m);
}

namespace {

void require_square(const linalg::ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
}

// log of max{ r_min/prod r_i, c_min/prod c_i }, all in log space so the
// products cannot overflow.
double log_norm_ratio(const linalg::ComplexMatrix& m) {
    const std::vector<double> r = linalg::row_norms(m);
    const std::vector<double> c = linalg::col_norms(m);
    auto ratio = [](const std::vector<double>& v) {
        double sum_log = 0.0, min_log = std::numeric_limits<double>::infinity();
        for (double x : v) {
            if (x == 0.0) throw std::invalid_argument("hong_pan bound: zero row or column");
            const double lx = std::log(x);
            sum_log += lx;
            min_log = std::min(min_log, lx);
        }
        return min_log - sum_log;
    };
    return std::max(ratio(r), ratio(c));
}

double hong_pan_log_sigma_bound(const linalg::ComplexMatrix& m, double log_abs_det) {
    const double n = static_cast<double>(m.rows());
    return 0.5 * (n - 1.0) * std::log((n - 1.0) / n) + log_abs_det + log_norm_ratio(m);
}

double yu_gu_log_sigma_bound(const linalg::ComplexMatrix& m, double log_abs_det) {
    const double n = static_cast<double>(m.rows());
    const double log_fro_sq = 2.0 * std::log(linalg::frobenius_norm(m));
    return log_abs_det + 0.5 * (n - 1.0) * (std::log(n - 1.0) - log_fro_sq);
}

}  // namespace

double hong_pan_sigma_min_bound(const linalg::ComplexMatrix& m, double log_abs_det) {
    require_square(m, "hong_pan_sigma_min_bound");
    if (m.rows() == 1) return std::exp(log_abs_det);
    return std::exp(hong_pan_log_sigma_bound(m, log_abs_det));
}

double hong_pan_sd_bound(const linalg::ComplexMatrix& m, double log_abs_det) {
    require_square(m, "hong_pan_sd_bound");
    const std::size_t n = m.rows();
    if (n == 1) return 1.0;
    return std::exp(log_abs_det / static_cast<double>(n) -
                    hong_pan_log_sigma_bound(m, log_abs_det));
}

double yu_gu_sigma_min_bound(const linalg::ComplexMatrix& m, double log_abs_det) {
    require_square(m, "yu_gu_sigma_min_bound");
    if (m.rows() == 1)
        throw std::invalid_argument("yu_gu_sigma_min_bound: exponent degenerate for dim 1");
    return std::exp(yu_gu_log_sigma_bound(m, log_abs_det));
}

double yu_gu_sd_bound(const linalg::ComplexMatrix& m, double log_abs_det) {
    require_square(m, "yu_gu_sd_bound");
    const std::size_t n = m.rows();
    if (n == 1) return 1.0;
    return std::exp(log_abs_det / static_cast<double>(n) -
                    yu_gu_log_sigma_bound(m, log_abs_det));
}

double hong_pan_sigma_min_bound(const linalg::ComplexMatrix& m) {
    return hong_pan_sigma_min_bound(m, linalg::lu_log_abs_det(m));
}
double hong_pan_sd_bound(const linalg::ComplexMatrix& m) {
    return hong_pan_sd_bound(m, linalg::lu_log_abs_det(m));
}
double yu_gu_sigma_min_bound(const linalg::ComplexMatrix& m) {
    return yu_gu_sigma_min_bound(m, linalg::lu_log_abs_det(m));
}
double yu_gu_sd_bound(const linalg::ComplexMatrix& m) {
    return yu_gu_sd_bound(m, linalg::lu_log_abs_det(m));
}

}  // namespace specdist::spectral
