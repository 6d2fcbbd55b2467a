#include "verify.hpp"

#include "render.hpp"
#include "specdist/embedding.hpp"
#include "specdist/gramform.hpp"
#include "specdist/linalg.hpp"
#include "specdist/numtheory.hpp"
#include "specdist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <sstream>

namespace specdist::cli {

namespace {

using numtheory::BigInt;
using numtheory::IntPolynomial;

IntPolynomial poly(std::initializer_list<long long> coeffs) {
    std::vector<BigInt> c;
    for (long long v : coeffs) c.emplace_back(v);
    return IntPolynomial{std::move(c)};
}

// The fixed power-substitution corpus: h(x^k) hits Phi_4/8/12/16 for
// h = x^2+1 and Phi_6/12/18 for h = x^2-x+1, plus one reducible f (x^6+1).
struct PowerInstance {
    IntPolynomial h;
    std::uint64_t k;
    double b, c;  // h = x^2 + b x + c
};

std::vector<PowerInstance> power_instances() {
    std::vector<PowerInstance> out;
    for (std::uint64_t k = 1; k <= 4; ++k) out.push_back({poly({1, 0, 1}), k, 0.0, 1.0});
    for (std::uint64_t k = 1; k <= 3; ++k) out.push_back({poly({1, -1, 1}), k, -1.0, 1.0});
    return out;
}

double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

bool is_squarefree(std::uint64_t n) { return numtheory::radical(n) == n; }

// Shared per-run cache so the cubic eigensolves run once per conductor.
struct Context {
    const VerifyOptions& opt;
    std::map<std::uint64_t, spectral::SDReport> reports;

    explicit Context(const VerifyOptions& o) : opt(o) {}

    const spectral::SDReport& report(std::uint64_t n) {
        auto it = reports.find(n);
        if (it == reports.end()) it = reports.emplace(n, spectral::sd_cyclotomic(n)).first;
        return it->second;
    }
};

using CheckFn = CheckResult (*)(Context&);

CheckResult check_phi_residues(Context& ctx) {
    CheckResult r{"phi-residues", true, 0.0, 0.0, ""};
    for (std::uint64_t n = ctx.opt.lo; n <= ctx.opt.hi; ++n)
        if (numtheory::euler_phi(n) != numtheory::coprime_residues(n).size()) {
            r.passed = false;
            r.max_err = 1.0;
            r.detail = "mismatch at n=" + std::to_string(n);
            break;
        }
    return r;
}

CheckResult check_cyclotomic_product(Context& ctx) {
    CheckResult r{"cyclotomic-product", true, 0.0, 0.0, "exact"};
    for (std::uint64_t n = ctx.opt.lo; n <= std::min<std::uint64_t>(ctx.opt.hi, 200); ++n) {
        IntPolynomial prod{{BigInt(1)}};
        for (std::uint64_t d : numtheory::divisors(n))
            prod = numtheory::mul(prod, numtheory::cyclotomic_coeffs(d));
        std::vector<BigInt> expect(n + 1);
        expect[0] = -1;
        expect[n] = 1;
        if (prod.coeffs != expect) {
            r.passed = false;
            r.max_err = 1.0;
            r.detail = "product of Phi_d != x^n - 1 at n=" + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult check_disc_2n(Context& ctx) {
    CheckResult r{"disc-2n-invariance", true, 0.0, 0.0, "exact"};
    for (std::uint64_t n = std::max<std::uint64_t>(ctx.opt.lo, 3); n <= ctx.opt.hi; n += 1) {
        if (n % 2 == 0) continue;
        if (numtheory::abs_disc_cyclotomic(2 * n) != numtheory::abs_disc_cyclotomic(n)) {
            r.passed = false;
            r.max_err = 1.0;
            r.detail = "|Disc| differs between n and 2n at n=" + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult check_closed_form_gram(Context& ctx) {
    CheckResult r{"theorem1-vs-oracle", true, 0.0, ctx.opt.tol_gram, ""};
    for (std::uint64_t n = ctx.opt.lo; n <= ctx.opt.hi; ++n) {
        const gramform::CyclotomicGram g = gramform::gram_cyclotomic(n);
        const linalg::SymMatrix oracle = embedding::gram_oracle_cyclotomic(n);
        for (std::size_t i = 0; i < g.matrix.dim(); ++i)
            for (std::size_t j = 0; j < g.matrix.dim(); ++j) {
                if (g.matrix(i, j) != gramform::gram_entry(n, i, j)) {
                    r.passed = false;
                    r.detail = "entry table mismatch at n=" + std::to_string(n);
                }
                r.max_err = std::max(
                    r.max_err, std::abs(static_cast<double>(g.matrix(i, j)) - oracle(i, j)));
            }
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

CheckResult check_toeplitz(Context& ctx) {
    CheckResult r{"toeplitz-squarefree", true, 0.0, 0.0, "exact"};
    for (std::uint64_t n = ctx.opt.lo; n <= ctx.opt.hi; ++n) {
        if (!is_squarefree(n)) continue;
        const gramform::CyclotomicGram g = gramform::gram_cyclotomic(n);
        for (std::size_t i = 0; i + 1 < g.matrix.dim() && r.passed; ++i)
            for (std::size_t j = 0; j + 1 < g.matrix.dim(); ++j)
                if (g.matrix(i, j) != g.matrix(i + 1, j + 1)) {
                    r.passed = false;
                    r.max_err = 1.0;
                    r.detail = "diagonal not constant at n=" + std::to_string(n);
                    break;
                }
    }
    return r;
}

CheckResult check_kronecker(Context& ctx) {
    CheckResult r{"kronecker-structure", true, 0.0, ctx.opt.tol_spectrum, ""};
    for (std::uint64_t n = ctx.opt.lo; n <= ctx.opt.hi; ++n) {
        if (is_squarefree(n)) continue;
        const std::uint64_t rad = numtheory::radical(n);
        const std::uint64_t m = n / rad;
        const gramform::CyclotomicGram g = gramform::gram_cyclotomic(n);

        linalg::IntSymMatrix base = gramform::gram_cyclotomic(rad).matrix;
        linalg::IntSymMatrix scaled(base.dim());
        for (std::size_t i = 0; i < base.dim(); ++i)
            for (std::size_t j = i; j < base.dim(); ++j)
                scaled.set(i, j, static_cast<std::int64_t>(m) * base(i, j));
        const linalg::IntSymMatrix expect =
            linalg::kron(scaled, linalg::IntSymMatrix::identity(m));
        if (!(g.matrix == expect)) {
            r.passed = false;
            r.detail = "Kronecker form mismatch at n=" + std::to_string(n);
        }

        // Spectrum scaling with multiplicity n/rad(n).
        const auto& spec_n = ctx.report(n).eigenvalues;
        const auto& spec_rad = ctx.report(rad).eigenvalues;
        for (std::size_t i = 0; i < spec_rad.dim(); ++i)
            for (std::uint64_t t = 0; t < m; ++t)
                r.max_err = std::max(r.max_err,
                                     std::abs(spec_n.eigenvalues[i * m + t] -
                                              static_cast<double>(m) * spec_rad.eigenvalues[i]));
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

CheckResult check_sign_flip_2n(Context& ctx) {
    CheckResult r{"sign-flip-2n", true, 0.0, ctx.opt.tol_sd_rel, ""};
    for (std::uint64_t n = std::max<std::uint64_t>(ctx.opt.lo, 3); n <= ctx.opt.hi; ++n) {
        if (n % 2 == 0) continue;
        const auto flipped = gramform::sign_flip(gramform::gram_cyclotomic(n).matrix);
        if (!(gramform::gram_cyclotomic(2 * n).matrix == flipped)) {
            r.passed = false;
            r.detail = "Gram(2n) != sign_flip(Gram(n)) at n=" + std::to_string(n);
        }
        r.max_err = std::max(r.max_err, rel_err(ctx.report(2 * n).sd, ctx.report(n).sd));
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

CheckResult check_prime_spectrum(Context& ctx) {
    CheckResult r{"prime-spectrum", true, 0.0, ctx.opt.tol_spectrum, ""};
    for (std::uint64_t p = ctx.opt.lo; p <= ctx.opt.hi; ++p) {
        if (!numtheory::is_prime(p)) continue;
        const auto& spec = ctx.report(p).eigenvalues;
        r.max_err = std::max(r.max_err, std::abs(spec.eigenvalues[0] - 1.0));
        for (std::size_t i = 1; i < spec.dim(); ++i)
            r.max_err =
                std::max(r.max_err, std::abs(spec.eigenvalues[i] - static_cast<double>(p)));
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

CheckResult check_sd_prime(Context& ctx) {
    CheckResult r{"sd-prime-closed", true, 0.0, ctx.opt.tol_sd_rel, ""};
    for (std::uint64_t p = ctx.opt.lo; p <= ctx.opt.hi; ++p) {
        if (!numtheory::is_prime(p)) continue;
        r.max_err = std::max(r.max_err, rel_err(ctx.report(p).sd, spectral::sd_prime_closed(p)));
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

CheckResult check_rad_invariance(Context& ctx) {
    CheckResult r{"rad-invariance", true, 0.0, ctx.opt.tol_sd_rel, ""};
    for (std::uint64_t n = std::max<std::uint64_t>(ctx.opt.lo, 3); n <= ctx.opt.hi; ++n) {
        const std::uint64_t rad = numtheory::radical(n);
        r.max_err = std::max(r.max_err, rel_err(ctx.report(n).sd, ctx.report(rad).sd));
        r.max_err =
            std::max(r.max_err, rel_err(ctx.report(n).sd, spectral::sd_cyclotomic_reduced(n).sd));
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

CheckResult check_power_substitution(Context& ctx) {
    CheckResult r{"power-substitution-instances", true, 0.0, ctx.opt.tol_oracle, ""};
    for (const PowerInstance& inst : power_instances()) {
        const auto closed = gramform::gram_power_substitution(inst.h, inst.k);
        const auto f = gramform::substitute_power(inst.h, inst.k);
        const auto oracle = embedding::gram_oracle(f);
        const auto quad_kron = gramform::gram_quadratic_power(inst.b, inst.c, inst.k);
        for (std::size_t i = 0; i < closed.matrix.dim(); ++i)
            for (std::size_t j = 0; j < closed.matrix.dim(); ++j) {
                const std::size_t diff = i > j ? i - j : j - i;
                if (diff % inst.k != 0 && closed.matrix(i, j) != 0.0) {
                    r.passed = false;
                    r.detail = "nonzero entry off the k-pattern (k=" + std::to_string(inst.k) + ")";
                }
                r.max_err = std::max(r.max_err, std::abs(closed.matrix(i, j) - oracle(i, j)));
                if (std::abs(quad_kron(i, j) - closed.matrix(i, j)) > 1e-10) {
                    r.passed = false;
                    r.detail = "diagonal-Kronecker form disagrees with the direct sum";
                }
            }
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

CheckResult check_quadratic(Context& ctx) {
    CheckResult r{"quadratic-eigenvalues", true, 0.0, ctx.opt.tol_quadratic, ""};
    double variant_min_err = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            const double b = -3.0 + 6.0 * i / 20.0;
            const double c = 5.0 * j / 20.0;
            if (!(b * b - 4.0 * c < 0.0)) continue;
            const auto spec = linalg::jacobi_eigenvalues(gramform::quadratic_gram(b, c));
            const auto [lo, hi] = gramform::quadratic_eigenvalues(b, c);
            r.max_err = std::max({r.max_err, std::abs(lo - spec.eigenvalues[0]),
                                  std::abs(hi - spec.eigenvalues[1])});
            // The radicand variant b^2 + c^2 + 2c + 1; tracked for the report.
            const double variant_root = std::sqrt(b * b + (c + 1.0) * (c + 1.0));
            const double variant_err =
                std::max(std::abs(1.0 + c - variant_root - spec.eigenvalues[0]),
                         std::abs(1.0 + c + variant_root - spec.eigenvalues[1]));
            variant_min_err = std::min(variant_min_err, variant_err);
        }
    if (r.max_err > r.tol) r.passed = false;
    if (!(variant_min_err > r.tol)) {
        r.passed = false;
        r.detail = "radicand variant b^2+(c+1)^2 unexpectedly matches the spectrum";
    } else {
        std::ostringstream os;
        os << "radicand variant b^2+(c+1)^2 deviates by >= " << fmt_g12(variant_min_err)
           << " everywhere on the grid";
        r.detail = os.str();
    }
    return r;
}

CheckResult check_bounds(Context& ctx) {
    CheckResult r{"bound-soundness", true, 0.0, 0.0, ""};
    auto sound = [&](const spectral::SDReport& rep, double hp_sigma, double yg_sigma) {
        if (rep.sd > rep.hong_pan_bound * (1.0 + 1e-12) ||
            rep.sd > rep.yu_gu_bound * (1.0 + 1e-12)) {
            r.passed = false;
            r.detail = "SD above an upper bound for " + rep.label;
        }
        if (hp_sigma > rep.sigma_min + ctx.opt.tol_sigma ||
            yg_sigma > rep.sigma_min + ctx.opt.tol_sigma) {
            r.passed = false;
            r.detail = "sigma_min lower bound above sigma_min for " + rep.label;
        }
        if (rep.sd < 1.0 - 1e-12) {
            r.passed = false;
            r.detail = "SD below 1 for " + rep.label;
        }
        r.max_err = std::max({r.max_err, rep.sd - rep.hong_pan_bound, rep.sd - rep.yu_gu_bound,
                              hp_sigma - rep.sigma_min, yg_sigma - rep.sigma_min});
    };
    for (std::uint64_t n = ctx.opt.lo; n <= std::min<std::uint64_t>(ctx.opt.hi, 100); ++n) {
        const auto& rep = ctx.report(n);
        const auto m = embedding::vandermonde(embedding::cyclotomic_roots(n));
        const double log_det = 0.5 * numtheory::log_abs_disc_cyclotomic(n);
        const double hp = spectral::hong_pan_sigma_min_bound(m, log_det);
        const double yg =
            m.rows() == 1 ? hp : spectral::yu_gu_sigma_min_bound(m, log_det);
        sound(rep, hp, yg);
    }
    for (const PowerInstance& inst : power_instances()) {
        const auto rep = spectral::sd_for_power_substitution(inst.h, inst.k);
        const auto f = gramform::substitute_power(inst.h, inst.k);
        const auto rs = embedding::make_root_set(linalg::polynomial_roots(f));
        const auto m = embedding::vandermonde(rs);
        const double log_det = linalg::lu_log_abs_det(m);
        sound(rep, spectral::hong_pan_sigma_min_bound(m, log_det),
              spectral::yu_gu_sigma_min_bound(m, log_det));
    }
    return r;
}

CheckResult check_discriminant(Context& ctx) {
    CheckResult r{"discriminant-identity", true, 0.0, ctx.opt.tol_disc_rel, ""};
    for (std::uint64_t n = ctx.opt.lo; n <= ctx.opt.hi; ++n) {
        const double log_disc = numtheory::log_abs_disc_cyclotomic(n);
        double eig_log = 0.0;
        for (double lam : ctx.report(n).eigenvalues.eigenvalues) eig_log += std::log(lam);
        // |log(P/D)| <= tol is the log-space form of relative agreement.
        r.max_err = std::max(r.max_err, std::abs(eig_log - log_disc));

        const auto m = embedding::vandermonde(embedding::cyclotomic_roots(n));
        r.max_err = std::max(r.max_err, std::abs(2.0 * linalg::lu_log_abs_det(m) - log_disc));
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

CheckResult check_b_unitarity(Context& ctx) {
    CheckResult r{"b-unitarity", true, 0.0, 1e-12, ""};
    for (std::uint64_t n : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(3),
                            std::uint64_t(8), std::uint64_t(15), std::uint64_t(30)}) {
        if (n < ctx.opt.lo || n > ctx.opt.hi) continue;
        const auto rs = embedding::cyclotomic_roots(n);
        const auto b = embedding::b_matrix(rs);
        double err = 0.0;
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) {
                std::complex<double> acc = 0.0;
                for (std::size_t l = 0; l < b.rows(); ++l)
                    acc += std::conj(b(l, i)) * b(l, j);
                acc -= (i == j) ? 1.0 : 0.0;
                err += std::norm(acc);
            }
        r.max_err = std::max(r.max_err, std::sqrt(err));
    }
    if (r.max_err > r.tol) r.passed = false;
    return r;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
    Context ctx(opt);
    const CheckFn checks[] = {
        check_phi_residues, check_cyclotomic_product, check_disc_2n, check_closed_form_gram,
        check_toeplitz,     check_kronecker,          check_sign_flip_2n,
        check_prime_spectrum, check_sd_prime,         check_rad_invariance,
        check_power_substitution, check_quadratic,    check_bounds,
        check_discriminant, check_b_unitarity,
    };
    std::vector<CheckResult> out;
    for (CheckFn fn : checks) out.push_back(fn(ctx));
    return out;
}

void print_verify_report(std::ostream& os, const std::vector<CheckResult>& results) {
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " max_err=" << fmt_g12(r.max_err);
        if (r.tol > 0.0) os << " tol=" << fmt_g12(r.tol);
        if (!r.detail.empty()) os << " (" << r.detail << ")";
        os << '\n';
        if (r.passed) ++passed;
    }
    os << "verify: " << passed << "/" << results.size() << " checks passed\n";
}

void print_quadratic_typo_report(std::ostream& os) {
    os << "quadratic h = x^2 + b x + c, Gram [[2,-b],[-b,2c]]\n";
    os << "radicand variant: b^2 + c^2 + 2c + 1; matrix-consistent: b^2 + (c-1)^2\n";
    os << "b      c      jacobi_lo    jacobi_hi    variant_lo   variant_hi   "
          "corrected_lo corrected_hi\n";
    for (double b : {-2.0, -1.0, 0.0, 1.0, 2.0})
        for (double c : {1.0, 2.0, 4.0}) {
            if (!(b * b - 4.0 * c < 0.0)) continue;
            const auto spec = linalg::jacobi_eigenvalues(gramform::quadratic_gram(b, c));
            const auto [clo, chi] = gramform::quadratic_eigenvalues(b, c);
            const double pr = std::sqrt(b * b + (c + 1.0) * (c + 1.0));
            os << fmt_f6(b) << ' ' << fmt_f6(c) << ' ' << fmt_f6(spec.eigenvalues[0]) << ' '
               << fmt_f6(spec.eigenvalues[1]) << ' ' << fmt_f6(1.0 + c - pr) << ' '
               << fmt_f6(1.0 + c + pr) << ' ' << fmt_f6(clo) << ' ' << fmt_f6(chi) << '\n';
        }
    os << "the variant radicand disagrees with the Jacobi spectrum at every "
          "admissible point; the matrix-consistent one matches\n";
}

}  // namespace specdist::cli
