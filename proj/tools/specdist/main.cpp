#include "render.hpp"
#include "specdist/embedding.hpp"
#include "specdist/gramform.hpp"
#include "specdist/linalg.hpp"
#include "specdist/numtheory.hpp"
#include "specdist/spectral.hpp"
#include "sweep.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace specdist;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct Range {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;  // lo > hi means empty
};

Range parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw CLI::ValidationError("--range", "expected LO:HI");
    Range r;
    try {
        r.lo = std::stoull(s.substr(0, colon));
        r.hi = std::stoull(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--range", "expected LO:HI with integer endpoints");
    }
    if (r.lo == 0) throw CLI::ValidationError("--range", "conductors start at 1");
    return r;
}

numtheory::IntPolynomial poly_from(const std::vector<long long>& coeffs) {
    std::vector<numtheory::BigInt> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    numtheory::IntPolynomial p{std::move(c)};
    if (!p.is_monic() || p.degree() < 1)
        throw CLI::ValidationError("--coeffs",
                                   "need an ascending monic coefficient list of degree >= 1");
    return p;
}

// One of: conductor, quadratic (b, c) with power k, or explicit coefficients.
struct Selector {
    std::optional<std::uint64_t> cyclotomic;
    std::vector<long long> quadratic;  // {b, c} when present
    std::uint64_t k = 1;
    std::vector<long long> coeffs;
    bool check = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--cyclotomic", cyclotomic, "Conductor n of Phi_n");
        cmd->add_option("--quadratic", quadratic,
                        "Coefficients b c of h = x^2 + b x + c (negative discriminant)")
            ->expected(2);
        cmd->add_option("--k", k, "Substitute x^k into the quadratic, f = h(x^k)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--coeffs", coeffs,
                        "Explicit monic integer coefficients, ascending degree");
        cmd->add_flag("--check", check, "Cross-validate closed form against the oracle");
    }

    void validate() const {
        const int picked = (cyclotomic.has_value() ? 1 : 0) + (quadratic.empty() ? 0 : 1) +
                           (coeffs.empty() ? 0 : 1);
        if (picked != 1)
            throw CLI::ValidationError(
                "selector", "pick exactly one of --cyclotomic, --quadratic, --coeffs");
    }
};

double max_abs_diff(const linalg::SymMatrix& a, const linalg::SymMatrix& b) {
    double err = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            err = std::max(err, std::abs(a(i, j) - b(i, j)));
    return err;
}

int check_or_fail(const std::string& what, double err, double tol) {
    if (err > tol) {
        std::cerr << "check FAILED: " << what << " max_err=" << cli::fmt_g12(err)
                  << " tol=" << cli::fmt_g12(tol) << '\n';
        return kExitVerifyFailure;
    }
    std::cout << "check: " << what << " max_err=" << cli::fmt_g12(err) << " OK\n";
    return kExitOk;
}

int cmd_gram(const Selector& sel) {
    if (sel.cyclotomic) {
        const std::uint64_t n = *sel.cyclotomic;
        const gramform::CyclotomicGram g = gramform::gram_cyclotomic(n);
        std::cout << "n    " << n << "\nphi  " << numtheory::euler_phi(n) << "\nrad  "
                  << numtheory::radical(n) << '\n';
        if (!g.generator.empty()) {
            std::cout << "toeplitz_generator";
            for (std::int64_t v : g.generator) std::cout << ' ' << v;
            std::cout << '\n';
        }
        cli::print_matrix(std::cout, g.matrix);
        if (sel.check)
            return check_or_fail("closed form vs oracle",
                                 max_abs_diff(g.matrix.to_sym(),
                                              embedding::gram_oracle_cyclotomic(n)),
                                 1e-8);
        return kExitOk;
    }
    if (!sel.quadratic.empty()) {
        const auto h = poly_from({sel.quadratic[1], sel.quadratic[0], 1});
        const auto g = gramform::gram_power_substitution(h, sel.k);
        std::cout << "h    x^2 + (" << sel.quadratic[0] << ")x + (" << sel.quadratic[1]
                  << ")\nk    " << sel.k << "\ndim  " << g.matrix.dim() << '\n';
        cli::print_matrix(std::cout, g.matrix);
        if (sel.check)
            return check_or_fail(
                "closed form vs oracle",
                max_abs_diff(g.matrix, embedding::gram_oracle(gramform::substitute_power(h, sel.k))),
                1e-8);
        return kExitOk;
    }
    const auto f = poly_from(sel.coeffs);
    const auto rs = embedding::make_root_set(linalg::polynomial_roots(f));
    const auto gram = embedding::gram_from_roots(rs);
    std::cout << "deg  " << f.degree() << '\n';
    cli::print_matrix(std::cout, gram);
    if (sel.check) {
        // Second oracle path: realified embedding, (B^dagger M)^T (B^dagger M).
        const auto em = embedding::embedding_matrix(rs);
        double err = 0.0;
        for (std::size_t i = 0; i < gram.dim(); ++i)
            for (std::size_t j = 0; j < gram.dim(); ++j) {
                double acc = 0.0;
                for (std::size_t l = 0; l < em.real_form.rows(); ++l)
                    acc += em.real_form(l, i) * em.real_form(l, j);
                err = std::max(err, std::abs(acc - gram(i, j)));
            }
        return check_or_fail("complex vs realified Gram", err, 1e-8);
    }
    return kExitOk;
}

void print_sd_report(const spectral::SDReport& rep) {
    std::cout << "polynomial        " << rep.label << '\n'
              << "degree            " << rep.degree << '\n'
              << "det_pow_1_over_n  "
              << cli::fmt_f6(std::exp(rep.log_abs_det_m / static_cast<double>(rep.degree)))
              << '\n'
              << "sigma_min         " << cli::fmt_f6(rep.sigma_min) << '\n'
              << "sd                " << cli::fmt_f6(rep.sd) << '\n'
              << "hong_pan_bound    " << cli::fmt_f6(rep.hong_pan_bound) << '\n'
              << "yu_gu_bound       " << cli::fmt_f6(rep.yu_gu_bound) << '\n';
}

int cmd_sd(const Selector& sel) {
    if (sel.cyclotomic) {
        const std::uint64_t n = *sel.cyclotomic;
        const spectral::SDReport rep = spectral::sd_cyclotomic(n);
        print_sd_report(rep);
        if (numtheory::is_prime(n))
            std::cout << "prime_closed_form " << cli::fmt_f6(spectral::sd_prime_closed(n))
                      << '\n';
        if (sel.check) {
            // Oracle route: Gram via exponential roots, determinant via LU.
            const auto spec = linalg::jacobi_eigenvalues(embedding::gram_oracle_cyclotomic(n));
            const auto m = embedding::vandermonde(embedding::cyclotomic_roots(n));
            const double sd_oracle =
                std::exp(linalg::lu_log_abs_det(m) / static_cast<double>(spec.dim()) -
                         0.5 * std::log(spec.min()));
            return check_or_fail("sd closed path vs oracle path",
                                 std::abs(sd_oracle - rep.sd) / rep.sd, 1e-8);
        }
        return kExitOk;
    }
    if (!sel.quadratic.empty()) {
        const auto h = poly_from({sel.quadratic[1], sel.quadratic[0], 1});
        const spectral::SDReport rep = spectral::sd_for_power_substitution(h, sel.k);
        print_sd_report(rep);
        if (sel.check) {
            const auto f = gramform::substitute_power(h, sel.k);
            const spectral::SDReport oracle = spectral::sd_for_polynomial("oracle", f);
            return check_or_fail("sd closed path vs oracle path",
                                 std::abs(oracle.sd - rep.sd) / rep.sd, 1e-8);
        }
        return kExitOk;
    }
    const auto f = poly_from(sel.coeffs);
    std::ostringstream label;
    label << "deg-" << f.degree() << " polynomial";
    print_sd_report(spectral::sd_for_polynomial(label.str(), f));
    return kExitOk;
}

int cmd_verify(const std::string& range_str, cli::VerifyOptions opt, bool quadratic_typo) {
    if (quadratic_typo) {
        cli::print_quadratic_typo_report(std::cout);
        return kExitOk;
    }
    const Range range = parse_range(range_str);
    if (range.hi > 500) throw CLI::ValidationError("--range", "verify range is capped at 500");
    opt.lo = range.lo;
    opt.hi = range.hi;
    const auto results = cli::run_verify(opt);
    cli::print_verify_report(std::cout, results);
    for (const auto& r : results)
        if (!r.passed) return kExitVerifyFailure;
    return kExitOk;
}

int cmd_sweep(const std::string& range_str, const std::string& format, const std::string& output,
              unsigned parallelism) {
    const Range range = parse_range(range_str);
    const auto rows = cli::run_sweep(range.lo, range.hi, parallelism);

    std::ostringstream buf;
    if (format == "csv")
        cli::write_sweep_csv(rows, buf);
    else
        cli::write_sweep_json(rows, buf);

    if (output == "-") {
        std::cout << buf.str();
        return kExitOk;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "sweep: cannot open output path: " << output << '\n';
        return kExitUsage;
    }
    out << buf.str();
    if (!out.good()) {
        std::cerr << "sweep: write failed: " << output << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral distortion of cyclotomic and related polynomials"};
    app.require_subcommand(1);

    Selector gram_sel;
    auto* gram = app.add_subcommand("gram", "Print a Gram matrix M^dagger M");
    gram_sel.attach(gram);

    Selector sd_sel;
    auto* sd = app.add_subcommand("sd", "Spectral distortion report");
    sd_sel.attach(sd);

    std::string verify_range = "1:100";
    bool quadratic_typo = false;
    cli::VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--range", verify_range, "Conductor range LO:HI (within 1:500)");
    verify->add_flag("--quadratic-typo", quadratic_typo,
                     "Print the quadratic eigenvalue radicand comparison table");
    verify->add_option("--tol-gram", vopt.tol_gram, "Closed form vs oracle tolerance");
    verify->add_option("--tol-oracle", vopt.tol_oracle, "Power-substitution oracle tolerance");
    verify->add_option("--tol-sd-rel", vopt.tol_sd_rel, "Relative SD tolerance");
    verify->add_option("--tol-spectrum", vopt.tol_spectrum, "Eigenvalue tolerance");
    verify->add_option("--tol-disc-rel", vopt.tol_disc_rel, "Discriminant identity tolerance");
    verify->add_option("--tol-quadratic", vopt.tol_quadratic, "Quadratic eigenvalue tolerance");
    verify->add_option("--tol-sigma", vopt.tol_sigma, "sigma_min lower-bound slack");

    std::string sweep_range;
    std::string sweep_format = "csv";
    std::string sweep_output = "-";
    unsigned sweep_parallel = 1;
    auto* sweep = app.add_subcommand("sweep", "Tabulate SD over a conductor range");
    sweep->add_option("--range", sweep_range, "Conductor range LO:HI")->required();
    sweep->add_option("--format", sweep_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--output", sweep_output, "Output path, - for stdout");
    sweep->add_option("--parallel", sweep_parallel, "Worker count")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (gram->parsed()) {
            gram_sel.validate();
            return cmd_gram(gram_sel);
        }
        if (sd->parsed()) {
            sd_sel.validate();
            return cmd_sd(sd_sel);
        }
        if (verify->parsed()) return cmd_verify(verify_range, vopt, quadratic_typo);
        if (sweep->parsed())
            return cmd_sweep(sweep_range, sweep_format, sweep_output, sweep_parallel);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
