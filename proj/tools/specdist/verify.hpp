#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace specdist::cli {

struct VerifyOptions {
    std::uint64_t lo = 1;
    std::uint64_t hi = 100;
    double tol_gram = 1e-9;        // closed-form Gram vs oracle, max abs
    double tol_oracle = 1e-8;      // power-substitution Gram vs oracle
    double tol_sd_rel = 1e-9;      // SD invariances, relative
    double tol_spectrum = 1e-9;    // eigenvalue statements
    double tol_disc_rel = 1e-6;    // discriminant identity
    double tol_quadratic = 1e-10;  // quadratic eigenvalue formula
    double tol_sigma = 1e-9;       // sigma_min lower-bound slack
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_err = 0.0;
    double tol = 0.0;
    std::string detail;
};

// Runs every invariant suite over the conductor range. Failures are report
// content, not exceptions.
std::vector<CheckResult> run_verify(const VerifyOptions& opt);

void print_verify_report(std::ostream& os, const std::vector<CheckResult>& results);

// Side-by-side table over a (b, c) grid: eigenvalues from the radicand
// variant b^2+(c+1)^2, from the matrix-consistent b^2+(c-1)^2, and from the
// Jacobi spectrum of the Gram matrix itself.
void print_quadratic_typo_report(std::ostream& os);

}  // namespace specdist::cli
