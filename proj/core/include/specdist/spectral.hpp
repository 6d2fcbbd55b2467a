#pragma once

#include "specdist/embedding.hpp"
#include "specdist/gramform.hpp"
#include "specdist/linalg.hpp"
#include "specdist/numtheory.hpp"

#include <cstdint>
#include <string>

namespace specdist::spectral {

// Everything needed to judge one polynomial: SD = |det M|^(1/deg) / sigma_min
// together with the determinant, the full Gram spectrum and the two upper
// bounds. abs_det_m overflows to +inf for very large conductors;
// log_abs_det_m stays finite and is what the SD value is computed from.
struct SDReport {
    std::string label;
    std::size_t degree = 0;
    double abs_det_m = 1.0;
    double log_abs_det_m = 0.0;
    double sigma_min = 1.0;
    double sd = 1.0;
    double hong_pan_bound = 1.0;
    double yu_gu_bound = 1.0;
    linalg::Spectrum eigenvalues;
};

// abs_det_m^(1/dim) / sqrt(lambda_min(gram)); rejects nonpositive lambda_min
// and nonpositive determinants.
double sd_from_gram(const linalg::SymMatrix& gram, double abs_det_m);

// p^((p-2)/(2(p-1))); rejects composite p.
double sd_prime_closed(std::uint64_t p);

// Full report for Phi_n. The determinant comes from the exact discriminant;
// sigma_min from Jacobi on the closed-form Gram of n itself.
SDReport sd_cyclotomic(std::uint64_t n);

// Same report, but the eigensolve runs on rad(n) only and the spectrum is
// scaled by n/rad(n) with matching multiplicity.
SDReport sd_cyclotomic_reduced(std::uint64_t n);

// General path: roots via Durand-Kerner, Gram via the embedding oracle,
// determinant via complex LU.
SDReport sd_for_polynomial(std::string label, const numtheory::IntPolynomial& f);

// f = h(x^k) with the closed-form Gram as the sigma_min source.
SDReport sd_for_power_substitution(const numtheory::IntPolynomial& h, std::uint64_t k);

// Lower bounds on sigma_min and the induced upper bounds on SD. The SD bound
// inverts the better (larger) of the row/column sigma_min estimates. The
// overloads with log_abs_det avoid an LU pass when the determinant is known
// exactly. dim-1 input: sigma_min bounds return |det| itself (Hong-Pan) or are
// rejected (Yu-Gu, degenerate exponent); both SD bounds are defined as 1.
double hong_pan_sigma_min_bound(const linalg::ComplexMatrix& m);
double hong_pan_sigma_min_bound(const linalg::ComplexMatrix& m, double log_abs_det);
double hong_pan_sd_bound(const linalg::ComplexMatrix& m);
double hong_pan_sd_bound(const linalg::ComplexMatrix& m, double log_abs_det);
double yu_gu_sigma_min_bound(const linalg::ComplexMatrix& m);
double yu_gu_sigma_min_bound(const linalg::ComplexMatrix& m, double log_abs_det);
double yu_gu_sd_bound(const linalg::ComplexMatrix& m);
double yu_gu_sd_bound(const linalg::ComplexMatrix& m, double log_abs_det);

}  // namespace specdist::spectral
