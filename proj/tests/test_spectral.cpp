#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specdist/spectral.hpp"
#include "testutil.hpp"

#include <cmath>
#include <numbers>

using namespace specdist;
using namespace specdist::spectral;
using testutil::poly;
using testutil::rel_err;

TEST_CASE("sd_from_gram fixed cases") {
    linalg::SymMatrix g2(1);
    g2.set(0, 0, 1.0);
    CHECK(sd_from_gram(g2, 1.0) == doctest::Approx(1.0).epsilon(1e-14));

    linalg::SymMatrix g4(2);
    g4.set(0, 0, 2.0);
    g4.set(1, 1, 2.0);
    CHECK(sd_from_gram(g4, 2.0) == doctest::Approx(1.0).epsilon(1e-14));

    linalg::SymMatrix g3(2);
    g3.set(0, 0, 2.0);
    g3.set(0, 1, -1.0);
    g3.set(1, 1, 2.0);
    CHECK(sd_from_gram(g3, std::sqrt(3.0)) ==
          doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-12));

    linalg::SymMatrix indef(2);
    indef.set(0, 0, 1.0);
    indef.set(0, 1, 2.0);
    indef.set(1, 1, 1.0);
    CHECK_THROWS_AS(sd_from_gram(indef, 1.0), std::domain_error);
    CHECK_THROWS_AS(sd_from_gram(g3, 0.0), std::invalid_argument);
}

TEST_CASE("sd_prime_closed") {
    CHECK(sd_prime_closed(2) == 1.0);
    CHECK(sd_prime_closed(3) == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-14));
    CHECK(sd_prime_closed(97) == doctest::Approx(std::pow(97.0, 95.0 / 192.0)).epsilon(1e-14));
    CHECK_THROWS_AS(sd_prime_closed(12), std::invalid_argument);
}

TEST_CASE("sd_cyclotomic matches the closed form at primes") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31, 61, 97})
        CHECK(rel_err(sd_cyclotomic(p).sd, sd_prime_closed(p)) <= 1e-10);
    CHECK(sd_cyclotomic(3).sd == doctest::Approx(1.316074).epsilon(1e-6));
}

TEST_CASE("radical and 2n invariance") {
    CHECK(rel_err(sd_cyclotomic(12).sd, sd_cyclotomic(6).sd) <= 1e-9);
    for (std::uint64_t n : {4, 9, 16, 18, 45, 50, 98})
        CHECK(rel_err(sd_cyclotomic(n).sd, sd_cyclotomic(numtheory::radical(n)).sd) <= 1e-9);
    for (std::uint64_t m : {3, 5, 15, 21, 33, 45})
        CHECK(rel_err(sd_cyclotomic(2 * m).sd, sd_cyclotomic(m).sd) <= 1e-9);
}

TEST_CASE("reduced route equals the direct route") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        const SDReport direct = sd_cyclotomic(n);
        const SDReport reduced = sd_cyclotomic_reduced(n);
        CHECK(rel_err(direct.sd, reduced.sd) <= 1e-9);
        REQUIRE(direct.eigenvalues.dim() == reduced.eigenvalues.dim());
        for (std::size_t i = 0; i < direct.eigenvalues.dim(); ++i)
            CHECK(std::abs(direct.eigenvalues.eigenvalues[i] -
                           reduced.eigenvalues.eigenvalues[i]) <= 1e-9);
    }
}

TEST_CASE("report fields are self-consistent where the determinant fits") {
    for (std::uint64_t n : {2, 3, 4, 12, 15, 30, 40}) {
        const SDReport r = sd_cyclotomic(n);
        CHECK(std::isfinite(r.abs_det_m));
        const double recomputed =
            std::pow(r.abs_det_m, 1.0 / static_cast<double>(r.degree)) / r.sigma_min;
        CHECK(rel_err(recomputed, r.sd) <= 1e-12);
        CHECK(r.sigma_min > 0.0);
        CHECK(r.sd >= 1.0 - 1e-12);
        CHECK(r.sd <= r.hong_pan_bound * (1.0 + 1e-12));
        CHECK(r.sd <= r.yu_gu_bound * (1.0 + 1e-12));
    }
}

TEST_CASE("hong_pan bounds on fixed matrices") {
    // Phi_3 Vandermonde: SD bound = 2 * 3^(-1/4)
    const auto m3 = embedding::vandermonde(embedding::cyclotomic_roots(3));
    CHECK(hong_pan_sd_bound(m3) == doctest::Approx(2.0 * std::pow(3.0, -0.25)).epsilon(1e-9));

    // I_n: sigma_min bound ((n-1)/n)^((n-1)/2)
    const auto i4 = linalg::ComplexMatrix::identity(4);
    CHECK(hong_pan_sigma_min_bound(i4) ==
          doctest::Approx(std::pow(3.0 / 4.0, 1.5)).epsilon(1e-12));
    CHECK(hong_pan_sigma_min_bound(i4) <= 1.0);

    // diag(1, 2): (1/2)^(1/2) * 2 * (1/2) = sqrt(2)/2
    linalg::ComplexMatrix d(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    CHECK(hong_pan_sigma_min_bound(d) ==
          doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-12));
    CHECK(hong_pan_sigma_min_bound(d) <= 1.0);

    linalg::ComplexMatrix zero_col(2, 2);
    zero_col(0, 0) = 1.0;
    zero_col(1, 0) = 1.0;
    CHECK_THROWS_AS(hong_pan_sigma_min_bound(zero_col), std::invalid_argument);
}

TEST_CASE("yu_gu bounds on fixed matrices") {
    const auto m3 = embedding::vandermonde(embedding::cyclotomic_roots(3));
    CHECK(yu_gu_sd_bound(m3) == doctest::Approx(2.0 * std::pow(3.0, -0.25)).epsilon(1e-9));

    const auto i2 = linalg::ComplexMatrix::identity(2);
    CHECK(yu_gu_sigma_min_bound(i2) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    // Phi_5: bound dominates SD = 5^(3/8)
    const auto m5 = embedding::vandermonde(embedding::cyclotomic_roots(5));
    CHECK(yu_gu_sd_bound(m5) >= std::pow(5.0, 3.0 / 8.0));
    CHECK(rel_err(sd_cyclotomic(5).sd, std::pow(5.0, 3.0 / 8.0)) <= 1e-10);

    const auto i1 = linalg::ComplexMatrix::identity(1);
    CHECK_THROWS_AS(yu_gu_sigma_min_bound(i1), std::invalid_argument);
    CHECK(yu_gu_sd_bound(i1) == 1.0);
    CHECK(hong_pan_sd_bound(i1) == 1.0);
}

TEST_CASE("bound soundness over conductors up to 50") {
    for (std::uint64_t n = 1; n <= 50; ++n) {
        const SDReport r = sd_cyclotomic(n);
        CHECK(r.sd <= r.hong_pan_bound * (1.0 + 1e-12));
        CHECK(r.sd <= r.yu_gu_bound * (1.0 + 1e-12));
        CHECK(r.sd >= 1.0 - 1e-12);

        const auto m = embedding::vandermonde(embedding::cyclotomic_roots(n));
        const double log_det = 0.5 * numtheory::log_abs_disc_cyclotomic(n);
        CHECK(hong_pan_sigma_min_bound(m, log_det) <= r.sigma_min + 1e-9);
        if (m.rows() > 1) CHECK(yu_gu_sigma_min_bound(m, log_det) <= r.sigma_min + 1e-9);
    }
}

TEST_CASE("power substitution reports") {
    const SDReport r8 = sd_for_power_substitution(poly({1, 0, 1}), 2);  // f = Phi_8
    CHECK(rel_err(r8.sd, sd_cyclotomic(8).sd) <= 1e-9);
    CHECK(r8.sd == doctest::Approx(1.0).epsilon(1e-10));

    const SDReport r18 = sd_for_power_substitution(poly({1, -1, 1}), 3);  // f = Phi_18
    CHECK(rel_err(r18.sd, sd_cyclotomic(18).sd) <= 1e-8);
    CHECK(r18.sd <= r18.hong_pan_bound * (1.0 + 1e-12));
    CHECK(r18.sd <= r18.yu_gu_bound * (1.0 + 1e-12));
}

TEST_CASE("general polynomial report agrees with the cyclotomic path") {
    const SDReport general = sd_for_polynomial("phi12", numtheory::cyclotomic_coeffs(12));
    CHECK(rel_err(general.sd, sd_cyclotomic(12).sd) <= 1e-8);
}

TEST_CASE("large conductors stay finite through the log path") {
    // |det M| for Phi_263 is ~1e316, past double range; SD must still come out.
    const SDReport r = sd_cyclotomic(263);
    CHECK(std::isinf(r.abs_det_m));
    CHECK(std::isfinite(r.log_abs_det_m));
    CHECK(std::isfinite(r.sd));
    CHECK(std::isfinite(r.hong_pan_bound));
    CHECK(std::isfinite(r.yu_gu_bound));
    CHECK(r.sd <= r.hong_pan_bound * (1.0 + 1e-12));
    CHECK(rel_err(r.sd, sd_prime_closed(263)) <= 1e-9);
}
