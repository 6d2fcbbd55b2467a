#pragma once

#include "specdist/linalg.hpp"
#include "specdist/numtheory.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace specdist::embedding {

// Roots ordered as: real roots ascending, then one representative per
// conjugate pair by ascending argument in (0, pi), then the conjugates in
// mirrored order, so roots[k] and roots[size-1-k] are conjugates for the
// paired block.
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::size_t real_count = 0;  // r1
    std::size_t pair_count = 0;  // r2

    std::size_t size() const { return roots.size(); }
};

// Classifies and orders an arbitrary root list into the RootSet convention.
// Rejects repeated roots and unpairable conjugates.
RootSet make_root_set(std::vector<std::complex<double>> roots);

// Primitive n-th roots of unity e^(2*pi*i*c/n) over the ascending coprime
// residues c, which is exactly the RootSet ordering.
RootSet cyclotomic_roots(std::uint64_t n);

// Vandermonde matrix: row per root, entry alpha_i^j for j = 0..deg-1.
linalg::ComplexMatrix vandermonde(const RootSet& rs);

// The unitary basis change to a real inner-product space, adapted to the
// RootSet's mirrored conjugate ordering.
linalg::ComplexMatrix b_matrix(const RootSet& rs);

// B^dagger * M with the imaginary residue truncated. Throws if the residue
// exceeds 1e-8, which signals a row-ordering violation.
linalg::Matrix realify(const linalg::ComplexMatrix& m, const RootSet& rs);

struct EmbeddingMatrix {
    linalg::ComplexMatrix complex_form;
    linalg::Matrix real_form;
};

EmbeddingMatrix embedding_matrix(const RootSet& rs);

// Gram matrix from the explicit root list of rs: conjugate-transpose product
// of the Vandermonde, imaginary parts checked against 1e-9 and discarded,
// symmetrized by averaging.
linalg::SymMatrix gram_from_roots(const RootSet& rs);

// Root-finder path for a general monic squarefree polynomial.
linalg::SymMatrix gram_oracle(const numtheory::IntPolynomial& f);

// Exact exponential-root path, the primary oracle for all cyclotomic tests.
// Powers are evaluated at reduced angles 2*pi*(c*j mod n)/n, so the entry
// error does not grow with the power.
linalg::SymMatrix gram_oracle_cyclotomic(std::uint64_t n);

}  // namespace specdist::embedding
