#pragma once

#include "specdist/numtheory.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace specdist::cli {

struct SweepRow {
    std::uint64_t n = 1;
    std::uint64_t phi_n = 1;
    std::uint64_t rad_n = 1;
    double sd = 1.0;
    double sd_of_rad = 1.0;
    double lambda_min = 1.0;
    double lambda_max = 1.0;
    numtheory::BigInt abs_disc = 1;
    double hong_pan_bound = 1.0;
    double yu_gu_bound = 1.0;
};

SweepRow sweep_row(std::uint64_t n);

// Conductors are distributed over `parallelism` workers and collected into an
// ordered buffer, so the result is independent of scheduling.
std::vector<SweepRow> run_sweep(std::uint64_t lo, std::uint64_t hi, unsigned parallelism);

// Header: n,phi,rad,sd,sd_rad,lambda_min,lambda_max,abs_disc,hp_bound,yg_bound
// Numeric fields at 12 significant digits; abs_disc as the exact integer.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);
// Flat array of objects with the SweepRow field names; abs_disc emitted as an
// exact integer literal, hence the hand-rolled writer.
void write_sweep_json(const std::vector<SweepRow>& rows, std::ostream& os);

}  // namespace specdist::cli
