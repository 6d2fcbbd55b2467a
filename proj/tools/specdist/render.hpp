#pragma once

#include "specdist/linalg.hpp"

#include <ostream>
#include <string>

namespace specdist::cli {

// 12 significant digits: machine-facing output (JSON, CSV).
std::string fmt_g12(double x);
// 6 decimals: human-facing tables.
std::string fmt_f6(double x);

void print_matrix(std::ostream& os, const linalg::IntSymMatrix& m);
void print_matrix(std::ostream& os, const linalg::SymMatrix& m);

}  // namespace specdist::cli
