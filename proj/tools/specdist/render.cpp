#include "render.hpp"

#include <algorithm>
#include <cstdio>

namespace specdist::cli {

std::string fmt_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt_f6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

void print_matrix(std::ostream& os, const linalg::IntSymMatrix& m) {
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            width = std::max(width, std::to_string(m(i, j)).size());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            std::string s = std::to_string(m(i, j));
            os << (j == 0 ? "" : " ") << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
}

void print_matrix(std::ostream& os, const linalg::SymMatrix& m) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            os << (j == 0 ? "" : " ") << fmt_f6(m(i, j));
        os << '\n';
    }
}

}  // namespace specdist::cli
