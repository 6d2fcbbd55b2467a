#include "sweep.hpp"

#include "render.hpp"
#include "specdist/spectral.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace specdist::cli {

SweepRow sweep_row(std::uint64_t n) {
    const spectral::SDReport direct = spectral::sd_cyclotomic(n);
    const spectral::SDReport of_rad = spectral::sd_cyclotomic(numtheory::radical(n));
    SweepRow row;
    row.n = n;
    row.phi_n = numtheory::euler_phi(n);
    row.rad_n = numtheory::radical(n);
    row.sd = direct.sd;
    row.sd_of_rad = of_rad.sd;
    row.lambda_min = direct.eigenvalues.min();
    row.lambda_max = direct.eigenvalues.max();
    row.abs_disc = numtheory::abs_disc_cyclotomic(n);
    row.hong_pan_bound = direct.hong_pan_bound;
    row.yu_gu_bound = direct.yu_gu_bound;
    return row;
}

std::vector<SweepRow> run_sweep(std::uint64_t lo, std::uint64_t hi, unsigned parallelism) {
    if (lo == 0) throw std::invalid_argument("run_sweep: conductors start at 1");
    if (hi < lo) return {};
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<SweepRow> rows(count);

    if (parallelism <= 1) {
        for (std::size_t i = 0; i < count; ++i) rows[i] = sweep_row(lo + i);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[i] = sweep_row(lo + i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < parallelism; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "n,phi,rad,sd,sd_rad,lambda_min,lambda_max,abs_disc,hp_bound,yg_bound\n";
    for (const SweepRow& r : rows) {
        os << r.n << ',' << r.phi_n << ',' << r.rad_n << ',' << fmt_g12(r.sd) << ','
           << fmt_g12(r.sd_of_rad) << ',' << fmt_g12(r.lambda_min) << ','
           << fmt_g12(r.lambda_max) << ',' << r.abs_disc.str() << ','
           << fmt_g12(r.hong_pan_bound) << ',' << fmt_g12(r.yu_gu_bound) << '\n';
    }
}

void write_sweep_json(const std::vector<SweepRow>& rows, std::ostream& os) {
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        os << "  {\"n\": " << r.n << ", \"phi_n\": " << r.phi_n << ", \"rad_n\": " << r.rad_n
           << ", \"sd\": " << fmt_g12(r.sd) << ", \"sd_of_rad\": " << fmt_g12(r.sd_of_rad)
           << ", \"lambda_min\": " << fmt_g12(r.lambda_min)
           << ", \"lambda_max\": " << fmt_g12(r.lambda_max)
           << ", \"abs_disc\": " << r.abs_disc.str()
           << ", \"hong_pan_bound\": " << fmt_g12(r.hong_pan_bound)
           << ", \"yu_gu_bound\": " << fmt_g12(r.yu_gu_bound) << '}'
           << (i + 1 == rows.size() ? "" : ",") << '\n';
    }
    os << "]\n";
}

}  // namespace specdist::cli
