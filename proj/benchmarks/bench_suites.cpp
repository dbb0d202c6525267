// Times the exact verification sweeps on the serial reference path and on the
// OpenMP path, and cross-checks that both produce identical reports.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "pds/catalog.hpp"

using namespace pds;

namespace {

double run_timed(const std::string& filter, int threads, std::vector<IdentityReport>& out) {
    CatalogOptions opt;
    opt.threads = threads;
    const auto t0 = std::chrono::steady_clock::now();
    out = run_suite(filter, "", opt);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool same_reports(const std::vector<IdentityReport>& a, const std::vector<IdentityReport>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].id != b[i].id || a[i].params != b[i].params || a[i].pass != b[i].pass ||
            a[i].residual_exact != b[i].residual_exact)
            return false;
    }
    return true;
}

} // anonymous namespace

int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "E*";
    const int hw = omp_get_max_threads();
    std::printf("suite %-6s  hardware threads: %d\n", filter.c_str(), hw);

    std::vector<IdentityReport> serial, parallel;
    const double ts = run_timed(filter, 1, serial);
    std::printf("  serial   : %8.3f s   (%zu instances)\n", ts, serial.size());
    for (int t : {2, 4, hw}) {
        if (t <= 1 || (t == 2 && hw < 2) || (t == 4 && hw < 4)) continue;
        const double tp = run_timed(filter, t, parallel);
        const bool ok = same_reports(serial, parallel);
        std::printf("  %2d thread: %8.3f s   speedup %5.2fx   reports %s\n", t, tp, ts / tp,
                    ok ? "identical" : "DIFFER");
        if (!ok) return 1;
    }
    long fails = 0;
    for (const auto& r : serial)
        if (!r.pass) ++fails;
    std::printf("  failures : %ld\n", fails);
    return fails == 0 ? 0 : 1;
}
