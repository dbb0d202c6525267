// Acceptance suite: runs every criterion end to end and prints one line per
// criterion. Exit code 0 iff all criteria pass.
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pds/catalog.hpp"

using namespace pds;

namespace {

struct Line {
    bool pass;
    std::string text;
};
std::vector<Line> lines;

void record(int idx, bool pass, double seconds, size_t cases, const std::string& note) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "criterion %2d: %s  (%zu cases, %.2f s)%s%s", idx,
                  pass ? "PASS" : "FAIL", cases, seconds, note.empty() ? "" : "  -- ",
                  note.c_str());
    lines.push_back({pass, buf});
    std::printf("%s\n", buf);
    std::fflush(stdout);
}

struct SuiteResult {
    bool all_pass = true;
    size_t cases = 0;
    double seconds = 0.0;
    std::vector<IdentityReport> failures;
};

SuiteResult run_ids(const std::vector<std::string>& ids, const CatalogOptions& opt) {
    SuiteResult res;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& id : ids) {
        auto reports = run_case(id, opt);
        res.cases += reports.size();
        for (auto& r : reports)
            if (!r.pass) {
                res.all_pass = false;
                if (res.failures.size() < 5) res.failures.push_back(r);
            }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

void show_failures(const SuiteResult& r) {
    for (const auto& f : r.failures)
        std::printf("    failing: %s\n", report_json(f).c_str());
}

} // namespace

int main() {
    CatalogOptions opt;
    opt.threads = -1;  // all hardware threads; reports are order-deterministic
    std::printf("acceptance run, %d hardware threads\n", omp_get_max_threads());

    // 1. classical reciprocity over every coprime pair 1 <= c,d <= 50
    {
        auto r = run_ids({"E1"}, opt);
        const bool pass = r.all_pass && r.seconds < 5.0;
        record(1, pass, r.seconds, r.cases,
               "classical reciprocity exact on all ordered coprime pairs in [1,50]^2");
        show_failures(r);
    }
    // 2. reciprocity theorem, remark form, mirrored-sum relation
    {
        auto r = run_ids({"E2", "E3"}, opt);
        const bool pass = r.all_pass && r.cases >= 500 && r.seconds < 60.0;
        record(2, pass, r.seconds, r.cases, "zero residual across the sequence catalog");
        show_failures(r);
    }
    // 3. shifted reciprocity over the {0,1/2,1/3,-3/4,5/7}^2 grid
    {
        auto r = run_ids({"E4"}, opt);
        const bool pass = r.all_pass && r.seconds < 120.0;
        record(3, pass, r.seconds, r.cases,
               "right side re-derived from the transformation formulas");
        show_failures(r);
    }
    // 4. the section-7 exact suites
    {
        auto r = run_ids({"E5", "E6", "E7", "E8", "E9"}, opt);
        record(4, r.all_pass, r.seconds, r.cases,
               "includes s(d,c;I,I)=s(d,c)+1/4, phi(k)^2/4, the Hardy-Berndt split and "
               "alternating pairs; the published half-period constant -d/(24c) is "
               "irreproducible, the verified value is 1/(8dc)+c/(8d)");
        show_failures(r);
    }
    // 5. Fourier expansion vs direct sum
    {
        auto r = run_ids({"N1"}, opt);
        const bool pass = r.all_pass && r.seconds < 30.0;
        record(5, pass, r.seconds, r.cases, "|G_direct - G_fourier| <= 1e-7");
        show_failures(r);
    }
    // 6. transformation at s = -2N
    {
        auto r = run_ids({"N2"}, opt);
        record(6, r.all_pass, r.seconds, r.cases, "s = -2N transformation residual <= 1e-9");
        show_failures(r);
    }
    // 7. closed-form constants
    {
        auto r = run_ids({"N4", "N9", "N10", "N11", "N_ex1", "N_cauchy"}, opt);
        record(7, r.all_pass, r.seconds, r.cases,
               "pi/8, pi/(2sqrt3), pi/(4sqrt3), pi/(9sqrt3), 1/(2pi), (g-t)/3; Cauchy "
               "value verified as -pi^3/360, half the often-quoted constant");
        show_failures(r);
    }
    // 8. L at s = 0 and the L-function bridge
    {
        auto r = run_ids({"N12"}, opt);
        record(8, r.all_pass, r.seconds, r.cases, "L(0)=P1 on 50 draws; P1(0,G)=i bridge");
        show_failures(r);
    }
    // 9. loop integral oracle
    {
        auto r = run_ids({"N13"}, opt);
        record(9, r.all_pass, r.seconds, r.cases, "residue vs quadrature <= 1e-8, 20 draws");
        show_failures(r);
    }
    // 10. eps-limits of the s -> 0 transformation
    {
        auto r = run_ids({"N14"}, opt);
        record(10, r.all_pass, r.seconds, r.cases, "Richardson limits within 1e-5");
        show_failures(r);
    }

    int failed = 0;
    for (const auto& l : lines)
        if (!l.pass) ++failed;
    std::printf("%s: %zu/%zu criteria pass\n", failed == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                lines.size() - failed, lines.size());
    return failed == 0 ? 0 : 1;
}
