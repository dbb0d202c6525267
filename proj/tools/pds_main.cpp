// pds: exact and numeric evaluation of periodic Dedekind sums and the
// transformation-formula identity catalog.
//
// Commands: compute, verify, sequence, list-identities.
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "pds/analytic.hpp"
#include "pds/catalog.hpp"
#include "pds/dedekind.hpp"
#include "pds/errors.hpp"

using namespace pds;

namespace {

struct Config {
    int threads = 0;             // 0 = all hardware threads
    int max_order = 360;
    double tail_target = 1e-13;
    long max_terms = 4'000'000;
    double tolerance_scale = 1.0;
    std::string format = "text"; // text | json
};

// flat key=value file; '#' starts a comment
void load_config_file(const std::string& path, Config& cfg) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (key == "threads") cfg.threads = std::stoi(val);
        else if (key == "max_order") cfg.max_order = std::stoi(val);
        else if (key == "tail_target") cfg.tail_target = std::stod(val);
        else if (key == "max_terms") cfg.max_terms = std::stol(val);
        else if (key == "tolerance_scale") cfg.tolerance_scale = std::stod(val);
        else if (key == "format") cfg.format = val;
        else throw parse_error("unknown config key '" + key + "'");
    }
}

void print_value(const Cyclotomic& v) {
    std::printf("%s\n", v.to_string().c_str());
    const auto e = v.embed();
    std::printf("= %.15f %+.15fi\n", e.real(), e.imag());
}

void print_value(Complex v) {
    std::printf("%.15f %+.15fi\n", v.real(), v.imag());
}

long parse_mult(const std::string& text, long c, long d, Family fam) {
    if (text == "auto") return fam == Family::BbAc ? min_b(c, d) : min_a(c, d);
    return std::stol(text);
}

int cmd_verify(const std::string& filter, const std::string& mode, const Config& cfg,
               bool quiet) {
    CatalogOptions opt;
    opt.threads = cfg.threads == 0 ? -1 : cfg.threads;
    opt.tolerance_scale = cfg.tolerance_scale;
    opt.budget.tail_bound_target = cfg.tail_target;
    opt.budget.max_terms = cfg.max_terms;
    auto reports = run_suite(filter, mode, opt);
    long passed = 0;
    for (const auto& r : reports) {
        if (r.pass) ++passed;
        if (!quiet || !r.pass) std::printf("%s\n", report_json(r).c_str());
    }
    std::printf("%ld/%zu\n", passed, reports.size());
    return passed == static_cast<long>(reports.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    if (const char* env = std::getenv("PDS_CONFIG")) {
        try {
            load_config_file(env, cfg);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "config error: %s\n", e.what());
            return 2;
        }
    }

    CLI::App app{"periodic Dedekind sums and Eisenstein transformation identities"};
    app.require_subcommand(1);

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "evaluate one sum or function");
    compute->require_subcommand(1);
    long arg_d = 1, arg_c = 1, arg_n = 0, arg_j = 0, arg_k = 4, arg_r = 1;
    int arg_i = 0, arg_i1 = 0, arg_i2 = 0;
    std::string arg_b = "auto", arg_A, arg_B, arg_seq, arg_x = "0", arg_y = "0",
                arg_family = "BbAc";

    auto* c_classical = compute->add_subcommand("classical", "classical Dedekind sum s(d,c)");
    c_classical->add_option("--d", arg_d)->required();
    c_classical->add_option("--c", arg_c)->required();

    auto* c_s2 = compute->add_subcommand("s2", "Hardy-Berndt sum s2(d,c)");
    c_s2->add_option("--d", arg_d)->required();
    c_s2->add_option("--c", arg_c)->required();
    auto* c_s3 = compute->add_subcommand("s3", "Hardy-Berndt sum s3(d,c)");
    c_s3->add_option("--d", arg_d)->required();
    c_s3->add_option("--c", arg_c)->required();

    auto* c_per = compute->add_subcommand("periodic", "periodic Dedekind sum");
    c_per->add_option("--family", arg_family)->check(CLI::IsMember({"BbAc", "AdBa"}));
    c_per->add_option("--d", arg_d)->required();
    c_per->add_option("--c", arg_c)->required();
    c_per->add_option("--b", arg_b, "multiplier b (BbAc) or a (AdBa); 'auto' picks the least valid one");
    c_per->add_option("--A", arg_A)->required();
    c_per->add_option("--B", arg_B)->required();

    auto* c_gen = compute->add_subcommand("generalized", "shifted periodic Dedekind sum");
    c_gen->add_option("--family", arg_family)->check(CLI::IsMember({"BbAc", "AdBa"}));
    c_gen->add_option("--d", arg_d)->required();
    c_gen->add_option("--c", arg_c)->required();
    c_gen->add_option("--b", arg_b);
    c_gen->add_option("--A", arg_A)->required();
    c_gen->add_option("--B", arg_B)->required();
    c_gen->add_option("--x", arg_x);
    c_gen->add_option("--y", arg_y);

    auto* c_star = compute->add_subcommand("star", "alternating character sum s*(d,c;chi2,chi1)");
    c_star->add_option("--d", arg_d)->required();
    c_star->add_option("--c", arg_c)->required();
    c_star->add_option("--k", arg_k)->required();
    c_star->add_option("--i2", arg_i2)->required();
    c_star->add_option("--i1", arg_i1)->required();

    auto* c_P = compute->add_subcommand("P", "periodic Bernoulli function P_n(x, A_c)");
    c_P->add_option("--n", arg_n)->required();
    c_P->add_option("--x", arg_x)->required();
    c_P->add_option("--seq", arg_seq)->required();
    c_P->add_option("--c", arg_c);

    auto* c_B = compute->add_subcommand("B", "periodic Bernoulli number B_j(A) or polynomial B_j(x,A)");
    c_B->add_option("--j", arg_j)->required();
    c_B->add_option("--seq", arg_seq)->required();
    std::string arg_bx;
    c_B->add_option("--x", arg_bx, "if given, evaluates B_j(x, A)");

    auto* c_gauss = compute->add_subcommand("gauss", "Gauss sum G(n, chi)");
    c_gauss->add_option("--n", arg_n)->required();
    c_gauss->add_option("--k", arg_k)->required();
    c_gauss->add_option("--i", arg_i)->required();

    auto* c_L = compute->add_subcommand("L", "Dirichlet L(r, chi)");
    c_L->add_option("--r", arg_r)->required();
    c_L->add_option("--k", arg_k)->required();
    c_L->add_option("--i", arg_i)->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run identity suites");
    std::string v_filter = "*", v_mode;
    bool v_quiet = false;
    verify->add_option("--filter", v_filter, "glob over identity ids, e.g. 'E*'");
    verify->add_option("--mode", v_mode)->check(CLI::IsMember({"", "exact", "numeric"}));
    verify->add_flag("--quiet", v_quiet, "print only failing case reports");
    verify->add_option("--threads", cfg.threads);
    verify->add_option("--tolerance-scale", cfg.tolerance_scale);

    // ---- sequence ----
    auto* seqcmd = app.add_subcommand("sequence", "print a sequence, its hat and flags");
    std::string s_spec;
    seqcmd->add_option("spec", s_spec)->required();

    // ---- list-identities ----
    auto* listcmd = app.add_subcommand("list-identities", "registered identity catalog");

    CLI11_PARSE(app, argc, argv);

    set_max_cyclotomic_order(cfg.max_order);

    try {
        if (compute->parsed()) {
            if (c_classical->parsed()) {
                print_value(Cyclotomic(classical_s(arg_d, arg_c)));
            } else if (c_s2->parsed()) {
                print_value(Cyclotomic(hardy_s2(arg_d, arg_c)));
            } else if (c_s3->parsed()) {
                print_value(Cyclotomic(hardy_s3(arg_d, arg_c)));
            } else if (c_per->parsed()) {
                const Family fam = arg_family == "BbAc" ? Family::BbAc : Family::AdBa;
                PeriodicSequence A = make_sequence(arg_A), B = make_sequence(arg_B);
                const long mult = parse_mult(arg_b, arg_c, arg_d, fam);
                print_value(periodic_dedekind(arg_d, arg_c, mult, A, B, fam));
            } else if (c_gen->parsed()) {
                const Family fam = arg_family == "BbAc" ? Family::BbAc : Family::AdBa;
                PeriodicSequence A = make_sequence(arg_A), B = make_sequence(arg_B);
                const long mult = parse_mult(arg_b, arg_c, arg_d, fam);
                print_value(generalized_dedekind(arg_d, arg_c, mult, A, B,
                                                 Rational::from_string(arg_x),
                                                 Rational::from_string(arg_y), fam));
            } else if (c_star->parsed()) {
                auto chars = dirichlet_characters(static_cast<int>(arg_k));
                if (arg_i1 >= static_cast<int>(chars.size()) ||
                    arg_i2 >= static_cast<int>(chars.size()))
                    throw domain_error("character index out of range");
                print_value(alternating_char_sum(arg_d, arg_c, chars[arg_i2], chars[arg_i1]));
            } else if (c_P->parsed()) {
                print_value(periodic_P(static_cast<int>(arg_n), Rational::from_string(arg_x),
                                       make_sequence(arg_seq), arg_c));
            } else if (c_B->parsed()) {
                PeriodicSequence A = make_sequence(arg_seq);
                if (arg_bx.empty())
                    print_value(periodic_B(static_cast<int>(arg_j), A));
                else
                    print_value(periodic_B_poly(static_cast<int>(arg_j),
                                                Rational::from_string(arg_bx), A));
            } else if (c_gauss->parsed()) {
                auto chars = dirichlet_characters(static_cast<int>(arg_k));
                if (arg_i >= static_cast<int>(chars.size()))
                    throw domain_error("character index out of range");
                print_value(gauss_sum(arg_n, chars[arg_i]));
            } else if (c_L->parsed()) {
                auto chars = dirichlet_characters(static_cast<int>(arg_k));
                if (arg_i >= static_cast<int>(chars.size()))
                    throw domain_error("character index out of range");
                print_value(dirichlet_L(static_cast<int>(arg_r), chars[arg_i]));
            }
            return 0;
        }
        if (verify->parsed()) return cmd_verify(v_filter, v_mode, cfg, v_quiet);
        if (seqcmd->parsed()) {
            PeriodicSequence A = make_sequence(s_spec);
            PeriodicSequence H = fourier_hat(A);
            std::printf("# %s  period %d\n", s_spec.c_str(), A.period());
            std::printf("%-4s %-28s %s\n", "n", "f(n)", "hat f(n)");
            for (int n = 0; n < A.period(); ++n)
                std::printf("%-4d %-28s %s\n", n, A.at(n).to_string().c_str(),
                            H.at(n).to_string().c_str());
            // character bookkeeping when the spec names one
            if (s_spec.rfind("char:", 0) == 0 || s_spec.rfind("principal:", 0) == 0) {
                for (const auto& chi : dirichlet_characters(A.period())) {
                    if (!(chi.sequence() == A)) continue;
                    std::printf("# parity %s, %s, %s\n", chi.parity() == 1 ? "even" : "odd",
                                chi.is_principal() ? "principal" : "non-principal",
                                chi.is_primitive() ? "primitive" : "imprimitive");
                }
            }
            return 0;
        }
        if (listcmd->parsed()) {
            for (const auto& e : catalog_info()) {
                std::printf("%-9s %-8s %-12s %s%s%s\n", e.id.c_str(), e.mode.c_str(),
                            e.mode == "numeric" ? ("tol=" + std::to_string(e.tolerance)).c_str()
                                                : "",
                            e.anchor.c_str(), e.note.empty() ? "" : "  [",
                            e.note.empty() ? "" : (e.note + "]").c_str());
            }
            return 0;
        }
    } catch (const domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const pole_error& e) {
        std::fprintf(stderr, "pole error: %s\n", e.what());
        return 2;
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
