#include "pds/catalog.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "pds/dedekind.hpp"
#include "pds/errors.hpp"

namespace pds {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
const Complex I_UNIT(0.0, 1.0);

// ---------------------------------------------------------------------------
// registry plumbing
// ---------------------------------------------------------------------------

struct Outcome {
    std::optional<Cyclotomic> exact;
    double numeric = 0.0;     // |lhs - rhs|
    double tail = 0.0;
};

struct Instance {
    std::string params;
    std::function<Outcome()> eval;
};

struct Entry {
    std::string id;
    std::string anchor;
    bool exact;
    double tolerance;         // numeric mode
    std::string note;
    std::function<void(std::vector<Instance>&, const CatalogOptions&)> enumerate;
};

std::vector<Entry>& registry();

std::string cpx(Complex z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

// deterministic small-rational sequences for the sweeps
PeriodicSequence random_rational_seq(int k, unsigned long seed) {
    std::uint64_t x = 0x9E3779B97F4A7C15ull * (seed + 1) + 0xD1B54A32D192ED03ull;
    auto next = [&x]() {
        x = x * 6364136223846793005ull + 1442695040888963407ull;
        return x >> 33;
    };
    std::vector<Cyclotomic> vals;
    vals.reserve(k);
    for (int n = 0; n < k; ++n) {
        long num = static_cast<long>(next() % 19) - 9;
        long den = 1 + static_cast<long>(next() % 7);
        vals.push_back(Cyclotomic(Rational(num, den)));
    }
    PeriodicSequence s(k, std::move(vals));
    s.label = "rand:k=" + std::to_string(k) + ",seed=" + std::to_string(seed);
    return s;
}

// catalog sequence zoo for the reciprocity sweeps
std::vector<PeriodicSequence> sweep_sequences(int k) {
    std::vector<PeriodicSequence> out;
    if (k == 1) {
        out.push_back(make_sequence("const:k=1"));
    } else {
        const int phi = euler_phi(k);
        for (int i = 0; i < phi; ++i)
            out.push_back(make_sequence("char:k=" + std::to_string(k) + ",i=" + std::to_string(i)));
        for (int i = 0; i < phi; ++i)
            out.push_back(make_sequence("gauss:k=" + std::to_string(k) + ",i=" + std::to_string(i)));
        out.push_back(make_sequence("ramanujan:k=" + std::to_string(k)));
        out.push_back(make_sequence("exp:k=" + std::to_string(k)));
        if (k % 2 == 0)
            for (int i = 0; i < phi; ++i)
                out.push_back(make_sequence("altchar:k=" + std::to_string(k) + ",i=" + std::to_string(i)));
        // odd-modulus alternating sequences carry period 2k and join the sweep
        // at the doubled modulus
        if (k == 6) out.push_back(make_sequence("altchar:k=3,i=1"));
        if (k == 2) out.push_back(make_sequence("altchar:k=1,i=0"));
    }
    for (unsigned long s = 1; s <= 3; ++s) out.push_back(random_rational_seq(k, 100 * k + s));
    return out;
}

Cyclotomic seq_mean(const PeriodicSequence& A) { return periodic_B(0, A); }

Cyclotomic P2at(const Rational& x, const PeriodicSequence& A, long c) {
    return periodic_P(2, x, A, c);
}
Cyclotomic P1at(const Rational& x, const PeriodicSequence& A, long c) {
    return periodic_P(1, x, A, c);
}

// residual combiner: zero iff every part is zero (reports the first nonzero)
Cyclotomic combine(std::initializer_list<Cyclotomic> parts) {
    for (const auto& p : parts)
        if (!p.is_zero()) return p;
    return Cyclotomic(0);
}

// the Hardy-Berndt kernels without the coprimality gate: the split relations
// and the exponential/hat expansions evaluate them at arguments like (2c, 2d)
Rational cls_raw(long d, long c) {
    Rational acc(0);
    for (long n = 1; n < c; ++n)
        acc += sawtooth(Rational(n, c)) * sawtooth(Rational(d * n, c));
    return acc;
}
Rational hs2_raw(long d, long c) {
    Rational acc(0);
    for (long n = 1; n < c; ++n) {
        Rational t = bernoulli_P(1, Rational(n, c)) * bernoulli_P(1, Rational(d * n, c));
        acc += (n % 2 == 0) ? t : -t;
    }
    return acc;
}
Rational hs3_raw(long d, long c) {
    Rational acc(0);
    for (long n = 1; n < c; ++n) {
        Rational t = bernoulli_P(1, Rational(d * n, c));
        acc += (n % 2 == 0) ? t : -t;
    }
    return acc;
}

// i (zeta_4) and the exact cotangent i(zeta^j+1)/(zeta^j-1)
Cyclotomic imag_unit() { return Cyclotomic::root_of_unity(4, 1); }

Cyclotomic cot_exact(long j, int k) {
    Cyclotomic z = Cyclotomic::root_of_unity(k, j);
    if (z == Cyclotomic(1)) throw domain_error("cot at integer multiple of pi");
    return imag_unit() * (z + Cyclotomic(1)) * (z - Cyclotomic(1)).inverse();
}

// reciprocity residual; zero iff the theorem holds on this instance
Cyclotomic reciprocity_residual(long c, long d, const PeriodicSequence& A, const PeriodicSequence& B) {
    const long b = min_b(c, d);
    Cyclotomic lhs = dedekind_mirrored(c, d, b, A, B) -
                     dedekind_raw(d, c, b, A, B, Family::BbAc);
    Cyclotomic rhs = P1at(Rational(0), B, -b) * P1at(Rational(0), A, -c) -
                     Cyclotomic(Rational(d, c)) * seq_mean(A) * P2at(Rational(0), B, b) -
                     Cyclotomic(Rational(c, d)) * seq_mean(B) * P2at(Rational(0), A, c) -
                     Cyclotomic(Rational(1, 2 * d * c)) * seq_mean(B) * periodic_B(2, A);
    return lhs - rhs;
}

// remark reciprocity form and the mirrored-sum relation together, sharing
// the three sums
std::pair<Cyclotomic, Cyclotomic> remark_residuals(long c, long d, const PeriodicSequence& A,
                                                   const PeriodicSequence& B) {
    const long b = min_b(c, d);
    const Cyclotomic swapped = dedekind_swapped(c, d, b, A, B);
    const Cyclotomic corner = A.at(0) * P1at(Rational(0), B, 1);
    Cyclotomic r_remark =
        swapped + dedekind_raw(d, c, b, A, B, Family::BbAc) +
        P1at(Rational(0), B, -b) * P1at(Rational(0), A, -c) -
        Cyclotomic(Rational(1, 2 * d * c)) * seq_mean(B) * periodic_B(2, A) -
        Cyclotomic(Rational(d, c)) * seq_mean(A) * P2at(Rational(0), B, b) -
        Cyclotomic(Rational(c, d)) * seq_mean(B) * P2at(Rational(0), A, c) + corner;
    Cyclotomic r_51 = dedekind_mirrored(c, d, b, A, B) + swapped + corner;
    return {r_remark, r_51};
}

// shifted reciprocity with the re-derived right side (the published statement
// carries two argument slips); this form reduces to the unshifted theorem at
// R1 = R2 = 0 and was cross-checked against the transformation formulas
Cyclotomic shifted_reciprocity_residual(long c, long d, const PeriodicSequence& A, const PeriodicSequence& B,
                         const Rational& R1, const Rational& R2) {
    const long b = min_b(c, d);
    Cyclotomic lhs = dedekind_mirrored_gen(c, d, b, A, B, R1, R2) -
                     dedekind_raw_gen(d, c, b, A, B, R2, -R1, Family::BbAc);
    Cyclotomic rhs = P1at(-R2, A, -c) * P1at(-R1, B, -b) -
                     Cyclotomic(Rational(1, c * d)) * seq_mean(B) *
                         P2at(Rational(c) * R2 - Rational(d) * R1, A, 1) -
                     Cyclotomic(Rational(d, c)) * seq_mean(A) * P2at(-R1, B, -b) -
                     Cyclotomic(Rational(c, d)) * seq_mean(B) * P2at(R2, A, c);
    return lhs - rhs;
}

// (c,d) sweep for a given k: c <= cmax coprime to d, d = mult*k <= 6k.
std::vector<std::pair<long, long>> cd_domain(int k, long cmax = 10, long dmax_mult = 6) {
    std::vector<std::pair<long, long>> out;
    for (long dm = 1; dm <= dmax_mult; ++dm) {
        const long d = dm * k;
        for (long c = 1; c <= cmax; ++c)
            if (std::gcd(c, d) == 1) out.emplace_back(c, d);
    }
    return out;
}

std::string cdparam(int k, long c, long d, const std::string& la, const std::string& lb) {
    std::ostringstream os;
    os << "k=" << k << " c=" << c << " d=" << d << " A=" << la << " B=" << lb;
    return os.str();
}

// embedded character values and Gauss values at complex arguments
Complex gauss_c(Complex x, const std::vector<Complex>& chi, int k) {
    Complex acc(0.0, 0.0);
    for (int v = 0; v < k; ++v) {
        if (std::abs(chi[v]) == 0.0) continue;
        acc += chi[v] * std::exp(2.0 * PI * I_UNIT * x * static_cast<double>(v) /
                                 static_cast<double>(k));
    }
    return acc;
}

// section-6 convention: the f(-n)-weighted Bernoulli value B_m(0, chi)
// (equal to chi(-1) times the generating-function B_m(chi) for characters)
Complex Bchi(int m, const PeriodicSequence& s) {
    return periodic_B_poly(m, Rational(0), s).embed();
}

double dfact(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Complex ipow(Complex z, int e) {
    Complex r(1.0, 0.0);
    if (e >= 0) {
        for (int i = 0; i < e; ++i) r *= z;
    } else {
        for (int i = 0; i < -e; ++i) r /= z;
    }
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// glob + json
// ---------------------------------------------------------------------------

bool glob_match(const std::string& pattern, const std::string& text) {
    size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

static std::string json_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') r.push_back('\\');
        r.push_back(c);
    }
    return r;
}

std::string report_json(const IdentityReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"id\":\"" << json_escape(r.id) << "\",\"params\":{\"case\":\""
       << json_escape(r.params) << "\"},\"mode\":\"" << r.mode << "\",\"residual\":";
    if (r.mode == "exact")
        os << "\"" << json_escape(r.residual_exact) << "\"";
    else
        os << r.residual_mag;
    os << ",\"pass\":" << (r.pass ? "true" : "false") << ",\"tail\":" << r.tail
       << ",\"elapsed_ms\":" << r.elapsed_ms << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// exact suites E1 - E12
// ---------------------------------------------------------------------------

namespace {

void reg_E1(std::vector<Instance>& out, const CatalogOptions&) {
    for (long c = 1; c <= 50; ++c)
        for (long d = 1; d <= 50; ++d) {
            if (std::gcd(c, d) != 1) continue;
            std::ostringstream os;
            os << "c=" << c << " d=" << d;
            out.push_back({os.str(), [c, d]() {
                Rational lhs = classical_s(d, c) + classical_s(c, d);
                Rational rhs = Rational(-1, 4) +
                               Rational(1, 12) * (Rational(d, c) + Rational(c, d) +
                                                  Rational(1, d * c));
                Outcome o;
                o.exact = Cyclotomic(lhs - rhs);
                return o;
            }});
        }
}

const int kSweepModuli[5] = {1, 2, 3, 4, 6};

void reg_E2(std::vector<Instance>& out, const CatalogOptions&) {
    for (int k : kSweepModuli) {
        auto seqs = sweep_sequences(k);
        auto cds = cd_domain(k);
        for (const auto& A : seqs)
            for (const auto& B : seqs)
                for (auto [c, d] : cds) {
                    if (A.period() != B.period()) continue;
                    out.push_back({cdparam(k, c, d, A.label, B.label), [c = c, d = d, A, B]() {
                        Outcome o;
                        o.exact = reciprocity_residual(c, d, A, B);
                        return o;
                    }});
                }
    }
}

void reg_E3(std::vector<Instance>& out, const CatalogOptions&) {
    for (int k : kSweepModuli) {
        auto seqs = sweep_sequences(k);
        auto cds = cd_domain(k);
        for (const auto& A : seqs)
            for (const auto& B : seqs)
                for (auto [c, d] : cds) {
                    if (A.period() != B.period()) continue;
                    out.push_back({cdparam(k, c, d, A.label, B.label), [c = c, d = d, A, B]() {
                        auto [r_remark, r_51] = remark_residuals(c, d, A, B);
                        Outcome o;
                        o.exact = combine({r_remark, r_51});
                        return o;
                    }});
                }
    }
}

void reg_E4(std::vector<Instance>& out, const CatalogOptions&) {
    const Rational shifts[5] = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(-3, 4),
                                Rational(5, 7)};
    for (int k : kSweepModuli) {
        auto seqs = sweep_sequences(k);
        // a representative subset of pairs per k keeps the sweep affordable
        std::vector<std::pair<size_t, size_t>> pairs = {{0, 0}};
        if (seqs.size() > 3) pairs.push_back({1, 0});
        if (seqs.size() > 4) pairs.push_back({2, seqs.size() - 1});
        pairs.push_back({seqs.size() - 2, seqs.size() - 1});
        auto cds = cd_domain(k);
        for (auto [ia, ib] : pairs) {
            const auto& A = seqs[ia];
            const auto& B = seqs[ib];
            if (A.period() != B.period()) continue;
            for (auto [c, d] : cds)
                for (const auto& R1 : shifts)
                    for (const auto& R2 : shifts) {
                        std::string p = cdparam(k, c, d, A.label, B.label) + " R1=" +
                                        R1.to_string() + " R2=" + R2.to_string();
                        out.push_back({p, [c = c, d = d, A, B, R1, R2]() {
                            Outcome o;
                            o.exact = shifted_reciprocity_residual(c, d, A, B, R1, R2);
                            return o;
                        }});
                    }
        }
    }
}

Cyclotomic conj_value(const DirichletCharacter& chi, long n) {
    // chi-bar(n) = chi(n^{-1}) for n coprime to the modulus
    const int k = chi.modulus();
    long ninv = 1;
    for (long x = 1; x <= k; ++x)
        if (((n % k + k) % k * x) % k == 1 % k) { ninv = x; break; }
    return chi(ninv);
}

void reg_E5(std::vector<Instance>& out, const CatalogOptions&) {
    for (int k : {3, 4, 6, 5}) {
        auto chars = dirichlet_characters(k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars) {
                for (auto [c, d] : cd_domain(k, 7, 2)) {
                    std::ostringstream os;
                    os << "k=" << k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                       << " c=" << c << " d=" << d;
                    if (c1.parity() * c2.parity() == 1) {
                        out.push_back({os.str(), [k, c1, c2, c = c, d = d]() {
                            const long b = min_b(c, d);
                            Cyclotomic lhs = dedekind_norm(c, d, c1.sequence(), c2.sequence()) +
                                             dedekind_norm(d, c, c2.sequence(), c1.sequence());
                            Cyclotomic B1a = periodic_B(1, c1.sequence());
                            Cyclotomic B1b = periodic_B(1, c2.sequence());
                            Cyclotomic rhs =
                                -B1a * B1b +
                                (Cyclotomic(Rational(1, c)) * conj_value(c1, c) +
                                 Cyclotomic(Rational(c))) *
                                    conj_value(c2, b) * Cyclotomic(Rational(1, 2 * d)) *
                                    periodic_B(0, c2.sequence()) * periodic_B(2, c1.sequence()) +
                                Cyclotomic(Rational(d, 2 * c)) * conj_value(c1, c) *
                                    periodic_B(0, c1.sequence()) * periodic_B(2, c2.sequence());
                            Outcome o;
                            o.exact = lhs - rhs;
                            return o;
                        }});
                    } else {
                        // opposite parity: the normalized sums vanish
                        out.push_back({os.str() + " vanishing", [c1, c2, c = c, d = d]() {
                            Cyclotomic lhs = dedekind_norm(c, d, c1.sequence(), c2.sequence());
                            Cyclotomic lhs2 = dedekind_norm(d, c, c2.sequence(), c1.sequence());
                            Outcome o;
                            o.exact = combine({lhs, lhs2});
                            return o;
                        }});
                    }
                }
            }
    }
}

void reg_E6(std::vector<Instance>& out, const CatalogOptions&) {
    // item 3: s(c,d;chi1,G2) + s(d,c;G2,chi1) = -chi1(-1)chi2(-1) P1(0,chi1) P1(0,G2)
    for (int k : {3, 4, 6}) {
        auto chars = dirichlet_characters(k);
        for (const auto& c1 : chars) {
            if (c1.is_principal()) continue;
            for (const auto& c2 : chars) {
                if (c2.is_principal()) continue;
                PeriodicSequence G2 = make_sequence("gauss:k=" + std::to_string(k) +
                                                    ",i=" + std::to_string(c2.ordinal()));
                for (auto [c, d] : cd_domain(k, 7, 2)) {
                    std::ostringstream os;
                    os << "k=" << k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                       << " c=" << c << " d=" << d;
                    out.push_back({os.str() + " branch=nonprincipal",
                                   [c1, c2, G2, c = c, d = d]() {
                        Cyclotomic lhs = dedekind_norm(c, d, c1.sequence(), G2) +
                                         dedekind_norm(d, c, G2, c1.sequence());
                        Cyclotomic rhs = -(c1(-1) * c2(-1)) * P1at(Rational(0), c1.sequence(), 1) *
                                         P1at(Rational(0), G2, 1);
                        Outcome o;
                        o.exact = lhs - rhs;
                        return o;
                    }});
                    out.push_back({os.str() + " branch=remark-swapped",
                                   [c1, c2, G2, c = c, d = d]() {
                        Cyclotomic lhs = dedekind_norm(c, d, G2, c1.sequence()) +
                                         dedekind_norm(d, c, c1.sequence(), G2);
                        Cyclotomic rhs = -(c1(-1) * c2(-1)) * P1at(Rational(0), c1.sequence(), 1) *
                                         P1at(Rational(0), G2, 1);
                        Outcome o;
                        o.exact = lhs - rhs;
                        return o;
                    }});
                }
            }
        }
    }
    // principal branch: s(c,d;chi0,ck) + s(d,c;ck,chi0) = (d/c) B0(chi0) P2(0,ck)
    for (int k : {2, 3, 4, 6}) {
        PeriodicSequence chi0 = make_sequence("principal:k=" + std::to_string(k));
        PeriodicSequence ck = make_sequence("ramanujan:k=" + std::to_string(k));
        for (auto [c, d] : cd_domain(k, 7, 2)) {
            std::ostringstream os;
            os << "k=" << k << " c=" << c << " d=" << d << " branch=principal";
            out.push_back({os.str(), [chi0, ck, c = c, d = d]() {
                Cyclotomic lhs = dedekind_norm(c, d, chi0, ck) + dedekind_norm(d, c, ck, chi0);
                Cyclotomic rhs = Cyclotomic(Rational(d, c)) * seq_mean(chi0) *
                                 P2at(Rational(0), ck, 1);
                Outcome o;
                o.exact = lhs - rhs;
                return o;
            }});
            std::ostringstream os2;
            os2 << "k=" << k << " c=" << c << " d=" << d << " branch=principal-swapped";
            out.push_back({os2.str(), [chi0, ck, c = c, d = d]() {
                // remark variant: s(c,d;ck,chi0)+s(d,c;chi0,ck) = (1/c + c)(1/d) B0 P2(0,ck)
                Cyclotomic lhs = dedekind_norm(c, d, ck, chi0) + dedekind_norm(d, c, chi0, ck);
                Cyclotomic rhs = (Cyclotomic(Rational(1, c)) + Cyclotomic(Rational(c))) *
                                 Cyclotomic(Rational(1, d)) * seq_mean(chi0) *
                                 P2at(Rational(0), ck, 1);
                Outcome o;
                o.exact = lhs - rhs;
                return o;
            }});
        }
    }
    // Hardy-Berndt split: k = 2, d even
    for (long c : {1L, 3L, 5L, 7L, 9L})
        for (long d : {2L, 4L, 6L, 8L}) {
            if (std::gcd(c, d) != 1) continue;
            std::ostringstream os;
            os << "k=2 c=" << c << " d=" << d << " rel=hb-split";
            out.push_back({os.str(), [c, d]() {
                PeriodicSequence chi0 = make_sequence("principal:k=2");
                PeriodicSequence c2 = make_sequence("ramanujan:k=2");
                Cyclotomic r1 =
                    dedekind_norm(c, d, chi0, c2) -
                    Cyclotomic(Rational(2) * cls_raw(c, 2 * d) -
                               Rational(3) * cls_raw(c, d) + cls_raw(2 * c, d));
                Cyclotomic r2 = dedekind_norm(d, c, c2, chi0) -
                                Cyclotomic(hs2_raw(2 * d, 2 * c) - hs2_raw(d, 2 * c));
                Outcome o;
                o.exact = combine({r1, r2});
                return o;
            }});
        }
}

void reg_E7(std::vector<Instance>& out, const CatalogOptions&) {
    for (int k : {2, 3, 4, 6}) {
        PeriodicSequence ck = make_sequence("ramanujan:k=" + std::to_string(k));
        const long phi = euler_phi(k);
        for (auto [c, d] : cd_domain(k, 7, 2)) {
            std::ostringstream os;
            os << "k=" << k << " c=" << c << " d=" << d << " rel=phi2/4";
            out.push_back({os.str(), [ck, c = c, d = d, phi]() {
                Cyclotomic lhs = dedekind_norm(c, d, ck, ck) + dedekind_norm(d, c, ck, ck);
                Outcome o;
                o.exact = lhs - Cyclotomic(Rational(phi * phi, 4));
                return o;
            }});
        }
        if (k > 2) {
            auto chars = dirichlet_characters(k);
            for (const auto& c1 : chars) {
                if (c1.is_principal()) continue;
                for (const auto& c2 : chars) {
                    if (c2.is_principal()) continue;
                    PeriodicSequence G1 = make_sequence("gauss:k=" + std::to_string(k) +
                                                        ",i=" + std::to_string(c1.ordinal()));
                    PeriodicSequence G2 = make_sequence("gauss:k=" + std::to_string(k) +
                                                        ",i=" + std::to_string(c2.ordinal()));
                    for (auto [c, d] : cd_domain(k, 5, 1)) {
                        std::ostringstream os;
                        os << "k=" << k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                           << " c=" << c << " d=" << d << " rel=gauss-pair";
                        out.push_back({os.str(), [G1, G2, c = c, d = d]() {
                            Cyclotomic lhs = dedekind_norm(c, d, G1, G2) +
                                             dedekind_norm(d, c, G2, G1);
                            Cyclotomic rhs = -P1at(Rational(0), G1, 1) * P1at(Rational(0), G2, 1);
                            Outcome o;
                            o.exact = lhs - rhs;
                            return o;
                        }});
                    }
                }
            }
        }
    }
    // k = 2 relation with s2
    for (long c : {1L, 3L, 5L, 7L})
        for (long d : {2L, 4L, 6L}) {
            if (std::gcd(c, d) != 1) continue;
            std::ostringstream os;
            os << "k=2 c=" << c << " d=" << d << " rel=s2";
            out.push_back({os.str(), [c, d]() {
                PeriodicSequence c2 = make_sequence("ramanujan:k=2");
                Cyclotomic lhs = dedekind_norm(d, c, c2, c2);
                Cyclotomic rhs = Cyclotomic(Rational(2) * hs2_raw(d, 2 * c) -
                                            hs2_raw(2 * d, 2 * c) + Rational(1, 4));
                Outcome o;
                o.exact = lhs - rhs;
                return o;
            }});
        }
}

// alternating reciprocity in full; the published display lacks the 1/h
// factors on the two B0* P2* terms and uses chi1(-c) for chi1(c)
Cyclotomic alternating_full_residual(const DirichletCharacter& c1, const DirichletCharacter& c2, long c,
                          long d) {
    const int h = c1.modulus();
    const long b = min_b(c, d);
    Cyclotomic lhs = alternating_char_sum(c, d, c1, c2) +
                     c1(-1) * c2(-1) * alternating_char_sum(d, c, c2, c1);
    Cyclotomic rhs = -c2(-1) * P_star(1, Rational(0), c2) * P_star(1, Rational(0), c1) +
                     Cyclotomic(Rational(1, 2 * d * c)) * c1(c) * c2(-b) * B_star(0, c2) *
                         B_star(2, c1) +
                     Cyclotomic(Rational(d, c * h)) * c1(c) * B_star(0, c1) *
                         P_star(2, Rational(0), c2) +
                     Cyclotomic(Rational(c, d * h)) * c1(-1) * c2(-b) * B_star(0, c2) *
                         P_star(2, Rational(0), c1);
    return lhs - rhs;
}

void reg_E8(std::vector<Instance>& out, const CatalogOptions&) {
    for (int k : {4, 6, 8}) {
        auto chars = dirichlet_characters(k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars) {
                if (c1.parity() * c2.parity() != 1) continue;
                for (auto [c, d] : cd_domain(k, 7, 2)) {
                    if (c % 2 == 0) continue;  // b, c odd in this family
                    std::ostringstream os;
                    os << "k=" << k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                       << " c=" << c << " d=" << d;
                    out.push_back({os.str() + " rel=alt-full", [c1, c2, c = c, d = d]() {
                        Outcome o;
                        o.exact = alternating_full_residual(c1, c2, c, d);
                        return o;
                    }});
                    if (!c1.is_principal() && !c2.is_principal()) {
                        out.push_back({os.str() + " rel=alt-pair", [c1, c2, c = c, d = d]() {
                            Cyclotomic lhs =
                                alternating_char_sum(c, d, c1, c2) +
                                c1(-1) * c2(-1) * alternating_char_sum(d, c, c2, c1);
                            Cyclotomic rhs = -c2(-1) * P_star(1, Rational(0), c2) *
                                             P_star(1, Rational(0), c1);
                            Outcome o;
                            o.exact = lhs - rhs;
                            return o;
                        }});
                    }
                }
            }
    }
}

// exponential/hat reciprocity; the published substitution swaps the two B0
// values, so the published right side, half-period value and chain constant
// are irreproducible -- the forms below are re-derived from the remark form
void reg_E9(std::vector<Instance>& out, const CatalogOptions&) {
    for (int k : {2, 3, 4, 6}) {
        PeriodicSequence A = make_sequence("exp:k=" + std::to_string(k));
        PeriodicSequence B = fourier_hat(A);
        for (auto [c, d] : cd_domain(k, 9, 2)) {
            const long b = min_b(c, d);
            std::ostringstream os;
            os << "k=" << k << " c=" << c << " d=" << d;
            out.push_back({os.str() + " rel=exp-hat", [k, A, B, b, c = c, d = d]() {
                Cyclotomic lhs = dedekind_swapped(c, d, b, A, B) +
                                 dedekind_raw(d, c, b, A, B, Family::BbAc);
                Cyclotomic rhs =
                    -Cyclotomic(bernoulli_P(1, Rational(-c, k))) * P1at(Rational(0), A, -c) +
                    Cyclotomic(Rational(1, 2 * d * c * k)) * periodic_B(2, A) +
                    Cyclotomic(Rational(c, d * k)) * P2at(Rational(0), A, c) -
                    Cyclotomic(bernoulli_P(1, Rational(k - 1, k)));
                Outcome o;
                o.exact = lhs - rhs;
                return o;
            }});
            if (k == 2) {
                out.push_back({os.str() + " rel=half-period-value", [A, B, b, c = c, d = d]() {
                    Cyclotomic lhs = dedekind_swapped(c, d, b, A, B) +
                                     dedekind_raw(d, c, b, A, B, Family::BbAc);
                    Outcome o;
                    o.exact = lhs - Cyclotomic(Rational(1, 8 * d * c) + Rational(c, 8 * d));
                    return o;
                }});
                out.push_back({os.str() + " rel=hb-expansions", [A, B, b, c = c, d = d]() {
                    Cyclotomic r1 = dedekind_swapped(c, d, b, A, B) -
                                    Cyclotomic(hs2_raw(2 * c, 2 * d) - hs2_raw(c, 2 * d));
                    Cyclotomic r2 = dedekind_raw(d, c, b, A, B, Family::BbAc) -
                                    Cyclotomic(Rational(2) * classical_s(d, c) +
                                               hs3_raw(d / 2, c) - classical_s(2 * d, c) -
                                               Rational(1, 2) * hs3_raw(d, c));
                    Outcome o;
                    o.exact = combine({r1, r2});
                    return o;
                }});
                out.push_back({os.str() + " rel=chain-corrected", [c = c, d = d]() {
                    Rational chain = Rational(2) * classical_s(d, c) - classical_s(2 * d, c) +
                                     hs2_raw(2 * c, 2 * d) - hs2_raw(c, 2 * d) +
                                     hs3_raw(d / 2, c) - Rational(1, 2) * hs3_raw(d, c);
                    Outcome o;
                    o.exact = Cyclotomic(chain - Rational(1, 8 * d * c) - Rational(c, 8 * d));
                    return o;
                }});
            }
        }
    }
    // item 1: s(d,c;I,I) = s(d,c) + 1/4 lives here as the k = 1 sanity row
    for (long c : {2L, 3L, 5L, 7L, 12L})
        for (long d : {1L, 5L, 11L}) {
            if (std::gcd(c, d) != 1) continue;
            std::ostringstream os;
            os << "k=1 c=" << c << " d=" << d << " rel=const-pair";
            out.push_back({os.str(), [c, d]() {
                PeriodicSequence I1 = make_sequence("const:k=1");
                Cyclotomic lhs = dedekind_raw(d, c, 1, I1, I1, Family::BbAc);
                Outcome o;
                o.exact = lhs - Cyclotomic(classical_s(d, c) + Rational(1, 4));
                return o;
            }});
        }
}

void reg_E10(std::vector<Instance>& out, const CatalogOptions&) {
    const Rational grid[7] = {Rational(0),      Rational(1, 2), Rational(1, 3),
                              Rational(-3, 4),  Rational(5, 7), Rational(7, 3),
                              Rational(-2)};
    // Raabe
    for (int n = 0; n <= 6; ++n)
        for (int r = 1; r <= 8; ++r)
            for (const auto& x : grid) {
                if (n == 1 && x.is_integer()) continue;  // convention checked separately
                std::ostringstream os;
                os << "rel=raabe n=" << n << " r=" << r << " x=" << x.to_string();
                out.push_back({os.str(), [n, r, x]() {
                    Rational rhs(0);
                    for (int m = 0; m < r; ++m)
                        rhs += bernoulli_P(n, (Rational(m) + x) / Rational(r));
                    rhs *= Rational(r).pow(n - 1);
                    Outcome o;
                    o.exact = Cyclotomic(bernoulli_P(n, x) - rhs);
                    return o;
                }});
            }
    // P1 convention at integers: P1(x) = P1(-x) = -1/2
    out.push_back({"rel=p1-integers", []() {
        Cyclotomic acc;
        for (long m : {-3L, 0L, 1L, 7L}) {
            acc += Cyclotomic(bernoulli_P(1, Rational(m)) + Rational(1, 2));
            acc += Cyclotomic(bernoulli_P(1, Rational(-m)) + Rational(1, 2));
        }
        Outcome o;
        o.exact = acc;
        return o;
    }});
    // reflection
    for (int n = 0; n <= 6; ++n)
        for (const auto& x : grid) {
            if (n == 1 && x.is_integer()) continue;
            std::ostringstream os;
            os << "rel=reflection n=" << n << " x=" << x.to_string();
            out.push_back({os.str(), [n, x]() {
                Rational sgn = n % 2 == 0 ? Rational(1) : Rational(-1);
                Outcome o;
                o.exact = Cyclotomic(bernoulli_P(n, -x) - sgn * bernoulli_P(n, x));
                return o;
            }});
        }
    // P_r(0,A) = (-1)^r B_r(A)/r!  (r = 0 or r >= 2)
    for (int k : {1, 2, 3, 4, 6})
        for (int r : {0, 2, 3, 4}) {
            auto seqs = sweep_sequences(k);
            for (size_t i = 0; i < seqs.size(); i += 2) {
                std::ostringstream os;
                os << "rel=pr0 k=" << k << " r=" << r << " A=" << seqs[i].label;
                out.push_back({os.str(), [r, A = seqs[i]]() {
                    Rational fct(1);
                    for (int i2 = 2; i2 <= r; ++i2) fct *= Rational(i2);
                    Cyclotomic sgn(r % 2 == 0 ? 1 : -1);
                    Outcome o;
                    o.exact = periodic_P(r, Rational(0), A, 1) -
                              sgn * periodic_B(r, A) * Cyclotomic(fct.inverse());
                    return o;
                }});
            }
        }
    // coset distribution: sum_{j=1}^{c} P_r(dj/c, A_c) = c^{1-r} P_r(0,A)
    for (int k : {1, 2, 3, 4})
        for (long c : {1L, 2L, 3L, 5L})
            for (long dm : {1L, 2L}) {
                const long d = dm * k;
                if (std::gcd(c, d) != 1) continue;
                for (int r : {0, 2, 3}) {
                    auto seqs = sweep_sequences(k);
                    std::ostringstream os;
                    os << "rel=coset k=" << k << " c=" << c << " d=" << d << " r=" << r;
                    out.push_back({os.str(), [k, c, d, r, A = seqs[0]]() {
                        Cyclotomic lhs;
                        for (long j = 1; j <= c; ++j)
                            lhs += periodic_P(r, Rational(d * j, c), A, c);
                        Cyclotomic rhs = Cyclotomic(Rational(c).pow(1 - r)) *
                                         periodic_P(r, Rational(0), A, 1);
                        Outcome o;
                        o.exact = lhs - rhs;
                        return o;
                    }});
                }
            }
    // parity vanishing of the character Bernoulli values
    for (int k = 2; k <= 8; ++k) {
        auto chars = dirichlet_characters(k);
        for (const auto& chi : chars)
            for (int m = 0; m <= 3; ++m) {
                std::ostringstream os;
                os << "rel=parity-vanishing k=" << k << " i=" << chi.ordinal() << " m=" << m;
                out.push_back({os.str(), [chi, m]() {
                    Cyclotomic acc;
                    if (chi.parity() == 1 && 2 * m + 1 <= 7)
                        acc += periodic_B(2 * m + 1, chi.sequence());
                    if (chi.parity() == -1)
                        acc += periodic_B(2 * m, chi.sequence());
                    if (!chi.is_principal() && m == 0)
                        acc += periodic_B(0, chi.sequence());
                    Outcome o;
                    o.exact = acc;
                    return o;
                }});
            }
    }
    // Euler-number value: B_m(1/4) = 2^{-m} B_m(1/2) - m 4^{-m} E_{m-1}
    for (int m = 1; m <= 10; ++m) {
        std::ostringstream os;
        os << "rel=euler-quarter m=" << m;
        out.push_back({os.str(), [m]() {
            Rational lhs = bernoulli_poly(m, Rational(1, 4));
            Rational rhs = Rational(1, 2).pow(m) * bernoulli_poly(m, Rational(1, 2)) -
                           Rational(m) * Rational(1, 4).pow(m) *
                               Rational(mpq_class(euler_number(m - 1)));
            Outcome o;
            o.exact = Cyclotomic(lhs - rhs);
            return o;
        }});
    }
}

void reg_E11(std::vector<Instance>& out, const CatalogOptions&) {
    // alternating transfer: P_m(x, A_c) = chi(-c) P*_m(x, chi) for the
    // alternating sequence A
    for (int k : {4, 6, 8}) {
        auto chars = dirichlet_characters(k);
        const Rational xs[3] = {Rational(0), Rational(1, 3), Rational(5, 7)};
        for (const auto& chi : chars)
            for (long c : {1L, 3L, 5L, 7L})
                for (int m = 1; m <= 3; ++m)
                    for (const auto& x : xs) {
                        std::ostringstream os;
                        os << "rel=alt-transfer-P k=" << k << " i=" << chi.ordinal() << " c=" << c
                           << " m=" << m << " x=" << x.to_string();
                        out.push_back({os.str(), [k, chi, c, m, x]() {
                            PeriodicSequence A = make_sequence(
                                "altchar:k=" + std::to_string(k) +
                                ",i=" + std::to_string(chi.ordinal()));
                            Outcome o;
                            o.exact = periodic_P(m, x, A, c) - chi(-c) * P_star(m, x, chi);
                            return o;
                        }});
                    }
        // sum transfer: s(d,c;B_b,A_c) = chi1(-c) chi2(b) s*(d,c;chi2,chi1)
        for (const auto& c1 : chars)
            for (const auto& c2 : chars)
                for (auto [c, d] : cd_domain(k, 5, 1)) {
                    if (c % 2 == 0) continue;
                    std::ostringstream os;
                    os << "rel=alt-transfer-s k=" << k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                       << " c=" << c << " d=" << d;
                    out.push_back({os.str(), [k, c1, c2, c = c, d = d]() {
                        const long b = min_b(c, d);
                        PeriodicSequence A = make_sequence("altchar:k=" + std::to_string(k) +
                                                           ",i=" + std::to_string(c1.ordinal()));
                        PeriodicSequence B = make_sequence("altchar:k=" + std::to_string(k) +
                                                           ",i=" + std::to_string(c2.ordinal()));
                        Cyclotomic lhs = dedekind_raw(d, c, b, A, B, Family::BbAc);
                        Cyclotomic rhs = c1(-c) * c2(b) * alternating_char_sum(d, c, c2, c1);
                        Outcome o;
                        o.exact = lhs - rhs;
                        return o;
                    }});
                }
    }
    // cotangent formula: P1(0,G) = (i/2) sum chi(j) cot(pi j/k) - (1/2) sum chi(j)
    for (int k : {3, 4, 5, 6}) {
        auto chars = dirichlet_characters(k);
        for (const auto& chi : chars) {
            std::ostringstream os;
            os << "rel=gauss-cot k=" << k << " i=" << chi.ordinal();
            out.push_back({os.str(), [k, chi]() {
                PeriodicSequence G = make_sequence("gauss:k=" + std::to_string(k) +
                                                   ",i=" + std::to_string(chi.ordinal()));
                Cyclotomic lhs = P1at(Rational(0), G, 1);
                Cyclotomic cotsum, chsum;
                for (long j = 1; j < k; ++j) {
                    if (chi(j).is_zero()) continue;
                    cotsum += chi(j) * cot_exact(j, k);
                    chsum += chi(j);
                }
                Cyclotomic rhs = Cyclotomic(Rational(1, 2)) * imag_unit() * cotsum -
                                 Cyclotomic(Rational(1, 2)) * chsum;
                Outcome o;
                o.exact = lhs - rhs;
                return o;
            }});
        }
    }
    // P1(0,G) = i exactly for the primitive character mod 4
    out.push_back({"rel=p10g-eq-i k=4", []() {
        PeriodicSequence G = make_sequence("gauss:k=4,i=1");
        Outcome o;
        o.exact = P1at(Rational(0), G, 1) - imag_unit();
        return o;
    }});
}

void reg_E12(std::vector<Instance>& out, const CatalogOptions&) {
    // inversion, double-transform reflection, and hat periodicity on the
    // catalog zoo plus random sequences with k <= 12
    std::vector<PeriodicSequence> seqs;
    for (int k : {1, 2, 3, 4, 6}) {
        auto s = sweep_sequences(k);
        seqs.insert(seqs.end(), s.begin(), s.end());
    }
    for (int k = 2; k <= 12; ++k)
        for (unsigned long seed = 1; seed <= 9; ++seed)
            seqs.push_back(random_rational_seq(k, 1000 * k + seed));
    int idx = 0;
    for (const auto& A : seqs) {
        std::ostringstream os;
        os << "n=" << idx++ << " A=" << A.label;
        out.push_back({os.str(), [A]() {
            const int k = A.period();
            PeriodicSequence H = fourier_hat(A);
            Cyclotomic acc;
            for (long n = 0; n < k; ++n) {
                // inversion: f(n) = sum_j hat f(j) e(nj/k)
                Cyclotomic rec;
                for (long j = 0; j < k; ++j)
                    rec += H.at(j) * Cyclotomic::root_of_unity(k, n * j);
                Cyclotomic diff = rec - A.at(n);
                acc += diff * diff;
                // hat of hat reflects: (1/k) * hat(hat f)(n) = f(-n)/k
                Cyclotomic hh = fourier_hat(H).at(n) * Cyclotomic(Rational(k)) - A.at(-n);
                acc += hh * hh;
            }
            Outcome o;
            o.exact = acc;
            return o;
        }});
    }
}

// ---------------------------------------------------------------------------
// numeric suites
// ---------------------------------------------------------------------------

Outcome numeric_outcome(Complex lhs, Complex rhs, double tail = 0.0) {
    Outcome o;
    o.numeric = std::abs(lhs - rhs);
    o.tail = tail;
    return o;
}

void reg_N1(std::vector<Instance>& out, const CatalogOptions& opt) {
    const Complex zs[2] = {Complex(0.0, 1.0), Complex(0.3, 0.9)};
    const Complex ss[2] = {Complex(3.0, 0.0), Complex(2.5, 0.5)};
    for (int k : {3, 4}) {
        auto chars = dirichlet_characters(k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars)
                for (const auto& z : zs)
                    for (const auto& s : ss) {
                        std::ostringstream os;
                        os << "k=" << k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                           << " z=" << cpx(z) << " s=" << cpx(s);
                        out.push_back({os.str(), [c1, c2, z, s, opt]() {
                            SeriesBudget b1 = opt.budget, b2 = opt.budget;
                            Complex gd = eisenstein_G_direct(z, s, c1.sequence(), 1,
                                                             c2.sequence(), 1, Rational(0),
                                                             Rational(0), b1);
                            Complex gf = G_via_fourier(z, s, c1.sequence(), 1, c2.sequence(), 1,
                                                       Rational(0), Rational(0), b2);
                            return numeric_outcome(gd, gf, b1.achieved_tail + b2.achieved_tail);
                        }});
                    }
    }
    // shifted instances exercise the lambda branch of the expansion
    for (auto [r1n, r2n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}}) {
        Rational r1 = r1n ? Rational(1, 2) : Rational(1);
        Rational r2 = r2n ? Rational(1, 3) : Rational(0);
        std::ostringstream os;
        os << "k=4 shifted r1=" << r1.to_string() << " r2=" << r2.to_string();
        out.push_back({os.str(), [r1, r2, opt]() {
            auto chi = dirichlet_characters(4)[1];
            SeriesBudget b1 = opt.budget, b2 = opt.budget;
            Complex z(0.2, 1.1), s(2.7, -0.3);
            Complex gd = eisenstein_G_direct(z, s, chi.sequence(), 1, chi.sequence(), 1, r1, r2, b1);
            Complex gf = G_via_fourier(z, s, chi.sequence(), 1, chi.sequence(), 1, r1, r2, b2);
            return numeric_outcome(gd, gf, b1.achieved_tail + b2.achieved_tail);
        }});
    }
}

// closed single-sum form of A(z,-2N;chi1,G2) used at s = -2N
Complex s4_series(Complex z, int N, const std::vector<Complex>& chi1v,
                  const std::vector<Complex>& chi2v, int k, double tol, double& tail) {
    Complex acc(0.0, 0.0);
    const double decay = std::exp(-2.0 * PI * z.imag() / k);
    double bound = 1.0;
    for (int n = 1; n < 100000; ++n) {
        Complex g2 = gauss_c(Complex(n, 0.0), chi2v, k);
        Complex g1 = gauss_c(static_cast<double>(n) * z, chi1v, k);
        Complex den = 1.0 - std::exp(2.0 * PI * I_UNIT * static_cast<double>(n) * z);
        acc += g2 * g1 / den * std::pow(static_cast<double>(n), -2 * N - 1);
        bound = static_cast<double>(k * k) * std::pow(decay, n + 1) / (1.0 - decay);
        if (bound < tol && n > 4) break;
    }
    tail = bound;
    return acc;
}

Complex s4_rhs(Complex z, int N, const PeriodicSequence& chi1, const PeriodicSequence& chi2,
               int k) {
    Complex acc(0.0, 0.0);
    for (int m = 0; m <= 2 * N + 2; ++m) {
        double sgn = m % 2 == 0 ? 1.0 : -1.0;
        acc += sgn * Bchi(m, chi2) / dfact(m) * Bchi(2 * N + 2 - m, chi1) /
               dfact(2 * N + 2 - m) * ipow(z, m - 1);
    }
    return -ipow(2.0 * PI * I_UNIT, 2 * N + 1) / (2.0 * std::pow(static_cast<double>(k), 2 * N)) *
           acc;
}

void reg_N2(std::vector<Instance>& out, const CatalogOptions& opt) {
    const Complex zs[2] = {Complex(0.0, 1.0), Complex(1.0 / 3.0, 2.0 / 3.0)};
    auto chars = dirichlet_characters(4);
    for (int i1 : {0, 1})
        for (int i2 : {0, 1}) {
            if (chars[i1].parity() * chars[i2].parity() != 1) continue;
            for (int N : {0, 1, 2})
                for (const auto& z : zs) {
                    std::ostringstream os;
                    os << "k=4 i1=" << i1 << " i2=" << i2 << " N=" << N << " z=" << cpx(z);
                    out.push_back({os.str(), [i1, i2, N, z, opt]() {
                        auto chars4 = dirichlet_characters(4);
                        const auto& c1 = chars4[i1];
                        const auto& c2 = chars4[i2];
                        auto v1 = embedded(c1.sequence());
                        auto v2 = embedded(c2.sequence());
                        double t1 = 0, t2 = 0;
                        const double tol = opt.budget.tail_bound_target;
                        Complex S1 = s4_series(-1.0 / z, N, v1, v2, 4, tol, t1);
                        Complex S2 = s4_series(z, N, v2, v1, 4, tol, t2);
                        Complex lhs = ipow(z, 2 * N) * S1 -
                                      c1(-1).embed() * S2;
                        Complex rhs = s4_rhs(z, N, c1.sequence(), c2.sequence(), 4);
                        return numeric_outcome(lhs, rhs, t1 + t2);
                    }});
                }
        }
    // one instance cross-checks the A-series evaluator against the closed form
    out.push_back({"k=4 rel=kernel-crosscheck", [opt]() {
        auto chi = dirichlet_characters(4)[1];
        PeriodicSequence G2 = make_sequence("gauss:k=4,i=1");
        Complex z(0.0, 1.0);
        SeriesBudget b = opt.budget;
        Complex a = A_series(z, Complex(-2.0, 0.0), chi.sequence(), G2, Rational(0), Rational(0), b);
        auto v1 = embedded(chi.sequence());
        auto v2 = embedded(chi.sequence());
        double t = 0;
        Complex closed = s4_series(z, 1, v1, v2, 4, b.tail_bound_target, t);
        return numeric_outcome(a, closed, b.achieved_tail + t);
    }});
}

void reg_N3(std::vector<Instance>& out, const CatalogOptions& opt) {
    for (int k : {3, 4}) {
        auto chars = dirichlet_characters(k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars) {
                if (c1.parity() * c2.parity() != 1) continue;
                for (int N : {0, 1, 2})
                    for (double g : {0.8, 1.3}) {
                        std::ostringstream os;
                        os << "k=" << k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                           << " N=" << N << " gamma=" << g;
                        out.push_back({os.str(), [k, c1, c2, N, g, opt]() {
                            const double th = PI * PI / (k * k * g);
                            auto v1 = embedded(c1.sequence());
                            auto v2 = embedded(c2.sequence());
                            // sum_n G(n,chi_out) G(i n k a/pi, chi_in) /
                            //       (1 - e^{-2 n k a}) n^{-2N-1}
                            auto S = [&](const std::vector<Complex>& vout,
                                         const std::vector<Complex>& vin, double a) {
                                Complex tot(0.0, 0.0);
                                for (int n = 1; n < 20000; ++n) {
                                    if (2.0 * n * k * a > 650.0) break;
                                    Complex go = gauss_c(Complex(n, 0.0), vout, k);
                                    Complex gi =
                                        gauss_c(Complex(0.0, n * k * a / PI), vin, k);
                                    if (std::abs(go) * std::abs(gi) == 0.0) continue;
                                    tot += go * gi / (1.0 - std::exp(-2.0 * n * k * a)) *
                                           std::pow(static_cast<double>(n), -2 * N - 1);
                                }
                                return tot;
                            };
                            (void)opt;
                            Complex S1 = S(v2, v1, g);
                            Complex S2 = S(v1, v2, th);
                            Complex lhs = std::pow(g, -N) * S1 -
                                          std::pow(-th, -N) * c1(-1).embed() * S2;
                            double t1 = 0, t2 = 0;
                            Complex rhs(0.0, 0.0);
                            for (int m = 0; m <= 2 * N + 2; ++m)
                                rhs += ipow(-I_UNIT, m) * Bchi(m, c2.sequence()) / dfact(m) *
                                       Bchi(2 * N + 2 - m, c1.sequence()) / dfact(2 * N + 2 - m) *
                                       std::pow(g, N + 1 - m / 2.0) * std::pow(th, m / 2.0);
                            rhs *= -static_cast<double>(k) * std::pow(2.0, 2 * N);
                            return numeric_outcome(lhs, rhs, t1 + t2);
                        }});
                    }
            }
    }
}

double sech_sum(const std::vector<Complex>& chiv, int k, double a, int N) {
    double tot = 0.0;
    for (int n = 1; n < 100000; ++n) {
        if (2.0 * n * a > 650.0) break;
        double c = chiv[n % k].real();
        if (c == 0.0) continue;
        tot += c / std::cosh(2.0 * n * a) * std::pow(static_cast<double>(n), -2 * N - 1);
    }
    return tot;
}

void reg_N4(std::vector<Instance>& out, const CatalogOptions&) {
    auto chi = dirichlet_characters(4)[1];
    auto v = embedded(chi.sequence());
    for (int N : {0, 1, 2, 3})
        for (double g : {PI / 4.0, 0.9, PI / 8.0}) {
            std::ostringstream os;
            os << "N=" << N << " gamma=" << g;
            out.push_back({os.str(), [v, N, g]() {
                const double th = PI * PI / 16.0 / g;
                double lhs = std::pow(g, -N) * sech_sum(v, 4, g, N) +
                             std::pow(-th, -N) * sech_sum(v, 4, th, N);
                double rhs = 0.0;
                for (int m = 0; m <= N; ++m) {
                    double e1 = mpz_class(euler_number(2 * m)).get_d();
                    double e2 = mpz_class(euler_number(2 * N - 2 * m)).get_d();
                    rhs += (m % 2 ? -1.0 : 1.0) * e1 / dfact(2 * m) * e2 / dfact(2 * N - 2 * m) *
                           std::pow(g, N - m) * std::pow(th, m);
                }
                rhs *= std::pow(2.0, 2 * N) * PI / 4.0;
                return numeric_outcome(Complex(lhs, 0), Complex(rhs, 0));
            }});
        }
    out.push_back({"constant pi/8 at gamma=theta=pi/4", [v]() {
        double s = sech_sum(v, 4, PI / 4.0, 0);
        return numeric_outcome(Complex(2.0 * s, 0), Complex(PI / 4.0, 0));
    }});
}

double csch_alt_sum(double a, int N) {
    double tot = 0.0;
    for (int n = 1; n < 100000; ++n) {
        if (n * a > 650.0) break;
        tot += (n % 2 ? -1.0 : 1.0) / std::sinh(n * a) * std::pow(static_cast<double>(n), -2 * N - 1);
    }
    return tot;
}

double b_half(int n) { return bernoulli_poly(n, Rational(1, 2)).to_double(); }

void reg_N5(std::vector<Instance>& out, const CatalogOptions&) {
    for (int N : {0, 1, 2, 3})
        for (double g : {PI, 2.0}) {
            std::ostringstream os;
            os << "N=" << N << " gamma=" << g;
            out.push_back({os.str(), [N, g]() {
                const double th = PI * PI / g;
                double lhs = std::pow(g, -N) * csch_alt_sum(g, N) -
                             std::pow(-th, -N) * csch_alt_sum(th, N);
                double rhs = 0.0;
                for (int m = 0; m <= N + 1; ++m)
                    rhs += (m % 2 ? -1.0 : 1.0) * b_half(2 * m) / dfact(2 * m) *
                           b_half(2 * N + 2 - 2 * m) / dfact(2 * N + 2 - 2 * m) *
                           std::pow(g, N + 1 - m) * std::pow(th, m);
                rhs *= -std::pow(2.0, 2 * N + 1);
                return numeric_outcome(Complex(lhs, 0), Complex(rhs, 0));
            }});
        }
    // Cauchy values at gamma = theta = pi (N = 2M+1); the commonly printed
    // constant double-counts the collapsed pair, hence the explicit 1/2
    for (int M : {0, 1}) {
        std::ostringstream os;
        os << "rel=cauchy M=" << M;
        out.push_back({os.str(), [M]() {
            const int N = 2 * M + 1;
            double lhs = csch_alt_sum(PI, N);
            Rational acc(0);
            for (int m = 0; m <= 2 * M + 2; ++m) {
                Rational t = bernoulli_poly(2 * m, Rational(1, 2)) *
                             bernoulli_poly(4 * M + 4 - 2 * m, Rational(1, 2));
                Rational fct(1);
                for (int i = 2; i <= 2 * m; ++i) fct *= Rational(i);
                for (int i = 2; i <= 4 * M + 4 - 2 * m; ++i) fct *= Rational(i);
                t /= fct;
                acc += (m % 2 ? -t : t);
            }
            // corrected closed form: -(2 pi)^{4M+3}/2 * acc
            double rhs = -std::pow(2.0 * PI, 4 * M + 3) / 2.0 * acc.to_double();
            return numeric_outcome(Complex(lhs, 0), Complex(rhs, 0));
        }});
    }
}

void reg_N_cauchy(std::vector<Instance>& out, const CatalogOptions&) {
    out.push_back({"M=0", []() {
        double lhs = csch_alt_sum(PI, 1);
        // -(2 pi)^3 / 2 * 1/1440 = -pi^3/360 (half the often-quoted value)
        double rhs = -std::pow(PI, 3) / 360.0;
        return numeric_outcome(Complex(lhs, 0), Complex(rhs, 0));
    }});
}

Complex s5_series(const std::vector<Complex>& chiv, int k, int weight_pow) {
    Complex tot(0.0, 0.0);
    for (int n = 1; n < 100000; ++n) {
        if (2.0 * PI * n - 2.0 * PI * n / k > 650.0 && n > 8) break;
        Complex g1 = gauss_c(Complex(n, 0.0), chiv, k);
        Complex g2 = gauss_c(Complex(0.0, n), chiv, k);
        if (std::abs(g1) + std::abs(g2) == 0.0) continue;
        tot += g1 * g2 / (1.0 - std::exp(-2.0 * PI * n)) *
               std::pow(static_cast<double>(n), weight_pow);
        if (n > 60) break;  // e^{-2 pi n /k} decay dominates well before this
    }
    return tot;
}

void reg_N6(std::vector<Instance>& out, const CatalogOptions&) {
    for (int k : {3, 4, 5}) {
        auto chars = dirichlet_characters(k);
        for (const auto& chi : chars) {
            auto v = embedded(chi.sequence());
            for (int N : {0, 1, 2}) {
                if (chi.parity() * (N % 2 ? -1 : 1) != -1) continue;
                std::ostringstream os;
                os << "k=" << k << " i=" << chi.ordinal() << " N=" << N;
                out.push_back({os.str(), [k, chi, v, N]() {
                    Complex lhs = s5_series(v, k, -2 * N - 1);
                    Complex rhs(0.0, 0.0);
                    for (int m = 0; m <= 2 * N + 2; ++m)
                        rhs += ipow(-I_UNIT, m) * Bchi(m, chi.sequence()) / dfact(m) *
                               Bchi(2 * N + 2 - m, chi.sequence()) / dfact(2 * N + 2 - m);
                    rhs *= -static_cast<double>(k) * std::pow(2.0 * PI / k, 2 * N + 1) / 4.0;
                    return numeric_outcome(lhs, rhs);
                }});
            }
        }
        // consequences: odd chi weight n^{-1}; principal chi0 weight n; zero cases
        for (const auto& chi : chars) {
            auto v = embedded(chi.sequence());
            if (chi.parity() == -1) {
                std::ostringstream os;
                os << "k=" << k << " i=" << chi.ordinal() << " rel=odd-consequence";
                out.push_back({os.str(), [k, chi, v]() {
                    Complex lhs = s5_series(v, k, -1);
                    Complex b1 = Bchi(1, chi.sequence());
                    Complex rhs = PI * I_UNIT / 2.0 * b1 * b1;
                    return numeric_outcome(lhs, rhs);
                }});
            }
            if (chi.is_principal()) {
                std::ostringstream os;
                os << "k=" << k << " rel=principal-weight-n";
                out.push_back({os.str(), [k, chi, v]() {
                    Complex lhs = s5_series(v, k, 1);
                    Complex b0 = Bchi(0, chi.sequence());
                    Complex rhs = -static_cast<double>(k * k) / (8.0 * PI) * b0 * b0;
                    return numeric_outcome(lhs, rhs);
                }});
            }
            for (int M : {2, 3}) {
                if (chi.parity() * (M % 2 ? -1 : 1) != -1) continue;
                std::ostringstream os;
                os << "k=" << k << " i=" << chi.ordinal() << " M=" << M << " rel=zero-case";
                out.push_back({os.str(), [k, v, M]() {
                    Complex lhs = s5_series(v, k, 2 * M - 1);
                    return numeric_outcome(lhs, Complex(0.0, 0.0));
                }});
            }
        }
    }
}

void reg_N7(std::vector<Instance>& out, const CatalogOptions&) {
    for (int k : {3, 4}) {
        auto chars = dirichlet_characters(k);
        for (const auto& chi : chars) {
            auto v = embedded(chi.sequence());
            for (int N : {0, 1, 2}) {
                if (chi.parity() * (N % 2 ? -1 : 1) != 1) continue;
                std::ostringstream os;
                os << "k=" << k << " i=" << chi.ordinal() << " N=" << N;
                out.push_back({os.str(), [k, chi, v, N]() {
                    Complex lhs(0.0, 0.0);
                    for (int m = 1; m < 200; ++m) {
                        if (std::abs(v[m % k]) == 0.0) continue;
                        if (2.0 * PI * m / k > 600.0) break;
                        for (int n = 1; n < 200; ++n) {
                            Complex g = gauss_c(Complex(n, 0.0), v, k);
                            if (std::abs(g) == 0.0) continue;
                            const double e = std::exp(-2.0 * PI * n * m / k);
                            if (e < 1e-18) break;
                            lhs += v[m % k] * g * e *
                                   std::pow(static_cast<double>(n), -2 * N - 1) *
                                   (N + 2.0 * PI * m * n / k);
                        }
                    }
                    Complex rhs(0.0, 0.0);
                    for (int m = 0; m <= 2 * N + 2; ++m)
                        rhs += ipow(-I_UNIT, m) * (m - 1.0) * Bchi(m, chi.sequence()) / dfact(m) *
                               Bchi(2 * N + 2 - m, chi.sequence()) / dfact(2 * N + 2 - m);
                    rhs *= -static_cast<double>(k) * std::pow(2.0 * PI / k, 2 * N + 1) / 4.0;
                    return numeric_outcome(lhs, rhs);
                }});
            }
        }
    }
}

// A(z,0;S1,S2) as a plain double series for the transformation instances
Complex a_double(Complex z, Complex s, const PeriodicSequence& S1, const PeriodicSequence& S2,
                 const CatalogOptions& opt, double& tail) {
    SeriesBudget b = opt.budget;
    Complex v = A_series(z, s, S1, S2, Rational(0), Rational(0), b);
    tail = b.achieved_tail;
    return v;
}

void reg_N8(std::vector<Instance>& out, const CatalogOptions& opt) {
    struct Mat { long a, b, c, d; int k; };
    const Mat mats[2] = {{4, 3, 5, 4, 4}, {3, 1, 8, 3, 3}};
    const Complex zs[2] = {Complex(0.0, 1.0), Complex(0.25, 0.9)};
    for (const auto& M : mats) {
        auto chars = dirichlet_characters(M.k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars)
                for (const auto& z : zs) {
                    std::ostringstream os;
                    os << "k=" << M.k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                       << " mat=" << M.a << "," << M.b << "," << M.c << "," << M.d
                       << " z=" << cpx(z);
                    out.push_back({os.str(), [M, c1, c2, z, opt]() {
                        PeriodicSequence G1 = make_sequence(
                            "gauss:k=" + std::to_string(M.k) + ",i=" + std::to_string(c1.ordinal()));
                        PeriodicSequence G2 = make_sequence(
                            "gauss:k=" + std::to_string(M.k) + ",i=" + std::to_string(c2.ordinal()));
                        const Complex Vz = (static_cast<double>(M.a) * z + static_cast<double>(M.b)) /
                                           (static_cast<double>(M.c) * z + static_cast<double>(M.d));
                        double t1 = 0, t2 = 0;
                        Complex A1 = a_double(Vz, Complex(0, 0), c1.sequence(), G2, opt, t1);
                        Complex A2 = a_double(z, Complex(0, 0), c2.sequence(), G1, opt, t2);
                        Complex lhs = (A1 - c1(M.c).embed() * c2(M.b).embed() * A2) *
                                      (1.0 + c1(-1).embed() * c2(-1).embed());
                        const Complex czd = static_cast<double>(M.c) * z + static_cast<double>(M.d);
                        Complex rhs =
                            2.0 * PI * I_UNIT * c1(M.c).embed() * c2(M.b).embed() *
                                dedekind_norm(M.d, M.c, c2.sequence(), c1.sequence()).embed() -
                            PI * I_UNIT / (static_cast<double>(M.c) * czd) *
                                Bchi(0, c2.sequence()) * Bchi(2, c1.sequence()) -
                            2.0 * PI * I_UNIT * c2(M.b).embed() / static_cast<double>(M.c) * czd *
                                Bchi(0, c1.sequence()) * P2at(Rational(0), c2.sequence(), 1).embed();
                        return numeric_outcome(lhs, rhs, t1 + t2);
                    }});
                }
    }
}

void reg_N9(std::vector<Instance>& out, const CatalogOptions& opt) {
    // Gauss/character pairing at a general matrix, nonprincipal pairs (no log term)
    struct Mat { long a, b, c, d; int k; };
    const Mat mats[2] = {{4, 3, 5, 4, 4}, {3, 1, 8, 3, 3}};
    for (const auto& M : mats) {
        auto chars = dirichlet_characters(M.k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars) {
                if (c1.is_principal() || c2.is_principal()) continue;
                if (c1.parity() * c2.parity() != 1) continue;
                std::ostringstream os;
                os << "k=" << M.k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                   << " rel=gauss-char-pair";
                out.push_back({os.str(), [M, c1, c2, opt]() {
                    PeriodicSequence G1 = make_sequence(
                        "gauss:k=" + std::to_string(M.k) + ",i=" + std::to_string(c1.ordinal()));
                    PeriodicSequence G2 = make_sequence(
                        "gauss:k=" + std::to_string(M.k) + ",i=" + std::to_string(c2.ordinal()));
                    const Complex z(0.1, 1.0);
                    const Complex Vz = (static_cast<double>(M.a) * z + static_cast<double>(M.b)) /
                                       (static_cast<double>(M.c) * z + static_cast<double>(M.d));
                    double t1 = 0, t2 = 0;
                    Complex A1 = a_double(Vz, Complex(0, 0), G1, c2.sequence(), opt, t1);
                    Complex A2 = a_double(z, Complex(0, 0), G2, c1.sequence(), opt, t2);
                    Complex lhs = A1 - conj_value(c1, M.c).embed() * conj_value(c2, M.b).embed() * A2;
                    Complex rhs = PI * I_UNIT / static_cast<double>(M.k) *
                                  conj_value(c1, -M.c).embed() * conj_value(c2, M.b).embed() *
                                  dedekind_norm(M.d, M.c, G2, G1).embed();
                    return numeric_outcome(lhs, rhs, t1 + t2);
                }});
            }
    }
    // gamma-form sums with the principal-log branch
    for (int k : {3, 4}) {
        auto chars = dirichlet_characters(k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars) {
                if (c1.parity() * c2.parity() != 1) continue;
                const bool p1 = c1.is_principal(), p2 = c2.is_principal();
                if (p1 != p2) continue;  // the mixed principal case is not stated
                for (double g : {0.9, 0.6}) {
                    std::ostringstream os;
                    os << "k=" << k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                       << " gamma=" << g << " rel=cosh-form";
                    out.push_back({os.str(), [k, c1, c2, g]() {
                        const double th = PI * PI / (k * k * g);
                        auto v1 = embedded(c1.sequence());
                        auto v2 = embedded(c2.sequence());
                        auto dsum = [&](const std::vector<Complex>& va,
                                        const std::vector<Complex>& vb, double a) {
                            Complex tot(0.0, 0.0);
                            for (int n = 1; n < 4000; ++n) {
                                if (std::abs(vb[n % k]) == 0.0) continue;
                                for (int v = 0; v < k; ++v) {
                                    if (std::abs(va[v]) == 0.0) continue;
                                    tot += va[v] * vb[n % k] /
                                           (1.0 - std::exp(2.0 * PI * I_UNIT *
                                                               static_cast<double>(v) /
                                                               static_cast<double>(k) -
                                                           2.0 * n * a)) /
                                           static_cast<double>(n);
                                }
                            }
                            return tot;
                        };
                        // the two sums diverge separately for principal chi;
                        // same cutoff keeps the difference meaningful
                        Complex lhs = dsum(v1, v2, g) - c2(-1).embed() * dsum(v2, v1, th);
                        PeriodicSequence G1 = make_sequence(
                            "gauss:k=" + std::to_string(k) + ",i=" + std::to_string(c1.ordinal()));
                        PeriodicSequence G2 = make_sequence(
                            "gauss:k=" + std::to_string(k) + ",i=" + std::to_string(c2.ordinal()));
                        Complex rhs = PI * I_UNIT / static_cast<double>(k) * c1(-1).embed() *
                                      P1at(Rational(0), G1, 1).embed() *
                                      P1at(Rational(0), G2, 1).embed();
                        if (c1.is_principal()) {
                            const double phi = euler_phi(k);
                            const Complex z(0.0, PI / (k * g));
                            rhs += phi / k * (-phi / 2.0) * std::log(z);
                        }
                        return numeric_outcome(lhs, rhs, 1e-12);
                    }});
                }
            }
    }
    // cosh examples
    out.push_back({"rel=example k=6 split", []() {
        auto chi = dirichlet_characters(6)[1];
        auto v = embedded(chi.sequence());
        auto f = [&](double a) {
            double tot = 0.0;
            for (int n = 1; n < 2000; ++n) {
                if (2.0 * n * a > 650.0) break;
                double c = v[n % 6].real();
                if (c == 0.0) continue;
                tot += c / n / (2.0 * std::cosh(2.0 * n * a) - 1.0);
            }
            return tot;
        };
        const double g = PI / 7.0, th = PI * PI / 36.0 / g;
        return numeric_outcome(Complex(f(g) + f(th), 0), Complex(PI / (2.0 * std::sqrt(3.0)), 0));
    }});
    out.push_back({"rel=example k=6 equal", []() {
        auto chi = dirichlet_characters(6)[1];
        auto v = embedded(chi.sequence());
        double tot = 0.0;
        for (int n = 1; n < 2000; ++n) {
            if (n * PI / 3.0 > 650.0) break;
            double c = v[n % 6].real();
            if (c == 0.0) continue;
            tot += c / n / (2.0 * std::cosh(n * PI / 3.0) - 1.0);
        }
        return numeric_outcome(Complex(tot, 0), Complex(PI / (4.0 * std::sqrt(3.0)), 0));
    }});
    out.push_back({"rel=example k=3", []() {
        auto chi = dirichlet_characters(3)[1];
        auto v = embedded(chi.sequence());
        auto f = [&](double a) {
            double tot = 0.0;
            for (int n = 1; n < 2000; ++n) {
                if (2.0 * n * a > 650.0) break;
                double c = v[n % 3].real();
                if (c == 0.0) continue;
                tot += c / n / (2.0 * std::cosh(2.0 * n * a) + 1.0);
            }
            return tot;
        };
        const double g = PI / 5.0, th = PI * PI / 9.0 / g;
        return numeric_outcome(Complex(f(g) + f(th), 0), Complex(PI / (9.0 * std::sqrt(3.0)), 0));
    }});
    // odd-odd L-product display
    for (int k : {3, 4}) {
        std::ostringstream os;
        os << "k=" << k << " rel=L-product";
        out.push_back({os.str(), [k, opt]() {
            auto chi = dirichlet_characters(k)[1];
            PeriodicSequence G = make_sequence("gauss:k=" + std::to_string(k) + ",i=1");
            const Complex z(0.0, 0.9);
            double t1 = 0, t2 = 0;
            Complex A1 = a_double(-1.0 / z, Complex(0, 0), G, chi.sequence(), opt, t1);
            Complex A2 = a_double(z, Complex(0, 0), G, chi.sequence(), opt, t2);
            Complex L1 = dirichlet_L(1, chi);
            Complex rhs = -static_cast<double>(k) / (PI * I_UNIT) * L1 * L1;
            return numeric_outcome(A1 + A2, rhs, t1 + t2);
        }});
    }
}

void reg_N10(std::vector<Instance>& out, const CatalogOptions&) {
    for (double g : {2.0, 1.3, PI}) {
        std::ostringstream os;
        os << "gamma=" << g << " rel=log-form";
        out.push_back({os.str(), [g]() {
            const double th = PI * PI / g;
            double tot = 0.0;
            for (int n = 0; n < 400000; ++n) {
                const double m = 2.0 * n + 1.0;
                const double t1 = m * g > 650 ? 1.0 : 1.0 / (1.0 + std::exp(-m * g));
                const double t2 = m * th > 650 ? 1.0 : 1.0 / (1.0 + std::exp(-m * th));
                const double term = (t1 - t2) / m;
                tot += term;
                if (n > 64 && std::abs(1.0 - t1) < 1e-18 && std::abs(1.0 - t2) < 1e-18) break;
            }
            return numeric_outcome(Complex(tot, 0), Complex((std::log(g) - std::log(th)) / 8.0, 0));
        }});
        std::ostringstream os2;
        os2 << "gamma=" << g << " rel=sech2-pair";
        out.push_back({os2.str(), [g]() {
            const double th = PI * PI / g;
            auto f = [](double a) {
                double tot = 0.0;
                for (int n = 0; n < 100000; ++n) {
                    const double m = (2.0 * n + 1.0) * a / 2.0;
                    if (m > 350.0) break;
                    const double s = 1.0 / std::cosh(m);
                    tot += s * s;
                }
                return tot;
            };
            return numeric_outcome(Complex(g * f(g) + th * f(th), 0), Complex(1.0, 0));
        }});
    }
    out.push_back({"rel=sech2-at-pi", []() {
        double tot = 0.0;
        for (int n = 0; n < 1000; ++n) {
            const double m = (2.0 * n + 1.0) * PI / 2.0;
            if (m > 350.0) break;
            const double s = 1.0 / std::cosh(m);
            tot += s * s;
        }
        return numeric_outcome(Complex(tot, 0), Complex(1.0 / (2.0 * PI), 0));
    }});
}

// A1-series (alternating weights against a shifted-Gauss sequence)
Complex a1_series(Complex z, const DirichletCharacter& chi, const PeriodicSequence& Gstar,
                  int k, double tol, double& tail) {
    auto vchi = embedded(chi.sequence());
    auto vg = embedded(Gstar);
    Complex tot(0.0, 0.0);
    const double decay = std::exp(-2.0 * PI * z.imag() / k);
    double bound = 1.0;
    for (int m = 1; m < 40000; ++m) {
        Complex cm = vchi[m % k];
        if (m % 2) cm = -cm;
        if (std::abs(cm) == 0.0) continue;
        Complex row(0.0, 0.0);
        const Complex q = std::exp(2.0 * PI * I_UNIT * static_cast<double>(m) * z /
                                   static_cast<double>(k));
        Complex qn(1.0, 0.0);
        for (int n = 1; n < 40000; ++n) {
            qn *= q;
            if (std::abs(vg[n % k]) != 0.0) row += vg[n % k] * qn / static_cast<double>(n);
            if (std::abs(qn) * std::abs(q) / (1.0 - std::abs(q)) < tol / 8.0 && n > 4) break;
        }
        tot += cm * row;
        bound = 4.0 * k * std::pow(decay, m + 1) / std::pow(1.0 - decay, 2);
        if (bound < tol / 2.0 && m > 4) break;
    }
    tail = bound;
    return tot;
}

void reg_N11(std::vector<Instance>& out, const CatalogOptions& opt) {
    // alternating transformation at a general matrix, and its gamma-form at
    // the inversion point
    struct Mat { long a, b, c, d; int k; };
    const Mat mats[3] = {{4, 3, 5, 4, 4}, {6, 5, 7, 6, 6}, {8, 7, 9, 8, 8}};
    for (const auto& M : mats) {
        auto chars = dirichlet_characters(M.k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars) {
                if (c1.parity() * c2.parity() != 1) continue;
                std::ostringstream os;
                os << "k=" << M.k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                   << " rel=alt-transform";
                out.push_back({os.str(), [M, c1, c2, opt]() {
                    PeriodicSequence G1s = make_sequence("gauss_shift:k=" + std::to_string(M.k) +
                                                         ",i=" + std::to_string(c1.ordinal()));
                    PeriodicSequence G2s = make_sequence("gauss_shift:k=" + std::to_string(M.k) +
                                                         ",i=" + std::to_string(c2.ordinal()));
                    const Complex z(0.1, 0.9);
                    const Complex Vz = (static_cast<double>(M.a) * z + static_cast<double>(M.b)) /
                                       (static_cast<double>(M.c) * z + static_cast<double>(M.d));
                    const double tol = opt.budget.tail_bound_target;
                    double t1 = 0, t2 = 0;
                    Complex A1 = a1_series(Vz, c1, G2s, M.k, tol, t1);
                    Complex A2 = a1_series(z, c2, G1s, M.k, tol, t2);
                    Complex lhs = A1 - c1(M.c).embed() * c2(M.b).embed() * A2;
                    const long b = min_b(M.c, M.d);
                    const Complex czd = static_cast<double>(M.c) * z + static_cast<double>(M.d);
                    const int h = M.k;
                    Complex rhs =
                        PI * I_UNIT * c1(-M.c).embed() * c2(b).embed() *
                            alternating_char_sum(M.d, M.c, c2, c1).embed() -
                        PI * I_UNIT / (2.0 * static_cast<double>(M.c) * czd) *
                            B_star(0, c2).embed() * B_star(2, c1).embed() -
                        PI * I_UNIT / (static_cast<double>(M.c) * h) * czd * c2(-b).embed() *
                            B_star(0, c1).embed() * P_star(2, Rational(0), c2).embed();
                    return numeric_outcome(lhs, rhs, t1 + t2);
                }});
                for (double g : {0.7, 1.1}) {
                    std::ostringstream os2;
                    os2 << "k=" << M.k << " i1=" << c1.ordinal() << " i2=" << c2.ordinal()
                        << " gamma=" << g << " rel=alt-gamma-form";
                    out.push_back({os2.str(), [M, c1, c2, g]() {
                        const int k = M.k;
                        const double th = PI * PI / (k * k * g);
                        auto v1 = embedded(c1.sequence());
                        auto v2 = embedded(c2.sequence());
                        auto S = [&](const std::vector<Complex>& vout,
                                     const std::vector<Complex>& vin, double a) {
                            Complex tot(0.0, 0.0);
                            for (int n = 1; n < 20000; ++n) {
                                if (2.0 * n * k * a > 650.0) break;
                                Complex gout = gauss_c(Complex(n + k / 2.0, 0.0), vout, k);
                                Complex gin =
                                    gauss_c(Complex(0.0, n * a * k / PI) + k / 2.0, vin, k);
                                if (std::abs(gout) * std::abs(gin) == 0.0) continue;
                                tot += gout * gin /
                                       (static_cast<double>(n) *
                                        (1.0 - std::exp(-2.0 * n * k * a)));
                            }
                            return tot;
                        };
                        Complex lhs = S(v2, v1, g) - c2(-1).embed() * S(v1, v2, th);
                        Complex rhs = PI * I_UNIT * P_star(1, Rational(0), c2).embed() *
                                          P_star(1, Rational(0), c1).embed() -
                                      k * g / 2.0 * B_star(0, c2).embed() * B_star(2, c1).embed() +
                                      k * th / 2.0 * B_star(0, c1).embed() * B_star(2, c2).embed();
                        return numeric_outcome(lhs, rhs);
                    }});
                }
            }
    }
    // worked constants: pi/8, (gamma-theta)/3 for chi0 mod 8 at
    // gamma*theta = pi^2/64, and the mod-6 kernel with the corrected sign
    out.push_back({"rel=example mod8 value=(g-t)/3", []() {
        const double g = 0.7, th = PI * PI / 64.0 / g;
        auto chi = dirichlet_characters(8)[0];
        auto v = embedded(chi.sequence());
        auto S = [&](double a) {
            Complex tot(0.0, 0.0);
            for (int n = 1; n < 20000; ++n) {
                if (16.0 * n * a > 650.0) break;
                Complex gout = gauss_c(Complex(n + 4.0, 0.0), v, 8);
                Complex gin = gauss_c(Complex(0.0, n * a * 8.0 / PI) + 4.0, v, 8);
                tot += gout * gin / (static_cast<double>(n) * (1.0 - std::exp(-16.0 * n * a)));
            }
            return tot;
        };
        return numeric_outcome(S(g) - S(th), Complex((g - th) / 3.0, 0));
    }});
    out.push_back({"rel=example mod8 csch-kernel", []() {
        // the same value through the collapsed kernel S(a) = 1/2 sum (-1)^m csch(8 m a)/m
        const double g = 0.9, th = PI * PI / 64.0 / g;
        auto S = [](double a) {
            double tot = 0.0;
            for (int m = 1; m < 20000; ++m) {
                if (8.0 * m * a > 650.0) break;
                tot += (m % 2 ? -1.0 : 1.0) / std::sinh(8.0 * m * a) / m;
            }
            return tot / 2.0;
        };
        return numeric_outcome(Complex(S(g) - S(th), 0), Complex((g - th) / 3.0, 0));
    }});
    out.push_back({"rel=example mod6 value=-pi/9", []() {
        const double g = 0.8, th = PI * PI / 9.0 / g;
        auto f = [](double a) {
            double tot = 0.0;
            for (int n = 1; n < 20000; ++n) {
                if (2.0 * n * a > 650.0) break;
                tot += (n % 2 ? -1.0 : 1.0) * std::sin(2.0 * PI * n / 3.0) * std::cosh(n * a) /
                       (n * (2.0 * std::cosh(2.0 * n * a) + 1.0));
            }
            return tot;
        };
        return numeric_outcome(Complex(f(g) + f(th), 0), Complex(-PI / 9.0, 0));
    }});
}

void reg_N_ex1(std::vector<Instance>& out, const CatalogOptions&) {
    out.push_back({"gamma=theta=pi", []() {
        auto chi = dirichlet_characters(4)[1];
        auto v = embedded(chi.sequence());
        auto f = [&](double a) {
            double tot = 0.0;
            for (int n = 1; n < 4000; ++n) {
                if (n * a / 2.0 > 650.0) break;
                double c = v[n % 4].real();
                if (c == 0.0) continue;
                tot += c / (n * (std::exp(n * a / 2.0) + std::exp(-n * a / 2.0)));
            }
            return tot;
        };
        return numeric_outcome(Complex(f(PI) + f(PI), 0), Complex(PI / 8.0, 0));
    }});
}

void reg_N12(std::vector<Instance>& out, const CatalogOptions&) {
    // L at s = 0 equals P1(-theta, A); 50 deterministic draws
    const Rational thetas[10] = {Rational(0),     Rational(1),      Rational(-2),
                                 Rational(1, 2),  Rational(1, 3),   Rational(-3, 4),
                                 Rational(5, 7),  Rational(13, 5),  Rational(-7, 3),
                                 Rational(9, 8)};
    int n = 0;
    for (int k : {1, 2, 3, 4, 6}) {
        auto seqs = sweep_sequences(k);
        for (size_t i = 0; i < seqs.size() && n < 50; i += 2) {
            for (int t = 0; t < 2 && n < 50; ++t) {
                const Rational theta = thetas[(n * 3 + t * 7) % 10];
                const long beta = 1 + (n % 3);
                std::ostringstream os;
                os << "rel=L-at-zero n=" << n << " k=" << k << " A=" << seqs[i].label
                   << " beta=" << beta << " theta=" << theta.to_string();
                out.push_back({os.str(), [A = seqs[i], beta, theta]() {
                    Complex lhs = periodic_L(Complex(0.0, 0.0), A, beta, theta);
                    Complex rhs = periodic_P(1, -theta, A.scaled(beta), 1).embed();
                    return numeric_outcome(lhs, rhs);
                }});
                ++n;
            }
        }
    }
    // P1(0,G) = i for chi mod 4, against -2(k/2pi i) L(1,chi)
    out.push_back({"rel=p1g-L1 k=4", []() {
        auto chi = dirichlet_characters(4)[1];
        Complex L = dirichlet_L(1, chi);
        Complex lhs = -2.0 * (4.0 / (2.0 * PI * I_UNIT)) * L;
        return numeric_outcome(lhs, Complex(0.0, 1.0));
    }});
    // Dirichlet L bridge: P_r(0,G) = -2 (k/2pi i)^r L(r,chi) for matching parity
    for (int k : {3, 4, 5}) {
        auto chars = dirichlet_characters(k);
        for (const auto& chi : chars) {
            for (int r = 1; r <= 4; ++r) {
                const int l = chi.parity() == 1 ? 0 : 1;
                if ((r - l) % 2 != 0) continue;
                if (r == 1 && chi.is_principal()) continue;
                std::ostringstream os;
                os << "rel=L-bridge k=" << k << " i=" << chi.ordinal() << " r=" << r;
                out.push_back({os.str(), [k, chi, r]() {
                    PeriodicSequence G = make_sequence("gauss:k=" + std::to_string(k) +
                                                       ",i=" + std::to_string(chi.ordinal()));
                    Complex lhs = periodic_P(r, Rational(0), G, 1).embed();
                    Complex rhs = -2.0 * ipow(static_cast<double>(k) / (2.0 * PI * I_UNIT), r) *
                                  dirichlet_L(r, chi);
                    return numeric_outcome(lhs, rhs);
                }});
            }
        }
    }
}

void reg_N13(std::vector<Instance>& out, const CatalogOptions&) {
    const Rational rs[4] = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(-3, 4)};
    for (int t = 0; t < 20; ++t) {
        LoopParams p;
        p.z = Complex(0.1 + 0.11 * (t % 7), 0.6 + 0.17 * (t % 5));
        p.N = t % 3;
        p.c = 1 + t % 4;
        p.d = (t % 5) - 2;
        p.k = 1 + t % 4;
        p.j = 1 + t % p.c;
        p.mu = t % p.k;
        p.v = (t * 3) % p.k;
        p.R1 = rs[t % 4];
        p.R2 = rs[(t + 2) % 4];
        std::ostringstream os;
        os << "draw=" << t << " N=" << p.N << " c=" << p.c << " d=" << p.d << " k=" << p.k;
        out.push_back({os.str(), [p]() {
            Complex a = loop_I_residue(p);
            Complex b = loop_I_quadrature(p);
            return numeric_outcome(a, b);
        }});
    }
}

void reg_N14(std::vector<Instance>& out, const CatalogOptions& opt) {
    struct Mat { long a, b, c, d; int k; };
    const Complex zs[2] = {Complex(0.0, 1.0), Complex(0.25, 1.0)};

    auto richardson = [](const std::function<Complex(double)>& F) {
        const double e1 = 1e-3, e2 = 5e-4;
        const Complex a1 = 0.5 * (F(e1) + F(-e1));
        const Complex a2 = 0.5 * (F(e2) + F(-e2));
        return (4.0 * a2 - a1) / 3.0;
    };

    // first- and second-family limits, with and without shifts
    const Mat mA{4, 5, 3, 4, 2};
    const Mat mB{4, 3, 5, 4, 4};
    const Mat mC{5, 2, 2, 1, 2};
    for (const auto& z : zs) {
        std::ostringstream os;
        os << "rel=first-family k=2 mat=4,5,3,4 z=" << cpx(z);
        out.push_back({os.str(), [z, mA, opt, richardson]() {
            PeriodicSequence A = make_sequence("principal:k=2");
            PeriodicSequence B = make_sequence("ramanujan:k=2");
            const long b = min_b(mA.c, mA.d);
            const Complex czd = static_cast<double>(mA.c) * z + static_cast<double>(mA.d);
            const Complex Vz = (static_cast<double>(mA.a) * z + static_cast<double>(mA.b)) / czd;
            auto F = [&](double eps) {
                SeriesBudget b1 = opt.budget, b2 = opt.budget;
                const Complex s(eps, 0.0);
                return power_branch(czd, s) * gamma_G(Vz, s, A, 1, B, 1, Rational(0), Rational(0), b1) -
                       gamma_G(z, s, B, -b, A, -mA.c, Rational(0), Rational(0), b2);
            };
            Complex lhs = richardson(F);
            Complex rhs =
                2.0 * PI * I_UNIT *
                    dedekind_raw(mA.d, mA.c, b, A, B, Family::BbAc).embed() -
                PI * I_UNIT / (static_cast<double>(mA.c) * czd) *
                    (seq_mean(B) * periodic_B(2, A)).embed() -
                2.0 * PI * I_UNIT * czd / static_cast<double>(mA.c) *
                    (seq_mean(A) * P2at(Rational(0), B, b)).embed();
            return numeric_outcome(lhs, rhs);
        }});
    }
    out.push_back({"rel=first-family k=4 mat=4,3,5,4 z=i", [mB, opt, richardson]() {
        auto ch = dirichlet_characters(4);
        PeriodicSequence A = ch[1].sequence();
        PeriodicSequence B = ch[0].sequence();
        const Complex z(0.0, 1.0);
        const long b = min_b(mB.c, mB.d);
        const Complex czd = static_cast<double>(mB.c) * z + static_cast<double>(mB.d);
        const Complex Vz = (static_cast<double>(mB.a) * z + static_cast<double>(mB.b)) / czd;
        auto F = [&](double eps) {
            SeriesBudget b1 = opt.budget, b2 = opt.budget;
            const Complex s(eps, 0.0);
            return power_branch(czd, s) * gamma_G(Vz, s, A, 1, B, 1, Rational(0), Rational(0), b1) -
                   gamma_G(z, s, B, -b, A, -mB.c, Rational(0), Rational(0), b2);
        };
        Complex lhs = richardson(F);
        Complex rhs = 2.0 * PI * I_UNIT *
                          dedekind_raw(mB.d, mB.c, b, A, B, Family::BbAc).embed() -
                      PI * I_UNIT / (static_cast<double>(mB.c) * czd) *
                          (seq_mean(B) * periodic_B(2, A)).embed() -
                      2.0 * PI * I_UNIT * czd / static_cast<double>(mB.c) *
                          (seq_mean(A) * P2at(Rational(0), B, b)).embed();
        return numeric_outcome(lhs, rhs);
    }});
    // inversion-matrix route, (c,d) = (1,0): the cross identity
    for (const auto& z : zs) {
        std::ostringstream os;
        os << "rel=inversion k=2 z=" << cpx(z);
        out.push_back({os.str(), [z, opt, richardson]() {
            PeriodicSequence A = make_sequence("principal:k=2");
            PeriodicSequence B = make_sequence("ramanujan:k=2");
            const long c = 3, b = 1;
            auto F = [&](double eps) {
                SeriesBudget b1 = opt.budget, b2 = opt.budget;
                const Complex s(eps, 0.0);
                return power_branch(z, s) * gamma_G(-1.0 / z, s, B, -b, A, -c, Rational(0),
                                                    Rational(0), b1) -
                       gamma_G(z, s, A, -c, B, b, Rational(0), Rational(0), b2);
            };
            Complex lhs = richardson(F);
            Complex rhs = 2.0 * PI * I_UNIT *
                              (P1at(Rational(0), B, -b) * P1at(Rational(0), A, -c)).embed() -
                          2.0 * PI * I_UNIT / z * (seq_mean(A) * P2at(Rational(0), B, b)).embed() -
                          2.0 * PI * I_UNIT * z * (seq_mean(B) * P2at(Rational(0), A, c)).embed();
            return numeric_outcome(lhs, rhs);
        }});
    }
    out.push_back({"rel=second-family k=2 mat=5,2,2,1 z=i", [mC, opt, richardson]() {
        PeriodicSequence A = make_sequence("principal:k=2");
        PeriodicSequence B = make_sequence("ramanujan:k=2");
        const Complex z(0.0, 1.0);
        const long a = min_a(mC.c, mC.d);
        const Complex czd = static_cast<double>(mC.c) * z + static_cast<double>(mC.d);
        const Complex Vz = (static_cast<double>(mC.a) * z + static_cast<double>(mC.b)) / czd;
        auto F = [&](double eps) {
            SeriesBudget b1 = opt.budget, b2 = opt.budget;
            const Complex s(eps, 0.0);
            return power_branch(czd, s) * gamma_G(Vz, s, A, 1, B, 1, Rational(0), Rational(0), b1) -
                   gamma_G(z, s, A, mC.d, B, mC.a, Rational(0), Rational(0), b2);
        };
        Complex lhs = richardson(F);
        Complex rhs =
            2.0 * PI * I_UNIT *
                dedekind_raw(mC.d, mC.c, a, A.scaled(-1), B.scaled(-1), Family::AdBa).embed() -
            PI * I_UNIT / (static_cast<double>(mC.c) * czd) *
                (seq_mean(B) * periodic_B(2, A)).embed() -
            2.0 * PI * I_UNIT * czd / static_cast<double>(mC.c) *
                (seq_mean(B) * P2at(Rational(0), A, mC.d)).embed();
        return numeric_outcome(lhs, rhs);
    }});
    // shifted limits for both families
    out.push_back({"rel=first-family-shifted k=2 mat=4,5,3,4 r=(1/2,1/3)", [mA, opt, richardson]() {
        PeriodicSequence A = make_sequence("principal:k=2");
        PeriodicSequence B = make_sequence("ramanujan:k=2");
        const Complex z(0.0, 1.0);
        const Rational r1(1, 2), r2(1, 3);
        const Rational R1 = Rational(mA.a) * r1 + Rational(mA.c) * r2;
        const Rational R2 = Rational(mA.b) * r1 + Rational(mA.d) * r2;
        const long b = min_b(mA.c, mA.d);
        const Complex czd = static_cast<double>(mA.c) * z + static_cast<double>(mA.d);
        const Complex Vz = (static_cast<double>(mA.a) * z + static_cast<double>(mA.b)) / czd;
        auto F = [&](double eps) {
            SeriesBudget b1 = opt.budget, b2 = opt.budget;
            const Complex s(eps, 0.0);
            return power_branch(czd, s) * gamma_G(Vz, s, A, 1, B, 1, r1, r2, b1) -
                   gamma_G(z, s, B, -mA.b, A, -mA.c, R1, R2, b2);
        };
        Complex lhs = richardson(F);
        Complex rhs =
            2.0 * PI * I_UNIT *
                dedekind_raw_gen(mA.d, mA.c, b, A, B, R2, -R1, Family::BbAc).embed() -
            2.0 * PI * I_UNIT / (static_cast<double>(mA.c) * czd) *
                (seq_mean(B) * P2at(Rational(mA.c) * R2 - Rational(mA.d) * R1, A, 1)).embed() -
            2.0 * PI * I_UNIT * czd / static_cast<double>(mA.c) *
                (seq_mean(A) * P2at(R1, B, b)).embed();
        return numeric_outcome(lhs, rhs);
    }});
    out.push_back({"rel=second-family-shifted k=2 mat=5,2,2,1 r=(1/2,1/3)", [mC, opt, richardson]() {
        PeriodicSequence A = make_sequence("principal:k=2");
        PeriodicSequence B = make_sequence("ramanujan:k=2");
        const Complex z(0.0, 1.0);
        const Rational r1(1, 2), r2(1, 3);
        const Rational R1 = Rational(mC.a) * r1 + Rational(mC.c) * r2;
        const Rational R2 = Rational(mC.b) * r1 + Rational(mC.d) * r2;
        const long a = min_a(mC.c, mC.d);
        const Complex czd = static_cast<double>(mC.c) * z + static_cast<double>(mC.d);
        const Complex Vz = (static_cast<double>(mC.a) * z + static_cast<double>(mC.b)) / czd;
        auto F = [&](double eps) {
            SeriesBudget b1 = opt.budget, b2 = opt.budget;
            const Complex s(eps, 0.0);
            return power_branch(czd, s) * gamma_G(Vz, s, A, 1, B, 1, r1, r2, b1) -
                   gamma_G(z, s, A, mC.d, B, mC.a, R1, R2, b2);
        };
        Complex lhs = richardson(F);
        Complex rhs =
            2.0 * PI * I_UNIT *
                dedekind_raw_gen(mC.d, mC.c, a, A.scaled(-1), B.scaled(-1), R2, -R1,
                                 Family::AdBa).embed() -
            2.0 * PI * I_UNIT / (static_cast<double>(mC.c) * czd) *
                (seq_mean(B) * P2at(Rational(mC.c) * R2 - Rational(mC.d) * R1, A, 1)).embed() -
            2.0 * PI * I_UNIT * czd / static_cast<double>(mC.c) *
                (seq_mean(B) * P2at(-R1, A, mC.d)).embed();
        return numeric_outcome(lhs, rhs);
    }});
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

std::vector<Entry>& registry() {
    static std::vector<Entry> reg = [] {
        std::vector<Entry> r;
        auto add = [&r](std::string id, std::string anchor, bool exact, double tol,
                        std::string note,
                        std::function<void(std::vector<Instance>&, const CatalogOptions&)> e) {
            r.push_back({std::move(id), std::move(anchor), exact, tol, std::move(note),
                         std::move(e)});
        };
        add("E1", "classical Dedekind reciprocity", true, 0, "", reg_E1);
        add("E2", "reciprocity theorem for s(d,c;B_b,A_c)", true, 0, "", reg_E2);
        add("E3", "remark reciprocity form and the mirrored-sum relation", true, 0, "", reg_E3);
        add("E4", "shifted reciprocity theorem", true, 0,
            "right side re-derived; the published statement carries two argument slips",
            reg_E4);
        add("E5", "character reciprocity", true, 0, "", reg_E5);
        add("E6", "character/Gauss reciprocity and the Hardy-Berndt split", true, 0, "", reg_E6);
        add("E7", "Gauss-pair and Ramanujan-pair reciprocity", true, 0, "", reg_E7);
        add("E8", "alternating character reciprocity", true, 0,
            "full formula carries 1/h on the two B0*.P2* terms", reg_E8);
        add("E9", "constant-pair and exponential/hat reciprocity", true, 0,
            "exp/hat right side, half-period value and chain constant re-derived",
            reg_E9);
        add("E10", "structural identities: Raabe, reflection, parity vanishing", true, 0, "",
            reg_E10);
        add("E11", "alternating transfer relations and the cotangent formula", true, 0, "",
            reg_E11);
        add("E12", "finite Fourier transform pair", true, 0, "", reg_E12);
        add("N1", "Fourier-side expansion vs direct lattice sum", false, 1e-7, "", reg_N1);
        add("N2", "Gauss-sum transformation at s = -2N", false, 1e-9, "", reg_N2);
        add("N3", "gamma-theta form of the transformation", false, 1e-10, "", reg_N3);
        add("N4", "character sech sums", false, 1e-10, "", reg_N4);
        add("N5", "alternating csch sums and the Cauchy value", false, 1e-10,
            "Cauchy constant verified as -pi^3/360, half the often-quoted value",
            reg_N5);
        add("N6", "self-paired Gauss series at z = i", false, 1e-10, "", reg_N6);
        add("N7", "differentiated transformation at z = i", false, 1e-10, "", reg_N7);
        add("N8", "character transformation under a modular map", false, 1e-9, "", reg_N8);
        add("N9", "Gauss/character pairing and the cosh examples", false, 1e-9, "", reg_N9);
        add("N10", "odd-index exponential pairs and sech^2 sums", false, 1e-10, "", reg_N10);
        add("N11", "alternating shifted-Gauss transformation and examples", false, 1e-9,
            "B-terms carry the symmetrization halving; mod-6 example sign corrected",
            reg_N11);
        add("N12", "L at s = 0 and the Dirichlet L bridge", false, 1e-10, "", reg_N12);
        add("N13", "loop integral: residue form vs quadrature", false, 1e-8, "", reg_N13);
        add("N14", "s -> 0 transformation limits", false, 1e-5, "", reg_N14);
        add("N_ex1", "worked constant pi/8", false, 1e-10, "", reg_N_ex1);
        add("N_cauchy", "Cauchy csch sum, M = 0", false, 1e-10,
            "value verified as -pi^3/360, half the often-quoted constant", reg_N_cauchy);
        return r;
    }();
    return reg;
}

} // namespace

const std::vector<IdentityInfo>& catalog_info() {
    static std::vector<IdentityInfo> info = [] {
        std::vector<IdentityInfo> v;
        for (const auto& e : registry())
            v.push_back({e.id, e.anchor, e.exact ? "exact" : "numeric", e.tolerance, e.note});
        return v;
    }();
    return info;
}

const std::vector<std::string>& catalog_manifest() {
    static const std::vector<std::string> m = {
        "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9", "E10", "E11", "E12",
        "N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8", "N9", "N10", "N11", "N12",
        "N13", "N14", "N_ex1", "N_cauchy"};
    return m;
}

namespace {

std::vector<IdentityReport> run_entries(const std::vector<const Entry*>& entries,
                                        const CatalogOptions& opt) {
    struct Job {
        const Entry* entry;
        Instance inst;
    };
    std::vector<Job> jobs;
    for (const Entry* e : entries) {
        std::vector<Instance> insts;
        e->enumerate(insts, opt);
        for (auto& i : insts) jobs.push_back({e, std::move(i)});
    }
    std::vector<IdentityReport> reports(jobs.size());

    auto run_one = [&](size_t i) {
        const auto& job = jobs[i];
        IdentityReport r;
        r.id = job.entry->id;
        r.params = job.inst.params;
        r.mode = job.entry->exact ? "exact" : "numeric";
        const auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = job.inst.eval();
            if (job.entry->exact) {
                r.residual_exact = o.exact ? o.exact->to_string() : "0";
                r.pass = !o.exact || o.exact->is_zero();
                r.residual_mag = r.pass ? 0.0 : 1.0;
            } else {
                r.residual_mag = o.numeric;
                r.tail = o.tail;
                const double tol = job.entry->tolerance * opt.tolerance_scale;
                // truncation must stay an order below the gate, so a tail can
                // never masquerade as an identity failure (or success)
                r.pass = o.numeric <= tol && o.tail <= tol / 10.0;
            }
        } catch (const std::exception& ex) {
            r.pass = false;
            r.residual_exact = std::string("error: ") + ex.what();
            r.residual_mag = std::numeric_limits<double>::infinity();
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        reports[i] = std::move(r);
    };

    if (opt.threads == 1) {
        for (size_t i = 0; i < jobs.size(); ++i) run_one(i);
    } else {
        const int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
        for (long i = 0; i < static_cast<long>(jobs.size()); ++i)
            run_one(static_cast<size_t>(i));
    }
    std::sort(reports.begin(), reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.params < b.params;
    });
    return reports;
}

} // namespace

std::vector<IdentityReport> run_case(const std::string& id, const CatalogOptions& opt) {
    for (const auto& e : registry())
        if (e.id == id) return run_entries({&e}, opt);
    throw domain_error("unknown identity id '" + id + "'");
}

std::vector<IdentityReport> run_suite(const std::string& filter, const std::string& mode_filter,
                                      const CatalogOptions& opt) {
    std::vector<const Entry*> sel;
    for (const auto& e : registry()) {
        if (!glob_match(filter, e.id)) continue;
        if (mode_filter == "exact" && !e.exact) continue;
        if (mode_filter == "numeric" && e.exact) continue;
        sel.push_back(&e);
    }
    return run_entries(sel, opt);
}

} // namespace pds
