#include "pds/dedekind.hpp"

#include <numeric>

#include "pds/errors.hpp"

namespace pds {

ModularMap::ModularMap(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) throw domain_error("modular map needs ad - bc = 1");
    if (c <= 0) throw domain_error("modular map needs c > 0");
}

Rational classical_s(long d, long c) {
    if (c <= 0) throw domain_error("classical sum needs c > 0");
    if (std::gcd(c, std::abs(d)) != 1) throw domain_error("classical sum needs gcd(c,d) = 1");
    Rational acc(0);
    for (long n = 1; n < c; ++n)
        acc += sawtooth(Rational(n, c)) * sawtooth(Rational(d * n, c));
    return acc;
}

Rational hardy_s2(long d, long c) {
    if (c <= 0) throw domain_error("s2 needs c > 0");
    if (std::gcd(c, std::abs(d)) != 1) throw domain_error("s2 needs gcd(c,d) = 1");
    Rational acc(0);
    for (long n = 1; n < c; ++n) {
        Rational t = bernoulli_P(1, Rational(n, c)) * bernoulli_P(1, Rational(d * n, c));
        acc += (n % 2 == 0) ? t : -t;
    }
    return acc;
}

Rational hardy_s3(long d, long c) {
    if (c <= 0) throw domain_error("s3 needs c > 0");
    if (std::gcd(c, std::abs(d)) != 1) throw domain_error("s3 needs gcd(c,d) = 1");
    Rational acc(0);
    for (long n = 1; n < c; ++n) {
        Rational t = bernoulli_P(1, Rational(d * n, c));
        acc += (n % 2 == 0) ? t : -t;
    }
    return acc;
}

long min_b(long c, long d) {
    const long dd = std::abs(d);
    if (dd <= 1) return 1;
    for (long b = 1; b <= dd; ++b)
        if (((b * c + 1) % dd) == 0) return b;
    throw domain_error("no b with bc = -1 (mod d); gcd(c,d) != 1?");
}

long min_a(long c, long d) {
    const long cc = std::abs(c);
    if (cc <= 1) return 1;
    for (long a = 1; a <= cc; ++a)
        if ((((a * d - 1) % cc) + cc) % cc == 0) return a;
    throw domain_error("no a with ad = 1 (mod c); gcd(c,d) != 1?");
}

namespace {

int common_period(const PeriodicSequence& A, const PeriodicSequence& B) {
    return std::lcm(A.period(), B.period());
}

// P1(x, S_mult) over an imposed period k (>= the sequence's own period).
Cyclotomic inner_P1(const Rational& x, const PeriodicSequence& S, long mult, int k) {
    Cyclotomic acc;
    for (long v = 0; v < k; ++v) {
        const Cyclotomic& f = S.at(-mult * v);
        if (f.is_zero()) continue;
        acc += f * Cyclotomic(bernoulli_P(1, (Rational(v) + x) / Rational(k)));
    }
    return acc;
}

} // namespace

Cyclotomic dedekind_raw_gen(long d, long c, long mult, const PeriodicSequence& A,
                            const PeriodicSequence& B, const Rational& x, const Rational& y,
                            Family fam) {
    if (c <= 0) throw domain_error("periodic Dedekind sum needs c > 0");
    const int k = common_period(A, B);
    const Rational ck(static_cast<long>(c) * k);
    Cyclotomic acc;
    for (long n = 1; n <= static_cast<long>(c) * k; ++n) {
        const Cyclotomic& w = fam == Family::BbAc ? B.at(mult * n) : A.at(d * n);
        if (w.is_zero()) continue;
        const Rational ny = Rational(n) + y;
        const Rational outer_arg = ny / ck;
        const Rational inner_arg = Rational(d) * ny / Rational(c) + x;
        const Cyclotomic inner = fam == Family::BbAc ? inner_P1(inner_arg, A, c, k)
                                                     : inner_P1(inner_arg, B, mult, k);
        acc += w * Cyclotomic(bernoulli_P(1, outer_arg)) * inner;
    }
    return acc;
}

Cyclotomic dedekind_raw(long d, long c, long mult, const PeriodicSequence& A,
                        const PeriodicSequence& B, Family fam) {
    return dedekind_raw_gen(d, c, mult, A, B, Rational(0), Rational(0), fam);
}

namespace {

void check_preconditions(long d, long c, long mult, const PeriodicSequence& A,
                         const PeriodicSequence& B, Family fam) {
    const int k = common_period(A, B);
    if (c <= 0) throw domain_error("periodic Dedekind sum needs c > 0");
    if (std::gcd(c, std::abs(d)) != 1)
        throw domain_error("periodic Dedekind sum needs gcd(c,d) = 1");
    if (fam == Family::BbAc) {
        if (d % k != 0)
            throw domain_error("family BbAc needs d = 0 (mod k)");
        const long dd = std::abs(d);
        if (dd > 1 && ((mult * c + 1) % dd + dd) % dd != 0)
            throw domain_error("family BbAc needs bc = -1 (mod d)");
    } else {
        if (c % k != 0)
            throw domain_error("family AdBa needs c = 0 (mod k)");
        if (c > 1 && ((mult * d - 1) % c + c) % c != 0)
            throw domain_error("family AdBa needs ad = 1 (mod c)");
    }
}

} // namespace

Cyclotomic periodic_dedekind(long d, long c, long mult, const PeriodicSequence& A,
                             const PeriodicSequence& B, Family fam) {
    check_preconditions(d, c, mult, A, B, fam);
    return dedekind_raw(d, c, mult, A, B, fam);
}

Cyclotomic generalized_dedekind(long d, long c, long mult, const PeriodicSequence& A,
                                const PeriodicSequence& B, const Rational& x,
                                const Rational& y, Family fam) {
    check_preconditions(d, c, mult, A, B, fam);
    return dedekind_raw_gen(d, c, mult, A, B, x, y, fam);
}

Cyclotomic dedekind_swapped(long c, long d, long b, const PeriodicSequence& A,
                            const PeriodicSequence& B) {
    // s(c,d;A_c,B_b): AdBa formula with first argument c, modulus d.
    return dedekind_raw(c, d, b, A, B, Family::AdBa);
}

Cyclotomic dedekind_mirrored(long c, long d, long b, const PeriodicSequence& A,
                             const PeriodicSequence& B) {
    // s(-c,d;A_c,B_{-b}) = AdBa formula at (-c, d, b) with both sequences
    // index-reversed (the derivation's A_{-d}, B_{-a} reading).
    return dedekind_raw(-c, d, b, A.scaled(-1), B.scaled(-1), Family::AdBa);
}

Cyclotomic dedekind_mirrored_gen(long c, long d, long b, const PeriodicSequence& A,
                                 const PeriodicSequence& B, const Rational& R1,
                                 const Rational& R2) {
    return dedekind_raw_gen(-c, d, b, A.scaled(-1), B.scaled(-1), -R1, -R2, Family::AdBa);
}

Cyclotomic dedekind_norm(long D, long C, const PeriodicSequence& Sb,
                         const PeriodicSequence& Sa) {
    if (C <= 0) throw domain_error("normalized Dedekind sum needs second argument > 0");
    const int k = common_period(Sb, Sa);
    Cyclotomic acc;
    for (long n = 1; n <= static_cast<long>(C) * k; ++n) {
        const Cyclotomic& w = Sb.at(n);
        if (w.is_zero()) continue;
        acc += w * Cyclotomic(bernoulli_P(1, Rational(n, C * k))) *
               inner_P1(Rational(D * n, C), Sa, 1, k);
    }
    return acc;
}

Cyclotomic alternating_char_sum(long d, long c, const DirichletCharacter& chi2,
                                const DirichletCharacter& chi1) {
    const int k = chi1.modulus();
    if (chi2.modulus() != k)
        throw domain_error("alternating sum needs a common modulus");
    if (k % 2 != 0) throw domain_error("alternating sum needs even modulus");
    if (c <= 0) throw domain_error("alternating sum needs c > 0");
    Cyclotomic acc;
    for (long n = 1; n <= static_cast<long>(c) * k; ++n) {
        const Cyclotomic& w = chi2(n);
        if (w.is_zero()) continue;
        Cyclotomic term = w * Cyclotomic(bernoulli_P(1, Rational(n, c * k))) *
                          P_star(1, Rational(d * n, c), chi1);
        acc += (n % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace pds
