#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "pds/dedekind.hpp"
#include "pds/errors.hpp"

using namespace pds;

TEST_CASE("classical sums") {
    CHECK(classical_s(1, 3) == Rational(1, 18));
    CHECK(classical_s(1, 2) == Rational(0));
    // reciprocity at (2,3)
    CHECK(classical_s(2, 3) + classical_s(3, 2) ==
          Rational(-1, 4) + Rational(1, 12) * (Rational(2, 3) + Rational(3, 2) + Rational(1, 6)));
    CHECK_THROWS_AS(classical_s(2, 4), domain_error);
}

TEST_CASE("hardy-berndt sums") {
    CHECK(hardy_s2(1, 2) == Rational(0));
    CHECK(hardy_s2(1, 3) == Rational(0));
    CHECK(hardy_s3(1, 2) == Rational(0));
    CHECK(hardy_s3(1, 4) == Rational(0));
    // s3(1,3) = -P1(1/3) + P1(2/3) = 1/3
    CHECK(hardy_s3(1, 3) == Rational(1, 3));
    CHECK_THROWS_AS(hardy_s2(2, 4), domain_error);
}

TEST_CASE("multiplier helpers") {
    CHECK(min_b(3, 4) == 1);   // 1*3 = 3 = -1 (mod 4)
    CHECK(min_b(1, 2) == 1);
    CHECK(min_b(5, 1) == 1);
    CHECK(min_a(2, 1) == 1);
    CHECK(min_a(5, 2) == 3);   // 3*2 = 6 = 1 (mod 5)
    CHECK_THROWS_AS(min_b(2, 4), domain_error);
}

TEST_CASE("s(d,c;I,I) = s(d,c) + 1/4") {
    PeriodicSequence I1 = make_sequence("const:k=1");
    for (long c = 1; c <= 12; ++c)
        for (long d = 1; d <= 12; ++d) {
            if (std::gcd(c, d) != 1) continue;
            CHECK(dedekind_raw(d, c, 1, I1, I1, Family::BbAc) ==
                  Cyclotomic(classical_s(d, c) + Rational(1, 4)));
        }
}

TEST_CASE("precondition checks name the failed condition") {
    PeriodicSequence chi = make_sequence("char:k=4,i=1");
    // d not divisible by k
    CHECK_THROWS_WITH_AS(periodic_dedekind(3, 5, 1, chi, chi, Family::BbAc),
                         doctest::Contains("d = 0 (mod k)"), domain_error);
    // bad multiplier congruence
    CHECK_THROWS_WITH_AS(periodic_dedekind(4, 3, 2, chi, chi, Family::BbAc),
                         doctest::Contains("bc = -1"), domain_error);
    // family AdBa wants c = 0 mod k
    CHECK_THROWS_WITH_AS(periodic_dedekind(3, 5, 2, chi, chi, Family::AdBa),
                         doctest::Contains("c = 0 (mod k)"), domain_error);
    CHECK_THROWS_AS(periodic_dedekind(4, 2, 1, chi, chi, Family::BbAc), domain_error);
    // valid calls pass
    CHECK_NOTHROW(periodic_dedekind(4, 3, 1, chi, chi, Family::BbAc));
    CHECK_NOTHROW(periodic_dedekind(3, 4, 3, chi, chi, Family::AdBa));
}

TEST_CASE("generalized sum at zero shifts equals the plain sum") {
    for (const char* sa : {"char:k=4,i=1", "ramanujan:k=4", "gauss:k=4,i=1"}) {
        PeriodicSequence A = make_sequence(sa);
        PeriodicSequence B = make_sequence("principal:k=4");
        for (long c : {1L, 3L, 5L}) {
            const long d = 4, b = min_b(c, d);
            CHECK(dedekind_raw_gen(d, c, b, A, B, Rational(0), Rational(0), Family::BbAc) ==
                  dedekind_raw(d, c, b, A, B, Family::BbAc));
        }
    }
}

TEST_CASE("single-term generalized sum against a hand evaluation") {
    // k = 1, A = B = I, (x,y) = (1/2,1/3), (d,c) = (1,1):
    // sum_{n=1}^{1} P1(n + 1/3) P1((n + 1/3) + 1/2)
    PeriodicSequence I1 = make_sequence("const:k=1");
    Cyclotomic got =
        dedekind_raw_gen(1, 1, 1, I1, I1, Rational(1, 2), Rational(1, 3), Family::BbAc);
    Rational want = bernoulli_P(1, Rational(4, 3)) * bernoulli_P(1, Rational(11, 6));
    CHECK(got == Cyclotomic(want));
}

TEST_CASE("brute force cross-check of the verbatim formulas") {
    PeriodicSequence A = make_sequence("char:k=4,i=1");
    PeriodicSequence B = make_sequence("gauss:k=4,i=1");
    const long c = 3, d = 4, b = min_b(c, d);
    Cyclotomic direct;
    for (long n = 1; n <= c * 4; ++n) {
        Cyclotomic inner;
        for (long v = 0; v < 4; ++v)
            inner += A.at(-c * v) *
                     Cyclotomic(bernoulli_P(1, (Rational(v) + Rational(d * n, c)) / Rational(4)));
        direct += B.at(b * n) * Cyclotomic(bernoulli_P(1, Rational(n, c * 4))) * inner;
    }
    CHECK(direct == dedekind_raw(d, c, b, A, B, Family::BbAc));
}

TEST_CASE("mixed-period operands extend to the lcm period") {
    // alternating sequence of the mod-3 character has period 6; pair it with a
    // period-6 partner and check the congruences are judged mod 6
    PeriodicSequence alt3 = make_sequence("altchar:k=3,i=1");
    PeriodicSequence chi6 = make_sequence("char:k=6,i=1");
    CHECK(alt3.period() == 6);
    CHECK_NOTHROW(periodic_dedekind(6, 5, min_b(5, 6), chi6, alt3, Family::BbAc));
    CHECK_THROWS_AS(periodic_dedekind(3, 5, 1, chi6, alt3, Family::BbAc), domain_error);
}

TEST_CASE("alternating character sum transfer relation") {
    for (int k : {4, 6}) {
        auto chars = dirichlet_characters(k);
        for (const auto& c1 : chars)
            for (const auto& c2 : chars)
                for (long c : {1L, 3L, 5L}) {
                    const long d = k;
                    if (std::gcd(c, d) != 1) continue;
                    const long b = min_b(c, d);
                    PeriodicSequence A = make_sequence("altchar:k=" + std::to_string(k) +
                                                       ",i=" + std::to_string(c1.ordinal()));
                    PeriodicSequence Bq = make_sequence("altchar:k=" + std::to_string(k) +
                                                        ",i=" + std::to_string(c2.ordinal()));
                    CHECK(dedekind_raw(d, c, b, A, Bq, Family::BbAc) ==
                          c1(-c) * c2(b) * alternating_char_sum(d, c, c2, c1));
                }
    }
    auto chars3 = dirichlet_characters(3);
    CHECK_THROWS_AS(alternating_char_sum(3, 1, chars3[1], chars3[1]), domain_error);
}

TEST_CASE("degenerate d = c = 1 alternating sum matches a direct evaluation") {
    auto chars = dirichlet_characters(4);
    Cyclotomic direct;
    for (long n = 1; n <= 4; ++n) {
        Cyclotomic t = chars[1](n) * Cyclotomic(bernoulli_P(1, Rational(n, 4))) *
                       P_star(1, Rational(n), chars[1]);
        direct += (n % 2 == 0) ? t : -t;
    }
    CHECK(alternating_char_sum(1, 1, chars[1], chars[1]) == direct);
}

TEST_CASE("d = 0 collapses literally") {
    PeriodicSequence chi = make_sequence("char:k=4,i=1");
    PeriodicSequence r = make_sequence("ramanujan:k=4");
    // gcd(1, 0) = 1, d = 0 = 0 (mod 4), bc = -1 (mod 0) means bc = -1 exactly
    Cyclotomic v = dedekind_raw(0, 1, -1, chi, r, Family::BbAc);
    Cyclotomic direct;
    for (long n = 1; n <= 4; ++n)
        direct += r.at(-n) * Cyclotomic(bernoulli_P(1, Rational(n, 4))) *
                  periodic_P(1, Rational(0), chi, 1);
    CHECK(v == direct);
}
