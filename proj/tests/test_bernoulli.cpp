#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pds/bernoulli.hpp"
#include "pds/errors.hpp"
#include "pds/sequences.hpp"

using namespace pds;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (int n = 3; n < 30; n += 2) CHECK(bernoulli_number(n) == Rational(0));
}

TEST_CASE("euler numbers") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(1) == 0);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(1, Rational(3, 4)) == Rational(1, 4));
    CHECK(bernoulli_poly(2, Rational(1, 2)) == Rational(-1, 12));
    CHECK(bernoulli_poly(2, Rational(1, 4)) == Rational(-1, 48));
    CHECK(bernoulli_poly(0, Rational(7, 5)) == Rational(1));
    // B_1(1) = 1/2, B_{2n-1}(1/2) = 0
    CHECK(bernoulli_poly(1, Rational(1)) == Rational(1, 2));
    CHECK(bernoulli_poly(3, Rational(1, 2)) == Rational(0));
}

TEST_CASE("bernoulli function P_n with the integer convention") {
    CHECK(bernoulli_P(1, Rational(0)) == Rational(-1, 2));
    CHECK(bernoulli_P(1, Rational(-5)) == Rational(-1, 2));
    CHECK(bernoulli_P(1, Rational(7, 3)) == Rational(-1, 6));
    CHECK(sawtooth(Rational(0)) == Rational(0));
    CHECK(sawtooth(Rational(7, 3)) == Rational(-1, 6));
    // P2(1/2) = -1/24 = 2 (P2(1/4) + P2(3/4))
    CHECK(bernoulli_P(2, Rational(1, 2)) == Rational(-1, 24));
    CHECK(bernoulli_P(2, Rational(1, 2)) ==
          Rational(2) * (bernoulli_P(2, Rational(1, 4)) + bernoulli_P(2, Rational(3, 4))));
}

TEST_CASE("periodic P and B basics") {
    PeriodicSequence ck6 = make_sequence("ramanujan:k=6");
    CHECK(periodic_P(1, Rational(0), ck6, 1) == Cyclotomic(Rational(-1)));  // -phi(6)/2
    for (int k : {3, 4, 5, 6}) {
        PeriodicSequence ck = make_sequence("ramanujan:k=" + std::to_string(k));
        CHECK(periodic_P(1, Rational(0), ck, 1) ==
              Cyclotomic(Rational(-euler_phi(k), 2)));
        PeriodicSequence chi0 = make_sequence("principal:k=" + std::to_string(k));
        CHECK(periodic_P(0, Rational(17, 5), chi0, 1) ==
              Cyclotomic(Rational(euler_phi(k), k)));
    }
    CHECK(periodic_B(0, make_sequence("const:k=5")) == Cyclotomic(1));
    // periodicity P_n(x + k, A, c) = P_n(x, A, c)
    PeriodicSequence chi = make_sequence("char:k=4,i=1");
    for (int n = 0; n <= 4; ++n)
        CHECK(periodic_P(n, Rational(5, 7), chi, 3) ==
              periodic_P(n, Rational(5, 7) + Rational(4), chi, 3));
}

TEST_CASE("generating function oracle for periodic B") {
    // the closed forms must reproduce the coefficients of
    // sum_n f(n) t e^{nt} / (e^{kt} - 1) computed by exact series division
    for (const char* spec : {"const:k=3", "char:k=4,i=1", "ramanujan:k=5", "char:k=6,i=1",
                             "gauss:k=3,i=1", "exp:k=4"}) {
        PeriodicSequence A = make_sequence(spec);
        const int k = A.period();
        const int ORD = 9;
        // numerator sum_n f(n) e^{nt} as truncated series; denominator
        // (e^{kt}-1)/t, a unit with constant term k
        std::vector<Cyclotomic> num(ORD, Cyclotomic(0));
        for (int n = 0; n < k; ++n) {
            Rational p(1);
            for (int j = 0; j < ORD; ++j) {
                num[j] += A.at(n) * Cyclotomic(p);
                p *= Rational(n);
                p /= Rational(j + 1);
            }
        }
        std::vector<Rational> den(ORD);
        {
            Rational p(1);  // k^{j+1}/(j+1)! coefficients
            for (int j = 0; j < ORD; ++j) {
                p *= Rational(static_cast<long>(k));
                p /= Rational(j + 1);
                den[j] = p;
            }
        }
        // series division q = num / den
        std::vector<Cyclotomic> q(ORD, Cyclotomic(0));
        for (int j = 0; j < ORD; ++j) {
            Cyclotomic acc = num[j];
            for (int i = 0; i < j; ++i) acc -= q[i] * Cyclotomic(den[j - i]);
            q[j] = acc * Cyclotomic(den[0].inverse());
        }
        Rational fact(1);
        for (int j = 0; j < ORD; ++j) {
            if (j > 1) fact *= Rational(j);
            CHECK(periodic_B(j, A) == q[j] * Cyclotomic(j == 0 ? Rational(1) : fact * Rational(j == 1 ? 1 : 1)));
        }
    }
}

TEST_CASE("star variants") {
    auto chars8 = dirichlet_characters(8);
    CHECK(B_star(0, chars8[0]) == Cyclotomic(-4));
    CHECK(P_star(1, Rational(0), chars8[0]).is_zero());
    CHECK(B_star(2, chars8[0]) ==
          Cyclotomic(Rational(-2) * (bernoulli_poly(2, Rational(1, 8)) +
                                     bernoulli_poly(2, Rational(3, 8)))));
    auto chars4 = dirichlet_characters(4);
    CHECK(B_star(0, chars4[1]).is_zero());
    // normalization link: m! P*_m(0,chi) = k^{m-1} B*_m(chi)
    for (const auto& chi : chars8)
        for (int m = 0; m <= 3; ++m) {
            Rational fact(1);
            for (int i = 2; i <= m; ++i) fact *= Rational(i);
            CHECK(P_star(m, Rational(0), chi) * Cyclotomic(fact) ==
                  Cyclotomic(Rational(8).pow(m - 1)) * B_star(m, chi));
        }
    auto chars3 = dirichlet_characters(3);
    CHECK_THROWS_AS(B_star(0, chars3[1]), domain_error);
}

TEST_CASE("mod-4 character Bernoulli values and the (m/2) E_{m-1} quantity") {
    auto chi = dirichlet_characters(4)[1];
    // from the generating function with f(n)-weights, B_1(chi) = -1/2
    CHECK(periodic_B(1, chi.sequence()) == Cyclotomic(Rational(-1, 2)));
    // the f(-n)-weighted variant B_m(0, chi) is the one that equals
    // (m/2) E_{m-1} at odd m; for characters the two differ by chi(-1)
    for (int m : {1, 3, 5}) {
        Rational want = Rational(m, 2) * Rational(mpq_class(euler_number(m - 1)));
        CHECK(periodic_B_poly(m, Rational(0), chi.sequence()) == Cyclotomic(want));
        CHECK(chi(-1) * periodic_B(m, chi.sequence()) ==
              periodic_B_poly(m, Rational(0), chi.sequence()));
    }
    // even degree: both weightings agree
    for (int m : {0, 2, 4})
        for (const char* s : {"char:k=4,i=1", "ramanujan:k=6", "gauss:k=3,i=1"}) {
            PeriodicSequence A = make_sequence(s);
            CHECK(periodic_B(m, A) == periodic_B_poly(m, Rational(0), A));
        }
}
