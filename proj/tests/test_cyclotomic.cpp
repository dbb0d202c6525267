#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "pds/cyclotomic.hpp"
#include "pds/errors.hpp"

using namespace pds;

namespace {
double cnorm(std::complex<double> z) { return std::abs(z); }

Cyclotomic zeta(int m, long j = 1) { return Cyclotomic::root_of_unity(m, j); }
} // namespace

TEST_CASE("cyclotomic polynomials by exact divisor products") {
    // divisor-product oracle: product of Phi_d over d | m equals x^m - 1
    auto check_product = [](int m) {
        std::vector<Rational> prod{Rational(1)};
        for (int d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            auto phi = cyclotomic_polynomial(d);
            std::vector<Rational> next(prod.size() + phi.size() - 1);
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        REQUIRE(prod.size() == static_cast<size_t>(m + 1));
        CHECK(prod[0] == Rational(-1));
        CHECK(prod[m] == Rational(1));
        for (int i = 1; i < m; ++i) CHECK(prod[i] == Rational(0));
    };
    for (int m : {1, 2, 4, 6, 12, 30, 105}) check_product(m);

    auto p1 = cyclotomic_polynomial(1);   // x - 1
    CHECK(p1 == std::vector<Rational>{Rational(-1), Rational(1)});
    auto p4 = cyclotomic_polynomial(4);   // x^2 + 1
    CHECK(p4 == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    auto p6 = cyclotomic_polynomial(6);   // x^2 - x + 1
    CHECK(p6 == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
}

TEST_CASE("degree equals phi up to the cap") {
    for (int m = 1; m <= 360; ++m)
        CHECK(static_cast<int>(cyclotomic_polynomial(m).size()) - 1 == euler_phi(m));
    CHECK_THROWS_AS(cyclotomic_polynomial(361), capacity_error);
}

TEST_CASE("roots of unity") {
    CHECK(zeta(4, 2) == Cyclotomic(-1));
    // geometric sum of all 5th roots vanishes
    Cyclotomic s;
    for (int j = 0; j < 5; ++j) s += zeta(5, j);
    CHECK(s.is_zero());
    // zeta_m^m = 1 and Phi_m(zeta_m) = 0 for all m <= 60
    for (int m = 1; m <= 60; ++m) {
        Cyclotomic z = zeta(m);
        Cyclotomic p(1);
        for (int i = 0; i < m; ++i) p *= z;
        CHECK(p == Cyclotomic(1));
        auto phi = cyclotomic_polynomial(m);
        Cyclotomic acc;
        for (size_t i = phi.size(); i-- > 0;) acc = acc * z + Cyclotomic(phi[i]);
        CHECK(acc.is_zero());
    }
    CHECK(cnorm(zeta(8).embed() -
                std::complex<double>(0.7071067811865476, 0.7071067811865476)) < 1e-12);
}

TEST_CASE("field operations") {
    CHECK((Cyclotomic(1) + zeta(4)) * (Cyclotomic(1) - zeta(4)) == Cyclotomic(2));
    CHECK(zeta(3).inverse() == zeta(3, 2));
    CHECK_THROWS_AS(Cyclotomic(0).inverse(), domain_error);
    // promotion: zeta_3 -> zeta_12^4, both embeddings agree
    Cyclotomic a = zeta(3).promoted(12);
    CHECK(a == zeta(12, 4));
    CHECK(cnorm(a.embed() - zeta(3).embed()) < 1e-12);
    // mixed-order arithmetic promotes to the lcm
    Cyclotomic mix = zeta(4) * zeta(3);
    CHECK(mix == zeta(12, 7));
    CHECK(mix.order() == 12);
    // embed of 1 + zeta_6 + zeta_6^5 = 2
    CHECK(cnorm((Cyclotomic(1) + zeta(6) + zeta(6, 5)).embed() -
                std::complex<double>(2.0, 0.0)) < 1e-12);
}

TEST_CASE("embed is a ring homomorphism on random pairs") {
    std::uint64_t st = 12345;
    auto rnd = [&st]() {
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        return st >> 33;
    };
    for (int m : {3, 4, 5, 8, 12, 20}) {
        for (int t = 0; t < 200; ++t) {
            auto rand_elem = [&]() {
                Cyclotomic x;
                for (int i = 0; i < euler_phi(m); ++i)
                    x += Cyclotomic(Rational(static_cast<long>(rnd() % 9) - 4,
                                             1 + static_cast<long>(rnd() % 4))) *
                         zeta(m, i);
                return x;
            };
            Cyclotomic x = rand_elem(), y = rand_elem();
            CHECK(cnorm((x * y).embed() - x.embed() * y.embed()) < 1e-10);
            CHECK(cnorm((x + y).embed() - (x.embed() + y.embed())) < 1e-10);
            // promotion then arithmetic = arithmetic then promotion
            CHECK((x.promoted(2 * m) * y.promoted(2 * m)) == (x * y).promoted(2 * m));
            // inverse round-trip
            if (!x.is_zero()) CHECK(x * x.inverse() == Cyclotomic(1));
        }
    }
}

TEST_CASE("literal syntax round trips") {
    for (const char* text : {"1/2 + 3*z4^1", "-1", "0", "z6^5 - 2/3", "2 - z12^7 + 5/3*z12^1"}) {
        Cyclotomic v = parse_cyclotomic(text);
        CHECK(parse_cyclotomic(v.to_string()) == v);
    }
    CHECK(parse_cyclotomic("1/2 + 3*z4^1").to_string() == "1/2 + 3*z4^1");
    CHECK(parse_cyclotomic("(1 + z4^1)*(1 - z4^1)") == Cyclotomic(2));
    CHECK(parse_cyclotomic("z4") == zeta(4));
    CHECK_THROWS_AS(parse_cyclotomic("1 +"), parse_error);
    CHECK_THROWS_AS(parse_cyclotomic("z"), parse_error);
}
