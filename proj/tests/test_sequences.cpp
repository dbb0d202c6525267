#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "pds/errors.hpp"
#include "pds/sequences.hpp"

using namespace pds;

namespace {
Cyclotomic zeta(int m, long j) { return Cyclotomic::root_of_unity(m, j); }
} // namespace

TEST_CASE("make_sequence zoo") {
    PeriodicSequence c3 = make_sequence("const:k=3");
    CHECK(c3.values() == std::vector<Cyclotomic>{1, 1, 1});

    PeriodicSequence r4 = make_sequence("ramanujan:k=4");
    CHECK(r4.values() == std::vector<Cyclotomic>{2, 0, -2, 0});

    PeriodicSequence chi4 = make_sequence("char:k=4,i=1");
    CHECK(chi4.values() == std::vector<Cyclotomic>{0, 1, 0, -1});

    PeriodicSequence chi6 = make_sequence("char:k=6,i=1");
    CHECK(chi6.values() == std::vector<Cyclotomic>{0, 1, 0, 0, 0, -1});

    PeriodicSequence lst = make_sequence("list:k=2;vals=1/2 + 3*z4^1,-1");
    CHECK(lst.at(0) == parse_cyclotomic("1/2+3*z4^1"));
    CHECK(lst.at(1) == Cyclotomic(-1));
    CHECK(lst.at(-1) == Cyclotomic(-1));  // mathematical mod

    PeriodicSequence ex = make_sequence("exp:k=6");
    CHECK(ex.at(7) == zeta(6, 1));

    CHECK_THROWS_AS(make_sequence("nope:k=3"), parse_error);
    CHECK_THROWS_AS(make_sequence("gauss_shift:k=3,i=1"), domain_error);
    CHECK_THROWS_AS(make_sequence("list:k=3;vals=1,2"), parse_error);
}

TEST_CASE("scaling") {
    PeriodicSequence chi4 = make_sequence("char:k=4,i=1");
    CHECK(chi4.scaled(1) == chi4);
    CHECK(make_sequence("scale:-1:(char:k=4,i=1)").values() ==
          std::vector<Cyclotomic>{0, -1, 0, 1});
    // multiplicativity: scale by coprime alpha = pointwise chi(alpha) times
    auto chars5 = dirichlet_characters(5);
    for (const auto& chi : chars5)
        for (long a : {2L, 3L, 7L}) {
            PeriodicSequence s = chi.sequence().scaled(a);
            for (int n = 0; n < 5; ++n) CHECK(s.at(n) == chi(a) * chi(n));
        }
}

TEST_CASE("character enumeration order and parity") {
    auto c4 = dirichlet_characters(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].is_principal());
    CHECK(c4[1].sequence().values() == std::vector<Cyclotomic>{0, 1, 0, -1});
    CHECK(c4[1].parity() == -1);
    CHECK(c4[1].is_primitive());
    CHECK_FALSE(c4[0].is_primitive());

    auto c6 = dirichlet_characters(6);
    REQUIRE(c6.size() == 2);
    CHECK(c6[1].sequence().values() == std::vector<Cyclotomic>{0, 1, 0, 0, 0, -1});
    CHECK_FALSE(c6[1].is_primitive());  // induced by the mod-3 character

    auto c5 = dirichlet_characters(5);
    REQUIRE(c5.size() == 4);
    CHECK(c5[1](2) == zeta(4, 1));  // value zeta_4 at the generator 2
    // brute force: the enumeration is exactly the homomorphism set
    int order4 = 0;
    for (const auto& chi : c5) {
        Cyclotomic v = chi(2);
        Cyclotomic p = v * v * v * v;
        CHECK(p == Cyclotomic(1));
        if (!(v * v == Cyclotomic(1))) ++order4;
    }
    CHECK(order4 == 2);

    auto c8 = dirichlet_characters(8);
    REQUIRE(c8.size() == 4);
    for (const auto& chi : c8) {
        // all mod-8 characters are real
        for (int n = 0; n < 8; ++n)
            CHECK(chi(n) * chi(n) == (chi(n).is_zero() ? Cyclotomic(0) : Cyclotomic(1)));
    }
    // complete multiplicativity on units, chi(1) = 1
    for (int k : {3, 4, 5, 8, 12}) {
        for (const auto& chi : dirichlet_characters(k)) {
            CHECK(chi(1) == Cyclotomic(1));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    if (std::gcd(a, k) == 1 && std::gcd(b, k) == 1)
                        CHECK(chi(a * b) == chi(a) * chi(b));
            // parity relation chi(-n) = chi(-1) chi(n)
            for (int n = 0; n < k; ++n) CHECK(chi(-n) == chi(-1) * chi(n));
        }
    }
}

TEST_CASE("conjugate character") {
    for (int k : {5, 8, 12}) {
        for (const auto& chi : dirichlet_characters(k)) {
            auto bar = chi.conj();
            for (int n = 0; n < k; ++n) {
                if (chi(n).is_zero()) CHECK(bar(n).is_zero());
                else CHECK(chi(n) * bar(n) == Cyclotomic(1));
            }
        }
    }
}

TEST_CASE("gauss sums") {
    auto c4 = dirichlet_characters(4);
    CHECK(gauss_sum(1, c4[1]) == zeta(4, 1) * Cyclotomic(2));  // 2i
    for (int k : {3, 4, 6}) {
        auto chars = dirichlet_characters(k);
        CHECK(gauss_sum(0, chars[0]) == Cyclotomic(euler_phi(k)));
        // principal character: Gauss sum sequence = Ramanujan sequence
        PeriodicSequence g = make_sequence("gauss:k=" + std::to_string(k) + ",i=0");
        PeriodicSequence r = make_sequence("ramanujan:k=" + std::to_string(k));
        CHECK(g == r);
    }
    // twist: G(n, chi) = chibar(n) G(1, chi) for primitive chi
    for (int k : {3, 4, 5, 7}) {
        for (const auto& chi : dirichlet_characters(k)) {
            if (!chi.is_primitive()) continue;
            auto bar = chi.conj();
            for (long n = 0; n < k; ++n)
                CHECK(gauss_sum(n, chi) == bar(n) * gauss_sum(1, chi));
        }
    }
}

TEST_CASE("fourier hat and inversion") {
    PeriodicSequence h3 = make_sequence("dft:(const:k=3)");
    CHECK(h3.values() == std::vector<Cyclotomic>{1, 0, 0});

    // hat of the mod-4 character is (-i/2) chi
    PeriodicSequence chi4 = make_sequence("char:k=4,i=1");
    PeriodicSequence h4 = fourier_hat(chi4);
    Cyclotomic mi2 = -zeta(4, 1) * Cyclotomic(Rational(1, 2));
    for (int n = 0; n < 4; ++n) CHECK(h4.at(n) == mi2 * chi4.at(n));

    // inversion and the double-hat reflection on random sequences
    std::uint64_t st = 777;
    auto rnd = [&st]() {
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        return st >> 33;
    };
    for (int t = 0; t < 100; ++t) {
        const int k = 1 + static_cast<int>(rnd() % 12);
        std::vector<Cyclotomic> vals;
        for (int n = 0; n < k; ++n)
            vals.push_back(Cyclotomic(Rational(static_cast<long>(rnd() % 11) - 5,
                                               1 + static_cast<long>(rnd() % 5))));
        PeriodicSequence A(k, vals);
        PeriodicSequence H = fourier_hat(A);
        for (long n = 0; n < k; ++n) {
            Cyclotomic rec;
            for (long j = 0; j < k; ++j) rec += H.at(j) * zeta(k, n * j);
            CHECK(rec == A.at(n));
            CHECK(fourier_hat(H).at(n) * Cyclotomic(k) == A.at(-n));
        }
    }
}

TEST_CASE("alternating sequence has its honest period") {
    PeriodicSequence a4 = make_sequence("altchar:k=4,i=1");
    CHECK(a4.period() == 4);
    PeriodicSequence a3 = make_sequence("altchar:k=3,i=1");
    CHECK(a3.period() == 6);
    auto chi3 = dirichlet_characters(3)[1];
    for (long n = 0; n < 6; ++n) {
        Cyclotomic want = chi3(n);
        if (n % 2) want = -want;
        CHECK(a3.at(n) == want);
    }
}

TEST_CASE("gauss_shift matches the alternating hat relation") {
    // for even k: hat of {(-1)^n chi(n)} = chi(-1)/k {G(n + k/2, chi)}
    for (int k : {4, 6, 8}) {
        auto chars = dirichlet_characters(k);
        for (const auto& chi : chars) {
            PeriodicSequence alt = make_sequence("altchar:k=" + std::to_string(k) +
                                                 ",i=" + std::to_string(chi.ordinal()));
            PeriodicSequence gs = make_sequence("gauss_shift:k=" + std::to_string(k) +
                                                ",i=" + std::to_string(chi.ordinal()));
            PeriodicSequence h = fourier_hat(alt);
            for (long n = 0; n < k; ++n)
                CHECK(h.at(n) * Cyclotomic(k) == chi(-1) * gs.at(n));
        }
    }
}
