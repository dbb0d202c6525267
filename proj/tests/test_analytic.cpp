#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pds/analytic.hpp"
#include "pds/bernoulli.hpp"
#include "pds/dedekind.hpp"
#include "pds/errors.hpp"

using namespace pds;

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;
double dist(Complex a, Complex b) { return std::abs(a - b); }
} // namespace

TEST_CASE("branch convention") {
    // -pi <= arg < pi: the negative real axis takes arg = -pi
    CHECK(arg_branch(Complex(-2.0, 0.0)) == doctest::Approx(-PI));
    CHECK(arg_branch(Complex(0.0, -1.0)) == doctest::Approx(-PI / 2));
    // (cz+d)^{-s} (cz+d)^{s} = 1
    const Complex w(-0.3, 0.7), s(1.3, -0.4);
    CHECK(dist(power_branch(w, s) * power_branch(w, -s), Complex(1.0, 0.0)) < 1e-12);
    CHECK(dist(e_half(Complex(2.0, 0.0)), Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("hurwitz zeta") {
    CHECK(dist(hurwitz_zeta(Complex(0.0, 0.0), Rational(1, 4)), Complex(0.25, 0.0)) < 1e-13);
    CHECK(dist(hurwitz_zeta(Complex(2.0, 0.0), Rational(1)),
               Complex(PI * PI / 6.0, 0.0)) < 1e-11);
    // zeta(-n, 1) = -B_{n+1}/(n+1)
    for (int n : {1, 2, 3, 5}) {
        const double want = -(bernoulli_number(n + 1) / Rational(n + 1)).to_double();
        CHECK(dist(hurwitz_zeta(Complex(-n, 0.0), Rational(1)), Complex(want, 0.0)) < 1e-12);
    }
    // direct sum comparison at complex s
    const Complex s(2.5, 0.7);
    Complex direct(0.0, 0.0);
    for (int n = 0; n < 400000; ++n)
        direct += std::exp(-s * std::log(Complex(n + 0.375, 0.0)));
    CHECK(dist(hurwitz_zeta(s, Rational(3, 8)), direct) < 1e-8);
    CHECK_THROWS_AS(hurwitz_zeta(Complex(1.0, 0.0), Rational(1, 2)), pole_error);
    CHECK_THROWS_AS(hurwitz_zeta(Complex(2.0, 0.0), Rational(3, 2)), domain_error);
}

TEST_CASE("periodic L against direct sums and its s = 0 value") {
    PeriodicSequence chi4 = make_sequence("char:k=4,i=1");
    // L(2; I; 0) = zeta(2) with k = 1
    PeriodicSequence I1 = make_sequence("const:k=1");
    CHECK(dist(periodic_L(Complex(2.0, 0.0), I1, 1, Rational(0)),
               Complex(PI * PI / 6.0, 0.0)) < 1e-11);
    // direct sums for Re s > 1, including shifted theta and negative beta
    struct Probe { const char* spec; long beta; Rational theta; };
    const Probe probes[] = {{"char:k=4,i=1", 1, Rational(0)},
                            {"char:k=4,i=1", -1, Rational(1, 3)},
                            {"ramanujan:k=4", 3, Rational(-5, 4)},
                            {"principal:k=3", 1, Rational(2)}};
    const Complex s(2.25, 0.4);
    for (const auto& p : probes) {
        PeriodicSequence A = make_sequence(p.spec);
        Complex direct(0.0, 0.0);
        const double th = p.theta.to_double();
        const long lo = static_cast<long>(std::floor(-th)) + 1;
        for (long n = lo; n < lo + 300000; ++n) {
            const Cyclotomic& f = A.at(p.beta * n);
            if (f.is_zero()) continue;
            direct += f.embed() * std::exp(-s * std::log(Complex(n + th, 0.0)));
        }
        CHECK(dist(periodic_L(s, A, p.beta, p.theta), direct) < 1e-7);
    }
    // L(1, chi mod 4) = pi/4 (Leibniz)
    CHECK(dist(periodic_L(Complex(1.0, 0.0), chi4, 1, Rational(0)),
               Complex(PI / 4.0, 0.0)) < 1e-12);
    CHECK_THROWS_AS(periodic_L(Complex(1.0, 0.0), make_sequence("principal:k=3"), 1, Rational(0)),
                    pole_error);
    // L(0;A;theta) = P1(-theta, A_beta) on assorted draws
    for (const auto& p : probes) {
        PeriodicSequence A = make_sequence(p.spec);
        Complex want = periodic_P(1, -p.theta, A.scaled(p.beta), 1).embed();
        CHECK(dist(periodic_L(Complex(0.0, 0.0), A, p.beta, p.theta), want) < 1e-12);
    }
}

TEST_CASE("gamma function") {
    CHECK(dist(gamma_fn(Complex(0.5, 0.0)), Complex(std::sqrt(PI), 0.0)) < 1e-12);
    CHECK(dist(gamma_fn(Complex(5.0, 0.0)), Complex(24.0, 0.0)) < 1e-11);
    const Complex s(0.3, 0.2);
    CHECK(dist(gamma_fn(s) * gamma_fn(Complex(1.0, 0.0) - s), PI / std::sin(PI * s)) < 1e-10);
    CHECK_THROWS_AS(gamma_fn(Complex(-2.0, 0.0)), pole_error);
}

TEST_CASE("A-series basics") {
    PeriodicSequence chi4 = make_sequence("char:k=4,i=1");
    PeriodicSequence zero(4, std::vector<Cyclotomic>(4, Cyclotomic(0)));
    SeriesBudget b;
    CHECK(A_series(Complex(0, 1), Complex(2, 0), chi4, zero, Rational(0), Rational(0), b) ==
          Complex(0.0, 0.0));
    // doubling the budget target barely moves the value (self-consistency)
    SeriesBudget b1;
    b1.tail_bound_target = 1e-10;
    SeriesBudget b2;
    b2.tail_bound_target = 1e-14;
    PeriodicSequence G = make_sequence("gauss:k=4,i=1");
    Complex v1 = A_series(Complex(0, 1), Complex(-2, 0), chi4, G, Rational(0), Rational(0), b1);
    Complex v2 = A_series(Complex(0, 1), Complex(-2, 0), chi4, G, Rational(0), Rational(0), b2);
    CHECK(dist(v1, v2) < 1e-10);
    CHECK(b1.achieved_tail <= 1e-10);
    CHECK(b2.achieved_tail <= 1e-14);
    // budget exhaustion raises accuracy_error carrying the achieved tail
    SeriesBudget tiny;
    tiny.max_terms = 10;
    CHECK_THROWS_AS(A_series(Complex(0, 1), Complex(-2, 0), chi4, G, Rational(0), Rational(0),
                             tiny),
                    accuracy_error);
}

TEST_CASE("direct G against an independent lattice loop (weight 4, k = 1)") {
    PeriodicSequence I1 = make_sequence("const:k=1");
    SeriesBudget b;
    const Complex z(0.0, 1.0);
    Complex got = eisenstein_G_direct(z, Complex(4.0, 0.0), I1, 1, I1, 1, Rational(0),
                                      Rational(0), b);
    Complex brute(0.0, 0.0);
    const int M = 600;
    for (int m = -M; m <= M; ++m)
        for (int n = -M; n <= M; ++n) {
            if (m == 0 && n == 0) continue;
            const Complex w = static_cast<double>(m) * z + static_cast<double>(n);
            brute += 1.0 / (w * w * w * w);
        }
    CHECK(dist(got, brute) < 2e-6);  // limited by the brute cutoff
}

TEST_CASE("G via the expansion matches the direct sum") {
    auto chars4 = dirichlet_characters(4);
    auto chars3 = dirichlet_characters(3);
    struct Case { PeriodicSequence A, B; Complex z, s; };
    std::vector<Case> cases = {
        {chars4[1].sequence(), chars4[0].sequence(), Complex(0.3, 0.9), Complex(2.5, 0.5)},
        {chars4[1].sequence(), chars4[1].sequence(), Complex(0.0, 1.0), Complex(3.0, 0.0)},
        {chars3[1].sequence(), chars3[1].sequence(), Complex(-0.2, 0.8), Complex(2.2, -0.3)},
    };
    for (auto& cse : cases) {
        SeriesBudget b1, b2;
        Complex gd = eisenstein_G_direct(cse.z, cse.s, cse.A, 1, cse.B, 1, Rational(0),
                                         Rational(0), b1);
        Complex gf = G_via_fourier(cse.z, cse.s, cse.A, 1, cse.B, 1, Rational(0), Rational(0), b2);
        CHECK(dist(gd, gf) < 1e-9);
    }
    // shifted, lambda branch on and off
    SeriesBudget b1, b2;
    PeriodicSequence chi = chars4[1].sequence();
    Complex z(0.2, 1.1), s(2.6, 0.0);
    Complex gd = eisenstein_G_direct(z, s, chi, 1, chi, 1, Rational(1), Rational(1, 3), b1);
    Complex gf = G_via_fourier(z, s, chi, 1, chi, 1, Rational(1), Rational(1, 3), b2);
    CHECK(dist(gd, gf) < 1e-9);
    SeriesBudget b3, b4;
    Complex gd2 = eisenstein_G_direct(z, s, chi, 1, chi, 1, Rational(1, 2), Rational(0), b3);
    Complex gf2 = G_via_fourier(z, s, chi, 1, chi, 1, Rational(1, 2), Rational(0), b4);
    CHECK(dist(gd2, gf2) < 1e-9);
    // r1 = 1/2 kills the lambda term: the expansion equals its pure A-part
    SeriesBudget b5, b6;
    PeriodicSequence Bh = fourier_hat(chi);
    Complex t1 = A_series(z, s, chi.scaled(1), Bh.scaled(-1), Rational(1, 2), Rational(0), b5);
    Complex t2 = A_series(z, s, chi.scaled(-1), Bh.scaled(1), Rational(-1, 2), Rational(0), b6);
    const Complex pref = std::exp(s * Complex(std::log(2.0 * PI / 4.0), -PI / 2.0)) * 4.0;
    SeriesBudget b7;
    CHECK(dist(gamma_G(z, s, chi, 1, chi, 1, Rational(1, 2), Rational(0), b7),
               pref * (t1 + e_half(s) * t2)) < 1e-12);
    // beta not invertible mod k
    SeriesBudget b8;
    CHECK_THROWS_AS(gamma_G(z, s, chi, 1, chi, 2, Rational(0), Rational(0), b8), domain_error);
}

TEST_CASE("continuation consistency on random draws") {
    // expansion vs direct sum over 30 deterministic pseudo-random draws with
    // Re s in (2.2, 4)
    std::uint64_t st = 424242;
    auto rnd = [&st]() {
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        return (st >> 33) * (1.0 / 2147483648.0);
    };
    auto chars3 = dirichlet_characters(3);
    auto chars4 = dirichlet_characters(4);
    for (int t = 0; t < 30; ++t) {
        const Complex z(-0.5 + rnd(), 0.7 + 0.8 * rnd());
        const Complex s(2.2 + 1.8 * rnd(), -0.7 + 1.4 * rnd());
        const auto& chi = t % 2 ? chars4[t % 3 == 0 ? 0 : 1] : chars3[t % 3 == 0 ? 0 : 1];
        const auto& psi = (t / 2) % 2 ? chars4[1] : chars3[1];
        if (chi.modulus() != psi.modulus()) continue;
        SeriesBudget b1, b2;
        Complex gd = eisenstein_G_direct(z, s, chi.sequence(), 1, psi.sequence(), 1,
                                         Rational(0), Rational(0), b1);
        Complex gf = G_via_fourier(z, s, chi.sequence(), 1, psi.sequence(), 1, Rational(0),
                                   Rational(0), b2);
        INFO("draw ", t, " z=", z.real(), "+", z.imag(), "i");
        CHECK(dist(gd, gf) < 1e-7);
    }
}

TEST_CASE("lipschitz summation smoke test") {
    // sum_{n>=1} (n - tau)^{s-1} e^{2 pi i z (n-tau)} =
    //   Gamma(s)/(-2 pi i)^s sum_{n in Z} (z+n)^{-s} e^{2 pi i n tau}
    const Complex s(3.0, 0.0), z(0.0, 1.0);
    const double tau = 1.0 / 3.0;
    Complex lhs(0.0, 0.0);
    for (int n = 1; n < 200; ++n) {
        const Complex nt(n - tau, 0.0);
        lhs += std::exp((s - 1.0) * std::log(nt)) * std::exp(2.0 * PI * Complex(0, 1) * z * nt);
    }
    Complex rhs(0.0, 0.0);
    for (int n = -100000; n <= 100000; ++n)
        rhs += power_branch(z + static_cast<double>(n), s) *
               std::exp(2.0 * PI * Complex(0, 1) * static_cast<double>(n) * tau);
    rhs *= gamma_fn(s) / std::exp(s * Complex(std::log(2.0 * PI), -PI / 2.0));
    CHECK(dist(lhs, rhs) < 1e-9);
}

TEST_CASE("loop integral residue form and quadrature") {
    // N=0, c=1, d=0, k=4, z=i, mu=v=0, j=1: the explicit three-term value
    LoopParams p;
    p.z = Complex(0.0, 1.0);
    p.N = 0;
    p.c = 1;
    p.d = 0;
    p.k = 4;
    p.mu = 0;
    p.v = 0;
    p.j = 1;
    const Complex z = p.z;
    Complex want = -(PI * Complex(0, 1) / z) * bernoulli_poly(2, Rational(0)).to_double() -
                   PI * Complex(0, 1) * z * bernoulli_poly(2, Rational(1, 4)).to_double() +
                   2.0 * PI * Complex(0, 1) * bernoulli_poly(1, Rational(1, 4)).to_double() *
                       bernoulli_poly(1, Rational(0)).to_double();
    CHECK(dist(loop_I_residue(p), want) < 1e-12);
    CHECK(dist(loop_I_residue(p), loop_I_quadrature(p)) < 1e-10);
    // k = 1 collapse: B2 arguments reduce mod 1
    LoopParams q = p;
    q.k = 1;
    Complex want1 = -(PI * Complex(0, 1) / z) * bernoulli_poly(2, Rational(0)).to_double() -
                    PI * Complex(0, 1) * z * bernoulli_poly(2, Rational(0)).to_double() +
                    2.0 * PI * Complex(0, 1) * bernoulli_poly(1, Rational(1)).to_double() *
                        bernoulli_poly(1, Rational(0)).to_double();
    CHECK(dist(loop_I_residue(q), want1) < 1e-12);
    // isolation violation
    CHECK_THROWS_AS(loop_I_quadrature(p, 10.0), domain_error);
}

TEST_CASE("dirichlet L values") {
    auto chars4 = dirichlet_characters(4);
    CHECK(dist(dirichlet_L(1, chars4[1]), Complex(PI / 4.0, 0.0)) < 1e-12);
    CHECK_THROWS_AS(dirichlet_L(1, chars4[0]), pole_error);
    // Catalan-free check: L(2, chi0 mod 4) = (1 - 1/4) zeta(2)
    CHECK(dist(dirichlet_L(2, chars4[0]), Complex((1.0 - 0.25) * PI * PI / 6.0, 0.0)) < 1e-11);
    // digamma-route L(1) for the mod-3 character: pi/(3 sqrt 3)
    auto chars3 = dirichlet_characters(3);
    CHECK(dist(dirichlet_L(1, chars3[1]), Complex(PI / (3.0 * std::sqrt(3.0)), 0.0)) < 1e-12);
}
