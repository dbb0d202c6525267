#pragma once

#include <complex>

#include "pds/rational.hpp"
#include "pds/sequences.hpp"

namespace pds {

using Complex = std::complex<double>;

// Truncation controls for the series evaluators. achieved_tail is filled in
// by the evaluator; on success achieved_tail <= tail_bound_target.
struct SeriesBudget {
    long max_terms = 4'000'000;
    double tail_bound_target = 1e-13;
    double achieved_tail = 0.0;
};

// arg in [-pi, pi) and the matching power w^{-s} = exp(-s log w); this is the
// branch convention used for every complex power here.
double arg_branch(Complex w);
Complex log_branch(Complex w);
Complex power_branch(Complex w, Complex s);   // w^{-s}
inline Complex e_half(Complex s) {            // e(s/2) = e^{pi i s}
    return std::exp(Complex(0.0, 1.0) * std::acos(-1.0) * s);
}

// Hurwitz zeta zeta(s, theta), theta in (0,1], Euler-Maclaurin continuation
// with Bernoulli corrections through B_8; throws pole_error at s = 1.
Complex hurwitz_zeta(Complex s, const Rational& theta);

// Internal building block: sum_{n>=0} (n+a)^{-s} for complex a off the
// negative real axis (principal-branch powers per term).
Complex hurwitz_zeta_c(Complex s, Complex a);

// L(s; A_beta; theta) = sum_{n > -theta} f(beta n) (n+theta)^{-s}, continued
// via the Hurwitz decomposition.
Complex periodic_L(Complex s, const PeriodicSequence& A, long beta, const Rational& theta);

// Gamma via Lanczos with reflection; poles at nonpositive integers.
Complex gamma_fn(Complex s);

// A(z,s;A,B;r1,r2) = sum_{m>-r1} f(m) sum_{n>=1} g(n) e(n((m+r1)z+r2)/k) n^{s-1}.
// Index scaling is the caller's job (pass pre-scaled sequences). Entire in s.
Complex A_series(Complex z, Complex s, const PeriodicSequence& A, const PeriodicSequence& B,
                 const Rational& r1, const Rational& r2, SeriesBudget& budget);

// Gamma(s) G(z,s;A_alpha,B_beta;r1,r2) assembled from the Fourier-side
// expansion; valid on the whole s-plane except s = 1 (and the Gamma poles,
// where only the ratio G = gamma_G / Gamma needs a limit).
Complex gamma_G(Complex z, Complex s, const PeriodicSequence& A, long alpha,
                const PeriodicSequence& B, long beta, const Rational& r1,
                const Rational& r2, SeriesBudget& budget);

// G itself via the expansion; near nonpositive integers with the lambda term
// active the value is obtained by a small Richardson limit in s.
Complex G_via_fourier(Complex z, Complex s, const PeriodicSequence& A, long alpha,
                      const PeriodicSequence& B, long beta, const Rational& r1,
                      const Rational& r2, SeriesBudget& budget);

// Direct evaluation of G(z,s;A_alpha,B_beta;r1,r2) for Re s > 2: row-by-row
// lattice summation with Euler-Maclaurin tail control per row (the n-lines
// decay exponentially in |m| after full summation).
Complex eisenstein_G_direct(Complex z, Complex s, const PeriodicSequence& A, long alpha,
                            const PeriodicSequence& B, long beta, const Rational& r1,
                            const Rational& r2, SeriesBudget& budget);

// Loop-integral value I(z,-N,c,d,...) in the residue form (exact Bernoulli
// data, floating evaluation) and by trapezoid quadrature on a circle around
// the origin (the integrand is single-valued at integer s).
struct LoopParams {
    Complex z;
    int N = 0;
    long c = 1, d = 0;
    int k = 1;
    long mu = 0, v = 0, j = 1;
    Rational R1, R2;
};
Complex loop_I_residue(const LoopParams& p);
Complex loop_I_quadrature(const LoopParams& p, double radius = 0.0, int nodes = 4096);

// Dirichlet L(r, chi) for integer r >= 1 (r = 1 needs chi non-principal).
Complex dirichlet_L(int r, const DirichletCharacter& chi);

// Embedded values of a sequence, one per residue.
std::vector<Complex> embedded(const PeriodicSequence& seq);

} // namespace pds
