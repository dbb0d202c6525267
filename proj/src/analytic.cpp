#include "pds/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "pds/bernoulli.hpp"
#include "pds/errors.hpp"

namespace pds {

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;
const Complex I_UNIT(0.0, 1.0);

double rat(const Rational& r) { return r.to_double(); }
} // namespace

double arg_branch(Complex w) {
    double a = std::arg(w);
    if (a == PI) a = -PI;  // std::arg uses (-pi, pi]; the convention here is [-pi, pi)
    return a;
}

Complex log_branch(Complex w) {
    return Complex(std::log(std::abs(w)), arg_branch(w));
}

Complex power_branch(Complex w, Complex s) {
    if (w == Complex(0.0, 0.0)) throw domain_error("power of zero");
    return std::exp(-s * log_branch(w));
}

std::vector<Complex> embedded(const PeriodicSequence& seq) {
    std::vector<Complex> v;
    v.reserve(seq.period());
    for (const auto& x : seq.values()) v.push_back(x.embed());
    return v;
}

// ---------------------------------------------------------------------------
// Hurwitz zeta
// ---------------------------------------------------------------------------

namespace {

// Euler-Maclaurin with B_2..B_8 correction terms. Valid for complex a with the
// summation path avoiding the branch cut (guaranteed by Re(M+a) > 0 growth or
// Im a != 0).
Complex hz_em(Complex s, Complex a) {
    // choose M so the first dropped correction (B_10) is tiny; starting small
    // keeps the partial sum short where the corrections already terminate
    // (negative integer s), which avoids cancellation against huge powers
    long M = 1;
    if (a.real() < 1.0)
        M = std::max(M, static_cast<long>(std::ceil(2.0 - a.real())));
    const double b10 = 5.0 / 66.0 / 3628800.0;  // |B_10|/10!
    for (int tries = 0; tries < 60; ++tries) {
        const double base = std::abs(Complex(M, 0) + a);
        double rising = 1.0;
        for (int i = 0; i < 9; ++i) rising *= std::abs(s + Complex(i, 0));
        const double bound = b10 * rising * std::pow(base, -(s.real() + 9.0));
        if (bound <= 1e-13) break;
        M *= 2;
        if (M > (1L << 26))
            throw accuracy_error("hurwitz zeta: Euler-Maclaurin cutoff too large", bound);
    }

    Complex sum(0.0, 0.0);
    for (long n = 0; n < M; ++n) sum += std::exp(-s * std::log(Complex(n, 0) + a));
    const Complex Ma = Complex(M, 0) + a;
    const Complex lMa = std::log(Ma);
    sum += std::exp((1.0 - s) * lMa) / (s - 1.0);
    sum += 0.5 * std::exp(-s * lMa);
    // + sum_j B_{2j}/(2j)! (s)_{2j-1} (M+a)^{-s-2j+1}
    static const double bfac[4] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
    Complex rising(1.0, 0.0);
    for (int j = 1; j <= 4; ++j) {
        // (s)_{2j-1} = s (s+1) ... (s+2j-2)
        rising = Complex(1.0, 0.0);
        for (int i = 0; i <= 2 * j - 2; ++i) rising *= s + Complex(i, 0);
        sum += bfac[j - 1] * rising * std::exp((-s - Complex(2 * j - 1, 0)) * lMa);
    }
    return sum;
}

} // namespace

Complex hurwitz_zeta_c(Complex s, Complex a) {
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-12)
        throw pole_error("hurwitz zeta pole at s = 1");
    // shift until the partial terms stay off the cut and EM is comfortable
    Complex shift(0.0, 0.0);
    Complex aa = a;
    int guard = 0;
    while (aa.real() <= 0.5 && std::abs(aa.imag()) < 1.0) {
        shift += std::exp(-s * log_branch(aa));
        aa += 1.0;
        if (++guard > 4000) throw accuracy_error("hurwitz shift stuck", 0.0);
    }
    return shift + hz_em(s, aa);
}

Complex hurwitz_zeta(Complex s, const Rational& theta) {
    if (theta <= Rational(0) || theta > Rational(1))
        throw domain_error("hurwitz zeta needs theta in (0, 1]");
    return hurwitz_zeta_c(s, Complex(rat(theta), 0.0));
}

// ---------------------------------------------------------------------------
// periodic L-function
// ---------------------------------------------------------------------------

namespace {

// digamma for real x > 0: shift up, then the asymptotic series.
double digamma_real(double x) {
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    double r = std::log(x) - 0.5 * inv;
    // - sum B_{2n} / (2n x^{2n})
    static const double bc[5] = {1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
                                 1.0 / 132.0};
    double p = inv2;
    for (int n = 0; n < 5; ++n) {
        r -= bc[n] * p;
        p *= inv2;
    }
    return r + acc;
}

} // namespace

Complex periodic_L(Complex s, const PeriodicSequence& A, long beta, const Rational& theta) {
    const int k = A.period();
    const long fl = static_cast<long>(theta.floor().get_si());
    const Rational fr = theta.frac();
    const int lam = theta.is_integer() ? 1 : 0;

    if (std::abs(s - Complex(1.0, 0.0)) < 1e-12) {
        // finite at s = 1 only when the coefficients sum to zero; then the
        // simple poles of the Hurwitz terms cancel and the value is the
        // digamma combination.
        Complex mean(0.0, 0.0);
        for (long j = 0; j < k; ++j) mean += A.at(beta * (j + lam - fl)).embed();
        if (std::abs(mean) > 1e-12) throw pole_error("periodic L pole at s = 1");
        Complex acc(0.0, 0.0);
        for (long j = 0; j < k; ++j) {
            const Cyclotomic& f = A.at(beta * (j + lam - fl));
            if (f.is_zero()) continue;
            const Rational arg = (Rational(j + lam) + fr) / Rational(k);
            acc += f.embed() * (-digamma_real(arg.to_double()));
        }
        return acc / static_cast<double>(k);
    }

    Complex acc(0.0, 0.0);
    for (long j = 0; j < k; ++j) {
        const Cyclotomic& f = A.at(beta * (j + lam - fl));
        if (f.is_zero()) continue;
        const Rational arg = (Rational(j + lam) + fr) / Rational(k);
        acc += f.embed() * hurwitz_zeta(s, arg);
    }
    return acc * std::exp(-s * std::log(Complex(k, 0.0)));
}

// ---------------------------------------------------------------------------
// Gamma (Lanczos, g = 7, n = 9)
// ---------------------------------------------------------------------------

Complex gamma_fn(Complex s) {
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
        throw pole_error("gamma pole at nonpositive integer");
    static const double g = 7.0;
    static const double c[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (s.real() < 0.5) {
        // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
        return PI / (std::sin(PI * s) * gamma_fn(Complex(1.0, 0.0) - s));
    }
    const Complex z = s - 1.0;
    Complex x(c[0], 0.0);
    for (int i = 1; i < 9; ++i) x += c[i] / (z + Complex(i, 0));
    const Complex t = z + g + 0.5;
    return std::sqrt(2.0 * PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// ---------------------------------------------------------------------------
// A-series
// ---------------------------------------------------------------------------

Complex A_series(Complex z, Complex s, const PeriodicSequence& A, const PeriodicSequence& B,
                 const Rational& r1, const Rational& r2, SeriesBudget& budget) {
    if (z.imag() <= 0.0) throw domain_error("A-series needs Im z > 0");
    const int k = A.period();
    if (B.period() != k) throw domain_error("A-series needs equal periods");
    const auto va = embedded(A);
    const auto vb = embedded(B);
    double maxb = 0.0;
    for (const auto& x : vb) maxb = std::max(maxb, std::abs(x));
    double maxa = 0.0;
    for (const auto& x : va) maxa = std::max(maxa, std::abs(x));
    if (maxb == 0.0 || maxa == 0.0) {
        budget.achieved_tail = 0.0;
        return Complex(0.0, 0.0);
    }

    const double r1d = rat(r1), r2d = rat(r2);
    const long m_lo = static_cast<long>(std::floor(-r1d)) + 1;
    const double sigma = s.real();
    const double inner_target = budget.tail_bound_target / 4.0;
    long terms = 0;
    Complex total(0.0, 0.0);
    double tail_acc = 0.0;

    const double step_decay = std::exp(-2.0 * PI * z.imag() / k);
    long m = m_lo;
    while (true) {
        const double mr1 = static_cast<double>(m) + r1d;
        const Complex w = (mr1 * z + r2d) / static_cast<double>(k);
        const Complex q = std::exp(2.0 * PI * I_UNIT * w);
        const double qa = std::abs(q);
        if (qa >= 1.0) throw domain_error("A-series inner ratio >= 1");
        const Complex fa = va[static_cast<size_t>(((m % k) + k) % k)];
        double row_bound = 0.0;
        if (std::abs(fa) != 0.0) {
            Complex row(0.0, 0.0);
            Complex qn(1.0, 0.0);
            for (long n = 1;; ++n) {
                qn *= q;
                const Complex gb = vb[static_cast<size_t>(n % k)];
                if (std::abs(gb) != 0.0)
                    row += gb * qn * std::exp((s - 1.0) * std::log(Complex(n, 0.0)));
                if (++terms > budget.max_terms)
                    throw accuracy_error("A-series term budget exhausted", tail_acc);
                const double nfac = sigma > 1.0 ? 2.0 * std::pow(n + 1.0, sigma - 1.0)
                                                : std::pow(n + 1.0, sigma - 1.0);
                row_bound = maxb * std::abs(qn) * qa * nfac / (1.0 - qa);
                if (row_bound <= inner_target && n >= 4) break;
            }
            total += fa * row;
        }
        tail_acc = std::max(tail_acc, row_bound);
        // remaining rows: |q_{m'}| <= qa * step_decay^{m'-m}, each row summing
        // to at most maxb C(q) |q_{m'}| with C(q) a crude polynomial cushion
        const double cushion =
            sigma > 1.0 ? 8.0 / std::pow(1.0 - std::max(qa, step_decay), 3) : 2.0 / (1.0 - qa);
        const double outer_bound =
            maxa * maxb * cushion * qa * step_decay / std::max(1e-300, 1.0 - step_decay);
        if (outer_bound <= budget.tail_bound_target / 2.0 && m > m_lo + 2) {
            budget.achieved_tail = tail_acc + outer_bound;
            return total;
        }
        ++m;
        if (m - m_lo > 200000)
            throw accuracy_error("A-series row budget exhausted", tail_acc);
    }
}

// ---------------------------------------------------------------------------
// gamma_G via the Fourier-side expansion
// ---------------------------------------------------------------------------

namespace {
long inverse_mod(long b, long k) {
    long bb = ((b % k) + k) % k;
    for (long x = 1; x <= k; ++x)
        if ((bb * x) % k == 1 % k) return x;
    throw domain_error("multiplier not invertible mod period");
}
} // namespace

Complex gamma_G(Complex z, Complex s, const PeriodicSequence& A, long alpha,
                const PeriodicSequence& B, long beta, const Rational& r1,
                const Rational& r2, SeriesBudget& budget) {
    const int k = A.period();
    if (B.period() != k) throw domain_error("gamma_G needs equal periods");
    const long binv = inverse_mod(beta, k);
    const PeriodicSequence Bh = fourier_hat(B);

    SeriesBudget b1 = budget, b2 = budget;
    const Complex t1 = A_series(z, s, A.scaled(alpha), Bh.scaled(-binv), r1, r2, b1);
    const Complex t2 = A_series(z, s, A.scaled(-alpha), Bh.scaled(binv), -r1, -r2, b2);
    // (-2 pi i / k)^s, arg = -pi/2
    const Complex pref =
        std::exp(s * Complex(std::log(2.0 * PI / k), -PI / 2.0)) * static_cast<double>(k);
    Complex total = pref * (t1 + e_half(s) * t2);
    budget.achieved_tail = b1.achieved_tail + b2.achieved_tail;

    if (r1.is_integer()) {
        const Cyclotomic& f = A.at(-alpha * static_cast<long>(r1.floor().get_si()));
        if (!f.is_zero()) {
            const Complex L1 = periodic_L(s, B, beta, r2);
            const Complex L2 = periodic_L(s, B, -beta, -r2);
            total += f.embed() * gamma_fn(s) * (L1 + e_half(s) * L2);
        }
    }
    return total;
}

Complex G_via_fourier(Complex z, Complex s, const PeriodicSequence& A, long alpha,
                      const PeriodicSequence& B, long beta, const Rational& r1,
                      const Rational& r2, SeriesBudget& budget) {
    const bool gamma_pole = s.imag() == 0.0 && s.real() <= 0.0 &&
                            std::abs(s.real() - std::round(s.real())) < 1e-9;
    if (!gamma_pole)
        return gamma_G(z, s, A, alpha, B, beta, r1, r2, budget) / gamma_fn(s);
    // limit mode: Richardson in eps around the integer point
    auto eval = [&](double eps) {
        SeriesBudget bb = budget;
        Complex se = s + Complex(eps, 0.0);
        Complex v = gamma_G(z, se, A, alpha, B, beta, r1, r2, bb) / gamma_fn(se);
        budget.achieved_tail = std::max(budget.achieved_tail, bb.achieved_tail);
        return v;
    };
    const double e1 = 1e-3, e2 = 5e-4;
    const Complex a1 = 0.5 * (eval(e1) + eval(-e1));
    const Complex a2 = 0.5 * (eval(e2) + eval(-e2));
    return (4.0 * a2 - a1) / 3.0;
}

// ---------------------------------------------------------------------------
// direct Eisenstein evaluation
// ---------------------------------------------------------------------------

namespace {

// sum over the full line n in Z of g(beta n) (w + n + r2)^{-s}, Im w != 0.
Complex full_line(Complex s, Complex w, const std::vector<Complex>& vb, long beta, int k,
                  double r2d) {
    const Complex tw = w.imag() > 0.0 ? std::exp(-I_UNIT * PI * s) : std::exp(I_UNIT * PI * s);
    const Complex ks = std::exp(-s * std::log(Complex(k, 0.0)));
    Complex acc(0.0, 0.0);
    for (long j = 0; j < k; ++j) {
        const Complex g = vb[static_cast<size_t>(((beta * j) % k + k) % k)];
        if (std::abs(g) == 0.0) continue;
        const Complex a = (w + r2d + static_cast<double>(j)) / static_cast<double>(k);
        acc += g * ks * (hurwitz_zeta_c(s, a) + tw * hurwitz_zeta_c(s, 1.0 - a));
    }
    return acc;
}

// L(s;B_beta;theta) by the same Hurwitz machinery (real line of the lattice).
Complex real_line(Complex s, const PeriodicSequence& B, long beta, const Rational& r2) {
    return periodic_L(s, B, beta, r2) + e_half(s) * periodic_L(s, B, -beta, -r2);
}

} // namespace

Complex eisenstein_G_direct(Complex z, Complex s, const PeriodicSequence& A, long alpha,
                            const PeriodicSequence& B, long beta, const Rational& r1,
                            const Rational& r2, SeriesBudget& budget) {
    if (z.imag() <= 0.0) throw domain_error("G needs Im z > 0");
    if (s.real() <= 2.0)
        throw domain_error("direct G evaluation needs Re s > 2");
    const int k = A.period();
    if (B.period() != k) throw domain_error("G needs equal periods");
    const auto vb = embedded(B);
    const double r1d = rat(r1), r2d = rat(r2);

    Complex total(0.0, 0.0);
    if (r1.is_integer()) {
        const Cyclotomic& f = A.at(alpha * -static_cast<long>(r1.floor().get_si()));
        if (!f.is_zero()) total += f.embed() * real_line(s, B, beta, r2);
    }

    const long m0 = static_cast<long>(std::floor(-r1d));
    const double ratio = std::exp(-2.0 * PI * z.imag() / k);
    const double tol = budget.tail_bound_target;
    double last_mag = 0.0;
    long lines = 0;
    for (long dm = 1;; ++dm) {
        double mag = 0.0;
        for (int side = 0; side < 2; ++side) {
            const long m = side == 0 ? m0 + dm : m0 + 1 - dm;
            if (r1.is_integer() && m == -static_cast<long>(r1.floor().get_si()) && side == 1)
                continue;
            const Cyclotomic& f = A.at(alpha * m);
            if (f.is_zero()) continue;
            const Complex w = (static_cast<double>(m) + r1d) * z;
            const Complex line = f.embed() * full_line(s, w, vb, beta, k, r2d);
            total += line;
            mag = std::max(mag, std::abs(line));
            ++lines;
        }
        last_mag = std::max(mag, last_mag * ratio);
        const double tail = last_mag * ratio / (1.0 - ratio);
        if (dm >= 3 && tail <= tol) {
            budget.achieved_tail = tail;
            return total;
        }
        if (dm > 20000) throw accuracy_error("direct G line budget exhausted", tail);
        (void)lines;
    }
}

// ---------------------------------------------------------------------------
// loop integral
// ---------------------------------------------------------------------------

Complex loop_I_residue(const LoopParams& p) {
    if (p.z.imag() <= 0.0) throw domain_error("loop integral needs Im z > 0");
    const Rational rho = Rational(p.c) * p.R2.frac() - Rational(p.d) * p.R1.frac();
    const Rational x1 = (Rational(p.c * p.mu + p.j) - p.R1.frac()) / Rational(p.c * p.k);
    const Rational x2 =
        (Rational(p.v) + ((Rational(p.d * p.j) + rho) / Rational(p.c)).frac()) / Rational(p.k);
    const Complex czd = static_cast<double>(p.c) * p.z + static_cast<double>(p.d);
    Complex acc(0.0, 0.0);
    for (int m = 0; m <= p.N + 2; ++m) {
        const int n = p.N + 2 - m;
        const Rational bm = bernoulli_poly(m, x1);
        const Rational bn = bernoulli_poly(n, x2);
        double fct = 1.0;
        for (int i = 2; i <= m; ++i) fct *= i;
        for (int i = 2; i <= n; ++i) fct *= i;
        Complex zp = m == 0 ? 1.0 / (-czd) : std::pow(-czd, m - 1);
        acc += rat(bm) * rat(bn) / fct * zp;
    }
    return 2.0 * PI * I_UNIT * std::pow(static_cast<double>(p.k), p.N) * acc;
}

Complex loop_I_quadrature(const LoopParams& p, double radius, int nodes) {
    if (p.z.imag() <= 0.0) throw domain_error("loop integral needs Im z > 0");
    const Complex czd = static_cast<double>(p.c) * p.z + static_cast<double>(p.d);
    const double iso = std::min(2.0 * PI / p.k, 2.0 * PI / (p.k * std::abs(czd)));
    if (radius <= 0.0)
        radius = std::min(1.0 / (2.0 * p.k), 1.0 / (2.0 * p.k * std::abs(czd)));
    if (radius >= iso)
        throw domain_error("quadrature radius violates pole isolation");
    const Rational rho = Rational(p.c) * p.R2.frac() - Rational(p.d) * p.R1.frac();
    const double a1 = rat((Rational(p.c * p.mu + p.j) - p.R1.frac()) / Rational(p.c * p.k));
    const double a2 =
        rat((Rational(p.v) + ((Rational(p.d * p.j) + rho) / Rational(p.c)).frac()) /
            Rational(p.k));
    Complex acc(0.0, 0.0);
    for (int t = 0; t < nodes; ++t) {
        const double th = 2.0 * PI * t / nodes;
        const Complex u = radius * std::exp(I_UNIT * th);
        const Complex ku = static_cast<double>(p.k) * u;
        const Complex f = std::exp(-a1 * czd * ku) / (std::exp(-ku * czd) - 1.0) *
                          std::exp(a2 * ku) / (std::exp(ku) - 1.0);
        // u^{s-1} = u^{-N-1}; du = i u d(theta)
        acc += std::pow(u, -p.N - 1) * f * I_UNIT * u;
    }
    return acc * (2.0 * PI / nodes);
}

// ---------------------------------------------------------------------------
// Dirichlet L
// ---------------------------------------------------------------------------

Complex dirichlet_L(int r, const DirichletCharacter& chi) {
    if (r < 1) throw domain_error("dirichlet L needs r >= 1");
    if (r == 1 && chi.is_principal())
        throw pole_error("L(1, principal) diverges");
    return periodic_L(Complex(r, 0.0), chi.sequence(), 1, Rational(0));
}

} // namespace pds
