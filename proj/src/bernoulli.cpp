#include "pds/bernoulli.hpp"

#include <atomic>
#include <vector>

#include "pds/errors.hpp"
#include "pds/sequences.hpp"

namespace pds {

namespace {
std::atomic<int> g_max_index{64};

mpz_class factorial_z(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}
} // namespace

int max_bernoulli_index() { return g_max_index.load(); }
void set_max_bernoulli_index(int n) {
    if (n < 0) throw domain_error("bernoulli index cap must be nonnegative");
    g_max_index.store(n);
}

Rational bernoulli_number(int n) {
    if (n < 0) throw domain_error("bernoulli index must be nonnegative");
    if (n > max_bernoulli_index())
        throw capacity_error("bernoulli index " + std::to_string(n) + " exceeds cap " +
                             std::to_string(max_bernoulli_index()));
    thread_local std::vector<Rational> table{Rational(1)};
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational s(0);
        for (int j = 0; j < m; ++j)
            s += Rational(mpq_class(binomial(m + 1, j))) * table[j];
        table.push_back(-s / Rational(mpq_class(mpz_class(m + 1))));
    }
    return table[static_cast<size_t>(n)];
}

mpz_class euler_number(int n) {
    if (n < 0) throw domain_error("euler index must be nonnegative");
    if (n > max_bernoulli_index())
        throw capacity_error("euler index " + std::to_string(n) + " exceeds cap");
    if (n % 2 == 1) return 0;
    thread_local std::vector<mpz_class> table{mpz_class(1)};  // E_0, E_2, E_4, ...
    while (static_cast<int>(table.size()) <= n / 2) {
        const int m = static_cast<int>(table.size());
        // sum_{j=0}^{m} C(2m, 2j) E_{2j} = 0
        mpz_class s(0);
        for (int j = 0; j < m; ++j)
            s += binomial(2 * m, 2 * j) * table[j];
        table.push_back(-s);
    }
    return table[static_cast<size_t>(n / 2)];
}

Rational bernoulli_poly(int n, const Rational& x) {
    if (n < 0) throw domain_error("bernoulli degree must be nonnegative");
    if (n > max_bernoulli_index())
        throw capacity_error("bernoulli degree " + std::to_string(n) + " exceeds cap");
    // Horner over B_n(x) = sum_j C(n,j) B_j x^{n-j}
    Rational acc(0);
    for (int j = 0; j <= n; ++j) {
        acc *= x;
        acc += Rational(mpq_class(binomial(n, j))) * bernoulli_number(j);
    }
    return acc;
}

Rational bernoulli_P(int n, const Rational& x) {
    if (n == 0) return Rational(1);
    if (n == 1) {
        if (x.is_integer()) return Rational(-1, 2);
        return x.frac() - Rational(1, 2);
    }
    Rational b = bernoulli_poly(n, x.frac());
    return b / Rational(mpq_class(factorial_z(n)));
}

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x.frac() - Rational(1, 2);
}

Cyclotomic periodic_P(int n, const Rational& x, const PeriodicSequence& A, long c) {
    const int k = A.period();
    const Rational kk(k);
    Cyclotomic acc;
    for (int v = 0; v < k; ++v) {
        const Cyclotomic& f = A.at(-c * v);
        if (f.is_zero()) continue;
        acc += f * Cyclotomic(bernoulli_P(n, (Rational(v) + x) / kk));
    }
    return Cyclotomic(kk.pow(n - 1)) * acc;
}

Cyclotomic periodic_B(int j, const PeriodicSequence& A) {
    const int k = A.period();
    const Rational kk(k);
    Cyclotomic acc;
    for (int n = 0; n < k; ++n) {
        const Cyclotomic& f = A.at(n);
        if (f.is_zero()) continue;
        acc += f * Cyclotomic(bernoulli_poly(j, Rational(n) / kk));
    }
    return Cyclotomic(kk.pow(j - 1)) * acc;
}

Cyclotomic periodic_B_poly(int j, const Rational& x, const PeriodicSequence& A) {
    const int k = A.period();
    const Rational kk(k);
    Cyclotomic acc;
    for (int n = 0; n < k; ++n) {
        const Cyclotomic& f = A.at(-n);
        if (f.is_zero()) continue;
        acc += f * Cyclotomic(bernoulli_poly(j, (Rational(n) + x) / kk));
    }
    return Cyclotomic(kk.pow(j - 1)) * acc;
}

Cyclotomic P_star(int m, const Rational& x, const DirichletCharacter& chi) {
    const int k = chi.modulus();
    if (k % 2 != 0)
        throw domain_error("alternating Bernoulli function needs even modulus");
    const Rational kk(k);
    Cyclotomic acc;
    for (int v = 0; v < k; ++v) {
        const Cyclotomic& f = chi(v);
        if (f.is_zero()) continue;
        Cyclotomic term = f * Cyclotomic(bernoulli_P(m, (Rational(v) + x) / kk));
        acc += (v % 2 == 0) ? term : -term;
    }
    return Cyclotomic(kk.pow(m - 1)) * acc;
}

Cyclotomic B_star(int m, const DirichletCharacter& chi) {
    const int k = chi.modulus();
    if (k % 2 != 0)
        throw domain_error("alternating Bernoulli number needs even modulus");
    const Rational kk(k);
    Cyclotomic acc;
    for (int v = 0; v < k; ++v) {
        const Cyclotomic& f = chi(v);
        if (f.is_zero()) continue;
        Cyclotomic term = f * Cyclotomic(bernoulli_poly(m, Rational(v) / kk));
        acc += (v % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace pds
