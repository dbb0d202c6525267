#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pds/rational.hpp"

namespace pds {

// Orders above this are refused with capacity_error. All paper cases use
// k <= 8 (lcm with 4 stays tiny); the default leaves plenty of headroom.
int max_cyclotomic_order();
void set_max_cyclotomic_order(int m);

// Euler phi.
int euler_phi(int m);

// The m-th cyclotomic polynomial Phi_m, monic with integer coefficients,
// as coefficients c[0..phi(m)] of 1, x, ..., x^{phi(m)}. Computed by exact
// division of x^m - 1 by the product of Phi_d over proper divisors d | m,
// and cached (thread-safe).
std::vector<Rational> cyclotomic_polynomial(int m);

// Exact element of Q(zeta_m) in the power basis 1, zeta_m, ..., zeta_m^{phi(m)-1}
// modulo Phi_m. Values are immutable after construction; mixed-order
// arithmetic promotes both operands to Q(zeta_lcm) via zeta_m = zeta_M^{M/m}.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1) {}
    Cyclotomic(const Rational& r) : order_(1), c_{r} {}
    Cyclotomic(long n) : order_(1), c_{Rational(n)} {}

    // zeta_m^j, j taken mod m.
    static Cyclotomic root_of_unity(int m, long j);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_part() const;

    // Image of *this in Q(zeta_M); m must divide M.
    Cyclotomic promoted(int M) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    // Field inverse; throws domain_error on zero.
    Cyclotomic inverse() const;
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Numerical image: coefficient polynomial evaluated at e^{2 pi i / m}.
    std::complex<double> embed() const;

    // Literal syntax used by the CLI and fixtures: rationals as p/q, roots of
    // unity as z{m}^{j}, composed with +, -, *. Round-trips exactly.
    std::string to_string() const;

private:
    Cyclotomic(int order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
    static Cyclotomic make_reduced(int order, std::vector<Rational> poly);
    void trim();

    int order_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

// Parses the literal syntax above (also accepts parentheses).
Cyclotomic parse_cyclotomic(const std::string& text);

} // namespace pds
