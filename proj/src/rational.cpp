#include "pds/rational.hpp"

#include <ostream>

#include "pds/errors.hpp"

namespace pds {

Rational::Rational(long n, long d) {
    if (d == 0) throw domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw parse_error("empty rational literal");
    try {
        mpq_class q(t, 10);
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::frac() const {
    mpq_class f = v_ - mpq_class(floor());
    return Rational(f);
}

Rational Rational::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero rational");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    mpz_class np, dp;
    mpz_pow_ui(np.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(dp.get_mpz_t(), base.den().get_mpz_t(), n);
    return Rational(mpq_class(np, dp));
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace pds
