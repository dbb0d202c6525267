#include "pds/cyclotomic.hpp"

#include <atomic>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pds/errors.hpp"

namespace pds {

namespace {

std::atomic<int> g_max_order{360};

// poly helpers: coefficient vectors, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// Division by a monic divisor; returns quotient, p becomes the remainder.
Poly poly_divmod_monic(Poly& p, const Poly& d) {
    Poly q;
    if (p.size() < d.size()) return q;
    q.assign(p.size() - d.size() + 1, Rational(0));
    for (size_t i = p.size(); i-- >= d.size();) {
        Rational f = p[i];
        if (!f.is_zero()) {
            q[i - d.size() + 1] = f;
            for (size_t j = 0; j < d.size(); ++j)
                p[i - d.size() + 1 + j] -= f * d[j];
        }
        if (i == 0) break;
    }
    poly_trim(p);
    return q;
}

} // namespace

int max_cyclotomic_order() { return g_max_order.load(); }
void set_max_cyclotomic_order(int m) {
    if (m < 1) throw domain_error("max cyclotomic order must be positive");
    g_max_order.store(m);
}

int euler_phi(int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

std::vector<Rational> cyclotomic_polynomial(int m) {
    if (m < 1) throw domain_error("cyclotomic order must be positive");
    if (m > max_cyclotomic_order())
        throw capacity_error("cyclotomic order " + std::to_string(m) +
                             " exceeds cap " + std::to_string(max_cyclotomic_order()));
    // per-thread cache: verification sweeps hit this from every worker
    thread_local std::map<int, Poly> cache;
    auto compute = [&](auto&& self, int n) -> const Poly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        // x^n - 1
        Poly num(n + 1);
        num[0] = Rational(-1);
        num[n] = Rational(1);
        for (int d = 1; d < n; ++d) {
            if (n % d == 0) {
                Poly rem = num;
                Poly q = poly_divmod_monic(rem, self(self, d));
                if (!rem.empty())
                    throw error("cyclotomic division not exact");  // unreachable
                num = std::move(q);
            }
        }
        return cache.emplace(n, std::move(num)).first->second;
    };
    return compute(compute, m);
}

Cyclotomic Cyclotomic::make_reduced(int order, Poly poly) {
    const Poly phi = cyclotomic_polynomial(order);
    const size_t deg = phi.size() - 1;
    if (poly.size() > deg) poly_divmod_monic(poly, phi);
    poly.resize(deg == 0 ? 1 : deg);
    Cyclotomic r(order, std::move(poly));
    r.trim();
    return r;
}

void Cyclotomic::trim() {
    // Keep the order as constructed; representation is canonical per order.
    if (c_.empty()) c_.assign(1, Rational(0));
}

Cyclotomic Cyclotomic::root_of_unity(int m, long j) {
    if (m < 1) throw domain_error("root of unity of nonpositive order");
    if (m > max_cyclotomic_order())
        throw capacity_error("order " + std::to_string(m) + " exceeds cap");
    long jm = j % m;
    if (jm < 0) jm += m;
    Poly p(static_cast<size_t>(jm) + 1);
    p[static_cast<size_t>(jm)] = Rational(1);
    return make_reduced(m, std::move(p));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw domain_error("cyclotomic value is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(int M) const {
    if (M == order_) return *this;
    if (M % order_ != 0)
        throw domain_error("promotion target must be a multiple of the order");
    if (M > max_cyclotomic_order())
        throw capacity_error("order " + std::to_string(M) + " exceeds cap");
    const int step = M / order_;
    Poly p(static_cast<size_t>((c_.size() - 1) * step) + 1);
    for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    return make_reduced(M, std::move(p));
}

Cyclotomic Cyclotomic::operator-() const {
    Poly p = c_;
    for (auto& x : p) x = -x;
    return Cyclotomic(order_, std::move(p));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        // a rational operand adds onto the constant basis coefficient
        if (a.is_rational()) {
            Cyclotomic r = b;
            r.c_[0] += a.c_[0];
            return r;
        }
        if (b.is_rational()) {
            Cyclotomic r = a;
            r.c_[0] += b.c_[0];
            return r;
        }
        const int M = std::lcm(a.order_, b.order_);
        return a.promoted(M) + b.promoted(M);
    }
    Cyclotomic r = a;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    // rational operands scale coefficients; no promotion or reduction needed
    if (a.is_rational()) {
        if (a.c_[0].is_zero()) return Cyclotomic();
        Cyclotomic r = b;
        for (auto& x : r.c_) x *= a.c_[0];
        return r;
    }
    if (b.is_rational()) {
        if (b.c_[0].is_zero()) return Cyclotomic();
        Cyclotomic r = a;
        for (auto& x : r.c_) x *= b.c_[0];
        return r;
    }
    if (a.order_ != b.order_) {
        const int M = std::lcm(a.order_, b.order_);
        return a.promoted(M) * b.promoted(M);
    }
    return Cyclotomic::make_reduced(a.order_, poly_mul(a.c_, b.c_));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero cyclotomic");
    // Extended Euclid for (this, Phi_m) over Q; Phi_m irreducible, so the gcd
    // is a nonzero constant.
    Poly r0 = cyclotomic_polynomial(order_);
    Poly r1 = c_;
    poly_trim(r1);
    Poly t0;                       // coefficient of *this in r0 = Phi
    Poly t1{Rational(1)};          // coefficient of *this in r1 = this
    while (r1.size() > 1) {
        // divide r0 by r1 (general leading coefficient)
        Rational lead = r1.back();
        Poly monic = r1;
        for (auto& x : monic) x /= lead;
        Poly rem = r0;
        Poly q = poly_divmod_monic(rem, monic);
        for (auto& x : q) x /= lead;
        // (r0, r1) <- (r1, r0 - q r1); (t0, t1) <- (t1, t0 - q t1)
        Poly qt = poly_mul(q, t1);
        Poly t2 = t0;
        t2.resize(std::max(t2.size(), qt.size()));
        for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        poly_trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) throw error("gcd degenerated; input not reduced");
    const Rational g = r1[0];
    for (auto& x : t1) x /= g;
    return make_reduced(order_, std::move(t1));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        const int M = std::lcm(a.order_, b.order_);
        return a.promoted(M) == b.promoted(M);
    }
    const size_t n = std::max(a.c_.size(), b.c_.size());
    for (size_t i = 0; i < n; ++i) {
        const Rational& x = i < a.c_.size() ? a.c_[i] : Rational(0);
        const Rational& y = i < b.c_.size() ? b.c_[i] : Rational(0);
        if (x != y) return false;
    }
    return true;
}

std::complex<double> Cyclotomic::embed() const {
    const double theta = 2.0 * 3.14159265358979323846264338327950288 / order_;
    const std::complex<double> zeta(std::cos(theta), std::sin(theta));
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * zeta + c_[i].to_double();
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return c_[0].to_string();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.sign() < 0) { os << "-"; v = -v; }
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << v.to_string();
        } else {
            if (!(v == Rational(1))) os << v.to_string() << "*";
            os << "z" << order_ << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
    return os << x.to_string();
}

namespace {

struct LitParser {
    const std::string& s;
    size_t pos = 0;

    explicit LitParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos - start == 1 && !isdigit(static_cast<unsigned char>(s[start]))))
            throw parse_error("expected integer at position " + std::to_string(start) +
                              " in '" + s + "'");
        return std::stol(s.substr(start, pos - start));
    }

    Cyclotomic parse_factor() {
        skip_ws();
        if (eat('(')) {
            Cyclotomic e = parse_expr();
            if (!eat(')')) throw parse_error("missing ')' in '" + s + "'");
            return e;
        }
        if (peek() == 'z') {
            ++pos;
            long m = parse_int();
            long j = 1;
            if (eat('^')) j = parse_int();
            return Cyclotomic::root_of_unity(static_cast<int>(m), j);
        }
        // rational: int [/ int]
        long n = parse_int();
        if (eat('/')) {
            long d = parse_int();
            return Cyclotomic(Rational(n, d));
        }
        return Cyclotomic(Rational(n));
    }

    Cyclotomic parse_term() {
        Cyclotomic r = parse_factor();
        while (eat('*')) r *= parse_factor();
        return r;
    }

    Cyclotomic parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Cyclotomic r = parse_term();
        if (neg) r = -r;
        while (true) {
            skip_ws();
            if (eat('+')) r += parse_term();
            else if (eat('-')) r -= parse_term();
            else break;
        }
        return r;
    }
};

} // namespace

Cyclotomic parse_cyclotomic(const std::string& text) {
    LitParser p(text);
    Cyclotomic r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("trailing input in cyclotomic literal '" + text + "'");
    return r;
}

} // namespace pds
