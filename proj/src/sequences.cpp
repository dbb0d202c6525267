#include "pds/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pds/errors.hpp"

namespace pds {

PeriodicSequence::PeriodicSequence(int k, std::vector<Cyclotomic> values)
    : k_(k), vals_(std::move(values)) {
    if (k < 1) throw domain_error("sequence period must be positive");
    if (static_cast<int>(vals_.size()) != k)
        throw domain_error("sequence needs exactly k values");
}

PeriodicSequence PeriodicSequence::scaled(long alpha) const {
    std::vector<Cyclotomic> v;
    v.reserve(k_);
    for (int n = 0; n < k_; ++n) v.push_back(at(alpha * n));
    PeriodicSequence r(k_, std::move(v));
    r.label = "scale:" + std::to_string(alpha) + ":(" + label + ")";
    return r;
}

bool PeriodicSequence::operator==(const PeriodicSequence& o) const {
    if (k_ != o.k_) return false;
    for (int n = 0; n < k_; ++n)
        if (!(vals_[n] == o.vals_[n])) return false;
    return true;
}

namespace {

struct UnitFactor {
    long gen;    // generator of this cyclic factor, as a residue mod k
    int order;   // its multiplicative order
};

long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

int mult_order(long g, long m) {
    long x = g % m;
    int ord = 1;
    while (x != 1) {
        x = (x * g) % m;
        if (++ord > m) throw error("order search overflow");
    }
    return ord;
}

// Generator basis of (Z/k)^* per the fixed convention; CRT-lifted to mod k.
std::vector<UnitFactor> unit_group_basis(int k) {
    std::vector<UnitFactor> basis;
    int rest = k;
    std::vector<std::pair<int, int>> pe;  // (p, p^e)
    for (int p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            int q = 1;
            while (rest % p == 0) { rest /= p; q *= p; }
            pe.emplace_back(p, q);
        }
    }
    if (rest > 1) pe.emplace_back(rest, rest);
    std::sort(pe.begin(), pe.end());

    for (auto [p, q] : pe) {
        std::vector<std::pair<long, int>> local;  // generators mod q
        if (p == 2) {
            if (q == 2) continue;                    // trivial
            if (q == 4) local.emplace_back(3, 2);    // the unit group itself
            else {
                local.emplace_back(q - 1, 2);        // -1
                local.emplace_back(5, mult_order(5, q));
            }
        } else {
            long g = 2;
            const int phi_q = euler_phi(q);
            while (mult_order(g, q) != phi_q) ++g;   // smallest primitive root
            local.emplace_back(g, phi_q);
        }
        // CRT lift: residue = local gen mod q, 1 mod k/q.
        const long m2 = k / q;
        for (auto [g, ord] : local) {
            long lifted = 0;
            for (long x = g; x < k; x += q) {
                if (m2 == 1 || x % m2 == 1) { lifted = x; break; }
            }
            basis.push_back({lifted, ord});
        }
    }
    return basis;
}

// Discrete log of u (coprime to k) against the basis, per factor.
std::vector<int> unit_dlog(long u, int k, const std::vector<UnitFactor>& basis) {
    std::vector<int> exps(basis.size(), 0);
    // brute force over the (small) group: enumerate exponent vectors
    std::vector<int> cur(basis.size(), 0);
    while (true) {
        long val = 1;
        for (size_t i = 0; i < basis.size(); ++i)
            val = (val * pow_mod(basis[i].gen, cur[i], k)) % k;
        if (val == u % k) return cur;
        // increment exponent vector
        size_t i = 0;
        for (; i < basis.size(); ++i) {
            if (++cur[i] < basis[i].order) break;
            cur[i] = 0;
        }
        if (i == basis.size())
            throw error("discrete log not found (unit group basis wrong?)");
    }
}

} // namespace

std::vector<DirichletCharacter> dirichlet_characters(int k) {
    if (k < 1) throw domain_error("character modulus must be positive");
    if (k > max_cyclotomic_order())
        throw capacity_error("character modulus exceeds cyclotomic order cap");
    const auto basis = unit_group_basis(k);
    // discrete logs of every unit, computed once
    std::vector<std::vector<int>> dlog(k == 1 ? 1 : k);
    if (k == 1) dlog[0] = {};
    else
        for (long u = 0; u < k; ++u)
            if (std::gcd(u, static_cast<long>(k)) == 1) dlog[u] = unit_dlog(u, k, basis);

    const int phi = euler_phi(k);
    std::vector<DirichletCharacter> out;
    out.reserve(phi);

    // exponent vectors in lexicographic order (first coordinate outermost)
    std::vector<int> idx(basis.size(), 0);
    for (int ordinal = 0; ordinal < phi; ++ordinal) {
        std::vector<Cyclotomic> vals(k, Cyclotomic(0));
        for (long n = 0; n < k; ++n) {
            if (std::gcd(n, static_cast<long>(k)) != 1) continue;
            Cyclotomic v(1);
            for (size_t i = 0; i < basis.size(); ++i) {
                long e = static_cast<long>(idx[i]) * dlog[n][i];
                v *= Cyclotomic::root_of_unity(basis[i].order, e);
            }
            vals[static_cast<size_t>(n)] = v;
        }
        PeriodicSequence seq(k, std::move(vals));
        seq.label = "char:k=" + std::to_string(k) + ",i=" + std::to_string(ordinal);

        const int parity = seq.at(-1) == Cyclotomic(1) ? 1 : -1;

        // chi is induced mod a proper divisor d iff chi(n) = 1 for every unit
        // n = 1 (mod d); primitive means no such d exists.
        bool primitive = true;
        for (int d = 1; d < k && primitive; ++d) {
            if (k % d != 0) continue;
            bool induced = true;
            for (long n = 1; n < k && induced; ++n) {
                if (std::gcd(n, static_cast<long>(k)) != 1) continue;
                if (n % d == 1 % d && !(seq.at(n) == Cyclotomic(1))) induced = false;
            }
            if (induced) primitive = false;
        }

        out.push_back(DirichletCharacter(k, idx, ordinal, std::move(seq), parity, primitive));

        // next exponent vector, last coordinate fastest
        for (size_t i = basis.size(); i-- > 0;) {
            if (++idx[i] < basis[i].order) break;
            idx[i] = 0;
            if (i == 0) break;
        }
    }
    return out;
}

DirichletCharacter DirichletCharacter::conj() const {
    auto all = dirichlet_characters(k_);
    const auto basis = unit_group_basis(k_);
    std::vector<int> target(index_.size());
    for (size_t i = 0; i < index_.size(); ++i)
        target[i] = index_[i] == 0 ? 0 : basis[i].order - index_[i];
    for (auto& c : all)
        if (c.index() == target) return c;
    throw error("conjugate character not found");
}

Cyclotomic gauss_sum(long n, const DirichletCharacter& chi) {
    const int k = chi.modulus();
    Cyclotomic acc;
    for (long v = 0; v < k; ++v) {
        const Cyclotomic& c = chi(v);
        if (c.is_zero()) continue;
        acc += c * Cyclotomic::root_of_unity(k, n * v);
    }
    return acc;
}

Cyclotomic ramanujan_sum(int k, long n) {
    Cyclotomic acc;
    for (long v = 1; v <= k; ++v) {
        if (std::gcd(v, static_cast<long>(k)) != 1) continue;
        acc += Cyclotomic::root_of_unity(k, n * v);
    }
    return acc;
}

PeriodicSequence fourier_hat(const PeriodicSequence& seq) {
    const int k = seq.period();
    const Cyclotomic inv_k{Rational(1, k)};
    std::vector<Cyclotomic> vals;
    vals.reserve(k);
    for (long n = 0; n < k; ++n) {
        Cyclotomic acc;
        for (long j = 0; j < k; ++j) {
            const Cyclotomic& f = seq.at(j);
            if (f.is_zero()) continue;
            acc += f * Cyclotomic::root_of_unity(k, -n * j);
        }
        vals.push_back(inv_k * acc);
    }
    PeriodicSequence r(k, std::move(vals));
    r.label = "dft:(" + seq.label + ")";
    return r;
}

namespace {

const DirichletCharacter& char_by_ordinal(std::vector<DirichletCharacter>& store,
                                          int k, int i) {
    store = dirichlet_characters(k);
    if (i < 0 || i >= static_cast<int>(store.size()))
        throw domain_error("character index " + std::to_string(i) + " out of range for k=" +
                           std::to_string(k) + " (phi = " + std::to_string(store.size()) + ")");
    return store[static_cast<size_t>(i)];
}

// "key=value" scanning for the simple specs.
long want_int(const std::string& spec, const std::string& key) {
    const std::string pat = key + "=";
    size_t p = spec.find(pat);
    if (p == std::string::npos)
        throw parse_error("sequence spec '" + spec + "' missing " + key + "=");
    size_t q = p + pat.size();
    size_t end = q;
    if (end < spec.size() && (spec[end] == '-' || spec[end] == '+')) ++end;
    while (end < spec.size() && isdigit(static_cast<unsigned char>(spec[end]))) ++end;
    if (end == q) throw parse_error("bad integer for " + key + " in '" + spec + "'");
    return std::stol(spec.substr(q, end - q));
}

} // namespace

PeriodicSequence make_sequence(const std::string& spec0) {
    std::string spec;
    spec.reserve(spec0.size());
    for (char c : spec0)
        if (!isspace(static_cast<unsigned char>(c))) spec.push_back(c);
    if (spec.empty()) throw parse_error("empty sequence spec");

    auto head = spec.substr(0, spec.find(':'));

    if (head == "dft") {
        if (spec.size() < 6 || spec[3] != ':' || spec[4] != '(' || spec.back() != ')')
            throw parse_error("dft spec must be dft:(<spec>)");
        return fourier_hat(make_sequence(spec.substr(5, spec.size() - 6)));
    }
    if (head == "scale") {
        size_t c1 = spec.find(':');
        size_t c2 = spec.find(':', c1 + 1);
        if (c2 == std::string::npos || c2 + 1 >= spec.size() || spec[c2 + 1] != '(' ||
            spec.back() != ')')
            throw parse_error("scale spec must be scale:<int>:(<spec>)");
        long alpha = 0;
        try {
            alpha = std::stol(spec.substr(c1 + 1, c2 - c1 - 1));
        } catch (const std::exception&) {
            throw parse_error("bad scale factor in '" + spec + "'");
        }
        return make_sequence(spec.substr(c2 + 2, spec.size() - c2 - 3)).scaled(alpha);
    }

    std::vector<DirichletCharacter> store;
    PeriodicSequence result(1, {Cyclotomic(0)});

    if (head == "const") {
        int k = static_cast<int>(want_int(spec, "k"));
        result = PeriodicSequence(k, std::vector<Cyclotomic>(k, Cyclotomic(1)));
    } else if (head == "list") {
        int k = static_cast<int>(want_int(spec, "k"));
        size_t p = spec.find("vals=");
        if (p == std::string::npos) throw parse_error("list spec missing vals=");
        std::string rest = spec.substr(p + 5);
        std::vector<Cyclotomic> vals;
        size_t start = 0;
        while (start <= rest.size()) {
            // split at commas not inside z..^ (no commas appear in literals)
            size_t comma = rest.find(',', start);
            std::string item = rest.substr(start, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - start);
            if (!item.empty()) vals.push_back(parse_cyclotomic(item));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (static_cast<int>(vals.size()) != k)
            throw parse_error("list spec expects k=" + std::to_string(k) + " values, got " +
                              std::to_string(vals.size()));
        result = PeriodicSequence(k, std::move(vals));
    } else if (head == "char") {
        int k = static_cast<int>(want_int(spec, "k"));
        int i = static_cast<int>(want_int(spec, "i"));
        result = char_by_ordinal(store, k, i).sequence();
    } else if (head == "principal") {
        int k = static_cast<int>(want_int(spec, "k"));
        result = char_by_ordinal(store, k, 0).sequence();
    } else if (head == "gauss") {
        int k = static_cast<int>(want_int(spec, "k"));
        int i = static_cast<int>(want_int(spec, "i"));
        const auto& chi = char_by_ordinal(store, k, i);
        std::vector<Cyclotomic> vals;
        for (long n = 0; n < k; ++n) vals.push_back(gauss_sum(n, chi));
        result = PeriodicSequence(k, std::move(vals));
    } else if (head == "gauss_shift") {
        int k = static_cast<int>(want_int(spec, "k"));
        int i = static_cast<int>(want_int(spec, "i"));
        if (k % 2 != 0)
            throw domain_error("gauss_shift needs even k (uses k/2 shift)");
        const auto& chi = char_by_ordinal(store, k, i);
        std::vector<Cyclotomic> vals;
        for (long n = 0; n < k; ++n) vals.push_back(gauss_sum(n + k / 2, chi));
        result = PeriodicSequence(k, std::move(vals));
    } else if (head == "ramanujan") {
        int k = static_cast<int>(want_int(spec, "k"));
        std::vector<Cyclotomic> vals;
        for (long n = 0; n < k; ++n) vals.push_back(ramanujan_sum(k, n));
        result = PeriodicSequence(k, std::move(vals));
    } else if (head == "altchar") {
        int k = static_cast<int>(want_int(spec, "k"));
        int i = static_cast<int>(want_int(spec, "i"));
        const auto& chi = char_by_ordinal(store, k, i);
        const int h = k % 2 == 0 ? k : 2 * k;   // honest period
        std::vector<Cyclotomic> vals;
        for (long n = 0; n < h; ++n) {
            Cyclotomic v = chi(n);
            vals.push_back(n % 2 == 0 ? v : -v);
        }
        result = PeriodicSequence(h, std::move(vals));
    } else if (head == "exp") {
        int k = static_cast<int>(want_int(spec, "k"));
        std::vector<Cyclotomic> vals;
        for (long n = 0; n < k; ++n) vals.push_back(Cyclotomic::root_of_unity(k, n));
        result = PeriodicSequence(k, std::move(vals));
    } else {
        throw parse_error("unknown sequence spec '" + spec + "'");
    }
    result.label = spec;
    return result;
}

} // namespace pds
