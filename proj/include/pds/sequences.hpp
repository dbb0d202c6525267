#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pds/cyclotomic.hpp"

namespace pds {

// Complex sequence {f(n)} with period k, values exact cyclotomics. f(n) for
// any integer n is values[n mod k] with the mathematical mod.
class PeriodicSequence {
public:
    PeriodicSequence(int k, std::vector<Cyclotomic> values);

    int period() const { return k_; }
    const std::vector<Cyclotomic>& values() const { return vals_; }

    const Cyclotomic& at(long n) const {
        long r = n % k_;
        if (r < 0) r += k_;
        return vals_[static_cast<size_t>(r)];
    }

    // {f(alpha n)}; alpha may be negative or share factors with k.
    PeriodicSequence scaled(long alpha) const;

    bool operator==(const PeriodicSequence& o) const;

    // Optional bookkeeping set by the constructors in make_sequence.
    std::string label;

private:
    int k_;
    std::vector<Cyclotomic> vals_;
};

// Dirichlet character mod k, addressed by an exponent vector over a fixed
// generator basis of (Z/k)^*: for odd prime powers the smallest primitive
// root, for 4 the unit -1 (i.e. 3), for 2^e (e >= 3) the pair -1 and 5.
class DirichletCharacter {
public:
    int modulus() const { return k_; }
    const std::vector<int>& index() const { return index_; }
    int ordinal() const { return ordinal_; }

    // chi(n), exact; zero when gcd(n,k) > 1.
    const Cyclotomic& operator()(long n) const { return seq_.at(n); }
    const PeriodicSequence& sequence() const { return seq_; }

    bool is_principal() const { return ordinal_ == 0; }
    // chi(-1) = +1 (even) or -1 (odd).
    int parity() const { return parity_; }
    bool is_primitive() const { return primitive_; }

    // Complex-conjugate character (inverse exponent vector).
    DirichletCharacter conj() const;

    friend std::vector<DirichletCharacter> dirichlet_characters(int k);

private:
    DirichletCharacter(int k, std::vector<int> idx, int ordinal,
                       PeriodicSequence seq, int parity, bool primitive)
        : k_(k), index_(std::move(idx)), ordinal_(ordinal),
          seq_(std::move(seq)), parity_(parity), primitive_(primitive) {}

    int k_;
    std::vector<int> index_;
    int ordinal_;
    PeriodicSequence seq_;
    int parity_;
    bool primitive_;
};

// All phi(k) characters mod k in deterministic order (exponent vectors in
// lexicographic order over the fixed generator basis); element 0 is principal.
std::vector<DirichletCharacter> dirichlet_characters(int k);

// G(n, chi) = sum_v chi(v) e(nv/k), exact in Q(zeta_k) (times the character
// value field).
Cyclotomic gauss_sum(long n, const DirichletCharacter& chi);

// Ramanujan sum c_k(n).
Cyclotomic ramanujan_sum(int k, long n);

// f_hat(n) = (1/k) sum_j f(j) e(-nj/k); inversion (hat of hat reflects the
// index) is exact.
PeriodicSequence fourier_hat(const PeriodicSequence& seq);

// Sequence zoo constructor. Grammar:
//   const:k=<int> | list:k=<int>;vals=<lit>,... | char:k=<int>,i=<int>
//   | principal:k=<int> | gauss:k=<int>,i=<int> | gauss_shift:k=<int>,i=<int>
//   | ramanujan:k=<int> | altchar:k=<int>,i=<int> | exp:k=<int>
//   | dft:(<spec>) | scale:<int>:(<spec>)
// where <lit> is the exact-arith literal syntax.
PeriodicSequence make_sequence(const std::string& spec);

} // namespace pds
