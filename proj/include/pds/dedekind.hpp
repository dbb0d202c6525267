#pragma once

#include "pds/bernoulli.hpp"
#include "pds/cyclotomic.hpp"
#include "pds/rational.hpp"
#include "pds/sequences.hpp"

namespace pds {

// Modular transformation Vz = (az+b)/(cz+d), ad - bc = 1, c > 0.
struct ModularMap {
    long a = 1, b = 0, c = 1, d = 0;
    ModularMap(long a_, long b_, long c_, long d_);
    bool upper_zero_mod(int k) const { return a % k == 0 && d % k == 0; }   // a=d=0 (k)
    bool lower_zero_mod(int k) const { return b % k == 0 && c % k == 0; }   // b=c=0 (k)
};

// Classical Dedekind sum (sawtooth convention, zero at integers).
Rational classical_s(long d, long c);

// Hardy-Berndt sums s2 and s3.
Rational hardy_s2(long d, long c);
Rational hardy_s3(long d, long c);

enum class Family { BbAc, AdBa };

// Least positive b with b c = -1 (mod d) resp. a with a d = 1 (mod c).
long min_b(long c, long d);
long min_a(long c, long d);

// The two defining summation formulas, applied verbatim (no congruence
// checks); the period used is lcm(period A, period B).
//   BbAc: sum_{n=1}^{ck} f*(b n)  P1(n/ck) P1(d n/c, A_c)
//   AdBa: sum_{n=1}^{ck} f(d n)   P1(n/ck) P1(d n/c, B_a)
// with P1(x, S_c) = sum_v s(-c v) P1((v+x)/k).
Cyclotomic dedekind_raw(long d, long c, long mult, const PeriodicSequence& A,
                        const PeriodicSequence& B, Family fam);

// Generalized (shifted) variants:
//   BbAc: sum_{n=1}^{ck} f*(b n) P1((n+y)/ck) P1(d(n+y)/c + x, A_c)
//   AdBa: likewise with f(d n) and P1(..., B_a).
Cyclotomic dedekind_raw_gen(long d, long c, long mult, const PeriodicSequence& A,
                            const PeriodicSequence& B, const Rational& x, const Rational& y,
                            Family fam);

// Public operations with the stated congruence preconditions enforced
// (violations raise domain_error naming the failed condition).
Cyclotomic periodic_dedekind(long d, long c, long mult, const PeriodicSequence& A,
                             const PeriodicSequence& B, Family fam);
Cyclotomic generalized_dedekind(long d, long c, long mult, const PeriodicSequence& A,
                                const PeriodicSequence& B, const Rational& x,
                                const Rational& y, Family fam);

// The sums that appear on the other side of the reciprocity theorems,
// expressed through the verbatim formulas:
//   swapped :  s(c,d;A_c,B_b)       = sum f(cn)  P1(n/dk) P1( cn/d, {f*(-bv)})
//   mirrored:  s(-c,d;A_c,B_{-b})   = sum f(cn)  P1(n/dk) P1(-cn/d, {f*(bv)})
Cyclotomic dedekind_swapped(long c, long d, long b, const PeriodicSequence& A,
                            const PeriodicSequence& B);
Cyclotomic dedekind_mirrored(long c, long d, long b, const PeriodicSequence& A,
                             const PeriodicSequence& B);
// Shifted mirrored sum s(-c,d;A_c,B_{-b};-R1,-R2).
Cyclotomic dedekind_mirrored_gen(long c, long d, long b, const PeriodicSequence& A,
                                 const PeriodicSequence& B, const Rational& R1,
                                 const Rational& R2);

// Berndt-style normalized sum with unit multipliers:
//   s(D,C;Sb,Sa) = sum_{n=1}^{Ck} fb(n) P1(n/Ck) P1(Dn/C, Sa)
Cyclotomic dedekind_norm(long D, long C, const PeriodicSequence& Sb,
                         const PeriodicSequence& Sa);

// Alternating character sum s*(d,c;chi2,chi1) over the common (even) modulus.
Cyclotomic alternating_char_sum(long d, long c, const DirichletCharacter& chi2,
                                const DirichletCharacter& chi1);

} // namespace pds
