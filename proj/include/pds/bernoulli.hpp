#pragma once

#include "pds/cyclotomic.hpp"
#include "pds/rational.hpp"
#include "pds/sequences_fwd.hpp"

namespace pds {

// Cap on Bernoulli/Euler indices (recurrence tables).
int max_bernoulli_index();
void set_max_bernoulli_index(int n);

// Exact B_n (B_1 = -1/2).
Rational bernoulli_number(int n);

// Integer Euler numbers E_n (E_0 = 1, odd ones vanish).
mpz_class euler_number(int n);

// Exact B_n(x).
Rational bernoulli_poly(int n, const Rational& x);

// Bernoulli function P_n(x) = B_n({x})/n!, with the convention P_1 = -1/2 at
// integers. The sawtooth ((x)) is the variant that vanishes at integers.
Rational bernoulli_P(int n, const Rational& x);
Rational sawtooth(const Rational& x);

class PeriodicSequence;

// P_n(x, A_c) = k^{n-1} sum_{v=0}^{k-1} f(-c v) P_n((v+x)/k). c = 1 recovers
// the plain periodic Bernoulli function P_n(x, A).
Cyclotomic periodic_P(int n, const Rational& x, const PeriodicSequence& A, long c = 1);

// B_j(A) = k^{j-1} sum_n f(n) B_j(n/k)  and  B_j(x, A) = k^{j-1} sum_n f(-n) B_j((n+x)/k);
// closed forms for the generating functions, validated in tests against exact
// formal power series division.
Cyclotomic periodic_B(int j, const PeriodicSequence& A);
Cyclotomic periodic_B_poly(int j, const Rational& x, const PeriodicSequence& A);

class DirichletCharacter;

// Alternating variants, defined for even modulus k:
//   P*_m(x, chi) = k^{m-1} sum_v (-1)^v chi(v) P_m((v+x)/k)
//   B*_m(chi)    =          sum_v (-1)^v chi(v) B_m(v/k)
// so that m! P*_m(0, chi) = k^{m-1} B*_m(chi).
Cyclotomic P_star(int m, const Rational& x, const DirichletCharacter& chi);
Cyclotomic B_star(int m, const DirichletCharacter& chi);

} // namespace pds
