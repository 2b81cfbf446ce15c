#ifndef TAUTKIT_NUMERIC_HPP
#define TAUTKIT_NUMERIC_HPP

#include "tautkit/partition.hpp"
#include "tautkit/rational.hpp"

namespace tautkit {

Integer factorial(int n);
Integer binomial(int n, int k);
Integer pow_int(const Integer& base, int exp);

/// Odd double factorial: m * (m-2) * ... * 1 for odd m >= 1, with (-1)!! = 1.
/// Satisfies (2k-1)!! = (2k)! / (2^k k!).
Integer double_factorial(int m);

/// Bernoulli number B_m for even m >= 2, in the convention B_2 = 1/6
/// (so that chi(M_{1,1}) = -1/12 below).  Computed from the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1, B_1 = -1/2.
Rational bernoulli(int m);

/// #Aut(alpha): product over distinct part values of (multiplicity)!.
Integer aut_partition(const Partition& alpha);

/// r = 2g + d + n - 2, the number of simple branch points away from infinity
/// for a degree-d cover of genus g with n labeled preimages of infinity.
int rh_branch_count(int g, int d, int n);

/// chi(M_g) = B_{2g} / (2g (2g-2)) for g >= 2.
Rational euler_char_mg(int g);

/// chi(M_{g,n}) = (-1)^n (2g+n-3)! B_{2g} / (2g (2g-2)!) for g >= 1, 2g-2+n > 0.
Rational euler_char_mgn(int g, int n);

}  // namespace tautkit

#endif
