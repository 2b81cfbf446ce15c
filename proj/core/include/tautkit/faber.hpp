#ifndef TAUTKIT_FABER_HPP
#define TAUTKIT_FABER_HPP

#include "tautkit/partition.hpp"
#include "tautkit/rational.hpp"

#include <map>
#include <vector>

namespace tautkit {

/// The predicted socle coefficient
///   (2g-3+n)! (2g-1)!! / ((2g-1)! prod_j (2 d_j + 1)!!)
/// so that the kappa-monomial sum over S_n equals this multiple of
/// kappa_{g-2} in R^{g-2}(M_g).  The d_j are non-negative.
Rational faber_coeff(int g, const std::vector<int>& d);

/// Multiplicities of the kappa-monomials sum_{sigma in S_n} kappa_sigma,
/// where kappa_sigma has one index per cycle of sigma, the sum of the d_j on
/// that cycle.  Parts must be >= 1 (kappa_0 never appears); n <= 8.
std::map<Partition, Integer> faber_rhs(const std::vector<int>& d);

/// The same coefficient in the psi-class form: for alpha_j >= 2 with
/// sum alpha_j = g - 2 + n, pi_* psi^alpha = faber_taketwo_coeff * kappa_{g-2}.
/// Equals faber_coeff with d_j = alpha_j - 1.
Rational faber_taketwo_coeff(int g, const Partition& alpha);

/// Solves the socle evaluations: each degree g-2 kappa-monomial as an exact
/// multiple of kappa_{g-2}.  One linear equation per partition d |- (g-2)
/// with positive parts; g >= 2 (for g = 2 the answer is {() -> 1}).
std::map<Partition, Rational> kappa_solve(int g);

}  // namespace tautkit

#endif
