#ifndef TAUTKIT_HODGE_HPP
#define TAUTKIT_HODGE_HPP

#include "tautkit/interpolate.hpp"
#include "tautkit/partition.hpp"
#include "tautkit/rational.hpp"

#include <map>
#include <vector>

namespace tautkit {

/// One Hodge integral int_{Mbar_{g,n}} psi_1^{a_1} ... psi_n^{a_n} lambda_k.
struct HodgeIntegral {
    int g = 0;
    std::vector<int> psi_exps;
    int k = 0;
    Rational value;
};

/// The polynomial P_{g,n} with H^g_x = r! prod(x_i^{x_i}/x_i!) P_{g,n}(x),
/// recovered exactly by sampling Hurwitz numbers on compositions of
/// increasing total degree and interpolating within the degree window
/// [2g-3+n, 3g-3+n].  Samples use tuple enumeration when cheap and the
/// class-algebra evaluation otherwise.  Requires (g,n) stable.
std::map<ExponentVector, Rational> hurwitz_polynomial(int g, int n);

/// All int psi^a lambda_k with |a| + k = 3g-3+n, read off the coefficients
/// of hurwitz_polynomial: coeff(a) = (-1)^k <psi^a lambda_k>.  Zero integrals
/// are included.
std::vector<HodgeIntegral> hodge_from_hurwitz(int g, int n);

/// H^g_alpha assembled from a Hodge integral table for (g, l(alpha)):
/// r! prod(alpha_i^{alpha_i}/alpha_i!) sum_{a,k} (-1)^k <psi^a lambda_k>
/// prod alpha_i^{a_i}.
Rational elsv_forward(int g, const Partition& alpha,
                      const std::vector<HodgeIntegral>& table);

}  // namespace tautkit

#endif
