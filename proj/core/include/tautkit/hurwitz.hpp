#ifndef TAUTKIT_HURWITZ_HPP
#define TAUTKIT_HURWITZ_HPP

#include "tautkit/partition.hpp"
#include "tautkit/permutation.hpp"
#include "tautkit/rational.hpp"

#include <functional>
#include <vector>

namespace tautkit {

/// A Hurwitz-number query: genus g covers of P^1 with profile alpha over
/// infinity and r = 2g + d + n - 2 further simple branch points.
struct HurwitzQuery {
    int g = 0;
    Partition alpha;
    bool connected = true;
};

/// Caps on the transposition-tuple enumeration; overridable from the CLI.
struct EnumerationCaps {
    int max_degree = 6;
    int max_branch_points = 10;
};

/// Callback receiving each accepted transposition tuple (used by property
/// tests that re-check the acceptance predicates on witnesses).
using TupleWitness = std::function<void(const std::vector<std::pair<int, int>>&)>;

/// Raw count of accepted tuples (sigma_1, ..., sigma_r): transpositions with
/// product in C(alpha), transitive when q.connected.  Does not divide by d!.
Integer hurwitz_tuple_count(const HurwitzQuery& q, const EnumerationCaps& caps = {},
                            const TupleWitness* witness = nullptr);

/// Same count, partitioned by the choice of sigma_1 (deterministic buckets
/// whose sum equals hurwitz_tuple_count).
std::vector<Integer> hurwitz_tuple_count_buckets(const HurwitzQuery& q,
                                                 const EnumerationCaps& caps = {});

/// H^g_alpha by brute-force enumeration: tuple count * #Aut(alpha) / d!.
Rational hurwitz_bruteforce(const HurwitzQuery& q, const EnumerationCaps& caps = {});

/// Hurwitz's closed form H^0_alpha = r! d^{n-3} prod alpha_i^{alpha_i}/alpha_i!.
/// d^{n-3} is a genuine rational when n < 3.
Rational hurwitz_genus0(const Partition& alpha);

/// H^g_alpha by exact counting in the class algebra of S_d: a transposition-
/// product DP gives the possibly-disconnected count, and an inclusion-
/// exclusion over the sheets sharing a component with sheet 0 recovers the
/// transitive count.  No enumeration, so no practical degree cap.
Rational hurwitz_classalg(const HurwitzQuery& q);

/// Genus g double Hurwitz number: profiles alpha over 0 and beta over
/// infinity (|alpha| = |beta| = d), r = 2g - 2 + l(alpha) + l(beta) simple
/// branch points, both profiles labeled.
Rational double_hurwitz_bruteforce(int g, const Partition& alpha, const Partition& beta,
                                   bool connected = true,
                                   const EnumerationCaps& caps = {});

/// Coefficient c with F^g_alpha = c * Z_{g,1}, from the join-cut recursion
/// with base case c(g, (1)) = 1.  Requires g >= 2.
Rational faber_hurwitz_coeff(int g, const Partition& alpha);

}  // namespace tautkit

#endif
