#ifndef TAUTKIT_CORRELATORS_HPP
#define TAUTKIT_CORRELATORS_HPP

#include "tautkit/rational.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace tautkit {

/// Key for <tau_{k_1} ... tau_{k_n}>_g; exponents kept sorted descending.
struct CorrelatorKey {
    int g = 0;
    std::vector<int> exps;
    auto operator<=>(const CorrelatorKey&) const = default;
};

/// <tau_{k_1} ... tau_{k_n}>_0 = (n-3)! / prod k_i!  when sum k_i = n - 3,
/// and 0 otherwise (n >= 3).
Rational psi_genus0(const std::vector<int>& exps);

/// Memoized table of psi-class top intersections on Mbar_{g,n}, driven by the
/// KdV / Virasoro constraints on the Witten-Kontsevich partition function:
/// dimension gate, genus 0 closed form, <tau_1>_1 = 1/24, string and dilaton
/// reductions, and the n-point recursion on the largest exponent.
class IntersectionTable {
public:
    /// <tau_{k_1} ... tau_{k_n}>_g.  Order of exps does not matter.
    Rational correlator(int g, std::vector<int> exps);

    std::size_t size() const { return memo_.size(); }

    /// Cache format: one entry per line, "g;k1,...,kn;p/q".
    void save(std::ostream& out) const;
    void load(std::istream& in);
    void save_file(const std::string& path) const;
    bool load_file(const std::string& path);

private:
    Rational compute(int g, const std::vector<int>& exps);
    std::map<CorrelatorKey, Rational> memo_;
};

}  // namespace tautkit

#endif
