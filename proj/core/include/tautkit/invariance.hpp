#ifndef TAUTKIT_INVARIANCE_HPP
#define TAUTKIT_INVARIANCE_HPP

#include "tautkit/graphs.hpp"
#include "tautkit/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tautkit {

/// Formal rational combination of decorated dual graphs, stored by canonical
/// form; terms with coefficient 0 are dropped, so zero() means the empty sum.
class GraphSum {
public:
    void add(const DualGraph& g, const Rational& c);

    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const std::map<std::vector<int>, std::pair<DualGraph, Rational>>& terms() const {
        return terms_;
    }

    GraphSum& operator+=(const GraphSum& other);
    GraphSum scaled(const Rational& c) const;

    std::string json() const;
    static GraphSum from_json(const std::string& text);

private:
    std::map<std::vector<int>, std::pair<DualGraph, Rational>> terms_;
};

/// Y.-P. Lee's degree -l operator: sends a genus g, n-leg decorated graph to
/// a combination of genus g-1, (n+2)-leg graphs via edge-cutting, genus
/// reduction and vertex-splitting (splitting may disconnect the curve).
/// Unstable summands are discarded, and each summand is normalized through
/// the dimension-0 base case: a connected component of dimension 0 is
/// determined by its degree alone, so it is replaced by that exact degree
/// times a canonical point stratum (components of negative dimension are
/// zero classes and kill the summand).
GraphSum rl_apply(const DualGraph& g, int l);
GraphSum rl_apply(const GraphSum& sum, int l);

/// The pullback to Mbar_{0,5} of the four-point cross-ratio relation:
/// D_{12|345} + D_{125|34} - D_{13|245} - D_{135|24}, a rational equivalence
/// that every r_l must annihilate.
GraphSum cross_ratio_relation_m05();

}  // namespace tautkit

#endif
