#ifndef TAUTKIT_PERMUTATION_HPP
#define TAUTKIT_PERMUTATION_HPP

#include "tautkit/partition.hpp"

#include <utility>
#include <vector>

namespace tautkit {

/// Element of S_d in one-line notation: entries is a bijection of {0..d-1}.
struct PermWord {
    std::vector<int> entries;

    static PermWord identity(int d);
    bool valid() const;
    int degree() const { return static_cast<int>(entries.size()); }

    /// (a b) applied first, then this:  result = this * (a b).
    PermWord times_transposition(int a, int b) const;
    PermWord compose(const PermWord& first) const;  // this after `first`

    Partition cycle_type() const;
    int cycle_count() const;

    bool operator==(const PermWord&) const = default;
};

/// All transpositions (a,b), a < b, of S_d.
std::vector<std::pair<int, int>> all_transpositions(int d);

}  // namespace tautkit

#endif
