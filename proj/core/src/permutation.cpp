#include "tautkit/permutation.hpp"

#include <numeric>

namespace tautkit {

PermWord PermWord::identity(int d) {
    PermWord p;
    p.entries.resize(d);
    std::iota(p.entries.begin(), p.entries.end(), 0);
    return p;
}

bool PermWord::valid() const {
    std::vector<bool> seen(entries.size(), false);
    for (int e : entries) {
        if (e < 0 || e >= degree() || seen[e]) return false;
        seen[e] = true;
    }
    return true;
}

PermWord PermWord::times_transposition(int a, int b) const {
    PermWord p = *this;
    std::swap(p.entries[a], p.entries[b]);
    return p;
}

PermWord PermWord::compose(const PermWord& first) const {
    PermWord p;
    p.entries.resize(entries.size());
    for (int i = 0; i < degree(); ++i) p.entries[i] = entries[first.entries[i]];
    return p;
}

Partition PermWord::cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(entries.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = entries[j];
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

int PermWord::cycle_count() const {
    int c = 0;
    std::vector<bool> seen(entries.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = entries[j]) seen[j] = true;
    }
    return c;
}

std::vector<std::pair<int, int>> all_transpositions(int d) {
    std::vector<std::pair<int, int>> t;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) t.emplace_back(a, b);
    return t;
}

}  // namespace tautkit
