#include "tautkit/hurwitz.hpp"

#include "tautkit/errors.hpp"
#include "tautkit/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tautkit {

namespace {

// Union-find over sheets, union by size, no path compression so that unions
// can be rolled back during the search.
struct Sheets {
    std::vector<int> parent, size;
    int components;
    // (absorbed root, its previous parent) -- size bump is implicit.
    std::vector<std::pair<int, int>> trail;

    explicit Sheets(int d) : parent(d), size(d, 1), components(d) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    // Returns true if a union actually happened (caller must undo() it later).
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size[ra] < size[rb]) std::swap(ra, rb);
        trail.emplace_back(rb, rb);
        parent[rb] = ra;
        size[ra] += size[rb];
        --components;
        return true;
    }

    void undo() {
        auto [child, self] = trail.back();
        trail.pop_back();
        size[find(child)] -= size[child];
        parent[child] = self;
        ++components;
    }
};

// Walks the cycle of `a` in the one-line word `p`; true iff `b` lies on it.
bool same_cycle(const std::vector<int>& p, int a, int b) {
    for (int x = p[a]; x != a; x = p[x])
        if (x == b) return true;
    return a == b;
}

void check_caps(int d, int r, const EnumerationCaps& caps) {
    if (d > caps.max_degree)
        throw ResourceCapError("enumeration degree " + std::to_string(d) +
                               " exceeds cap " + std::to_string(caps.max_degree));
    if (r > caps.max_branch_points)
        throw ResourceCapError("branch point count " + std::to_string(r) +
                               " exceeds cap " + std::to_string(caps.max_branch_points));
}

struct TupleSearch {
    int d, r;
    Partition target;
    bool connected;
    std::vector<std::pair<int, int>> trans;
    std::vector<int> p;      // running product, one-line
    int cycles;
    Sheets sheets;
    std::vector<std::pair<int, int>> chosen;
    const TupleWitness* witness = nullptr;

    TupleSearch(int d_, int r_, Partition target_, bool connected_)
        : d(d_), r(r_), target(std::move(target_)), connected(connected_),
          trans(all_transpositions(d_)), p(d_), cycles(d_), sheets(d_) {
        std::iota(p.begin(), p.end(), 0);
    }

    // Starts the product at `rho` and merges its cycles into the sheet
    // structure (used for double Hurwitz numbers).
    void seed(const PermWord& rho) {
        p = rho.entries;
        cycles = rho.cycle_count();
        for (int i = 0; i < d; ++i)
            if (p[i] != i) sheets.unite(i, p[i]);  // permanent, never undone
    }

    Integer count(int depth) {
        if (depth == r) {
            if (connected && sheets.components != 1) return 0;
            if (cycles != target.length()) return 0;
            PermWord w{p};
            if (w.cycle_type() != target) return 0;
            if (witness && *witness) (*witness)(chosen);
            return 1;
        }
        const int n = target.length();
        const int rem = r - depth - 1;
        Integer total = 0;
        for (auto [a, b] : trans) {
            const int nc = cycles + (same_cycle(p, a, b) ? 1 : -1);
            if (rem < std::abs(nc - n) || ((rem - (nc - n)) & 1)) continue;
            bool merged = sheets.unite(a, b);
            if (connected && rem < sheets.components - 1) {
                if (merged) sheets.undo();
                continue;
            }
            std::swap(p[a], p[b]);
            int oc = cycles;
            cycles = nc;
            if (witness) chosen.emplace_back(a, b);
            total += count(depth + 1);
            if (witness) chosen.pop_back();
            cycles = oc;
            std::swap(p[a], p[b]);
            if (merged) sheets.undo();
        }
        return total;
    }
};

}  // namespace

Integer hurwitz_tuple_count(const HurwitzQuery& q, const EnumerationCaps& caps,
                            const TupleWitness* witness) {
    if (q.alpha.empty()) throw std::invalid_argument("empty ramification profile");
    const int d = q.alpha.size();
    const int r = rh_branch_count(q.g, d, q.alpha.length());
    check_caps(d, r, caps);
    TupleSearch s(d, r, q.alpha, q.connected);
    s.witness = witness;
    return s.count(0);
}

std::vector<Integer> hurwitz_tuple_count_buckets(const HurwitzQuery& q,
                                                const EnumerationCaps& caps) {
    if (q.alpha.empty()) throw std::invalid_argument("empty ramification profile");
    const int d = q.alpha.size();
    const int r = rh_branch_count(q.g, d, q.alpha.length());
    check_caps(d, r, caps);
    if (r == 0) {
        TupleSearch s(d, 0, q.alpha, q.connected);
        return {s.count(0)};
    }
    const auto trans = all_transpositions(d);
    std::vector<Integer> buckets;
    buckets.reserve(trans.size());
    for (auto [a, b] : trans) {
        TupleSearch s(d, r, q.alpha, q.connected);
        std::swap(s.p[a], s.p[b]);
        s.cycles = d - 1;
        s.sheets.unite(a, b);
        buckets.push_back(s.count(1));
    }
    return buckets;
}

Rational hurwitz_bruteforce(const HurwitzQuery& q, const EnumerationCaps& caps) {
    const Integer tuples = hurwitz_tuple_count(q, caps);
    return Rational(tuples * aut_partition(q.alpha), factorial(q.alpha.size()));
}

Rational hurwitz_genus0(const Partition& alpha) {
    if (alpha.empty()) throw std::invalid_argument("empty ramification profile");
    const int d = alpha.size();
    const int n = alpha.length();
    Rational h(factorial(d + n - 2));
    if (n >= 3)
        h *= Rational(pow_int(d, n - 3));
    else
        h /= Rational(pow_int(d, 3 - n));
    for (int i = 0; i < n; ++i) {
        const int a = alpha[i];
        h *= Rational(pow_int(a, a), factorial(a));
    }
    return h;
}

Rational double_hurwitz_bruteforce(int g, const Partition& alpha, const Partition& beta,
                                   bool connected, const EnumerationCaps& caps) {
    if (alpha.empty() || beta.empty())
        throw std::invalid_argument("empty ramification profile");
    if (alpha.size() != beta.size())
        throw std::invalid_argument("profiles have different sizes");
    const int d = alpha.size();
    const int r = 2 * g - 2 + alpha.length() + beta.length();
    if (r < 0) return Rational(0);
    check_caps(d, r, caps);

    Integer tuples = 0;
    PermWord rho = PermWord::identity(d);
    std::vector<int> word = rho.entries;
    do {
        rho.entries = word;
        if (rho.cycle_type() != alpha) continue;
        TupleSearch s(d, r, beta, connected);
        s.seed(rho);
        tuples += s.count(0);
    } while (std::next_permutation(word.begin(), word.end()));

    return Rational(tuples * aut_partition(alpha) * aut_partition(beta), factorial(d));
}

namespace {

// Exact class-algebra transposition walk for one symmetric group S_e.
struct ClassWalk {
    int e;
    std::vector<Partition> classes;
    std::map<Partition, int> index;
    std::vector<std::vector<Integer>> step;    // step[c][c'] transition counts
    std::vector<std::vector<Integer>> counts;  // counts[r] = tuple counts by product type

    explicit ClassWalk(int e_) : e(e_), classes(Partition::all_of(e_)) {
        const int m = static_cast<int>(classes.size());
        for (int i = 0; i < m; ++i) index[classes[i]] = i;
        step.assign(m, std::vector<Integer>(m, 0));
        for (int c = 0; c < m; ++c) {
            // A representative of the class: cycles laid out consecutively.
            PermWord rep;
            rep.entries.reserve(e);
            int at = 0;
            for (int part : classes[c].parts()) {
                for (int k = 1; k < part; ++k) rep.entries.push_back(at + k);
                rep.entries.push_back(at);
                at += part;
            }
            for (auto [a, b] : all_transpositions(e)) {
                PermWord prod = rep.times_transposition(a, b);
                ++step[c][index[prod.cycle_type()]];
            }
        }
        counts.push_back(std::vector<Integer>(m, 0));
        counts[0][index[Partition(std::vector<int>(e, 1))]] = 1;
    }

    // Number of r-tuples of transpositions in S_e with product of type gamma.
    const Integer& tuples(const Partition& gamma, int r) {
        const int m = static_cast<int>(classes.size());
        while (static_cast<int>(counts.size()) <= r) {
            const auto& prev = counts.back();
            std::vector<Integer> next(m, 0);
            for (int c = 0; c < m; ++c) {
                if (prev[c] == 0) continue;
                for (int c2 = 0; c2 < m; ++c2)
                    if (step[c][c2] != 0) next[c2] += prev[c] * step[c][c2];
            }
            counts.push_back(std::move(next));
        }
        return counts[r][index.at(gamma)];
    }
};

struct ClassAlgContext {
    std::map<int, ClassWalk> walks;
    std::map<std::pair<Partition, int>, Integer> transitive_memo;

    ClassWalk& walk(int e) {
        auto it = walks.find(e);
        if (it == walks.end()) it = walks.emplace(e, ClassWalk(e)).first;
        return it->second;
    }

    // All nonempty proper sub-multisets of alpha.
    static std::vector<Partition> proper_subprofiles(const Partition& alpha) {
        std::vector<std::pair<int, int>> runs;  // (value, multiplicity)
        for (int part : alpha.parts()) {
            if (!runs.empty() && runs.back().first == part)
                ++runs.back().second;
            else
                runs.emplace_back(part, 1);
        }
        std::vector<Partition> out;
        std::vector<int> take(runs.size(), 0), parts;
        while (true) {
            int i = 0;
            while (i < static_cast<int>(runs.size()) && take[i] == runs[i].second)
                take[i++] = 0;
            if (i == static_cast<int>(runs.size())) break;
            ++take[i];
            parts.clear();
            int total = 0;
            for (size_t j = 0; j < runs.size(); ++j) {
                total += take[j];
                parts.insert(parts.end(), take[j], runs[j].first);
            }
            if (total < alpha.length()) out.push_back(Partition(parts));
        }
        return out;
    }

    // Multiset difference alpha \ beta (beta must embed in alpha).
    static Partition subtract(const Partition& alpha, const Partition& beta) {
        std::vector<int> parts = alpha.parts();
        for (int b : beta.parts()) {
            auto it = std::find(parts.begin(), parts.end(), b);
            parts.erase(it);
        }
        return Partition(std::move(parts));
    }

    // Tuples as above whose transpositions generate a transitive subgroup:
    // strip off, by inclusion-exclusion, the covers where the component of
    // sheet 0 has a strictly smaller profile.
    const Integer& transitive_tuples(const Partition& alpha, int r) {
        auto key = std::make_pair(alpha, r);
        auto it = transitive_memo.find(key);
        if (it != transitive_memo.end()) return it->second;
        const int d = alpha.size();
        Integer t = walk(d).tuples(alpha, r);
        for (const Partition& beta : proper_subprofiles(alpha)) {
            const Partition gamma = subtract(alpha, beta);
            const Integer sheet_choices = binomial(d - 1, beta.size() - 1);
            Integer mixed = 0;
            for (int r1 = 0; r1 <= r; ++r1) {
                const Integer& inner = transitive_tuples(beta, r1);
                if (inner == 0) continue;
                const Integer& outer = walk(gamma.size()).tuples(gamma, r - r1);
                if (outer == 0) continue;
                mixed += binomial(r, r1) * inner * outer;
            }
            t -= sheet_choices * mixed;
        }
        return transitive_memo.emplace(std::move(key), std::move(t)).first->second;
    }
};

}  // namespace

Rational hurwitz_classalg(const HurwitzQuery& q) {
    if (q.alpha.empty()) throw std::invalid_argument("empty ramification profile");
    const int d = q.alpha.size();
    const int r = rh_branch_count(q.g, d, q.alpha.length());
    ClassAlgContext ctx;
    const Integer tuples = q.connected ? ctx.transitive_tuples(q.alpha, r)
                                       : ctx.walk(d).tuples(q.alpha, r);
    return Rational(tuples * aut_partition(q.alpha), factorial(d));
}

Rational faber_hurwitz_coeff(int g, const Partition& alpha) {
    if (g < 2) throw std::invalid_argument("faber_hurwitz_coeff needs g >= 2");
    if (alpha.empty()) throw std::invalid_argument("empty ramification profile");

    std::map<Partition, Rational> memo;
    auto coeff = [&](auto&& self, const Partition& a) -> Rational {
        if (a.size() == 1) return Rational(1);
        auto it = memo.find(a);
        if (it != memo.end()) return it->second;

        const int d = a.size();
        const int l = a.length();
        Rational total(0);

        // Cut: one part splits into an ordered pair (i, j); i leaves on a
        // genus 0 cover together with a subset of the other parts, j stays
        // with the genus g cover.  The fixed simple branch points distribute
        // between the two sides.
        for (int k = 0; k < l; ++k) {
            const Partition rest = a.without(k);
            for (int i = 1; i < a[k]; ++i) {
                const int j = a[k] - i;
                for (unsigned mask = 0; mask < (1u << rest.length()); ++mask) {
                    std::vector<int> zero{i}, gee{j};
                    for (int t = 0; t < rest.length(); ++t)
                        ((mask >> t) & 1 ? zero : gee).push_back(rest[t]);
                    const Partition az(std::move(zero)), ag(std::move(gee));
                    total += Rational(Integer(i) * j) * hurwitz_genus0(az) *
                             self(self, ag) *
                             Rational(binomial(d + l - 2, az.size() + az.length() - 2));
                }
            }
        }

        // Join: two parts merge into one over the break.
        for (int p = 0; p < l; ++p)
            for (int q2 = p + 1; q2 < l; ++q2)
                total += self(self, a.without(q2).without(p).with(a[p] + a[q2]));

        // The genus g curve can also sit over the far component outright.
        Rational h0 = hurwitz_genus0(a);
        for (int i = 0; i < l; ++i)
            total += Rational(pow_int(a[i], 2 * g + 1)) * h0;

        memo[a] = total;
        return total;
    };
    return coeff(coeff, alpha);
}

}  // namespace tautkit
