#include "tautkit/graphs.hpp"

#include "tautkit/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tautkit {

int DualGraph::valence(int v) const {
    int val = 0;
    for (const auto& leg : legs) val += (leg.vertex == v);
    for (const auto& e : edges) val += (e.u == v) + (e.v == v);
    return val;
}

int DualGraph::total_genus() const {
    int g = std::accumulate(genus.begin(), genus.end(), 0);
    return g + edge_count() - vertex_count() + 1;
}

int DualGraph::component_count() const {
    std::vector<int> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int c = vertex_count();
    for (const auto& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --c;
        }
    }
    return c;
}

bool DualGraph::stable() const {
    for (int v = 0; v < vertex_count(); ++v)
        if (2 * genus[v] - 2 + valence(v) <= 0) return false;
    return true;
}

int DualGraph::dimension() const {
    int dim = 0;
    for (int v = 0; v < vertex_count(); ++v) dim += 3 * genus[v] - 3 + valence(v);
    for (const auto& e : edges) dim -= e.du + e.dv;
    for (const auto& leg : legs) dim -= leg.psi;
    return dim;
}

namespace {

// Iso-invariant vertex signature; renumberings only permute vertices with
// equal signatures, which keeps the canonical-form search small.
std::vector<int> vertex_signature(const DualGraph& g, int v) {
    std::vector<int> sig{g.genus[v], g.valence(v)};
    std::vector<int> here;
    for (int i = 0; i < g.leg_count(); ++i)
        if (g.legs[i].vertex == v) {
            here.push_back(i);
            here.push_back(g.legs[i].psi);
        }
    sig.insert(sig.end(), here.begin(), here.end());
    return sig;
}

// Calls f with newindex[old vertex] = new vertex for every admissible
// renumbering.  Returns after f returns false.
void for_each_numbering(const DualGraph& g,
                        const std::function<bool(const std::vector<int>&)>& f) {
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int v = 0; v < g.vertex_count(); ++v)
        classes[vertex_signature(g, v)].push_back(v);

    std::vector<std::vector<int>> groups;
    for (auto& [sig, members] : classes) groups.push_back(members);

    std::vector<int> offset(groups.size());
    for (std::size_t i = 1; i < groups.size(); ++i)
        offset[i] = offset[i - 1] + static_cast<int>(groups[i - 1].size());

    std::vector<int> newindex(g.vertex_count());
    while (true) {
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (std::size_t p = 0; p < groups[i].size(); ++p)
                newindex[groups[i][p]] = offset[i] + static_cast<int>(p);
        if (!f(newindex)) return;
        std::size_t i = 0;
        while (i < groups.size() &&
               !std::next_permutation(groups[i].begin(), groups[i].end()))
            ++i;
        if (i == groups.size()) return;
    }
}

std::vector<int> encode(const DualGraph& g, const std::vector<int>& newindex) {
    std::vector<int> enc{g.vertex_count(), g.edge_count(), g.leg_count()};
    enc.resize(3 + g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) enc[3 + newindex[v]] = g.genus[v];
    for (const auto& leg : g.legs) {
        enc.push_back(newindex[leg.vertex]);
        enc.push_back(leg.psi);
    }
    std::vector<std::array<int, 4>> es;
    es.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        std::array<int, 4> t{newindex[e.u], e.du, newindex[e.v], e.dv};
        if (std::tie(t[0], t[1]) > std::tie(t[2], t[3])) {
            std::swap(t[0], t[2]);
            std::swap(t[1], t[3]);
        }
        es.push_back(t);
    }
    std::sort(es.begin(), es.end());
    for (const auto& t : es) enc.insert(enc.end(), t.begin(), t.end());
    return enc;
}

}  // namespace

std::vector<int> DualGraph::canonical_encoding() const {
    std::vector<int> best;
    for_each_numbering(*this, [&](const std::vector<int>& idx) {
        std::vector<int> enc = encode(*this, idx);
        if (best.empty() || enc < best) best = std::move(enc);
        return true;
    });
    return best;
}

DualGraph DualGraph::canonicalized() const {
    std::vector<int> best, bestidx;
    for_each_numbering(*this, [&](const std::vector<int>& idx) {
        std::vector<int> enc = encode(*this, idx);
        if (best.empty() || enc < best) {
            best = std::move(enc);
            bestidx = idx;
        }
        return true;
    });
    DualGraph out;
    out.genus.resize(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) out.genus[bestidx[v]] = genus[v];
    for (const auto& leg : legs) out.legs.push_back({bestidx[leg.vertex], leg.psi});
    for (const auto& e : edges) {
        GraphEdge ne{bestidx[e.u], bestidx[e.v], e.du, e.dv};
        if (std::tie(ne.u, ne.du) > std::tie(ne.v, ne.dv)) {
            std::swap(ne.u, ne.v);
            std::swap(ne.du, ne.dv);
        }
        out.edges.push_back(ne);
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) {
                  return std::tie(a.u, a.du, a.v, a.dv) < std::tie(b.u, b.du, b.v, b.dv);
              });
    return out;
}

Integer DualGraph::automorphism_count() const {
    std::vector<int> best;
    Integer hits = 0;
    for_each_numbering(*this, [&](const std::vector<int>& idx) {
        std::vector<int> enc = encode(*this, idx);
        if (best.empty() || enc < best) {
            best = std::move(enc);
            hits = 1;
        } else if (enc == best) {
            ++hits;
        }
        return true;
    });
    // Vertex symmetries times the edge symmetries invisible to renumbering:
    // interchangeable parallel edges and flippable loops.
    DualGraph canon = canonicalized();
    Integer count = hits;
    for (std::size_t i = 0; i < canon.edges.size();) {
        std::size_t j = i;
        while (j < canon.edges.size() && canon.edges[j] == canon.edges[i]) ++j;
        for (std::size_t m = 2; m <= j - i; ++m) count *= static_cast<long>(m);
        i = j;
    }
    for (const auto& e : canon.edges)
        if (e.u == e.v && e.du == e.dv) count *= 2;
    return count;
}

bool DualGraph::isomorphic(const DualGraph& other) const {
    return canonical_encoding() == other.canonical_encoding();
}

std::string DualGraph::dot() const {
    std::ostringstream out;
    out << "graph stratum {\n";
    for (int v = 0; v < vertex_count(); ++v)
        out << "  v" << v << " [label=\"g=" << genus[v] << "\"];\n";
    for (const auto& e : edges) {
        out << "  v" << e.u << " -- v" << e.v;
        if (e.du || e.dv) out << " [label=\"" << e.du << "|" << e.dv << "\"]";
        out << ";\n";
    }
    for (int i = 0; i < leg_count(); ++i) {
        out << "  l" << i << " [shape=plaintext,label=\"" << i + 1;
        if (legs[i].psi) out << " psi^" << legs[i].psi;
        out << "\"];\n  l" << i << " -- v" << legs[i].vertex << ";\n";
    }
    out << "}\n";
    return out.str();
}

DualGraph smooth_graph(int g, int n) {
    DualGraph d;
    d.genus = {g};
    d.legs.assign(n, GraphLeg{0, 0});
    return d;
}

namespace {

// All one-edge degenerations of a stable graph: genus drop with a new loop,
// or a vertex split with the incident half-edges distributed.
void degenerations(const DualGraph& g, std::vector<DualGraph>& out) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.genus[v] >= 1) {
            DualGraph h = g;
            --h.genus[v];
            h.edges.push_back({v, v, 0, 0});
            if (h.stable()) out.push_back(h);
        }
        // Incident items: legs, then edge ends (a loop contributes both ends).
        std::vector<std::pair<int, int>> items;  // (leg index, -1) or (edge, end)
        for (int i = 0; i < g.leg_count(); ++i)
            if (g.legs[i].vertex == v) items.emplace_back(i, -1);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edges[e].u == v) items.emplace_back(e, 0);
            if (g.edges[e].v == v) items.emplace_back(e, 1);
        }
        const int w = g.vertex_count();
        for (int g1 = 0; g1 <= g.genus[v]; ++g1) {
            for (unsigned mask = 0; mask < (1u << items.size()); ++mask) {
                DualGraph h = g;
                h.genus[v] -= g1;
                h.genus.push_back(g1);
                for (std::size_t t = 0; t < items.size(); ++t) {
                    if (!((mask >> t) & 1)) continue;
                    auto [idx, end] = items[t];
                    if (end < 0)
                        h.legs[idx].vertex = w;
                    else if (end == 0)
                        h.edges[idx].u = w;
                    else
                        h.edges[idx].v = w;
                }
                h.edges.push_back({v, w, 0, 0});
                if (h.stable()) out.push_back(h);
            }
        }
    }
}

std::vector<DualGraph> enumerate_connected(int g, int n) {
    std::vector<DualGraph> all;
    if (g < 0 || 2 * g - 2 + n <= 0) return all;
    std::map<std::vector<int>, DualGraph> level;
    DualGraph s = smooth_graph(g, n);
    level[s.canonical_encoding()] = s;
    while (!level.empty()) {
        std::map<std::vector<int>, DualGraph> next;
        for (const auto& [enc, gr] : level) {
            all.push_back(gr.canonicalized());
            std::vector<DualGraph> degs;
            degenerations(gr, degs);
            for (const DualGraph& d : degs) next.emplace(d.canonical_encoding(), d);
        }
        level = std::move(next);
    }
    return all;
}

void set_partitions(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            f(blocks);
            return;
        }
        for (auto& b : blocks) {
            b.push_back(i);
            rec(i + 1);
            b.pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

// Appends `comp` (with local leg labels) to `acc`, mapping leg j to
// labels[j].
void append_component(DualGraph& acc, const DualGraph& comp, const std::vector<int>& labels) {
    const int off = acc.vertex_count();
    acc.genus.insert(acc.genus.end(), comp.genus.begin(), comp.genus.end());
    for (const auto& e : comp.edges)
        acc.edges.push_back({e.u + off, e.v + off, e.du, e.dv});
    for (int j = 0; j < comp.leg_count(); ++j)
        acc.legs[labels[j]] = {comp.legs[j].vertex + off, comp.legs[j].psi};
}

}  // namespace

std::vector<DualGraph> enumerate_stable(int g, int n, const EnumerateOptions& opts) {
    if (n < 0) throw std::invalid_argument("negative leg count");
    if (3 * g - 3 + n > opts.max_complexity)
        throw ResourceCapError("graph enumeration cap is 3g-3+n <= " +
                               std::to_string(opts.max_complexity));

    std::map<std::vector<int>, DualGraph> found;
    auto admit = [&](const DualGraph& d) {
        if (opts.dim_filter >= 0 && d.dimension() != opts.dim_filter) return;
        found.emplace(d.canonical_encoding(), d.canonicalized());
    };

    if (!opts.disconnected) {
        for (const DualGraph& d : enumerate_connected(g, n)) admit(d);
    } else {
        std::map<std::pair<int, int>, std::vector<DualGraph>> pool;
        auto components = [&](int gc, int nc) -> const std::vector<DualGraph>& {
            auto key = std::make_pair(gc, nc);
            auto it = pool.find(key);
            if (it == pool.end())
                it = pool.emplace(key, enumerate_connected(gc, nc)).first;
            return it->second;
        };

        set_partitions(n, [&](const std::vector<std::vector<int>>& blocks) {
            const int k = static_cast<int>(blocks.size());
            // Legless components must have genus >= 2, each adding at least 1
            // to sum (g_c - 1) = g - 1; leg blocks each add at least -1.
            for (int extra = 0; extra <= std::max(0, g - 1 + k); ++extra) {
                const int comps = k + extra;
                if (comps == 0) continue;
                const int total = g - 1 + comps;  // sum of component genera
                // Distribute genera: blocks get >= 0, legless get >= 2.
                std::vector<int> gc(comps);
                std::function<void(int, int)> assign = [&](int i, int left) {
                    if (i == comps) {
                        if (left != 0) return;
                        // Every component must be stable on its own; checking
                        // up front avoids enumerating strata for genus
                        // assignments doomed by some other component.
                        for (int c = 0; c < comps; ++c) {
                            const int nc = c < k ? static_cast<int>(blocks[c].size()) : 0;
                            if (2 * gc[c] - 2 + nc <= 0) return;
                        }
                        DualGraph acc;
                        acc.legs.assign(n, GraphLeg{0, 0});
                        std::function<void(int)> pick = [&](int c) {
                            if (c == comps) {
                                if (acc.stable()) admit(acc);
                                return;
                            }
                            const std::vector<int> labels =
                                c < k ? blocks[c] : std::vector<int>{};
                            for (const DualGraph& comp :
                                 components(gc[c], static_cast<int>(labels.size()))) {
                                DualGraph saved = acc;
                                append_component(acc, comp, labels);
                                pick(c + 1);
                                acc = std::move(saved);
                            }
                        };
                        pick(0);
                        return;
                    }
                    const int lo = i < k ? 0 : 2;
                    for (int v = lo; v <= left; ++v) {
                        gc[i] = v;
                        assign(i + 1, left - v);
                    }
                };
                if (total >= 0) assign(0, total);
            }
        });
    }

    std::vector<DualGraph> out;
    std::map<int, std::map<std::vector<int>, DualGraph>> by_codim;
    for (auto& [enc, d] : found) by_codim[d.codim()].emplace(enc, d);
    for (auto& [c, m] : by_codim)
        for (auto& [enc, d] : m) out.push_back(std::move(d));
    return out;
}

}  // namespace tautkit
