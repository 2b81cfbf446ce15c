#include "tautkit/invariance.hpp"

#include "tautkit/correlators.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tautkit {

void GraphSum::add(const DualGraph& g, const Rational& c) {
    if (c.is_zero()) return;
    std::vector<int> key = g.canonical_encoding();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::make_pair(g.canonicalized(), c));
        return;
    }
    it->second.second += c;
    if (it->second.second.is_zero()) terms_.erase(it);
}

GraphSum& GraphSum::operator+=(const GraphSum& other) {
    for (const auto& [key, term] : other.terms_) add(term.first, term.second);
    return *this;
}

GraphSum GraphSum::scaled(const Rational& c) const {
    GraphSum out;
    if (c.is_zero()) return out;
    for (const auto& [key, term] : terms_)
        out.terms_.emplace(key, std::make_pair(term.first, term.second * c));
    return out;
}

std::string GraphSum::json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [key, term] : terms_) {
        const DualGraph& g = term.first;
        nlohmann::ordered_json jg;
        jg["genus"] = g.genus;
        jg["legs"] = nlohmann::ordered_json::array();
        for (const auto& leg : g.legs)
            jg["legs"].push_back({{"vertex", leg.vertex}, {"psi", leg.psi}});
        jg["edges"] = nlohmann::ordered_json::array();
        for (const auto& e : g.edges)
            jg["edges"].push_back({{"u", e.u}, {"v", e.v}, {"du", e.du}, {"dv", e.dv}});
        terms.push_back({{"coeff", term.second.str()}, {"graph", jg}});
    }
    nlohmann::ordered_json root;
    root["terms"] = terms;
    return root.dump(2);
}

GraphSum GraphSum::from_json(const std::string& text) {
    nlohmann::json root = nlohmann::json::parse(text);
    GraphSum out;
    for (const auto& term : root.at("terms")) {
        const auto& jg = term.at("graph");
        DualGraph g;
        g.genus = jg.at("genus").get<std::vector<int>>();
        for (const auto& leg : jg.at("legs"))
            g.legs.push_back({leg.at("vertex").get<int>(),
                              leg.value("psi", 0)});
        if (jg.contains("edges"))
            for (const auto& e : jg.at("edges"))
                g.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                                   e.value("du", 0), e.value("dv", 0)});
        out.add(g, Rational::parse(term.at("coeff").get<std::string>()));
    }
    return out;
}

namespace {

// Exact degree of a dimension-0 connected decorated stratum via the gluing
// formula: the vertex integrals multiply and the automorphisms divide.  A
// per-vertex dimension mismatch integrates to 0, which silently disposes of
// zero classes such as a psi on a three-pointed rational vertex.
Rational stratum_degree(const DualGraph& g, IntersectionTable& table) {
    Rational prod(1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> exps;
        for (const auto& leg : g.legs)
            if (leg.vertex == v) exps.push_back(leg.psi);
        for (const auto& e : g.edges) {
            if (e.u == v) exps.push_back(e.du);
            if (e.v == v) exps.push_back(e.dv);
        }
        prod *= table.correlator(g.genus[v], exps);
        if (prod.is_zero()) return prod;
    }
    return prod / Rational(g.automorphism_count());
}

// Dimension-0 classes are determined by their degree, so every moduli type
// (g, n) gets one canonical representative: the first enumerated 0-dimensional
// stratum with nonzero degree (a trivalent rational tree / necklace).
struct ReduceContext {
    IntersectionTable table;
    std::map<std::pair<int, int>, std::pair<DualGraph, Rational>> points;

    const std::pair<DualGraph, Rational>& point_stratum(int g, int n) {
        auto key = std::make_pair(g, n);
        auto it = points.find(key);
        if (it != points.end()) return it->second;
        EnumerateOptions dim0;
        dim0.dim_filter = 0;
        for (const DualGraph& cand : enumerate_stable(g, n, dim0)) {
            Rational deg = stratum_degree(cand, table);
            if (!deg.is_zero())
                return points.emplace(key, std::make_pair(cand, deg)).first->second;
        }
        throw std::runtime_error("no point stratum with nonzero degree");
    }
};

// Normalizes one summand: components of negative dimension kill the term,
// and each dimension-0 component collapses to (its degree) times the
// canonical point stratum of the same moduli type.  Components of positive
// dimension stay as they are.  Returns false when the class is zero.
bool reduce_dimension_zero(DualGraph& g, Rational& coeff, ReduceContext& ctx) {
    const int V = g.vertex_count();
    std::vector<int> root(V);
    for (int v = 0; v < V; ++v) root[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const auto& e : g.edges) root[find(e.u)] = find(e.v);

    std::map<int, std::vector<int>> comps;  // root -> vertices
    for (int v = 0; v < V; ++v) comps[find(v)].push_back(v);

    std::vector<int> new_genus;
    std::vector<GraphEdge> new_edges;
    std::vector<GraphLeg> new_legs(g.leg_count());
    for (const auto& [r, verts] : comps) {
        std::vector<int> local(V, -1);
        DualGraph comp;
        for (int v : verts) {
            local[v] = comp.vertex_count();
            comp.genus.push_back(g.genus[v]);
        }
        std::vector<int> labels;  // leg indices of the ambient graph, in order
        for (int i = 0; i < g.leg_count(); ++i)
            if (local[g.legs[i].vertex] >= 0) {
                labels.push_back(i);
                comp.legs.push_back({local[g.legs[i].vertex], g.legs[i].psi});
            }
        for (const auto& e : g.edges)
            if (local[e.u] >= 0)
                comp.edges.push_back({local[e.u], local[e.v], e.du, e.dv});

        const int dim = comp.dimension();
        if (dim < 0) return false;
        if (dim == 0) {
            Rational deg = stratum_degree(comp, ctx.table);
            if (deg.is_zero()) return false;
            const auto& [point, point_deg] =
                ctx.point_stratum(comp.total_genus(), comp.leg_count());
            coeff *= deg / point_deg;
            comp = point;
        }
        const int base = static_cast<int>(new_genus.size());
        new_genus.insert(new_genus.end(), comp.genus.begin(), comp.genus.end());
        for (const auto& e : comp.edges)
            new_edges.push_back({base + e.u, base + e.v, e.du, e.dv});
        for (std::size_t i = 0; i < labels.size(); ++i)
            new_legs[labels[i]] = {base + comp.legs[i].vertex, comp.legs[i].psi};
    }
    g.genus = std::move(new_genus);
    g.edges = std::move(new_edges);
    g.legs = std::move(new_legs);
    return true;
}

}  // namespace

GraphSum rl_apply(const DualGraph& g, int l) {
    if (l < 1) throw std::invalid_argument("rl_apply needs l >= 1");
    const int n = g.leg_count();
    GraphSum out;
    ReduceContext ctx;
    auto emit = [&](DualGraph h, Rational c) {
        if (!h.stable()) return;
        if (reduce_dimension_zero(h, c, ctx)) out.add(h, c);
    };

    // 1. Edge-cutting: each directed edge (loops only once) is cut into
    // tails n+1 and n+2; psi^l lands on the start tail with sign +1 or on
    // the end tail with sign (-1)^{l-1}.
    const Rational end_sign(l % 2 == 1 ? 1 : -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const GraphEdge edge = g.edges[e];
        const bool loop = edge.u == edge.v;
        for (int dir = 0; dir < (loop ? 1 : 2); ++dir) {
            const int su = dir == 0 ? edge.u : edge.v;
            const int sv = dir == 0 ? edge.v : edge.u;
            const int ddu = dir == 0 ? edge.du : edge.dv;
            const int ddv = dir == 0 ? edge.dv : edge.du;
            for (int where = 0; where < 2; ++where) {
                DualGraph h = g;
                h.edges.erase(h.edges.begin() + e);
                h.legs.push_back({su, ddu + (where == 0 ? l : 0)});
                h.legs.push_back({sv, ddv + (where == 1 ? l : 0)});
                emit(h, where == 0 ? Rational(1) : end_sign);
            }
        }
    }

    // 2. Genus reduction: drop a vertex genus by one and attach both tails
    // there, decorated psi^m and psi^{l-1-m}, with sign (-1)^{m+1}.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.genus[v] < 1) continue;
        for (int m = 0; m <= l - 1; ++m) {
            DualGraph h = g;
            --h.genus[v];
            h.legs.push_back({v, m});
            h.legs.push_back({v, l - 1 - m});
            emit(h, Rational(m % 2 == 0 ? -1 : 1));
        }
    }

    // 3. Vertex-splitting: split a vertex with no new edge between the
    // halves (the curve may disconnect); tail n+1 goes to the first half,
    // n+2 to the second, decorated as in genus reduction.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::pair<int, int>> items;  // (leg, -1) or (edge, end)
        for (int i = 0; i < n; ++i)
            if (g.legs[i].vertex == v) items.emplace_back(i, -1);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edges[e].u == v) items.emplace_back(e, 0);
            if (g.edges[e].v == v) items.emplace_back(e, 1);
        }
        const int w = g.vertex_count();
        for (int g2 = 0; g2 <= g.genus[v]; ++g2) {
            for (unsigned mask = 0; mask < (1u << items.size()); ++mask) {
                for (int m = 0; m <= l - 1; ++m) {
                    DualGraph h = g;
                    h.genus[v] -= g2;
                    h.genus.push_back(g2);
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
                    h.legs.push_back({v, m});
                    h.legs.push_back({w, l - 1 - m});
                    emit(h, Rational(m % 2 == 0 ? -1 : 1));
                }
            }
        }
    }

    return out;
}

GraphSum rl_apply(const GraphSum& sum, int l) {
    GraphSum out;
    for (const auto& [key, term] : sum.terms())
        out += rl_apply(term.first, l).scaled(term.second);
    return out;
}

GraphSum cross_ratio_relation_m05() {
    auto divisor = [](std::initializer_list<int> first_side) {
        DualGraph g;
        g.genus = {0, 0};
        g.edges.push_back({0, 1, 0, 0});
        g.legs.assign(5, GraphLeg{1, 0});
        for (int i : first_side) g.legs[i - 1].vertex = 0;
        return g;
    };
    GraphSum sum;
    sum.add(divisor({1, 2}), Rational(1));
    sum.add(divisor({1, 2, 5}), Rational(1));
    sum.add(divisor({1, 3}), Rational(-1));
    sum.add(divisor({1, 3, 5}), Rational(-1));
    return sum;
}

}  // namespace tautkit
