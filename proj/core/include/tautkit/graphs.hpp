#ifndef TAUTKIT_GRAPHS_HPP
#define TAUTKIT_GRAPHS_HPP

#include "tautkit/rational.hpp"

#include <string>
#include <vector>

namespace tautkit {

/// A node of the curve: an edge between vertices u and v (possibly equal,
/// i.e. a loop), carrying a psi decoration at each end.
struct GraphEdge {
    int u = 0, v = 0;
    int du = 0, dv = 0;
    bool operator==(const GraphEdge&) const = default;
};

/// A labeled marked point: which vertex carries it and its psi decoration.
struct GraphLeg {
    int vertex = 0;
    int psi = 0;
    bool operator==(const GraphLeg&) const = default;
};

/// Dual graph of a (possibly disconnected) nodal curve: genus-labeled
/// vertices, edges for nodes, legs for marked points, plus psi decorations.
class DualGraph {
public:
    std::vector<int> genus;   // per vertex
    std::vector<GraphEdge> edges;
    std::vector<GraphLeg> legs;  // index = leg label

    int vertex_count() const { return static_cast<int>(genus.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int leg_count() const { return static_cast<int>(legs.size()); }

    /// Legs plus edge ends at v (loops count twice).
    int valence(int v) const;

    /// sum g_v + E - V + 1; for a disconnected curve with components of
    /// genera g_c this is sum (g_c - 1) + 1 and may be negative.
    int total_genus() const;

    int component_count() const;
    bool connected() const { return component_count() == 1; }

    /// Every vertex satisfies 2 g_v - 2 + valence > 0.
    bool stable() const;

    /// Codimension of the stratum: the number of edges.
    int codim() const { return edge_count(); }

    /// sum_v (3 g_v - 3 + valence(v)) minus all psi decorations;
    /// equals 3g - 3 + n - E for connected undecorated graphs.
    int dimension() const;

    /// Label-invariant form: the lexicographically least serialization over
    /// the admissible vertex renumberings.  Equal encodings <=> isomorphic.
    std::vector<int> canonical_encoding() const;

    /// Puts the graph itself into canonical vertex order.
    DualGraph canonicalized() const;

    Integer automorphism_count() const;

    bool isomorphic(const DualGraph& other) const;

    std::string dot() const;
};

/// The codimension-0 graph: one genus g vertex carrying all n legs.
DualGraph smooth_graph(int g, int n);

struct EnumerateOptions {
    bool disconnected = false;
    int dim_filter = -1;    // -1: all dimensions
    int max_complexity = 8;  // cap on 3g - 3 + n
};

/// All isomorphism classes of stable dual graphs of genus g with n labeled
/// legs and no decorations, ordered by (codim, canonical encoding).
/// Connected graphs are found by repeated one-edge degeneration of the
/// smooth graph; disconnected ones by assembling stable components with
/// sum (g_c - 1) + 1 = g.
std::vector<DualGraph> enumerate_stable(int g, int n, const EnumerateOptions& opts = {});

}  // namespace tautkit

#endif
