#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neckcut/errors.hpp"
#include "neckcut/rng.hpp"

namespace neckcut {

/// Undirected multigraph edge with a stable identity: endpoints plus the
/// occurrence index among parallel edges of the same endpoint pair.
struct EdgeRec {
    int u = -1;
    int v = -1;
    int occurrence = 0;

    bool operator==(const EdgeRec&) const = default;
};

class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int vertex_count);

    int add_edge(int u, int v);  // returns the edge id

    int vertex_count() const { return static_cast<int>(incidence_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    const EdgeRec& edge(int id) const { return edges_[id]; }

    int degree(int v) const { return static_cast<int>(incidence_[v].size()); }
    /// Incident (edge id, other endpoint) pairs.
    const std::vector<std::pair<int, int>>& incident(int v) const { return incidence_[v]; }

    int multiplicity(int u, int v) const;
    bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

    bool connected() const;
    std::vector<int> odd_degree_vertices() const;

    /// Deduplicated endpoint pairs (u < v), sorted.
    std::vector<std::pair<int, int>> simple_edges() const;

private:
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<std::pair<int, int>>> incidence_;
};

struct MaxCutResult {
    long long size = 0;
    std::vector<char> side;  // side[v] in {0,1}
};

/// Exact max-cut over all bipartitions, edges counted with multiplicity.
/// Throws LimitExceeded above `vertex_limit`.
MaxCutResult max_cut_bruteforce(const MultiGraph& g, int vertex_limit = 24);

/// Exact value of m/2 + (n-1)/4 for a connected multigraph, as a reduced
/// fraction. A lower bound on the max-cut.
struct Rational {
    long long num = 0;
    long long den = 1;

    long long ceil_value() const;
    bool operator==(const Rational&) const = default;
};

Rational poljak_turzik_bound(const MultiGraph& g);

/// Cycle on [n] plus the path {2i-1, 2i+1} over the odd vertices: the walk
/// graph every irreducible necklace with n colours realises.
MultiGraph irreducible_necklace_graph(int n);

/// True iff g is connected with exactly two odd-degree vertices, all degrees
/// lie in {2,3,4}, no two degree-2 vertices are adjacent, and the max-cut is
/// at most the vertex count.
bool irreducible_graph_check(const MultiGraph& g, int max_cut_vertex_limit = 24);

/// Exact multigraph isomorphism by backtracking with degree pruning.
bool is_isomorphic(const MultiGraph& a, const MultiGraph& b, int vertex_limit = 16);

/// Eulerian path as a vertex visit sequence (edge count + 1 entries). Starts
/// at an odd-degree vertex when one exists. Optional rng randomises the walk.
std::vector<int> euler_path(const MultiGraph& g, Rng* rng = nullptr);

}  // namespace neckcut
