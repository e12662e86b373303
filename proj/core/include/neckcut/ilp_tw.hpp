#pragma once

#include <utility>
#include <vector>

#include "neckcut/errors.hpp"

namespace neckcut {

enum class Cmp { le, eq, ge };

/// Sparse linear constraint over binary variables.
struct LinearConstraint {
    std::vector<std::pair<int, long long>> terms;  // (variable, coefficient)
    Cmp cmp = Cmp::eq;
    long long bound = 0;
};

/// Feasibility instance over {0,1} variables. Every variable must appear in
/// at least one constraint.
struct BinaryIlp {
    int var_count = 0;
    std::vector<LinearConstraint> constraints;
};

void validate_ilp(const BinaryIlp& ilp);

/// Simple graph; also used for enhanced graphs, whose vertices stand for
/// hypervertices.
struct PrimalGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // sorted, unique, u < v
};

/// Variable co-occurrence graph: each constraint's variable set is a clique.
PrimalGraph primal_graph(const BinaryIlp& ilp);

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;            // sorted vertex lists
    std::vector<std::pair<int, int>> tree_edges;   // |bags| - 1 of them

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
};

/// Checks that the tree is a tree and the three decomposition conditions:
/// bags cover all vertices, every edge fits in some bag, and each vertex's
/// bag set induces a connected subtree.
bool validate_tree_decomposition(const TreeDecomposition& td, const PrimalGraph& graph);

/// Hypervertices covering a base graph; edges between hypervertices that
/// share a vertex or are joined by a base edge.
struct EnhancedGraph {
    std::vector<std::vector<int>> hypervertices;
    PrimalGraph graph;  // on hypervertex indices
};

/// With skip_covered_edges, base edges lying entirely inside some
/// hypervertex induce no hypervertex adjacency: the quotient view used by
/// the hierarchical label-ILP construction. Decompositions valid for either
/// variant compose soundly.
EnhancedGraph enhanced_graph(const PrimalGraph& base, std::vector<std::vector<int>> hypervertices,
                             bool skip_covered_edges = false);

/// Expands a decomposition of an enhanced graph into one of the base graph:
/// same tree, each bag replaced by the union of its hypervertex contents.
/// Width is at most w * (width(td) + 1) - 1 for hypervertices of size <= w.
TreeDecomposition compose_decomposition(const TreeDecomposition& td,
                                        const std::vector<std::vector<int>>& hypervertices,
                                        int base_vertex_count);

struct EnumerationResult {
    std::vector<std::vector<char>> solutions;  // each of size var_count
    bool overflow = false;                     // more than `cap` solutions exist
};

/// All feasible 0/1 assignments, up to `cap`, by dynamic programming over the
/// decomposition. Partial assignments are filtered at every node whose bag
/// contains a constraint's full variable set; such a node exists for each
/// constraint because constraint variable sets are primal cliques.
EnumerationResult enumerate_feasible(const BinaryIlp& ilp, const TreeDecomposition& td,
                                     long long cap);

}  // namespace neckcut
