#pragma once

#include <optional>

#include "neckcut/multigraph.hpp"
#include "neckcut/necklace.hpp"

namespace neckcut {

/// One vertex per colour, one edge per adjacent bead pair of distinct
/// colours. Linear in the bead count.
MultiGraph build_walk_graph(const Necklace& necklace);

/// Separability via the max-cut of the walk graph.
int separability(const Necklace& necklace, int vertex_limit = 24);

/// Separability straight from the definition: maximum over colour subsets A
/// of the number of adjacent bead pairs with colours on opposite sides of
/// (A, complement). Cross-check oracle for `separability`.
int separability_direct(const Necklace& necklace, int vertex_limit = 24);

/// Structural irreducibility: at most two components per colour, no
/// neighbouring intervals, first/last components non-interval and of
/// different colours.
bool is_necklace_irreducible(const Necklace& necklace);

/// One bead per vertex visit of a walk.
Necklace necklace_from_walk(const std::vector<int>& walk, const std::vector<std::string>& names);

/// Walk graph of an irreducible necklace plus a closure tying the two ends:
/// a closure edge between the first- and last-component colours when n is
/// even, or a subdivision vertex of degree 2 spliced between them when n is
/// odd.
struct LabelGraph {
    MultiGraph graph;                 // colours, plus the auxiliary vertex last when n is odd
    std::optional<int> aux_vertex;
    std::vector<int> closure_edge_ids;  // one edge, or the two halves around aux
    std::vector<char> is_closure;       // per edge id
    std::vector<int> gap_position;      // per edge id: the gap spans beads (q, q+1); -1 for closure
    int first_colour = -1;
    int last_colour = -1;
};

/// The pair of edges entering and leaving one component of a colour. The
/// closure edge (or its first half) enters the first component of the
/// necklace; the closure edge (or its second half) leaves the last one. The
/// auxiliary vertex owns one traversal with no beads.
struct Traversal {
    int vertex = -1;
    int index = 0;  // i-th component of the colour, 0-based
    int enter_edge = -1;
    int leave_edge = -1;
    int width = 0;  // component size; 0 for the auxiliary vertex
    Component component;
};

struct TraversalTable {
    std::vector<Traversal> traversals;
    std::vector<std::vector<int>> of_vertex;  // vertex -> traversal ids, component order
    std::vector<int> necklace_order;          // traversal ids in component position order

    int count() const { return static_cast<int>(traversals.size()); }
    /// Total beads of the colour behind a vertex (0 for the auxiliary one).
    int colour_size(int vertex) const;
};

struct LabelPack {
    LabelGraph label_graph;
    TraversalTable traversal_table;
};

/// Requires an irreducible necklace.
LabelPack build_label_graph(const Necklace& necklace);

}  // namespace neckcut
