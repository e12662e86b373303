#pragma once

#include <string>
#include <vector>

#include "neckcut/ilp_tw.hpp"
#include "neckcut/necklace.hpp"
#include "neckcut/walk_graph.hpp"

namespace neckcut {

/// Positive edge set of a label graph; the complement is negative.
struct CutLabelling {
    std::vector<char> positive;  // per edge id

    bool operator==(const CutLabelling&) const = default;
};

/// Variable layout of the cut-labelling ILP: p_e/n_e per edge, then
/// p/n/s per traversal. Bijective indexing.
struct IlpVariableSchema {
    int edge_count = 0;
    int traversal_count = 0;

    int p_edge(int e) const { return 2 * e; }
    int n_edge(int e) const { return 2 * e + 1; }
    int p_trav(int t) const { return 2 * edge_count + 3 * t; }
    int n_trav(int t) const { return 2 * edge_count + 3 * t + 1; }
    int s_trav(int t) const { return 2 * edge_count + 3 * t + 2; }
    int var_count() const { return 2 * edge_count + 3 * traversal_count; }

    std::string var_name(int var) const;
};

IlpVariableSchema make_schema(const LabelGraph& lg, const TraversalTable& tt);

/// Emits exactly the cut-labelling constraint families: edge label choice,
/// the six linearisations tying traversal variables to their edge pair,
/// s = p + n, the degree conditions on s, and for degree-4 vertices the four
/// alpha thresholds. The auxiliary vertex contributes the degree-2 row only.
BinaryIlp build_ilp(const LabelGraph& lg, const TraversalTable& tt, const AlphaVector& alpha);

/// The solution structure of a labelling solve: all ILP-feasible labellings
/// (1 or 2 on promise-satisfying inputs) and the index of the unique one
/// whose induced cut puts every positive edge on the positive side.
struct LabellingEnumeration {
    std::vector<CutLabelling> feasible;
    int chosen = -1;
};

LabellingEnumeration solve_labelling_all(const LabelGraph& lg, const TraversalTable& tt,
                                         const Necklace& necklace, const AlphaVector& alpha);

CutLabelling solve_labelling(const LabelGraph& lg, const TraversalTable& tt,
                             const Necklace& necklace, const AlphaVector& alpha);

/// Direct check of the traversal conditions: one or three positive edges per
/// vertex, and the component-size thresholds for uniformly labelled
/// traversals. Independent of the ILP route.
bool labelling_satisfies_conditions(const LabelGraph& lg, const TraversalTable& tt,
                                    const CutLabelling& labelling, const AlphaVector& alpha);

/// Picks the cut component of each colour (the traversal whose edges differ
/// in label), places the cut at its first bead, then sweeps it within the
/// component until the colour's positive count hits alpha exactly.
Cut labelling_to_cut(const CutLabelling& labelling, const Necklace& necklace,
                     const LabelGraph& lg, const TraversalTable& tt, const AlphaVector& alpha);

/// Labels each gap edge with the side of the interval it occupies under the
/// cut; the closure edge carries the shared label of the two unbounded
/// intervals (the two halves carry them separately when n is odd).
CutLabelling induced_labelling(const Cut& cut, const Necklace& necklace, const LabelGraph& lg);

/// Canonical cut for a labelling: cut components at their first beads.
Cut first_bead_cut(const CutLabelling& labelling, const Necklace& necklace, const LabelGraph& lg,
                   const TraversalTable& tt);

/// The hierarchical decomposition of the cut-labelling ILP: a width-<=3 path
/// over the label graph, expanded through traversal groups (width <= 7) and
/// traversal variable blocks (width <= 55).
struct LabelIlpDecomposition {
    TreeDecomposition label_level;
    TreeDecomposition traversal_level;
    TreeDecomposition variable_level;
    std::vector<std::vector<int>> traversal_groups;  // per label vertex
    std::vector<std::vector<int>> variable_groups;   // per traversal
};

LabelIlpDecomposition label_ilp_decomposition(const LabelGraph& lg, const TraversalTable& tt,
                                              const IlpVariableSchema& schema);

TreeDecomposition tree_decomposition_for_label_ilp(const LabelGraph& lg, const TraversalTable& tt,
                                                   const IlpVariableSchema& schema);

struct CutPair {
    Cut cut;
    Cut complement_cut;
};

/// Both cuts of an irreducible instance via independent labelling solves for
/// alpha and its complement.
CutPair solve_irreducible(const Necklace& necklace, const AlphaVector& alpha);

}  // namespace neckcut
