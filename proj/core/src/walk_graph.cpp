#include "neckcut/walk_graph.hpp"

namespace neckcut {

MultiGraph build_walk_graph(const Necklace& necklace) {
    MultiGraph g(necklace.colour_count());
    const auto& order = necklace.component_order();
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        g.add_edge(order[i].colour, order[i + 1].colour);
    return g;
}

int separability(const Necklace& necklace, int vertex_limit) {
    return static_cast<int>(max_cut_bruteforce(build_walk_graph(necklace), vertex_limit).size);
}

int separability_direct(const Necklace& necklace, int vertex_limit) {
    int n = necklace.colour_count();
    if (n > vertex_limit)
        throw LimitExceeded("separability: colour count exceeds limit " +
                            std::to_string(vertex_limit));
    const auto& beads = necklace.beads();
    int best = 0;
    std::uint64_t masks = n >= 1 ? (1ull << (n - 1)) : 1;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        auto side = [&](ColourId c) { return c != 0 && ((mask >> (c - 1)) & 1); };
        int switches = 0;
        for (std::size_t i = 0; i + 1 < beads.size(); ++i)
            if (side(beads[i]) != side(beads[i + 1])) ++switches;
        best = std::max(best, switches);
    }
    return best;
}

bool is_necklace_irreducible(const Necklace& necklace) {
    int n = necklace.colour_count();
    if (n == 0 || necklace.bead_count() == 0) return false;
    for (ColourId c = 0; c < n; ++c)
        if (necklace.components(c).size() > 2) return false;
    const auto& order = necklace.component_order();
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (necklace.is_interval(order[i].colour) && necklace.is_interval(order[i + 1].colour))
            return false;
    if (necklace.is_interval(order.front().colour)) return false;
    if (necklace.is_interval(order.back().colour)) return false;
    return order.front().colour != order.back().colour;
}

Necklace necklace_from_walk(const std::vector<int>& walk, const std::vector<std::string>& names) {
    return Necklace::from_beads(walk, names);
}

int TraversalTable::colour_size(int vertex) const {
    int total = 0;
    for (int t : of_vertex[vertex]) total += traversals[t].width;
    return total;
}

LabelPack build_label_graph(const Necklace& necklace) {
    if (!is_necklace_irreducible(necklace))
        throw FormatError("label graph: necklace is not irreducible");

    int n = necklace.colour_count();
    const auto& order = necklace.component_order();
    int comps = static_cast<int>(order.size());
    bool odd = n % 2 == 1;

    LabelPack pack;
    LabelGraph& lg = pack.label_graph;
    lg.graph = MultiGraph(odd ? n + 1 : n);
    lg.first_colour = order.front().colour;
    lg.last_colour = order.back().colour;
    if (odd) lg.aux_vertex = n;

    // Gap edges between consecutive components, in necklace order.
    std::vector<int> gap_edge(comps - 1);
    for (int i = 0; i + 1 < comps; ++i)
        gap_edge[i] = lg.graph.add_edge(order[i].colour, order[i + 1].colour);

    int close_first, close_last;  // enter edge of first comp / leave edge of last comp
    if (odd) {
        close_first = lg.graph.add_edge(lg.first_colour, *lg.aux_vertex);
        close_last = lg.graph.add_edge(*lg.aux_vertex, lg.last_colour);
        lg.closure_edge_ids = {close_first, close_last};
    } else {
        close_first = close_last = lg.graph.add_edge(lg.first_colour, lg.last_colour);
        lg.closure_edge_ids = {close_first};
    }
    lg.is_closure.assign(lg.graph.edge_count(), 0);
    lg.gap_position.assign(lg.graph.edge_count(), -1);
    for (int id : lg.closure_edge_ids) lg.is_closure[id] = 1;
    for (int i = 0; i + 1 < comps; ++i) lg.gap_position[gap_edge[i]] = order[i].end;

    TraversalTable& tt = pack.traversal_table;
    tt.of_vertex.assign(lg.graph.vertex_count(), {});
    for (int i = 0; i < comps; ++i) {
        Traversal trav;
        trav.vertex = order[i].colour;
        trav.index = static_cast<int>(tt.of_vertex[trav.vertex].size());
        trav.enter_edge = i == 0 ? close_first : gap_edge[i - 1];
        trav.leave_edge = i == comps - 1 ? close_last : gap_edge[i];
        trav.width = order[i].size();
        trav.component = order[i];
        int id = static_cast<int>(tt.traversals.size());
        tt.traversals.push_back(trav);
        tt.of_vertex[trav.vertex].push_back(id);
        tt.necklace_order.push_back(id);
    }
    if (odd) {
        Traversal trav;
        trav.vertex = *lg.aux_vertex;
        trav.index = 0;
        trav.enter_edge = close_last;
        trav.leave_edge = close_first;
        trav.width = 0;
        int id = static_cast<int>(tt.traversals.size());
        tt.traversals.push_back(trav);
        tt.of_vertex[trav.vertex].push_back(id);
        tt.necklace_order.push_back(id);
    }
    return pack;
}

}  // namespace neckcut
