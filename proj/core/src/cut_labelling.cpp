#include "neckcut/cut_labelling.hpp"

#include <algorithm>

namespace neckcut {

std::string IlpVariableSchema::var_name(int var) const {
    if (var < 2 * edge_count) {
        int e = var / 2;
        return (var % 2 == 0 ? "p_e" : "n_e") + std::to_string(e);
    }
    int rest = var - 2 * edge_count;
    int t = rest / 3;
    const char* tag[] = {"p_t", "n_t", "s_t"};
    return tag[rest % 3] + std::to_string(t);
}

IlpVariableSchema make_schema(const LabelGraph& lg, const TraversalTable& tt) {
    return IlpVariableSchema{lg.graph.edge_count(), tt.count()};
}

BinaryIlp build_ilp(const LabelGraph& lg, const TraversalTable& tt, const AlphaVector& alpha) {
    IlpVariableSchema sc = make_schema(lg, tt);
    BinaryIlp ilp;
    ilp.var_count = sc.var_count();

    auto add = [&](std::vector<std::pair<int, long long>> terms, Cmp cmp, long long bound) {
        ilp.constraints.push_back(LinearConstraint{std::move(terms), cmp, bound});
    };

    for (int e = 0; e < sc.edge_count; ++e)
        add({{sc.p_edge(e), 1}, {sc.n_edge(e), 1}}, Cmp::eq, 1);

    for (int t = 0; t < sc.traversal_count; ++t) {
        const Traversal& trav = tt.traversals[t];
        int pe1 = sc.p_edge(trav.enter_edge), pe2 = sc.p_edge(trav.leave_edge);
        int ne1 = sc.n_edge(trav.enter_edge), ne2 = sc.n_edge(trav.leave_edge);
        add({{sc.p_trav(t), 1}, {pe1, -1}}, Cmp::le, 0);
        add({{sc.p_trav(t), 1}, {pe2, -1}}, Cmp::le, 0);
        add({{pe1, 1}, {pe2, 1}, {sc.p_trav(t), -1}}, Cmp::le, 1);
        add({{sc.n_trav(t), 1}, {ne1, -1}}, Cmp::le, 0);
        add({{sc.n_trav(t), 1}, {ne2, -1}}, Cmp::le, 0);
        add({{ne1, 1}, {ne2, 1}, {sc.n_trav(t), -1}}, Cmp::le, 1);
        add({{sc.s_trav(t), 1}, {sc.p_trav(t), -1}, {sc.n_trav(t), -1}}, Cmp::eq, 0);
    }

    for (int v = 0; v < lg.graph.vertex_count(); ++v) {
        const auto& travs = tt.of_vertex[v];
        if (travs.size() == 1) {
            add({{sc.s_trav(travs[0]), 1}}, Cmp::eq, 0);
            continue;
        }
        if (travs.size() != 2)
            throw FormatError("cut labelling: vertex with more than two traversals");
        int t1 = travs[0], t2 = travs[1];
        long long w1 = tt.traversals[t1].width;
        long long w2 = tt.traversals[t2].width;
        long long size = w1 + w2;
        long long av = alpha[v];
        add({{sc.s_trav(t1), 1}, {sc.s_trav(t2), 1}}, Cmp::eq, 1);
        // n_{v,1}*w_v(2) + (1 - n_{v,1})*|C_v| >= alpha_v, and symmetrically.
        add({{sc.n_trav(t1), w2 - size}}, Cmp::ge, av - size);
        add({{sc.n_trav(t2), w1 - size}}, Cmp::ge, av - size);
        // p_{v,i}*w_v(i) + 1 <= alpha_v.
        add({{sc.p_trav(t1), w1}}, Cmp::le, av - 1);
        add({{sc.p_trav(t2), w2}}, Cmp::le, av - 1);
    }
    return ilp;
}

bool labelling_satisfies_conditions(const LabelGraph& lg, const TraversalTable& tt,
                                    const CutLabelling& labelling, const AlphaVector& alpha) {
    const MultiGraph& g = lg.graph;
    if (static_cast<int>(labelling.positive.size()) != g.edge_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int positive = 0;
        for (const auto& [e, other] : g.incident(v)) positive += labelling.positive[e] ? 1 : 0;
        if (positive != 1 && positive != 3) return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (lg.aux_vertex && v == *lg.aux_vertex) continue;
        int size = tt.colour_size(v);
        for (int t : tt.of_vertex[v]) {
            const Traversal& trav = tt.traversals[t];
            bool a = labelling.positive[trav.enter_edge];
            bool b = labelling.positive[trav.leave_edge];
            if (a && b && !(alpha[v] >= trav.width + 1)) return false;
            if (!a && !b && !(alpha[v] <= size - trav.width)) return false;
        }
    }
    return true;
}

namespace {

/// Cut component of each colour: the traversal whose two edges differ.
std::vector<const Traversal*> cut_components(const CutLabelling& labelling, const Necklace& necklace,
                                             const LabelGraph& lg, const TraversalTable& tt) {
    std::vector<const Traversal*> chosen(necklace.colour_count(), nullptr);
    for (int v = 0; v < necklace.colour_count(); ++v) {
        for (int t : tt.of_vertex[v]) {
            const Traversal& trav = tt.traversals[t];
            if (labelling.positive[trav.enter_edge] != labelling.positive[trav.leave_edge]) {
                if (chosen[v])
                    throw FormatError("labelling: colour " + necklace.colour_name(v) +
                                      " has two cut components");
                chosen[v] = &trav;
            }
        }
        if (!chosen[v])
            throw FormatError("labelling: colour " + necklace.colour_name(v) +
                              " has no cut component");
    }
    return chosen;
}

}  // namespace

Cut first_bead_cut(const CutLabelling& labelling, const Necklace& necklace, const LabelGraph& lg,
                   const TraversalTable& tt) {
    auto chosen = cut_components(labelling, necklace, lg, tt);
    Cut cut;
    cut.point.resize(necklace.colour_count());
    for (int v = 0; v < necklace.colour_count(); ++v) cut.point[v] = chosen[v]->component.start;
    return cut;
}

CutLabelling induced_labelling(const Cut& cut, const Necklace& necklace, const LabelGraph& lg) {
    validate_cut(necklace, cut);
    int n = necklace.colour_count();
    std::vector<BeadPos> sorted(cut.point);
    std::sort(sorted.begin(), sorted.end());
    CutEvaluation ev = evaluate_cut(necklace, cut);
    bool even_positive = ev.pi_sign == Parity::even;
    auto interval_positive = [&](int idx) { return (idx % 2 == 0) == even_positive; };

    CutLabelling out;
    out.positive.assign(lg.graph.edge_count(), 0);
    for (int e = 0; e < lg.graph.edge_count(); ++e) {
        if (lg.is_closure[e]) continue;
        // The gap (q, q+1) lies inside the interval whose index counts the
        // cut points at or before q.
        int q = lg.gap_position[e];
        int idx = static_cast<int>(std::upper_bound(sorted.begin(), sorted.end(), q) -
                                   sorted.begin());
        out.positive[e] = interval_positive(idx) ? 1 : 0;
    }
    if (lg.aux_vertex) {
        out.positive[lg.closure_edge_ids[0]] = interval_positive(0) ? 1 : 0;
        out.positive[lg.closure_edge_ids[1]] = interval_positive(n) ? 1 : 0;
    } else {
        out.positive[lg.closure_edge_ids[0]] = interval_positive(0) ? 1 : 0;
    }
    return out;
}

Cut labelling_to_cut(const CutLabelling& labelling, const Necklace& necklace, const LabelGraph& lg,
                     const TraversalTable& tt, const AlphaVector& alpha) {
    validate_alpha(necklace, alpha);
    auto chosen = cut_components(labelling, necklace, lg, tt);
    Cut cut = first_bead_cut(labelling, necklace, lg, tt);

    CutEvaluation ev = evaluate_cut(necklace, cut);
    std::vector<BeadPos> sorted(cut.point);
    std::sort(sorted.begin(), sorted.end());
    bool even_positive = ev.pi_sign == Parity::even;
    auto interval_positive = [&](int idx) { return (idx % 2 == 0) == even_positive; };

    // Sliding the cut point inside its component sweeps the colour's positive
    // count by one per bead; the direction depends on the side of the
    // interval left of the cut point. Other colours are unaffected.
    for (int v = 0; v < necklace.colour_count(); ++v) {
        const Component& comp = chosen[v]->component;
        int current = ev.alpha[v];
        if (current == alpha[v]) continue;
        int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), comp.start) -
                                    sorted.begin());
        bool left_positive = interval_positive(rank);
        BeadPos target;
        if (left_positive) {
            int fixed = current - 1;  // cut at start contributes 1 from the left
            target = comp.start + (alpha[v] - fixed) - 1;
        } else {
            int fixed = current - comp.size();  // cut at start holds the whole component
            target = comp.end - (alpha[v] - fixed) + 1;
        }
        if (target < comp.start || target > comp.end)
            throw FormatError("labelling: sweep infeasible for colour " + necklace.colour_name(v));
        cut.point[v] = target;
    }

    CutEvaluation check = evaluate_cut(necklace, cut);
    if (!(check.alpha == alpha))
        throw FormatError("labelling: resulting cut does not realise the requested alpha");
    return cut;
}

LabellingEnumeration solve_labelling_all(const LabelGraph& lg, const TraversalTable& tt,
                                         const Necklace& necklace, const AlphaVector& alpha) {
    validate_alpha(necklace, alpha);
    BinaryIlp ilp = build_ilp(lg, tt, alpha);
    IlpVariableSchema sc = make_schema(lg, tt);
    TreeDecomposition td = tree_decomposition_for_label_ilp(lg, tt, sc);
    EnumerationResult res = enumerate_feasible(ilp, td, 8);
    if (res.overflow || res.solutions.size() > 2)
        throw PromiseViolation("cut labelling: more than two feasible labellings");
    if (res.solutions.empty())
        throw PromiseViolation("cut labelling: infeasible for the requested alpha");

    LabellingEnumeration out;
    for (const auto& sol : res.solutions) {
        CutLabelling lab;
        lab.positive.resize(sc.edge_count);
        for (int e = 0; e < sc.edge_count; ++e) lab.positive[e] = sol[sc.p_edge(e)];
        out.feasible.push_back(std::move(lab));
    }
    for (std::size_t i = 0; i < out.feasible.size(); ++i) {
        Cut induced = first_bead_cut(out.feasible[i], necklace, lg, tt);
        if (induced_labelling(induced, necklace, lg) == out.feasible[i]) {
            if (out.chosen >= 0)
                throw MultiplicityError("cut labelling: two labellings induce their own cut");
            out.chosen = static_cast<int>(i);
        }
    }
    if (out.chosen < 0)
        throw PromiseViolation("cut labelling: no feasible labelling is induced by a cut");
    return out;
}

CutLabelling solve_labelling(const LabelGraph& lg, const TraversalTable& tt,
                             const Necklace& necklace, const AlphaVector& alpha) {
    LabellingEnumeration e = solve_labelling_all(lg, tt, necklace, alpha);
    return e.feasible[e.chosen];
}

namespace {

// Recovers the alternating interval/bicomponent cycle of the label graph.
struct CanonicalCycle {
    std::vector<int> intervals;
    std::vector<int> bicomps;  // bicomps[j] sits between intervals[j] and intervals[j+1]
};

CanonicalCycle canonical_cycle(const MultiGraph& g) {
    int k = g.vertex_count();
    std::vector<int> intervals, bicomps;
    for (int v = 0; v < k; ++v) {
        if (g.degree(v) == 2)
            intervals.push_back(v);
        else if (g.degree(v) == 4)
            bicomps.push_back(v);
        else
            throw FormatError("label graph: vertex of unexpected degree");
    }
    if (intervals.size() != bicomps.size() || k % 2 != 0)
        throw FormatError("label graph: not of the closed cycle-plus-chords shape");

    auto interval_nbrs = [&](int v) {
        std::vector<int> nbrs;
        for (const auto& [e, other] : g.incident(v))
            if (g.degree(other) == 2) nbrs.push_back(other);
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        return nbrs;
    };

    CanonicalCycle cycle;
    int half = static_cast<int>(intervals.size());
    int i0 = intervals[0];
    auto nbrs0 = g.incident(i0);
    int b = std::min(nbrs0[0].second, nbrs0[1].second);
    if (nbrs0[0].second == nbrs0[1].second)
        throw FormatError("label graph: interval with parallel edges");
    cycle.intervals.push_back(i0);
    cycle.bicomps.push_back(b);
    int prev_interval = i0;
    for (int step = 1; step < half; ++step) {
        auto ints = interval_nbrs(cycle.bicomps.back());
        if (ints.size() != 2) throw FormatError("label graph: bicomponent without two intervals");
        int next_interval = ints[0] == prev_interval ? ints[1] : ints[0];
        auto nbrs = g.incident(next_interval);
        int next_b = nbrs[0].second == cycle.bicomps.back() ? nbrs[1].second : nbrs[0].second;
        cycle.intervals.push_back(next_interval);
        cycle.bicomps.push_back(next_b);
        prev_interval = next_interval;
    }
    auto last_ints = interval_nbrs(cycle.bicomps.back());
    if (std::find(last_ints.begin(), last_ints.end(), i0) == last_ints.end())
        throw FormatError("label graph: cycle does not close");
    return cycle;
}

}  // namespace

LabelIlpDecomposition label_ilp_decomposition(const LabelGraph& lg, const TraversalTable& tt,
                                              const IlpVariableSchema& schema) {
    LabelIlpDecomposition out;

    CanonicalCycle cycle = canonical_cycle(lg.graph);
    int half = static_cast<int>(cycle.intervals.size());
    // One bag per interval with the two bicomponents around it; the
    // wrap-around bicomponent is pinned into every bag so its bag set stays
    // connected along the path.
    int pin = cycle.bicomps.back();
    for (int j = 0; j < half; ++j) {
        std::vector<int> bag{cycle.intervals[j], cycle.bicomps[(j + half - 1) % half],
                             cycle.bicomps[j], pin};
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        out.label_level.bags.push_back(std::move(bag));
        if (j > 0) out.label_level.tree_edges.emplace_back(j - 1, j);
    }

    out.traversal_groups = tt.of_vertex;
    out.traversal_level =
        compose_decomposition(out.label_level, out.traversal_groups, tt.count());

    out.variable_groups.resize(tt.count());
    for (int t = 0; t < tt.count(); ++t) {
        const Traversal& trav = tt.traversals[t];
        out.variable_groups[t] = {schema.p_edge(trav.enter_edge), schema.n_edge(trav.enter_edge),
                                  schema.p_edge(trav.leave_edge), schema.n_edge(trav.leave_edge),
                                  schema.p_trav(t), schema.n_trav(t), schema.s_trav(t)};
    }
    out.variable_level =
        compose_decomposition(out.traversal_level, out.variable_groups, schema.var_count());
    return out;
}

TreeDecomposition tree_decomposition_for_label_ilp(const LabelGraph& lg, const TraversalTable& tt,
                                                   const IlpVariableSchema& schema) {
    return label_ilp_decomposition(lg, tt, schema).variable_level;
}

CutPair solve_irreducible(const Necklace& necklace, const AlphaVector& alpha) {
    if (!is_necklace_irreducible(necklace))
        throw FormatError("irreducible solve: necklace is not irreducible");
    validate_alpha(necklace, alpha);
    LabelPack pack = build_label_graph(necklace);
    AlphaVector bar = complement_alpha(necklace, alpha);
    CutPair pair;
    pair.cut = labelling_to_cut(
        solve_labelling(pack.label_graph, pack.traversal_table, necklace, alpha), necklace,
        pack.label_graph, pack.traversal_table, alpha);
    pair.complement_cut = labelling_to_cut(
        solve_labelling(pack.label_graph, pack.traversal_table, necklace, bar), necklace,
        pack.label_graph, pack.traversal_table, bar);
    return pair;
}

}  // namespace neckcut
