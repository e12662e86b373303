#include "neckcut/ilp_tw.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace neckcut {

namespace {

void sort_unique(std::vector<std::pair<int, int>>& edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<int> constraint_vars(const LinearConstraint& c) {
    std::vector<int> vars;
    vars.reserve(c.terms.size());
    for (const auto& [v, coeff] : c.terms) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

}  // namespace

void validate_ilp(const BinaryIlp& ilp) {
    std::vector<char> referenced(ilp.var_count, 0);
    for (const auto& c : ilp.constraints) {
        for (const auto& [v, coeff] : c.terms) {
            if (v < 0 || v >= ilp.var_count)
                throw FormatError("ilp: variable index out of range");
            referenced[v] = 1;
        }
    }
    for (int v = 0; v < ilp.var_count; ++v)
        if (!referenced[v])
            throw FormatError("ilp: variable " + std::to_string(v) + " appears in no constraint");
}

PrimalGraph primal_graph(const BinaryIlp& ilp) {
    validate_ilp(ilp);
    PrimalGraph g;
    g.vertex_count = ilp.var_count;
    for (const auto& c : ilp.constraints) {
        auto vars = constraint_vars(c);
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                g.edges.emplace_back(vars[i], vars[j]);
    }
    sort_unique(g.edges);
    return g;
}

int TreeDecomposition::width() const {
    int largest = 0;
    for (const auto& bag : bags) largest = std::max(largest, static_cast<int>(bag.size()));
    return largest - 1;
}

bool validate_tree_decomposition(const TreeDecomposition& td, const PrimalGraph& graph) {
    int nodes = td.node_count();
    if (nodes == 0) return graph.vertex_count == 0;
    if (static_cast<int>(td.tree_edges.size()) != nodes - 1) return false;

    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    {
        std::vector<char> seen(nodes, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++visited;
                    stack.push_back(y);
                }
        }
        if (visited != nodes) return false;  // not a tree
    }

    std::vector<std::vector<int>> holding(graph.vertex_count);
    for (int x = 0; x < nodes; ++x) {
        for (int v : td.bags[x]) {
            if (v < 0 || v >= graph.vertex_count) return false;
            holding[v].push_back(x);
        }
    }
    for (int v = 0; v < graph.vertex_count; ++v)
        if (holding[v].empty()) return false;  // condition 1

    for (auto [u, v] : graph.edges) {  // condition 2
        bool found = false;
        for (int x : holding[u]) {
            if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }

    for (int v = 0; v < graph.vertex_count; ++v) {  // condition 3
        std::vector<char> in_set(nodes, 0);
        for (int x : holding[v]) in_set[x] = 1;
        std::vector<int> stack{holding[v][0]};
        std::vector<char> seen(nodes, 0);
        seen[holding[v][0]] = 1;
        std::size_t visited = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (in_set[y] && !seen[y]) {
                    seen[y] = 1;
                    ++visited;
                    stack.push_back(y);
                }
        }
        if (visited != holding[v].size()) return false;
    }
    return true;
}

namespace {

void check_cover(const std::vector<std::vector<int>>& hypervertices, int base_vertex_count,
                 const char* who) {
    std::vector<char> covered(base_vertex_count, 0);
    for (const auto& hv : hypervertices) {
        for (int v : hv) {
            if (v < 0 || v >= base_vertex_count)
                throw FormatError(std::string(who) + ": hypervertex element out of range");
            covered[v] = 1;
        }
    }
    for (int v = 0; v < base_vertex_count; ++v)
        if (!covered[v])
            throw FormatError(std::string(who) + ": hypervertices do not cover vertex " +
                              std::to_string(v));
}

}  // namespace

EnhancedGraph enhanced_graph(const PrimalGraph& base, std::vector<std::vector<int>> hypervertices,
                             bool skip_covered_edges) {
    check_cover(hypervertices, base.vertex_count, "enhanced graph");
    EnhancedGraph eg;
    eg.hypervertices = std::move(hypervertices);
    eg.graph.vertex_count = static_cast<int>(eg.hypervertices.size());

    std::vector<std::vector<int>> owner(base.vertex_count);
    for (int i = 0; i < eg.graph.vertex_count; ++i)
        for (int v : eg.hypervertices[i]) owner[v].push_back(i);

    for (int v = 0; v < base.vertex_count; ++v)
        for (std::size_t a = 0; a < owner[v].size(); ++a)
            for (std::size_t b = a + 1; b < owner[v].size(); ++b)
                if (owner[v][a] != owner[v][b]) eg.graph.edges.emplace_back(owner[v][a], owner[v][b]);

    for (auto [u, v] : base.edges) {
        if (skip_covered_edges) {
            bool covered = false;
            for (int i : owner[u])
                for (int j : owner[v])
                    if (i == j) covered = true;
            if (covered) continue;
        }
        for (int i : owner[u])
            for (int j : owner[v])
                if (i != j) eg.graph.edges.emplace_back(i, j);
    }

    sort_unique(eg.graph.edges);
    return eg;
}

TreeDecomposition compose_decomposition(const TreeDecomposition& td,
                                        const std::vector<std::vector<int>>& hypervertices,
                                        int base_vertex_count) {
    check_cover(hypervertices, base_vertex_count, "compose decomposition");
    TreeDecomposition out;
    out.tree_edges = td.tree_edges;
    out.bags.reserve(td.bags.size());
    for (const auto& bag : td.bags) {
        std::vector<int> expanded;
        for (int hv : bag) {
            if (hv < 0 || hv >= static_cast<int>(hypervertices.size()))
                throw FormatError("compose decomposition: bag references unknown hypervertex");
            expanded.insert(expanded.end(), hypervertices[hv].begin(), hypervertices[hv].end());
        }
        std::sort(expanded.begin(), expanded.end());
        expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
        out.bags.push_back(std::move(expanded));
    }
    return out;
}

namespace {

// Per-node DP table: separator assignment -> extension assignments over the
// node's subtree variables beyond the separator.
struct PieceList {
    std::vector<std::vector<char>> pieces;
    bool truncated = false;
};

struct NodeData {
    std::vector<int> children;
    int parent = -1;
    std::vector<int> bag;
    std::vector<int> sep;        // bag intersected with the parent bag
    std::vector<int> own;        // bag \ sep
    std::vector<int> ext_vars;   // own + children ext vars, fixed layout
    std::vector<int> active;     // constraints fully inside the bag
    std::unordered_map<std::string, PieceList> table;
};

struct ConstraintState {
    const LinearConstraint* c;
    long long min_sum = 0;
    long long max_sum = 0;

    bool violated(long long bound, Cmp cmp) const {
        switch (cmp) {
            case Cmp::le: return min_sum > bound;
            case Cmp::ge: return max_sum < bound;
            case Cmp::eq: return min_sum > bound || max_sum < bound;
        }
        return false;
    }
};

}  // namespace

EnumerationResult enumerate_feasible(const BinaryIlp& ilp, const TreeDecomposition& td,
                                     long long cap) {
    if (cap < 1) throw FormatError("enumerate: cap must be >= 1");
    PrimalGraph primal = primal_graph(ilp);
    if (!validate_tree_decomposition(td, primal))
        throw FormatError("enumerate: tree decomposition invalid for the primal graph");

    // Constant constraints never touch a variable, so the DP would not see
    // them; an unsatisfiable one empties the feasible set outright.
    for (const auto& c : ilp.constraints) {
        if (!c.terms.empty()) continue;
        bool ok = (c.cmp == Cmp::le && 0 <= c.bound) || (c.cmp == Cmp::ge && 0 >= c.bound) ||
                  (c.cmp == Cmp::eq && c.bound == 0);
        if (!ok) return EnumerationResult{};
    }

    int nodes = td.node_count();
    std::vector<NodeData> data(nodes);
    {
        std::vector<std::vector<int>> adj(nodes);
        for (auto [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> order{0};
        data[0].parent = -1;
        std::vector<char> seen(nodes, 0);
        seen[0] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int x = order[i];
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    data[y].parent = x;
                    data[x].children.push_back(y);
                    order.push_back(y);
                }
        }
        for (int x = 0; x < nodes; ++x) data[x].bag = td.bags[x];
    }

    for (int x = 0; x < nodes; ++x) {
        NodeData& nd = data[x];
        if (nd.parent >= 0) {
            const auto& pb = data[nd.parent].bag;
            for (int v : nd.bag)
                if (std::binary_search(pb.begin(), pb.end(), v)) nd.sep.push_back(v);
        }
        for (int v : nd.bag)
            if (!std::binary_search(nd.sep.begin(), nd.sep.end(), v)) nd.own.push_back(v);
    }

    // A constraint is checked at every node whose bag contains all its
    // variables; at least one exists since the variables form a clique.
    std::vector<char> placed(ilp.constraints.size(), 0);
    for (int x = 0; x < nodes; ++x) {
        for (std::size_t ci = 0; ci < ilp.constraints.size(); ++ci) {
            bool inside = true;
            for (const auto& [v, coeff] : ilp.constraints[ci].terms)
                if (!std::binary_search(data[x].bag.begin(), data[x].bag.end(), v)) {
                    inside = false;
                    break;
                }
            if (inside) {
                data[x].active.push_back(static_cast<int>(ci));
                placed[ci] = 1;
            }
        }
    }
    for (std::size_t ci = 0; ci < ilp.constraints.size(); ++ci)
        if (!placed[ci]) throw FormatError("enumerate: constraint fits in no bag");

    // Bottom-up over a DFS post-order.
    std::vector<int> post;
    {
        std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
        while (!stack.empty()) {
            auto& [x, idx] = stack.back();
            if (idx < data[x].children.size()) {
                int child = data[x].children[idx++];
                stack.emplace_back(child, 0);
            } else {
                post.push_back(x);
                stack.pop_back();
            }
        }
    }

    long long keep = cap + 1;
    for (int x : post) {
        NodeData& nd = data[x];
        nd.ext_vars = nd.own;
        for (int c : nd.children)
            nd.ext_vars.insert(nd.ext_vars.end(), data[c].ext_vars.begin(),
                               data[c].ext_vars.end());

        // Positions of separator / own vars inside the bag, and child
        // separator positions, for fast slicing of a bag assignment.
        auto pos_in_bag = [&](const std::vector<int>& vars) {
            std::vector<int> pos;
            pos.reserve(vars.size());
            for (int v : vars) {
                auto it = std::lower_bound(nd.bag.begin(), nd.bag.end(), v);
                pos.push_back(static_cast<int>(it - nd.bag.begin()));
            }
            return pos;
        };
        std::vector<int> sep_pos = pos_in_bag(nd.sep);
        std::vector<int> own_pos = pos_in_bag(nd.own);
        std::vector<std::vector<int>> child_sep_pos;
        for (int c : nd.children) child_sep_pos.push_back(pos_in_bag(data[c].sep));

        std::vector<ConstraintState> states;
        std::vector<std::vector<std::pair<int, long long>>> touching(nd.bag.size());
        for (int ci : nd.active) {
            ConstraintState st;
            st.c = &ilp.constraints[ci];
            for (const auto& [v, coeff] : st.c->terms) {
                st.min_sum += std::min(0ll, coeff);
                st.max_sum += std::max(0ll, coeff);
                auto it = std::lower_bound(nd.bag.begin(), nd.bag.end(), v);
                touching[it - nd.bag.begin()].emplace_back(static_cast<int>(states.size()), coeff);
            }
            states.push_back(st);
        }

        std::vector<char> assign(nd.bag.size(), 0);
        std::string key(nd.sep.size(), '0');

        auto emit = [&]() {
            for (std::size_t i = 0; i < sep_pos.size(); ++i)
                key[i] = static_cast<char>('0' + assign[sep_pos[i]]);

            // Gather children extension lists for this bag assignment.
            std::vector<const PieceList*> parts;
            parts.reserve(nd.children.size());
            for (std::size_t ci = 0; ci < nd.children.size(); ++ci) {
                std::string ck(data[nd.children[ci]].sep.size(), '0');
                for (std::size_t i = 0; i < ck.size(); ++i)
                    ck[i] = static_cast<char>('0' + assign[child_sep_pos[ci][i]]);
                auto it = data[nd.children[ci]].table.find(ck);
                if (it == data[nd.children[ci]].table.end()) return;
                parts.push_back(&it->second);
            }

            PieceList& out = nd.table[key];
            std::vector<char> prefix(nd.own.size());
            for (std::size_t i = 0; i < own_pos.size(); ++i) prefix[i] = assign[own_pos[i]];

            // Cross product of children extensions appended to the own vars.
            std::vector<std::size_t> idx(parts.size(), 0);
            while (true) {
                if (static_cast<long long>(out.pieces.size()) >= keep) {
                    out.truncated = true;
                    return;
                }
                std::vector<char> piece = prefix;
                bool part_truncated = false;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    const auto& ext = parts[i]->pieces[idx[i]];
                    piece.insert(piece.end(), ext.begin(), ext.end());
                    part_truncated = part_truncated || parts[i]->truncated;
                }
                out.pieces.push_back(std::move(piece));
                out.truncated = out.truncated || part_truncated;

                std::size_t k = 0;
                for (; k < idx.size(); ++k) {
                    if (++idx[k] < parts[k]->pieces.size()) break;
                    idx[k] = 0;
                }
                if (k == idx.size()) break;
            }
        };

        // Enumerate bag assignments, pruning with the active constraints.
        auto dfs = [&](auto&& self, std::size_t var_idx) -> void {
            if (var_idx == nd.bag.size()) {
                emit();
                return;
            }
            for (char value = 0; value <= 1; ++value) {
                assign[var_idx] = value;
                bool ok = true;
                for (const auto& [si, coeff] : touching[var_idx]) {
                    ConstraintState& st = states[si];
                    st.min_sum -= std::min(0ll, coeff);
                    st.max_sum -= std::max(0ll, coeff);
                    st.min_sum += coeff * value;
                    st.max_sum += coeff * value;
                }
                for (const auto& [si, coeff] : touching[var_idx])
                    if (states[si].violated(states[si].c->bound, states[si].c->cmp)) ok = false;
                if (ok) self(self, var_idx + 1);
                for (const auto& [si, coeff] : touching[var_idx]) {
                    ConstraintState& st = states[si];
                    st.min_sum -= coeff * value;
                    st.max_sum -= coeff * value;
                    st.min_sum += std::min(0ll, coeff);
                    st.max_sum += std::max(0ll, coeff);
                }
            }
        };
        dfs(dfs, 0);

        for (int c : nd.children) data[c].table.clear();
    }

    EnumerationResult result;
    const NodeData& root = data[post.back()];
    auto it = root.table.find(std::string());
    if (it != root.table.end()) {
        result.overflow = it->second.truncated;
        for (const auto& piece : it->second.pieces) {
            if (static_cast<long long>(result.solutions.size()) >= cap) {
                result.overflow = true;
                break;
            }
            std::vector<char> full(ilp.var_count, 0);
            for (std::size_t i = 0; i < root.ext_vars.size(); ++i)
                full[root.ext_vars[i]] = piece[i];
            result.solutions.push_back(std::move(full));
        }
    }
    return result;
}

}  // namespace neckcut
