#include "neckcut/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace neckcut {

MultiGraph::MultiGraph(int vertex_count) : incidence_(vertex_count) {
    if (vertex_count < 0) throw FormatError("multigraph: negative vertex count");
}

int MultiGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw FormatError("multigraph: edge endpoint out of range");
    if (u == v) throw FormatError("multigraph: self-loops not supported");
    int occ = multiplicity(u, v);
    int id = static_cast<int>(edges_.size());
    edges_.push_back(EdgeRec{std::min(u, v), std::max(u, v), occ});
    incidence_[u].emplace_back(id, v);
    incidence_[v].emplace_back(id, u);
    return id;
}

int MultiGraph::multiplicity(int u, int v) const {
    int count = 0;
    for (const auto& [id, other] : incidence_[u])
        if (other == v) ++count;
    return count;
}

bool MultiGraph::connected() const {
    int n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [id, other] : incidence_[v]) {
            if (!seen[other]) {
                seen[other] = 1;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<int> MultiGraph::odd_degree_vertices() const {
    std::vector<int> odd;
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) % 2 == 1) odd.push_back(v);
    return odd;
}

std::vector<std::pair<int, int>> MultiGraph::simple_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const EdgeRec& e : edges_) out.emplace_back(e.u, e.v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MaxCutResult max_cut_bruteforce(const MultiGraph& g, int vertex_limit) {
    int n = g.vertex_count();
    if (n > vertex_limit)
        throw LimitExceeded("max-cut: " + std::to_string(n) + " vertices exceeds limit " +
                            std::to_string(vertex_limit));
    MaxCutResult best;
    best.side.assign(std::max(n, 0), 0);
    if (n <= 1) return best;

    const auto& edges = g.edges();
    // Vertex 0 stays on side 0; complements give the same cut.
    std::uint64_t masks = 1ull << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        long long size = 0;
        for (const EdgeRec& e : edges) {
            bool su = e.u != 0 && ((mask >> (e.u - 1)) & 1);
            bool sv = e.v != 0 && ((mask >> (e.v - 1)) & 1);
            if (su != sv) ++size;
        }
        if (size > best.size) {
            best.size = size;
            for (int v = 1; v < n; ++v) best.side[v] = static_cast<char>((mask >> (v - 1)) & 1);
        }
    }
    return best;
}

long long Rational::ceil_value() const {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

Rational poljak_turzik_bound(const MultiGraph& g) {
    if (!g.connected()) throw FormatError("poljak-turzik bound: graph must be connected");
    long long m = g.edge_count();
    long long n = g.vertex_count();
    Rational r{2 * m + n - 1, 4};
    long long gcd = std::gcd(r.num, r.den);
    if (gcd > 1) {
        r.num /= gcd;
        r.den /= gcd;
    }
    return r;
}

MultiGraph irreducible_necklace_graph(int n) {
    if (n < 3) throw FormatError("irreducible necklace graph: need n >= 3");
    MultiGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    // Vertices are 0-based here: {2i-1, 2i+1} becomes {2i-2, 2i}.
    for (int i = 1; i <= (n - 1) / 2; ++i) g.add_edge(2 * i - 2, 2 * i);
    return g;
}

bool irreducible_graph_check(const MultiGraph& g, int max_cut_vertex_limit) {
    int n = g.vertex_count();
    if (n == 0 || !g.connected()) return false;
    if (g.odd_degree_vertices().size() != 2) return false;  // semi-Eulerian, not Eulerian
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d < 2 || d > 4) return false;
    }
    for (const EdgeRec& e : g.edges())
        if (g.degree(e.u) == 2 && g.degree(e.v) == 2) return false;
    return max_cut_bruteforce(g, max_cut_vertex_limit).size <= n;
}

namespace {

struct IsoState {
    const MultiGraph* a;
    const MultiGraph* b;
    std::vector<int> map;      // a-vertex -> b-vertex or -1
    std::vector<char> used;    // b-vertex taken
    std::vector<int> order;    // a-vertices in assignment order

    bool compatible(int av, int bv) const {
        if (a->degree(av) != b->degree(bv)) return false;
        for (int prev : order) {
            if (map[prev] < 0) break;
            if (a->multiplicity(av, prev) != b->multiplicity(bv, map[prev])) return false;
        }
        return true;
    }

    bool extend(std::size_t idx) {
        if (idx == order.size()) return true;
        int av = order[idx];
        for (int bv = 0; bv < b->vertex_count(); ++bv) {
            if (used[bv] || !compatible(av, bv)) continue;
            map[av] = bv;
            used[bv] = 1;
            if (extend(idx + 1)) return true;
            map[av] = -1;
            used[bv] = 0;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const MultiGraph& a, const MultiGraph& b, int vertex_limit) {
    if (a.vertex_count() > vertex_limit || b.vertex_count() > vertex_limit)
        throw LimitExceeded("isomorphism: vertex count exceeds limit " +
                            std::to_string(vertex_limit));
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    auto degree_profile = [](const MultiGraph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_profile(a) != degree_profile(b)) return false;

    IsoState st;
    st.a = &a;
    st.b = &b;
    st.map.assign(a.vertex_count(), -1);
    st.used.assign(b.vertex_count(), 0);
    st.order.resize(a.vertex_count());
    std::iota(st.order.begin(), st.order.end(), 0);
    // Rarest degrees first: fewer candidate images early in the search.
    std::vector<int> freq(8, 0);
    for (int v = 0; v < a.vertex_count(); ++v) ++freq[std::min(a.degree(v), 7)];
    std::stable_sort(st.order.begin(), st.order.end(), [&](int x, int y) {
        return freq[std::min(a.degree(x), 7)] < freq[std::min(a.degree(y), 7)];
    });
    return st.extend(0);
}

std::vector<int> euler_path(const MultiGraph& g, Rng* rng) {
    if (!g.connected()) throw FormatError("euler path: graph must be connected");
    auto odd = g.odd_degree_vertices();
    if (odd.size() > 2) throw FormatError("euler path: more than two odd-degree vertices");
    if (g.edge_count() == 0) return g.vertex_count() > 0 ? std::vector<int>{0} : std::vector<int>{};

    int start = odd.empty() ? 0 : odd[0];
    if (rng && odd.size() == 2 && rng->coin()) start = odd[1];

    // Hierholzer with per-vertex cursors into a shuffled incidence order.
    std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        inc[v] = g.incident(v);
        if (rng) rng->shuffle(inc[v]);
    }
    std::vector<std::size_t> cursor(g.vertex_count(), 0);
    std::vector<char> edge_used(g.edge_count(), 0);

    std::vector<int> stack{start};
    std::vector<int> walk;
    while (!stack.empty()) {
        int v = stack.back();
        while (cursor[v] < inc[v].size() && edge_used[inc[v][cursor[v]].first]) ++cursor[v];
        if (cursor[v] == inc[v].size()) {
            walk.push_back(v);
            stack.pop_back();
        } else {
            auto [id, other] = inc[v][cursor[v]];
            edge_used[id] = 1;
            stack.push_back(other);
        }
    }
    if (static_cast<int>(walk.size()) != g.edge_count() + 1)
        throw FormatError("euler path: graph is disconnected on its edges");
    std::reverse(walk.begin(), walk.end());
    return walk;
}

}  // namespace neckcut
