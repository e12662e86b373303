#include "neckcut/generators.hpp"

#include <algorithm>
#include <string>

#include "neckcut/walk_graph.hpp"

namespace neckcut {

Necklace gen_irreducible(int n, int max_component_size, std::uint64_t seed,
                         long long total_beads) {
    if (n < 3) throw FormatError("gen irreducible: need n >= 3");
    if (max_component_size < 1) throw FormatError("gen irreducible: component size >= 1");
    Rng rng(seed);
    MultiGraph g = irreducible_necklace_graph(n);
    std::vector<int> walk = euler_path(g, &rng);
    int comps = static_cast<int>(walk.size());

    std::vector<int> sizes(comps, 1);
    if (total_beads > 0) {
        if (total_beads < comps)
            throw FormatError("gen irreducible: fewer beads than components");
        long long base = total_beads / comps;
        long long extra = total_beads % comps;
        for (int i = 0; i < comps; ++i) sizes[i] = static_cast<int>(base + (i < extra ? 1 : 0));
    } else {
        for (int i = 0; i < comps; ++i) sizes[i] = rng.uniform_int(1, max_component_size);
    }

    std::vector<std::string> tokens;
    for (int i = 0; i < comps; ++i) {
        std::string name = std::to_string(walk[i] + 1);
        for (int j = 0; j < sizes[i]; ++j) tokens.push_back(name);
    }
    Necklace neck = Necklace::parse(tokens);
    if (!is_necklace_irreducible(neck))
        throw FormatError("gen irreducible: construction failed the irreducibility check");
    return neck;
}

Necklace gen_separable(int n, const PaddingSpec& padding, std::uint64_t seed) {
    Rng rng(seed);
    Necklace neck = gen_irreducible(n, padding.max_component_size, rng.next());
    int fresh = 0;

    auto interval_tokens = [&](int size) {
        std::string name = "p" + std::to_string(fresh++);
        return std::vector<std::string>(size, name);
    };

    std::vector<std::string> tokens = neck.tokens();
    for (int i = 0; i < padding.neighbour_pairs; ++i) {
        // Insert the fresh pair at a component boundary so existing
        // components stay intact.
        Necklace cur = Necklace::parse(tokens);
        const auto& order = cur.component_order();
        int boundary = rng.uniform_int(0, static_cast<int>(order.size()));
        BeadPos at = boundary == 0 ? 0 : order[boundary - 1].end;
        auto a = interval_tokens(rng.uniform_int(1, padding.max_component_size));
        auto b = interval_tokens(rng.uniform_int(1, padding.max_component_size));
        a.insert(a.end(), b.begin(), b.end());
        tokens.insert(tokens.begin() + at, a.begin(), a.end());
    }
    for (int i = 0; i < padding.prepend_intervals; ++i) {
        auto a = interval_tokens(rng.uniform_int(1, padding.max_component_size));
        tokens.insert(tokens.begin(), a.begin(), a.end());
    }
    for (int i = 0; i < padding.append_intervals; ++i) {
        auto a = interval_tokens(rng.uniform_int(1, padding.max_component_size));
        tokens.insert(tokens.end(), a.begin(), a.end());
    }
    return Necklace::parse(tokens);
}

Necklace gen_multicomponent(int n_result, std::uint64_t seed) {
    if (n_result < 4 || n_result > 14)
        throw FormatError("gen multicomponent: n must be in [4, 14] for the brute-force check");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        // One fresh endpoint interval, then merged into an inner colour: the
        // merged colour picks up a third component while the max-cut can
        // stay within the colour count. Verified, not assumed.
        PaddingSpec spec;
        spec.max_component_size = 2;
        (rng.coin() ? spec.append_intervals : spec.prepend_intervals) = 1;
        Necklace base = gen_separable(n_result, spec, rng.next());
        ColourId pad = base.colour_id("p0");
        std::vector<ColourId> targets;
        for (ColourId u = 0; u < base.colour_count(); ++u)
            if (u != pad) targets.push_back(u);
        rng.shuffle(targets);
        for (ColourId u : targets) {
            std::vector<std::string> tokens = base.tokens();
            const std::string& from = base.colour_name(pad);
            const std::string& to = base.colour_name(u);
            for (auto& tok : tokens)
                if (tok == from) tok = to;
            Necklace merged = Necklace::parse(tokens);
            ColourId m = merged.colour_id(to);
            int comps = static_cast<int>(merged.components(m).size());
            if (comps < 3 || comps > 4) continue;
            const auto& order = merged.component_order();
            bool neighbouring = false;
            for (std::size_t i = 0; i + 1 < order.size(); ++i)
                if (merged.is_interval(order[i].colour) &&
                    merged.is_interval(order[i + 1].colour))
                    neighbouring = true;
            if (neighbouring) continue;
            if (separability(merged) <= merged.colour_count()) return merged;
        }
    }
    throw FormatError("gen multicomponent: no separable merge found for this seed");
}

std::vector<Necklace> catalogue_small(int n, int max_beads, bool only_irreducible) {
    if (n < 1 || n > 4) throw FormatError("catalogue: n must be in [1, 4]");
    std::vector<std::string> letters{"a", "b", "c", "d"};
    std::vector<Necklace> out;
    std::vector<int> seq;

    auto emit = [&]() {
        int used = *std::max_element(seq.begin(), seq.end()) + 1;
        if (used != n) return;
        std::vector<std::string> tokens;
        for (int v : seq) tokens.push_back(letters[v]);
        Necklace neck = Necklace::parse(tokens);
        if (separability(neck) > n) return;
        if (only_irreducible && !is_necklace_irreducible(neck)) return;
        out.push_back(std::move(neck));
    };

    // Restricted growth strings: canonical representatives up to relabelling.
    // The next bead reuses a colour seen so far or introduces the next one.
    auto grow = [&](auto&& self, int used) -> void {
        emit();
        if (static_cast<int>(seq.size()) == max_beads) return;
        for (int v = 0; v < used; ++v) {
            seq.push_back(v);
            self(self, used);
            seq.pop_back();
        }
        if (used < n) {
            seq.push_back(used);
            self(self, used + 1);
            seq.pop_back();
        }
    };
    seq.push_back(0);  // first bead is always colour 0
    grow(grow, 1);
    return out;
}

Necklace random_necklace(int n, int beads, Rng& rng) {
    if (n < 1 || beads < n) throw FormatError("random necklace: need beads >= n >= 1");
    std::vector<int> ids;
    for (int c = 0; c < n; ++c) ids.push_back(c);
    for (int i = n; i < beads; ++i) ids.push_back(rng.uniform_int(0, n - 1));
    rng.shuffle(ids);
    std::vector<std::string> names;
    for (int c = 0; c < n; ++c) names.push_back(std::string(1, static_cast<char>('a' + c % 26)) +
                                                (c >= 26 ? std::to_string(c / 26) : ""));
    std::vector<std::string> tokens;
    for (int id : ids) tokens.push_back(names[id]);
    return Necklace::parse(tokens);
}

AlphaVector random_alpha(const Necklace& necklace, Rng& rng) {
    AlphaVector alpha;
    for (ColourId c = 0; c < necklace.colour_count(); ++c)
        alpha.target.push_back(rng.uniform_int(1, necklace.colour_size(c)));
    return alpha;
}

}  // namespace neckcut
