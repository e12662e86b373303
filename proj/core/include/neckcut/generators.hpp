#pragma once

#include <cstdint>

#include "neckcut/necklace.hpp"
#include "neckcut/rng.hpp"

namespace neckcut {

/// Irreducible necklace from a random Euler path of the irreducible necklace
/// graph: one component per vertex visit. With total_beads > 0 the component
/// sizes are balanced to hit that bead count exactly; otherwise they are
/// uniform in [1, max_component_size].
Necklace gen_irreducible(int n, int max_component_size, std::uint64_t seed,
                         long long total_beads = 0);

/// Inverse-reduction insertions applied on top of an irreducible base. Each
/// neighbouring pair raises colour count and separability by two, each
/// endpoint interval by one.
struct PaddingSpec {
    int neighbour_pairs = 0;
    int prepend_intervals = 0;
    int append_intervals = 0;
    int max_component_size = 2;
};

Necklace gen_separable(int n, const PaddingSpec& padding, std::uint64_t seed);

/// Merges a fresh endpoint interval of a padded necklace into an inner
/// colour so that some colour has three or more components while the result
/// stays separable (max-cut at most the colour count, checked by brute
/// force). Feasible merges only exist for even n_result; odd targets leave
/// every merged cut one above the colour count.
Necklace gen_multicomponent(int n_result, std::uint64_t seed);

/// Exhaustive small catalogue: all colour sequences up to relabelling with
/// exactly n colours and at most max_beads beads that are n-separable,
/// optionally restricted to irreducible ones.
std::vector<Necklace> catalogue_small(int n, int max_beads, bool only_irreducible = false);

/// Arbitrary random necklace with every colour non-empty; no separability
/// guarantee.
Necklace random_necklace(int n, int beads, Rng& rng);

/// Uniformly random valid alpha vector.
AlphaVector random_alpha(const Necklace& necklace, Rng& rng);

}  // namespace neckcut
