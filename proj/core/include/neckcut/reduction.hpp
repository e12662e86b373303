#pragma once

#include <optional>

#include "neckcut/cut_labelling.hpp"
#include "neckcut/necklace.hpp"

namespace neckcut {

enum class StepKind {
    neighbouring_intervals,
    first_interval,
    last_interval,
    endpoint_pair,      // first and last component share a colour
    component_choice,   // colours with three or more components restricted
};

/// One reduction step with enough data to replay the insertion: which
/// colours were removed, the original-coordinate components their cuts go
/// back into, and the position/colour maps between the necklaces.
struct ReductionStep {
    StepKind kind = StepKind::neighbouring_intervals;
    std::vector<ColourId> removed_colours;        // original ids
    std::vector<Component> insertion_components;  // original coordinates
    std::vector<BeadPos> reduced_to_orig;         // reduced position -> original, 1-based
    std::vector<ColourId> colour_to_orig;         // reduced colour id -> original id
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

struct Removal {
    Necklace reduced;
    AlphaVector reduced_alpha;
    ReductionStep step;
};

/// Removes the two colours of a neighbouring-interval pair. The reduced
/// necklace has two colours fewer.
Removal remove_neighbouring_intervals(const Necklace& necklace, const AlphaVector& alpha);

/// True iff reinserting cut points for the step's removed colours changes
/// the cut permutation parity. Evaluated on one representative cut; the flip
/// is uniform across cuts and across positions within the components.
bool parity_flip_on_insert(const Necklace& original, const ReductionStep& step);

/// Moves the cut points of the movable components (at most one per colour)
/// within their components so the evaluation hits alpha exactly; empty when
/// no placement works. All other colours must already sit at alpha.
std::optional<Cut> shift_to_alpha(const Cut& candidate, const Necklace& necklace,
                                  const std::vector<Component>& movable,
                                  const AlphaVector& alpha);

/// Maps a cut of the reduced necklace back into original coordinates, drops
/// cut points into the given insertion components (first bead), and shifts
/// them to realise alpha.
std::optional<Cut> replay_insertion(const Cut& reduced_cut, const ReductionStep& step,
                                    const std::vector<Component>& insertions,
                                    const Necklace& original, const AlphaVector& alpha);

/// Exhaustive solve for up to eight colours: every choice of one cut bead
/// per colour is evaluated.
CutPair brute_force_cut(const Necklace& necklace, const AlphaVector& alpha);

/// Necklaces whose colours all have at most two components: peels
/// neighbouring intervals, endpoint intervals and same-colour endpoints,
/// then hands the irreducible core to the labelling solver.
CutPair solve_two_component(const Necklace& necklace, const AlphaVector& alpha);

/// Entry point: returns the unique alpha-cut and complement-alpha-cut of an
/// n-separable necklace. Raises PromiseViolation on inputs that turn out not
/// to be n-separable; never returns an unverified cut.
CutPair solve_alpha_pair(const Necklace& necklace, const AlphaVector& alpha);

}  // namespace neckcut
