#pragma once

#include <limits>
#include <string>
#include <vector>

#include "neckcut/errors.hpp"

namespace neckcut {

using ColourId = int;
using BeadPos = int;  // 1-based position along the necklace

/// Maximal run of consecutive beads of one colour.
struct Component {
    ColourId colour = -1;
    BeadPos start = 0;
    BeadPos end = 0;

    int size() const { return end - start + 1; }
    bool operator==(const Component&) const = default;
};

/// An ordered sequence of coloured beads. Colour ids are dense, assigned by
/// order of first appearance, and bijective with colour names. Immutable
/// after construction.
class Necklace {
public:
    Necklace() = default;

    /// One token per bead; colours named by token.
    static Necklace parse(const std::vector<std::string>& tokens);

    /// Internal factory for already-interned beads (generators, reductions).
    static Necklace from_beads(std::vector<ColourId> beads, std::vector<std::string> names);

    int colour_count() const { return static_cast<int>(names_.size()); }
    int bead_count() const { return static_cast<int>(beads_.size()); }

    ColourId colour_at(BeadPos pos) const { return beads_[pos - 1]; }
    const std::vector<ColourId>& beads() const { return beads_; }
    const std::string& colour_name(ColourId c) const { return names_[c]; }
    const std::vector<std::string>& colour_names() const { return names_; }

    /// Dense id for a name, or -1.
    ColourId colour_id(const std::string& name) const;

    int colour_size(ColourId c) const { return static_cast<int>(positions_[c].size()); }
    /// Bead positions of a colour, ascending.
    const std::vector<BeadPos>& colour_positions(ColourId c) const { return positions_[c]; }

    /// Components of one colour in position order.
    const std::vector<Component>& components(ColourId c) const { return components_[c]; }
    /// All components in position order.
    const std::vector<Component>& component_order() const { return component_order_; }
    int component_count() const { return static_cast<int>(component_order_.size()); }

    /// A colour is an interval if it has exactly one component.
    bool is_interval(ColourId c) const { return components_[c].size() == 1; }

    std::vector<std::string> tokens() const;

private:
    std::vector<ColourId> beads_;
    std::vector<std::string> names_;
    std::vector<std::vector<BeadPos>> positions_;
    std::vector<std::vector<Component>> components_;
    std::vector<Component> component_order_;

    void build_index();
};

/// Per-colour positive-side targets, indexed by colour id.
struct AlphaVector {
    std::vector<int> target;

    int operator[](ColourId c) const { return target[c]; }
    int size() const { return static_cast<int>(target.size()); }
    bool operator==(const AlphaVector&) const = default;
};

/// One cut bead per colour, indexed by colour id.
struct Cut {
    std::vector<BeadPos> point;

    int size() const { return static_cast<int>(point.size()); }
    bool operator==(const Cut&) const = default;
};

enum class Parity { even, odd };

inline char sign_char(Parity p) { return p == Parity::even ? '+' : '-'; }

/// Closed interval between consecutive sorted cut points; the two unbounded
/// ends use the sentinels below.
struct Interval {
    static constexpr BeadPos neg_inf = std::numeric_limits<BeadPos>::min();
    static constexpr BeadPos pos_inf = std::numeric_limits<BeadPos>::max();

    BeadPos lo = 0;
    BeadPos hi = 0;

    bool operator==(const Interval&) const = default;
};

struct CutEvaluation {
    Parity pi_sign = Parity::even;
    std::vector<Interval> positive_intervals;
    AlphaVector alpha;
};

/// Rejects cuts that miss a colour or reference a bead of the wrong colour.
void validate_cut(const Necklace& necklace, const Cut& cut);

/// Rejects alpha vectors outside 1 <= alpha_i <= |C_i|.
void validate_alpha(const Necklace& necklace, const AlphaVector& alpha);

/// Sorts the cut points, takes the permutation parity from the inversion
/// count of the colour-id sequence in position order, assigns alternating
/// interval classes by sorted index, and counts per-colour beads on the
/// positive side. Cut beads lie in both adjacent closed intervals and are
/// counted on both sides.
CutEvaluation evaluate_cut(const Necklace& necklace, const Cut& cut);

/// (|C_1| - alpha_1 + 1, ..., |C_n| - alpha_n + 1); an involution.
AlphaVector complement_alpha(const Necklace& necklace, const AlphaVector& alpha);

}  // namespace neckcut
