#include "neckcut/reduction.hpp"

#include <algorithm>

namespace neckcut {

namespace {

/// Rebuilds a necklace from the beads that survive `keep`, recording the
/// position and colour maps.
Removal remove_beads(const Necklace& neck, const std::vector<char>& keep, StepKind kind) {
    Removal rem;
    rem.step.kind = kind;
    std::vector<ColourId> beads;
    std::vector<char> survives(neck.colour_count(), 0);
    for (BeadPos p = 1; p <= neck.bead_count(); ++p) {
        if (!keep[p - 1]) continue;
        beads.push_back(neck.colour_at(p));
        survives[neck.colour_at(p)] = 1;
        rem.step.reduced_to_orig.push_back(p);
    }
    std::vector<ColourId> dense(neck.colour_count(), -1);
    std::vector<std::string> names;
    for (ColourId c = 0; c < neck.colour_count(); ++c) {
        if (!survives[c]) continue;
        dense[c] = static_cast<ColourId>(names.size());
        names.push_back(neck.colour_name(c));
        rem.step.colour_to_orig.push_back(c);
    }
    for (ColourId& b : beads) b = dense[b];
    rem.reduced = beads.empty() ? Necklace{} : Necklace::from_beads(std::move(beads), std::move(names));
    // 1-based position map
    rem.step.reduced_to_orig.insert(rem.step.reduced_to_orig.begin(), 0);
    return rem;
}

Removal remove_colours(const Necklace& neck, const AlphaVector& alpha,
                       const std::vector<ColourId>& removed, StepKind kind) {
    std::vector<char> keep(neck.bead_count(), 1);
    for (ColourId c : removed)
        for (BeadPos p : neck.colour_positions(c)) keep[p - 1] = 0;
    Removal rem = remove_beads(neck, keep, kind);
    rem.step.removed_colours = removed;
    for (ColourId c : removed)
        for (const Component& comp : neck.components(c)) rem.step.insertion_components.push_back(comp);
    rem.reduced_alpha.target.clear();
    for (ColourId c : rem.step.colour_to_orig) rem.reduced_alpha.target.push_back(alpha[c]);
    return rem;
}

std::optional<std::pair<ColourId, ColourId>> find_neighbouring_intervals(const Necklace& neck) {
    const auto& order = neck.component_order();
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (neck.is_interval(order[i].colour) && neck.is_interval(order[i + 1].colour))
            return std::make_pair(order[i].colour, order[i + 1].colour);
    }
    return std::nullopt;
}

int inversions_mod2(const std::vector<std::pair<BeadPos, ColourId>>& cuts) {
    int inv = 0;
    for (std::size_t i = 0; i < cuts.size(); ++i)
        for (std::size_t j = i + 1; j < cuts.size(); ++j)
            if (cuts[i].second > cuts[j].second) ++inv;
    return inv % 2;
}

}  // namespace

Removal remove_neighbouring_intervals(const Necklace& neck, const AlphaVector& alpha) {
    validate_alpha(neck, alpha);
    auto pair = find_neighbouring_intervals(neck);
    if (!pair) throw FormatError("reduction: no neighbouring intervals present");
    return remove_colours(neck, alpha, {pair->first, pair->second},
                          StepKind::neighbouring_intervals);
}

bool parity_flip_on_insert(const Necklace& original, const ReductionStep& step) {
    // Representative cut: the first bead of every surviving colour. The flip
    // is uniform, so one representative decides it.
    std::vector<char> removed(original.colour_count(), 0);
    for (ColourId c : step.removed_colours) removed[c] = 1;
    std::vector<std::pair<BeadPos, ColourId>> cuts;
    for (ColourId c = 0; c < original.colour_count(); ++c) {
        if (removed[c]) continue;
        cuts.emplace_back(original.colour_positions(c).front(), c);
    }
    std::sort(cuts.begin(), cuts.end());
    int before = inversions_mod2(cuts);

    std::size_t idx = 0;
    for (ColourId c : step.removed_colours) {
        cuts.emplace_back(step.insertion_components[idx].start, c);
        ++idx;
        if (step.kind == StepKind::endpoint_pair) break;  // one cut for the single colour
    }
    std::sort(cuts.begin(), cuts.end());
    int after = inversions_mod2(cuts);
    return before != after;
}

std::optional<Cut> shift_to_alpha(const Cut& candidate, const Necklace& neck,
                                  const std::vector<Component>& movable,
                                  const AlphaVector& alpha) {
    validate_alpha(neck, alpha);
    CutEvaluation ev = evaluate_cut(neck, candidate);
    std::vector<BeadPos> sorted(candidate.point);
    std::sort(sorted.begin(), sorted.end());
    bool even_positive = ev.pi_sign == Parity::even;
    auto interval_positive = [&](int idx) { return (idx % 2 == 0) == even_positive; };

    std::vector<char> is_movable(neck.colour_count(), 0);
    Cut out = candidate;
    for (const Component& comp : movable) {
        ColourId v = comp.colour;
        if (is_movable[v]) throw FormatError("shift: two movable components of one colour");
        is_movable[v] = 1;
        BeadPos s = candidate.point[v];
        if (s < comp.start || s > comp.end)
            throw FormatError("shift: cut point outside its movable component");
        int current = ev.alpha[v];
        int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s) -
                                    sorted.begin());
        BeadPos target;
        if (interval_positive(rank)) {  // interval left of the cut point is positive
            int fixed = current - (s - comp.start + 1);
            target = comp.start + (alpha[v] - fixed) - 1;
        } else {
            int fixed = current - (comp.end - s + 1);
            target = comp.end - (alpha[v] - fixed) + 1;
        }
        if (target < comp.start || target > comp.end) return std::nullopt;
        out.point[v] = target;
    }
    for (ColourId v = 0; v < neck.colour_count(); ++v)
        if (!is_movable[v] && ev.alpha[v] != alpha[v]) return std::nullopt;

    if (!(evaluate_cut(neck, out).alpha == alpha)) return std::nullopt;
    return out;
}

std::optional<Cut> replay_insertion(const Cut& reduced_cut, const ReductionStep& step,
                                    const std::vector<Component>& insertions,
                                    const Necklace& original, const AlphaVector& alpha) {
    Cut cut;
    cut.point.assign(original.colour_count(), 0);
    for (ColourId c = 0; c < static_cast<ColourId>(step.colour_to_orig.size()); ++c)
        cut.point[step.colour_to_orig[c]] = step.reduced_to_orig[reduced_cut.point[c]];
    for (const Component& comp : insertions) cut.point[comp.colour] = comp.start;
    return shift_to_alpha(cut, original, insertions, alpha);
}

CutPair brute_force_cut(const Necklace& neck, const AlphaVector& alpha) {
    validate_alpha(neck, alpha);
    int n = neck.colour_count();
    if (n > 8) throw FormatError("brute force: limited to eight colours");
    AlphaVector bar = complement_alpha(neck, alpha);

    std::optional<Cut> s, s_bar;
    Cut cut;
    cut.point.assign(n, 0);
    std::vector<std::size_t> choice(n, 0);
    while (true) {
        for (ColourId c = 0; c < n; ++c) cut.point[c] = neck.colour_positions(c)[choice[c]];
        CutEvaluation ev = evaluate_cut(neck, cut);
        if (ev.alpha == alpha) {
            if (s) throw MultiplicityError("brute force: two cuts realise alpha");
            s = cut;
        }
        if (ev.alpha == bar) {
            if (s_bar) throw MultiplicityError("brute force: two cuts realise the complement");
            s_bar = cut;
        }
        int c = 0;
        for (; c < n; ++c) {
            if (++choice[c] < neck.colour_positions(c).size()) break;
            choice[c] = 0;
        }
        if (c == n) break;
    }
    if (n == 0) return CutPair{Cut{}, Cut{}};
    if (!s) throw PromiseViolation("brute force: no cut realises alpha");
    if (!s_bar) throw PromiseViolation("brute force: no cut realises the complement");
    return CutPair{*s, *s_bar};
}

namespace {

template <typename Recurse>
CutPair solve_neighbouring(const Necklace& neck, const AlphaVector& alpha, Recurse recurse) {
    Removal rem = remove_neighbouring_intervals(neck, alpha);
    CutPair sub = recurse(rem.reduced, rem.reduced_alpha);
    bool flip = parity_flip_on_insert(neck, rem.step);
    // Two inserted cuts keep the interval classes of the rest; only a
    // permutation parity flip swaps the sides.
    const Cut& base_s = flip ? sub.complement_cut : sub.cut;
    const Cut& base_sbar = flip ? sub.cut : sub.complement_cut;
    AlphaVector bar = complement_alpha(neck, alpha);
    auto s = replay_insertion(base_s, rem.step, rem.step.insertion_components, neck, alpha);
    auto sb = replay_insertion(base_sbar, rem.step, rem.step.insertion_components, neck, bar);
    if (!s || !sb)
        throw PromiseViolation("reduction: neighbouring-interval reinsertion failed");
    return CutPair{*s, *sb};
}

}  // namespace

CutPair solve_two_component(const Necklace& neck, const AlphaVector& alpha) {
    validate_alpha(neck, alpha);
    int n = neck.colour_count();
    if (n <= 8) return brute_force_cut(neck, alpha);
    for (ColourId c = 0; c < n; ++c)
        if (neck.components(c).size() > 2)
            throw FormatError("two-component solve: colour with more than two components");

    if (find_neighbouring_intervals(neck))
        return solve_neighbouring(neck, alpha, solve_alpha_pair);

    const auto& order = neck.component_order();
    ColourId first_colour = order.front().colour;
    ColourId last_colour = order.back().colour;
    AlphaVector bar = complement_alpha(neck, alpha);

    if (neck.is_interval(first_colour) || neck.is_interval(last_colour)) {
        bool at_front = neck.is_interval(first_colour);
        ColourId removed = at_front ? first_colour : last_colour;
        Removal rem = remove_colours(neck, alpha, {removed},
                                     at_front ? StepKind::first_interval : StepKind::last_interval);
        CutPair sub = solve_two_component(rem.reduced, rem.reduced_alpha);
        bool flip = parity_flip_on_insert(neck, rem.step);
        // A cut at the very front flips the interval classes of the rest on
        // top of any permutation flip; one at the very back does not.
        bool use_complement = at_front ? !flip : flip;
        const Cut& base_s = use_complement ? sub.complement_cut : sub.cut;
        const Cut& base_sbar = use_complement ? sub.cut : sub.complement_cut;
        auto s = replay_insertion(base_s, rem.step, rem.step.insertion_components, neck, alpha);
        auto sb = replay_insertion(base_sbar, rem.step, rem.step.insertion_components, neck, bar);
        if (!s || !sb) throw PromiseViolation("reduction: endpoint-interval reinsertion failed");
        return CutPair{*s, *sb};
    }

    if (first_colour == last_colour) {
        Removal rem = remove_colours(neck, alpha, {first_colour}, StepKind::endpoint_pair);
        CutPair sub = solve_two_component(rem.reduced, rem.reduced_alpha);
        auto pick = [&](const AlphaVector& want) -> Cut {
            std::optional<Cut> found;
            for (const Cut* base : {&sub.cut, &sub.complement_cut}) {
                for (const Component& comp : rem.step.insertion_components) {
                    auto cand = replay_insertion(*base, rem.step, {comp}, neck, want);
                    if (!cand) continue;
                    if (found && !(*found == *cand))
                        throw MultiplicityError("reduction: two distinct endpoint augmentations");
                    found = cand;
                }
            }
            if (!found) throw PromiseViolation("reduction: endpoint-pair augmentation failed");
            return *found;
        };
        return CutPair{pick(alpha), pick(bar)};
    }

    return solve_irreducible(neck, alpha);
}

CutPair solve_alpha_pair(const Necklace& neck, const AlphaVector& alpha) {
    validate_alpha(neck, alpha);
    int n = neck.colour_count();
    if (n <= 8) return brute_force_cut(neck, alpha);

    if (find_neighbouring_intervals(neck))
        return solve_neighbouring(neck, alpha, solve_alpha_pair);

    std::vector<ColourId> wide;  // colours with three or more components
    for (ColourId c = 0; c < n; ++c)
        if (neck.components(c).size() >= 3) wide.push_back(c);
    if (wide.empty()) return solve_two_component(neck, alpha);

    // An n-separable necklace without neighbouring intervals has at most two
    // such colours, each with at most four components.
    if (wide.size() > 2)
        throw PromiseViolation("solve: more than two colours with three or more components");
    for (ColourId c : wide)
        if (neck.components(c).size() > 4)
            throw PromiseViolation("solve: colour with more than four components");

    AlphaVector bar = complement_alpha(neck, alpha);
    std::optional<Cut> s, s_bar;

    std::vector<std::size_t> choice(wide.size(), 0);
    while (true) {
        std::vector<Component> chosen;
        for (std::size_t i = 0; i < wide.size(); ++i)
            chosen.push_back(neck.components(wide[i])[choice[i]]);

        std::vector<char> keep(neck.bead_count(), 1);
        for (std::size_t i = 0; i < wide.size(); ++i)
            for (BeadPos p : neck.colour_positions(wide[i]))
                if (p < chosen[i].start || p > chosen[i].end) keep[p - 1] = 0;
        Removal rem = remove_beads(neck, keep, StepKind::component_choice);
        rem.step.insertion_components = chosen;
        rem.reduced_alpha.target.clear();
        for (ColourId c : rem.step.colour_to_orig) rem.reduced_alpha.target.push_back(alpha[c]);
        for (std::size_t i = 0; i < wide.size(); ++i) {
            auto it = std::find(rem.step.colour_to_orig.begin(), rem.step.colour_to_orig.end(),
                                wide[i]);
            rem.reduced_alpha.target[it - rem.step.colour_to_orig.begin()] = 1;  // dummy value
        }

        bool solved = true;
        CutPair sub;
        try {
            sub = solve_two_component(rem.reduced, rem.reduced_alpha);
        } catch (const PromiseViolation&) {
            solved = false;  // wrong component choice on a degenerate input
        }
        if (solved) {
            auto map_back = [&](const Cut& reduced_cut) {
                Cut cut;
                cut.point.assign(neck.colour_count(), 0);
                for (ColourId c = 0; c < static_cast<ColourId>(rem.step.colour_to_orig.size()); ++c)
                    cut.point[rem.step.colour_to_orig[c]] =
                        rem.step.reduced_to_orig[reduced_cut.point[c]];
                return cut;
            };
            if (auto cand = shift_to_alpha(map_back(sub.cut), neck, chosen, alpha)) {
                if (s && !(*s == *cand))
                    throw MultiplicityError("solve: two component choices realise alpha");
                s = cand;
            }
            if (auto cand = shift_to_alpha(map_back(sub.complement_cut), neck, chosen, bar)) {
                if (s_bar && !(*s_bar == *cand))
                    throw MultiplicityError("solve: two component choices realise the complement");
                s_bar = cand;
            }
        }

        std::size_t i = 0;
        for (; i < wide.size(); ++i) {
            if (++choice[i] < neck.components(wide[i]).size()) break;
            choice[i] = 0;
        }
        if (i == wide.size()) break;
    }

    if (!s || !s_bar) throw PromiseViolation("solve: no component choice yields a shiftable cut");
    return CutPair{*s, *s_bar};
}

}  // namespace neckcut
