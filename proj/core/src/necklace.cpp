#include "neckcut/necklace.hpp"

#include <algorithm>
#include <unordered_map>

namespace neckcut {

Necklace Necklace::parse(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw FormatError("necklace: empty input");
    Necklace neck;
    std::unordered_map<std::string, ColourId> ids;
    neck.beads_.reserve(tokens.size());
    for (const auto& tok : tokens) {
        if (tok.empty()) throw FormatError("necklace: empty colour token");
        auto [it, fresh] = ids.emplace(tok, static_cast<ColourId>(neck.names_.size()));
        if (fresh) neck.names_.push_back(tok);
        neck.beads_.push_back(it->second);
    }
    neck.build_index();
    return neck;
}

Necklace Necklace::from_beads(std::vector<ColourId> beads, std::vector<std::string> names) {
    Necklace neck;
    neck.beads_ = std::move(beads);
    neck.names_ = std::move(names);
    for (ColourId c : neck.beads_) {
        if (c < 0 || c >= static_cast<int>(neck.names_.size()))
            throw FormatError("necklace: bead references unknown colour");
    }
    neck.build_index();
    return neck;
}

void Necklace::build_index() {
    int n = colour_count();
    positions_.assign(n, {});
    components_.assign(n, {});
    component_order_.clear();
    for (BeadPos p = 1; p <= bead_count(); ++p) {
        ColourId c = beads_[p - 1];
        positions_[c].push_back(p);
        if (!component_order_.empty() && component_order_.back().colour == c &&
            component_order_.back().end == p - 1) {
            component_order_.back().end = p;
        } else {
            component_order_.push_back(Component{c, p, p});
        }
    }
    for (const Component& comp : component_order_) components_[comp.colour].push_back(comp);
    for (ColourId c = 0; c < n; ++c) {
        if (positions_[c].empty()) throw FormatError("necklace: colour without beads: " + names_[c]);
    }
}

ColourId Necklace::colour_id(const std::string& name) const {
    for (ColourId c = 0; c < colour_count(); ++c)
        if (names_[c] == name) return c;
    return -1;
}

std::vector<std::string> Necklace::tokens() const {
    std::vector<std::string> out;
    out.reserve(beads_.size());
    for (ColourId c : beads_) out.push_back(names_[c]);
    return out;
}

void validate_cut(const Necklace& necklace, const Cut& cut) {
    if (cut.size() != necklace.colour_count())
        throw FormatError("cut: expected one cut point per colour");
    for (ColourId c = 0; c < necklace.colour_count(); ++c) {
        BeadPos p = cut.point[c];
        if (p < 1 || p > necklace.bead_count())
            throw FormatError("cut: position out of range for colour " + necklace.colour_name(c));
        if (necklace.colour_at(p) != c)
            throw FormatError("cut: bead at position " + std::to_string(p) +
                              " is not of colour " + necklace.colour_name(c));
    }
}

void validate_alpha(const Necklace& necklace, const AlphaVector& alpha) {
    if (alpha.size() != necklace.colour_count())
        throw FormatError("alpha: expected one entry per colour");
    for (ColourId c = 0; c < necklace.colour_count(); ++c) {
        if (alpha[c] < 1 || alpha[c] > necklace.colour_size(c))
            throw FormatError("alpha: value for colour " + necklace.colour_name(c) +
                              " outside [1, " + std::to_string(necklace.colour_size(c)) + "]");
    }
}

namespace {

Parity inversion_parity(const std::vector<ColourId>& seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace

CutEvaluation evaluate_cut(const Necklace& necklace, const Cut& cut) {
    validate_cut(necklace, cut);
    int n = necklace.colour_count();
    int total = necklace.bead_count();

    std::vector<BeadPos> sorted(cut.point);
    std::sort(sorted.begin(), sorted.end());

    std::vector<ColourId> order;
    order.reserve(n);
    for (BeadPos p : sorted) order.push_back(necklace.colour_at(p));

    CutEvaluation ev;
    ev.pi_sign = inversion_parity(order);

    // Interval j spans [sorted[j-1], sorted[j]]; class = index parity. The
    // positive side is the even class iff the permutation is even.
    bool even_positive = ev.pi_sign == Parity::even;
    auto interval_positive = [&](int idx) { return (idx % 2 == 0) == even_positive; };

    for (int j = 0; j <= n; ++j) {
        if (!interval_positive(j)) continue;
        Interval iv;
        iv.lo = j == 0 ? Interval::neg_inf : sorted[j - 1];
        iv.hi = j == n ? Interval::pos_inf : sorted[j];
        ev.positive_intervals.push_back(iv);
    }

    ev.alpha.target.assign(n, 0);
    int rank = 0;  // number of cut points strictly before the sweep position
    for (BeadPos p = 1; p <= total; ++p) {
        bool at_cut = rank < n && sorted[rank] == p;
        // A bead at a cut point belongs to intervals rank and rank+1, one of
        // which is positive; any other bead only to interval `rank`.
        bool positive = at_cut || interval_positive(rank);
        if (positive) ev.alpha.target[necklace.colour_at(p)] += 1;
        if (at_cut) ++rank;
    }
    return ev;
}

AlphaVector complement_alpha(const Necklace& necklace, const AlphaVector& alpha) {
    validate_alpha(necklace, alpha);
    AlphaVector out;
    out.target.reserve(alpha.size());
    for (ColourId c = 0; c < necklace.colour_count(); ++c)
        out.target.push_back(necklace.colour_size(c) - alpha[c] + 1);
    return out;
}

}  // namespace neckcut
