#include "neckcut/oracle.hpp"

namespace neckcut {

long long count_cuts(const Necklace& necklace, long long budget) {
    long long total = 1;
    for (ColourId c = 0; c < necklace.colour_count(); ++c) {
        total *= necklace.colour_size(c);
        if (total > budget)
            throw LimitExceeded("oracle: cut count exceeds budget " + std::to_string(budget));
    }
    return total;
}

void enumerate_all_cuts(const Necklace& necklace,
                        const std::function<void(const Cut&, const CutEvaluation&)>& visit,
                        long long budget) {
    count_cuts(necklace, budget);
    int n = necklace.colour_count();
    Cut cut;
    cut.point.assign(n, 0);
    std::vector<std::size_t> choice(n, 0);
    while (true) {
        for (ColourId c = 0; c < n; ++c) cut.point[c] = necklace.colour_positions(c)[choice[c]];
        visit(cut, evaluate_cut(necklace, cut));
        int c = 0;
        for (; c < n; ++c) {
            if (++choice[c] < necklace.colour_positions(c).size()) break;
            choice[c] = 0;
        }
        if (c == n) break;
    }
}

std::optional<Cut> oracle_solve(const Necklace& necklace, const AlphaVector& alpha,
                                long long budget) {
    validate_alpha(necklace, alpha);
    std::optional<Cut> found;
    enumerate_all_cuts(
        necklace,
        [&](const Cut& cut, const CutEvaluation& ev) {
            if (!(ev.alpha == alpha)) return;
            if (found)
                throw MultiplicityError("oracle: two cuts realise the same alpha vector");
            found = cut;
        },
        budget);
    return found;
}

AlphaCensus uniqueness_census(const Necklace& necklace, long long budget) {
    AlphaCensus census;
    enumerate_all_cuts(
        necklace,
        [&](const Cut& cut, const CutEvaluation& ev) {
            census.entries[ev.alpha.target].push_back(cut);
            census.total_cuts += 1;
        },
        budget);
    return census;
}

bool census_is_bijection(const AlphaCensus& census) {
    if (static_cast<long long>(census.entries.size()) != census.total_cuts) return false;
    for (const auto& [alpha, cuts] : census.entries)
        if (cuts.size() != 1) return false;
    return true;
}

}  // namespace neckcut
