#pragma once

#include <functional>
#include <map>
#include <optional>

#include "neckcut/necklace.hpp"

namespace neckcut {

inline constexpr long long kDefaultCutBudget = 100'000'000;

/// Number of cut choices, i.e. the product of the colour sizes; throws
/// LimitExceeded above the budget.
long long count_cuts(const Necklace& necklace, long long budget = kDefaultCutBudget);

/// Every choice of one cut bead per colour, evaluated.
void enumerate_all_cuts(const Necklace& necklace,
                        const std::function<void(const Cut&, const CutEvaluation&)>& visit,
                        long long budget = kDefaultCutBudget);

/// The unique cut realising alpha, or empty. More than one match raises
/// MultiplicityError: on an n-separable input that would falsify uniqueness.
std::optional<Cut> oracle_solve(const Necklace& necklace, const AlphaVector& alpha,
                                long long budget = kDefaultCutBudget);

/// Full map from realised alpha vectors to the cuts achieving them.
struct AlphaCensus {
    std::map<std::vector<int>, std::vector<Cut>> entries;
    long long total_cuts = 0;
};

AlphaCensus uniqueness_census(const Necklace& necklace, long long budget = kDefaultCutBudget);

/// True iff the census pairs every cut with a distinct alpha vector; on an
/// n-separable necklace the census must pass, since cut count and valid
/// alpha count coincide.
bool census_is_bijection(const AlphaCensus& census);

}  // namespace neckcut
