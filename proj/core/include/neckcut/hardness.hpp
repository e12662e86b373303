#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "neckcut/necklace.hpp"

namespace neckcut {

/// CNF formula whose clauses each hold exactly three distinct variables.
/// Literals are signed 1-based variable indices.
struct E3SatFormula {
    int variable_count = 0;
    std::vector<std::array<int, 3>> clauses;
};

void validate_formula(const E3SatFormula& formula);

bool formula_satisfied(const E3SatFormula& formula, const std::vector<bool>& assignment);

/// Necklace-deciding instance produced from a formula, with a legend mapping
/// each colour to its gadget role.
struct ReductionOutput {
    Necklace necklace;
    AlphaVector alpha;
    std::vector<std::string> legend;  // per colour id

    int alpha_of(const std::string& colour_name) const;
};

/// The gadget construction: an "a b a" anchor, encoding strings per variable
/// and per clause occurrence, enforcement strings pinning the cut positions
/// of the bookkeeping colours, and a closing "P N".
ReductionOutput reduce_e3sat(const E3SatFormula& formula);

/// Witness construction: cuts encode the assignment in the A/B pairs, the
/// clause colour at the occurrence matching its number of true literals, and
/// the bookkeeping colours at their forced beads. The result evaluates to
/// alpha or its complement.
Cut assignment_to_cut(const E3SatFormula& formula, const std::vector<bool>& assignment,
                      const ReductionOutput& reduction);

enum class DecideStatus { yes, no, timeout };

struct DecideResult {
    DecideStatus status = DecideStatus::timeout;
    std::optional<Cut> cut;
};

/// Exact decision of "does some cut put alpha (or its complement) on one
/// side", by pruned backtracking over cut-bead choices in position order.
/// No separability promise; a timeout is an ordinary result.
DecideResult decide_alpha_or_complement(const Necklace& necklace, const AlphaVector& alpha,
                                        double budget_seconds);

}  // namespace neckcut
