#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "neckcut/necklace.hpp"

namespace neckcut::testing {

inline Necklace neck(const std::string& spaced_tokens) {
    std::istringstream ss(spaced_tokens);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return Necklace::parse(tokens);
}

/// Cut given as name->position pairs.
inline Cut cut_of(const Necklace& n, const std::vector<std::pair<std::string, BeadPos>>& points) {
    Cut cut;
    cut.point.assign(n.colour_count(), 0);
    for (const auto& [name, pos] : points) cut.point[n.colour_id(name)] = pos;
    return cut;
}

inline AlphaVector alpha_of(const Necklace& n,
                            const std::vector<std::pair<std::string, int>>& entries) {
    AlphaVector alpha;
    alpha.target.assign(n.colour_count(), 0);
    for (const auto& [name, v] : entries) alpha.target[n.colour_id(name)] = v;
    return alpha;
}

}  // namespace neckcut::testing
