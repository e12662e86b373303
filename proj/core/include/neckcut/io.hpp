#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "neckcut/cut_labelling.hpp"
#include "neckcut/hardness.hpp"
#include "neckcut/ilp_tw.hpp"
#include "neckcut/necklace.hpp"
#include "neckcut/walk_graph.hpp"

namespace neckcut {

/// Necklace text format: whitespace/newline-separated colour tokens.
Necklace read_necklace(std::istream& in);
Necklace read_necklace_file(const std::string& path);
std::string necklace_text(const Necklace& necklace);

/// Alpha and cut files map colour names to integers, either as key-value
/// lines or as a JSON object under the field "alpha" / "cut". Readers sniff
/// the format.
AlphaVector read_alpha_file(const std::string& path, const Necklace& necklace);
Cut read_cut_file(const std::string& path, const Necklace& necklace);
std::string alpha_text(const Necklace& necklace, const AlphaVector& alpha);
std::string alpha_json(const Necklace& necklace, const AlphaVector& alpha);
std::string cut_text(const Necklace& necklace, const Cut& cut, Parity sign);
std::string cut_json(const Necklace& necklace, const Cut& cut, Parity sign);

/// DOT with parallel edges drawn separately; closure elements dashed.
std::string walk_graph_dot(const MultiGraph& g, const std::vector<std::string>& names);
std::string label_graph_dot(const LabelGraph& lg, const std::vector<std::string>& names);

/// DIMACS CNF, rejected unless every clause has exactly three distinct
/// variables.
E3SatFormula read_dimacs(std::istream& in);
E3SatFormula read_dimacs_file(const std::string& path);

/// Labelling debug dump: one "edge u -- v [occurrence] label" line per edge.
std::string labelling_dump(const LabelGraph& lg, const std::vector<std::string>& names,
                           const CutLabelling& labelling);

/// Constraint debug format, one constraint per line:
/// "coeff*x<i> ... <cmp> <bound>" with cmp in {<=, =, >=}.
std::string ilp_dump(const BinaryIlp& ilp);
BinaryIlp read_ilp(std::istream& in);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace neckcut
