#include "neckcut/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace neckcut {

using nlohmann::json;

Necklace read_necklace(std::istream& in) {
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return Necklace::parse(tokens);
}

Necklace read_necklace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open necklace file: " + path);
    return read_necklace(in);
}

std::string necklace_text(const Necklace& necklace) {
    std::string out;
    const auto tokens = necklace.tokens();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    out += '\n';
    return out;
}

namespace {

std::map<std::string, long long> read_name_map(const std::string& path, const char* field) {
    std::ifstream in(path);
    if (!in) throw FormatError(std::string("cannot open file: ") + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    std::map<std::string, long long> out;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json doc = json::parse(text, nullptr, false);
        if (doc.is_discarded()) throw FormatError("invalid JSON in " + path);
        const json& obj = doc.contains(field) ? doc.at(field) : doc;
        if (!obj.is_object()) throw FormatError(std::string(field) + ": expected an object");
        for (const auto& [key, value] : obj.items()) {
            if (!value.is_number_integer())
                throw FormatError(std::string(field) + ": value for " + key + " not an integer");
            out[key] = value.get<long long>();
        }
        return out;
    }

    std::istringstream lines(text);
    std::string name;
    long long value;
    while (lines >> name >> value) {
        if (!name.empty() && name.back() == ':') name.pop_back();
        out[name] = value;
    }
    if (out.empty()) throw FormatError(std::string("no entries in ") + path);
    return out;
}

}  // namespace

AlphaVector read_alpha_file(const std::string& path, const Necklace& necklace) {
    auto map = read_name_map(path, "alpha");
    AlphaVector alpha;
    alpha.target.assign(necklace.colour_count(), 0);
    for (const auto& [name, value] : map) {
        ColourId c = necklace.colour_id(name);
        if (c < 0) throw FormatError("alpha: unknown colour " + name);
        alpha.target[c] = static_cast<int>(value);
    }
    validate_alpha(necklace, alpha);
    return alpha;
}

Cut read_cut_file(const std::string& path, const Necklace& necklace) {
    auto map = read_name_map(path, "cut");
    Cut cut;
    cut.point.assign(necklace.colour_count(), 0);
    for (const auto& [name, value] : map) {
        ColourId c = necklace.colour_id(name);
        if (c < 0) throw FormatError("cut: unknown colour " + name);
        cut.point[c] = static_cast<BeadPos>(value);
    }
    validate_cut(necklace, cut);
    return cut;
}

std::string alpha_text(const Necklace& necklace, const AlphaVector& alpha) {
    std::string out;
    for (ColourId c = 0; c < necklace.colour_count(); ++c)
        out += necklace.colour_name(c) + " " + std::to_string(alpha[c]) + "\n";
    return out;
}

std::string alpha_json(const Necklace& necklace, const AlphaVector& alpha) {
    json obj = json::object();
    for (ColourId c = 0; c < necklace.colour_count(); ++c)
        obj[necklace.colour_name(c)] = alpha[c];
    return json{{"alpha", obj}}.dump(2) + "\n";
}

std::string cut_text(const Necklace& necklace, const Cut& cut, Parity sign) {
    std::string out = std::string("sign ") + sign_char(sign) + "\n";
    for (ColourId c = 0; c < necklace.colour_count(); ++c)
        out += necklace.colour_name(c) + " " + std::to_string(cut.point[c]) + "\n";
    return out;
}

std::string cut_json(const Necklace& necklace, const Cut& cut, Parity sign) {
    json obj = json::object();
    for (ColourId c = 0; c < necklace.colour_count(); ++c)
        obj[necklace.colour_name(c)] = cut.point[c];
    return json{{"cut", obj}, {"sign", std::string(1, sign_char(sign))}}.dump(2) + "\n";
}

std::string walk_graph_dot(const MultiGraph& g, const std::vector<std::string>& names) {
    std::string out = "graph walk {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  \"" + names[v] + "\";\n";
    for (const EdgeRec& e : g.edges())
        out += "  \"" + names[e.u] + "\" -- \"" + names[e.v] + "\";\n";
    out += "}\n";
    return out;
}

std::string label_graph_dot(const LabelGraph& lg, const std::vector<std::string>& names) {
    const MultiGraph& g = lg.graph;
    std::string out = "graph label {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool aux = lg.aux_vertex && v == *lg.aux_vertex;
        std::string name = aux ? "aux" : names[v];
        out += "  \"" + name + "\"" + (aux ? " [style=dashed]" : "") + ";\n";
    }
    for (int id = 0; id < g.edge_count(); ++id) {
        const EdgeRec& e = g.edge(id);
        auto name = [&](int v) {
            return (lg.aux_vertex && v == *lg.aux_vertex) ? std::string("aux") : names[v];
        };
        out += "  \"" + name(e.u) + "\" -- \"" + name(e.v) + "\"" +
               (lg.is_closure[id] ? " [style=dashed]" : "") + ";\n";
    }
    out += "}\n";
    return out;
}

E3SatFormula read_dimacs(std::istream& in) {
    E3SatFormula formula;
    std::string line;
    bool header = false;
    long long declared_clauses = -1;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ss >> p >> fmt >> formula.variable_count >> declared_clauses;
            if (fmt != "cnf") throw FormatError("dimacs: expected 'p cnf'");
            header = true;
            continue;
        }
        long long lit;
        while (ss >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw FormatError("dimacs: clause without exactly three literals");
                formula.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header) throw FormatError("dimacs: missing 'p cnf' header");
    if (!current.empty()) throw FormatError("dimacs: clause not terminated by 0");
    if (declared_clauses >= 0 &&
        declared_clauses != static_cast<long long>(formula.clauses.size()))
        throw FormatError("dimacs: clause count does not match header");
    validate_formula(formula);
    return formula;
}

E3SatFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open DIMACS file: " + path);
    return read_dimacs(in);
}

std::string labelling_dump(const LabelGraph& lg, const std::vector<std::string>& names,
                           const CutLabelling& labelling) {
    std::string out;
    for (int id = 0; id < lg.graph.edge_count(); ++id) {
        const EdgeRec& e = lg.graph.edge(id);
        auto name = [&](int v) {
            return (lg.aux_vertex && v == *lg.aux_vertex) ? std::string("aux") : names[v];
        };
        out += "edge " + name(e.u) + " -- " + name(e.v) + " [" + std::to_string(e.occurrence) +
               "] " + (labelling.positive[id] ? "positive" : "negative") + "\n";
    }
    return out;
}

std::string ilp_dump(const BinaryIlp& ilp) {
    std::string out = "vars " + std::to_string(ilp.var_count) + "\n";
    for (const auto& c : ilp.constraints) {
        std::string line;
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
            if (i) line += " + ";
            line += std::to_string(c.terms[i].second) + "*x" + std::to_string(c.terms[i].first);
        }
        if (c.terms.empty()) line += "0";
        const char* cmp = c.cmp == Cmp::le ? "<=" : c.cmp == Cmp::eq ? "=" : ">=";
        out += line + " " + cmp + " " + std::to_string(c.bound) + "\n";
    }
    return out;
}

BinaryIlp read_ilp(std::istream& in) {
    BinaryIlp ilp;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        if (tok == "vars") {
            ss >> ilp.var_count;
            continue;
        }
        LinearConstraint c;
        // token stream like: 2*x0 + -1*x3 <= 4
        while (true) {
            if (tok == "<=" || tok == "=" || tok == ">=") {
                c.cmp = tok == "<=" ? Cmp::le : tok == "=" ? Cmp::eq : Cmp::ge;
                ss >> c.bound;
                break;
            }
            if (tok != "+") {
                auto star = tok.find("*x");
                if (star == std::string::npos) throw FormatError("ilp: bad term " + tok);
                long long coeff = std::stoll(tok.substr(0, star));
                int var = std::stoi(tok.substr(star + 2));
                c.terms.emplace_back(var, coeff);
            }
            if (!(ss >> tok)) throw FormatError("ilp: constraint missing comparator");
        }
        ilp.constraints.push_back(std::move(c));
    }
    validate_ilp(ilp);
    return ilp;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write file: " + path);
    out << content;
}

}  // namespace neckcut
