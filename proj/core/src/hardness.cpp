#include "neckcut/hardness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

namespace neckcut {

void validate_formula(const E3SatFormula& formula) {
    if (formula.variable_count < 1) throw FormatError("formula: no variables");
    std::vector<char> used(formula.variable_count + 1, 0);
    for (const auto& clause : formula.clauses) {
        std::array<int, 3> vars{};
        for (int i = 0; i < 3; ++i) {
            int lit = clause[i];
            if (lit == 0 || std::abs(lit) > formula.variable_count)
                throw FormatError("formula: literal out of range");
            vars[i] = std::abs(lit);
            used[vars[i]] = 1;
        }
        std::sort(vars.begin(), vars.end());
        if (vars[0] == vars[1] || vars[1] == vars[2])
            throw FormatError("formula: clause variables must be distinct");
    }
    for (int v = 1; v <= formula.variable_count; ++v)
        if (!used[v])
            throw FormatError("formula: variable " + std::to_string(v) + " occurs in no clause");
}

bool formula_satisfied(const E3SatFormula& formula, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != formula.variable_count)
        throw FormatError("assignment: wrong variable count");
    for (const auto& clause : formula.clauses) {
        bool ok = false;
        for (int lit : clause) {
            bool value = assignment[std::abs(lit) - 1];
            if ((lit > 0) == value) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

namespace {

std::string variable_base(const E3SatFormula& formula, int v) {
    static const char* letters[] = {"x", "y", "z", "w"};
    if (formula.variable_count <= 4) return letters[v - 1];
    return "v" + std::to_string(v);
}

std::string pair_name(const E3SatFormula& formula, int v, int occ, char side) {
    std::string base = variable_base(formula, v);
    std::string sep = formula.variable_count <= 4 ? "" : "_";
    return base + sep + std::to_string(occ) + side;
}

std::string transfer_name(const E3SatFormula& formula, int v) {
    std::string sep = formula.variable_count <= 4 ? "" : "_";
    return variable_base(formula, v) + sep + "T";
}

}  // namespace

int ReductionOutput::alpha_of(const std::string& colour_name) const {
    ColourId c = necklace.colour_id(colour_name);
    if (c < 0) throw FormatError("reduction: unknown colour " + colour_name);
    return alpha[c];
}

ReductionOutput reduce_e3sat(const E3SatFormula& formula) {
    validate_formula(formula);
    int m = static_cast<int>(formula.clauses.size());

    std::vector<int> occurrences(formula.variable_count + 1, 0);
    for (const auto& clause : formula.clauses)
        for (int lit : clause) occurrences[std::abs(lit)] += 1;

    std::vector<std::string> tokens{"a", "b", "a"};
    auto push = [&](const std::string& tok, int copies = 1) {
        for (int i = 0; i < copies; ++i) tokens.push_back(tok);
    };

    for (int v = 1; v <= formula.variable_count; ++v) {
        push("P");
        push(pair_name(formula, v, 0, 'A'));
        push(transfer_name(formula, v), occurrences[v]);
        push(pair_name(formula, v, 0, 'B'));
        push("P");
        push(pair_name(formula, v, 0, 'A'));
        push(pair_name(formula, v, 0, 'B'));
        push("P");
    }

    for (int i = 1; i <= m; ++i) {
        for (int lit : formula.clauses[i - 1]) {
            int v = std::abs(lit);
            std::string clause_tok = "C" + std::to_string(i);
            push("P");
            push(pair_name(formula, v, i, 'A'));
            if (lit > 0) push(clause_tok);
            push(pair_name(formula, v, i, 'B'));
            push("P");
            push(pair_name(formula, v, i, 'A'));
            push(transfer_name(formula, v));
            if (lit < 0) push(clause_tok);
            push(pair_name(formula, v, i, 'B'));
            push("P");
        }
    }

    for (int i = 1; i <= m; ++i) {
        push("P");
        push("C" + std::to_string(i), 3);
        push("S_" + std::to_string(i));
        push("P");
    }

    for (int v = 1; v <= formula.variable_count; ++v) {
        for (int j = 0; j < occurrences[v]; ++j) {
            push("P");
            push(transfer_name(formula, v));
        }
        for (int j = 0; j < occurrences[v]; ++j) {
            push("N");
            push(transfer_name(formula, v));
        }
        push("N");
        push("S_" + variable_base(formula, v));
    }

    push("P");
    push("N");

    ReductionOutput out;
    out.necklace = Necklace::parse(tokens);

    out.alpha.target.assign(out.necklace.colour_count(), 0);
    out.legend.assign(out.necklace.colour_count(), "");
    auto set = [&](const std::string& name, int value, const std::string& role) {
        ColourId c = out.necklace.colour_id(name);
        if (c < 0) throw FormatError("reduction: colour missing: " + name);
        out.alpha.target[c] = value;
        out.legend[c] = role;
    };

    set("a", 2, "a");
    set("b", 1, "b");
    set("P", out.necklace.colour_size(out.necklace.colour_id("P")), "P");
    set("N", 1, "N");
    for (int v = 1; v <= formula.variable_count; ++v) {
        set(pair_name(formula, v, 0, 'A'), 2, "x_i^A");
        set(pair_name(formula, v, 0, 'B'), 2, "x_i^B");
        set(transfer_name(formula, v), 2 * occurrences[v], "x_T");
        set("S_" + variable_base(formula, v), 1, "S_*");
    }
    for (int i = 1; i <= m; ++i) {
        for (int lit : formula.clauses[i - 1]) {
            set(pair_name(formula, std::abs(lit), i, 'A'), 2, "x_i^A");
            set(pair_name(formula, std::abs(lit), i, 'B'), 2, "x_i^B");
        }
        set("C" + std::to_string(i), 3, "C_i");
        set("S_" + std::to_string(i), 1, "S_*");
    }
    validate_alpha(out.necklace, out.alpha);
    return out;
}

Cut assignment_to_cut(const E3SatFormula& formula, const std::vector<bool>& assignment,
                      const ReductionOutput& reduction) {
    validate_formula(formula);
    if (!formula_satisfied(formula, assignment))
        throw FormatError("assignment does not satisfy the formula");

    const Necklace& neck = reduction.necklace;
    auto position = [&](const std::string& name, int index) {
        ColourId c = neck.colour_id(name);
        if (c < 0) throw FormatError("reduction: colour missing: " + name);
        return neck.colour_positions(c)[index];
    };

    std::vector<int> occurrences(formula.variable_count + 1, 0);
    for (const auto& clause : formula.clauses)
        for (int lit : clause) occurrences[std::abs(lit)] += 1;

    Cut cut;
    cut.point.assign(neck.colour_count(), 0);
    auto place = [&](const std::string& name, int index) {
        cut.point[neck.colour_id(name)] = position(name, index);
    };

    place("b", 0);
    place("P", neck.colour_size(neck.colour_id("P")) - 1);  // the closing "P N"
    place("N", neck.colour_size(neck.colour_id("N")) - 1);

    for (int v = 1; v <= formula.variable_count; ++v) {
        int pick = assignment[v - 1] ? 0 : 1;  // first copies encode true
        place(pair_name(formula, v, 0, 'A'), pick);
        place(pair_name(formula, v, 0, 'B'), pick);
        // Transfer beads: the k-th occurrence inside the enforcement string,
        // after k in the variable part and k in the clause strings.
        place(transfer_name(formula, v), 3 * occurrences[v] - 1);
        place("S_" + variable_base(formula, v), 0);
    }
    for (int i = 1; i <= static_cast<int>(formula.clauses.size()); ++i) {
        int true_literals = 0;
        for (int lit : formula.clauses[i - 1]) {
            int v = std::abs(lit);
            int pick = assignment[v - 1] ? 0 : 1;
            place(pair_name(formula, v, i, 'A'), pick);
            place(pair_name(formula, v, i, 'B'), pick);
            if ((lit > 0) == assignment[v - 1]) ++true_literals;
        }
        // Clause beads: three in the encoding part, then the enforcement
        // triple; cut the t-th of the triple for t true literals.
        place("C" + std::to_string(i), 3 + true_literals - 1);
        place("S_" + std::to_string(i), 0);
    }

    AlphaVector bar = complement_alpha(neck, reduction.alpha);
    for (int a_index : {1, 0}) {  // second bead of "a", then the first
        place("a", a_index);
        CutEvaluation ev = evaluate_cut(neck, cut);
        if (ev.alpha == reduction.alpha || ev.alpha == bar) return cut;
    }
    throw FormatError("reduction: witness cut failed verification");
}

namespace {

struct DecideState {
    const Necklace* neck;
    const AlphaVector* alpha;
    AlphaVector bar;
    std::vector<int> side0;      // per colour, beads counted to the side of interval 0
    std::vector<int> remaining;  // per colour, beads at the current position or later
    std::vector<BeadPos> cut_at;
    int cuts_done = 0;
    int viol_alpha = 0;  // colours whose feasible range misses alpha
    int viol_bar = 0;
    long long nodes = 0;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    std::optional<Cut> found;

    bool range_misses(ColourId c, int target) const {
        int lo = side0[c] + (cut_at[c] == 0 ? 1 : 0);
        int hi = side0[c] + remaining[c];
        return target < lo || target > hi;
    }

    void refresh(ColourId c, int delta_viol[2]) {
        delta_viol[0] = range_misses(c, (*alpha)[c]) ? 1 : 0;
        delta_viol[1] = range_misses(c, bar[c]) ? 1 : 0;
    }
};

bool decide_rec(DecideState& st, BeadPos p) {
    if (st.timed_out) return false;
    if ((++st.nodes & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > st.deadline) {
        st.timed_out = true;
        return false;
    }
    const Necklace& neck = *st.neck;
    if (p > neck.bead_count()) {
        // Ranges collapsed to points; a zero violation count is an exact hit.
        if (st.viol_alpha == 0 || st.viol_bar == 0) {
            Cut cut;
            cut.point = st.cut_at;
            st.found = cut;
            return true;
        }
        return false;
    }

    ColourId c = neck.colour_at(p);
    int before[2], after[2];
    st.refresh(c, before);

    for (int do_cut = 1; do_cut >= 0; --do_cut) {
        if (do_cut && st.cut_at[c] != 0) continue;
        int side = st.cuts_done % 2;  // 0: the side of interval 0
        if (do_cut) {
            st.cut_at[c] = p;
            st.side0[c] += 1;  // a cut bead always counts once to side 0
            st.cuts_done += 1;
        } else {
            st.side0[c] += side == 0 ? 1 : 0;
        }
        st.remaining[c] -= 1;

        st.refresh(c, after);
        st.viol_alpha += after[0] - before[0];
        st.viol_bar += after[1] - before[1];
        bool solved = false;
        if (st.viol_alpha == 0 || st.viol_bar == 0) solved = decide_rec(st, p + 1);
        st.viol_alpha -= after[0] - before[0];
        st.viol_bar -= after[1] - before[1];

        st.remaining[c] += 1;
        if (do_cut) {
            st.cut_at[c] = 0;
            st.side0[c] -= 1;
            st.cuts_done -= 1;
        } else {
            st.side0[c] -= side == 0 ? 1 : 0;
        }
        if (solved) return true;
    }
    return false;
}

}  // namespace

DecideResult decide_alpha_or_complement(const Necklace& necklace, const AlphaVector& alpha,
                                        double budget_seconds) {
    validate_alpha(necklace, alpha);
    DecideState st;
    st.neck = &necklace;
    st.alpha = &alpha;
    st.bar = complement_alpha(necklace, alpha);
    st.side0.assign(necklace.colour_count(), 0);
    st.remaining.resize(necklace.colour_count());
    for (ColourId c = 0; c < necklace.colour_count(); ++c)
        st.remaining[c] = necklace.colour_size(c);
    st.cut_at.assign(necklace.colour_count(), 0);
    st.deadline = std::chrono::steady_clock::now() +
                  std::chrono::microseconds(static_cast<long long>(budget_seconds * 1e6));

    for (ColourId c = 0; c < necklace.colour_count(); ++c) {
        if (st.range_misses(c, alpha[c])) st.viol_alpha += 1;
        if (st.range_misses(c, st.bar[c])) st.viol_bar += 1;
    }

    DecideResult result;
    bool solved = (st.viol_alpha == 0 || st.viol_bar == 0) && decide_rec(st, 1);
    if (st.timed_out) {
        result.status = DecideStatus::timeout;
        return result;
    }
    if (!solved) {
        result.status = DecideStatus::no;
        return result;
    }
    CutEvaluation ev = evaluate_cut(necklace, *st.found);
    if (!(ev.alpha == alpha || ev.alpha == st.bar))
        throw PromiseViolation("decide: found cut failed verification");
    result.status = DecideStatus::yes;
    result.cut = st.found;
    return result;
}

}  // namespace neckcut
