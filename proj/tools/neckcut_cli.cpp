#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "neckcut/generators.hpp"
#include "neckcut/io.hpp"
#include "neckcut/oracle.hpp"
#include "neckcut/reduction.hpp"

using nlohmann::json;
using namespace neckcut;

namespace {

struct Options {
    bool as_json = false;
};

void print(const Options& opt, const std::string& text, const json& machine) {
    if (opt.as_json)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << text;
}

json alpha_obj(const Necklace& neck, const AlphaVector& alpha) {
    json obj = json::object();
    for (ColourId c = 0; c < neck.colour_count(); ++c) obj[neck.colour_name(c)] = alpha[c];
    return obj;
}

json cut_obj(const Necklace& neck, const Cut& cut) {
    json obj = json::object();
    for (ColourId c = 0; c < neck.colour_count(); ++c) obj[neck.colour_name(c)] = cut.point[c];
    return obj;
}

std::string kv_lines(const Necklace& neck, const char* prefix, const std::vector<int>& values) {
    std::string out;
    for (ColourId c = 0; c < neck.colour_count(); ++c)
        out += std::string(prefix) + " " + neck.colour_name(c) + " " + std::to_string(values[c]) +
               "\n";
    return out;
}

void cmd_solve(const Options& opt, const std::string& neck_path, const std::string& alpha_path) {
    Necklace neck = read_necklace_file(neck_path);
    AlphaVector alpha = read_alpha_file(alpha_path, neck);
    CutPair pair = solve_alpha_pair(neck, alpha);

    CutEvaluation ev = evaluate_cut(neck, pair.cut);
    CutEvaluation evc = evaluate_cut(neck, pair.complement_cut);
    bool verified = ev.alpha == alpha && evc.alpha == complement_alpha(neck, alpha);
    if (!verified) throw PromiseViolation("solve: verification failed");

    std::string text;
    text += std::string("sign ") + sign_char(ev.pi_sign) + "\n";
    text += kv_lines(neck, "cut", pair.cut.point);
    text += std::string("complement_sign ") + sign_char(evc.pi_sign) + "\n";
    text += kv_lines(neck, "complement_cut", pair.complement_cut.point);
    text += "verified true\n";

    json machine{{"alpha", alpha_obj(neck, alpha)},
                 {"cut", cut_obj(neck, pair.cut)},
                 {"sign", std::string(1, sign_char(ev.pi_sign))},
                 {"complement",
                  {{"cut", cut_obj(neck, pair.complement_cut)},
                   {"sign", std::string(1, sign_char(evc.pi_sign))}}},
                 {"verified", true}};
    print(opt, text, machine);
}

void cmd_eval(const Options& opt, const std::string& neck_path, const std::string& cut_path) {
    Necklace neck = read_necklace_file(neck_path);
    Cut cut = read_cut_file(cut_path, neck);
    CutEvaluation ev = evaluate_cut(neck, cut);
    std::string text = std::string("sign ") + sign_char(ev.pi_sign) + "\n" +
                       kv_lines(neck, "alpha", ev.alpha.target);
    json machine{{"alpha", alpha_obj(neck, ev.alpha)},
                 {"sign", std::string(1, sign_char(ev.pi_sign))}};
    print(opt, text, machine);
}

void cmd_sep(const Options& opt, const std::string& neck_path, int limit) {
    Necklace neck = read_necklace_file(neck_path);
    int sep = separability(neck, limit);
    print(opt, std::to_string(sep) + "\n", json{{"separability", sep}});
}

void cmd_graph(const Options& opt, const std::string& neck_path, const std::string& dot_path,
               bool label) {
    Necklace neck = read_necklace_file(neck_path);
    std::string dot;
    if (label) {
        LabelPack pack = build_label_graph(neck);
        dot = label_graph_dot(pack.label_graph, neck.colour_names());
    } else {
        dot = walk_graph_dot(build_walk_graph(neck), neck.colour_names());
    }
    write_text_file(dot_path, dot);
    print(opt, "wrote " + dot_path + "\n", json{{"dot", dot_path}});
}

void emit_necklace(const Options& opt, const Necklace& neck, const std::string& out,
                   std::uint64_t seed) {
    std::string text = necklace_text(neck);
    json manifest{{"seed", seed},
                  {"n", neck.colour_count()},
                  {"beads", neck.bead_count()},
                  {"separability", nullptr}};
    if (neck.colour_count() <= 16)
        manifest["separability"] = separability(neck);
    if (out.empty()) {
        print(opt, text, json{{"necklace", neck.tokens()}, {"manifest", manifest}});
    } else {
        write_text_file(out, text);
        write_text_file(out + ".manifest.json", manifest.dump(2) + "\n");
        print(opt, "wrote " + out + "\n", json{{"necklace_file", out}, {"manifest", manifest}});
    }
}

void cmd_reduce(const Options& opt, const std::string& cnf_path, std::string prefix) {
    E3SatFormula formula = read_dimacs_file(cnf_path);
    ReductionOutput red = reduce_e3sat(formula);
    if (prefix.empty()) {
        prefix = cnf_path;
        auto dot = prefix.rfind('.');
        if (dot != std::string::npos) prefix = prefix.substr(0, dot);
    }
    write_text_file(prefix + ".neck", necklace_text(red.necklace));
    write_text_file(prefix + ".alpha", alpha_json(red.necklace, red.alpha));
    std::string legend;
    for (ColourId c = 0; c < red.necklace.colour_count(); ++c)
        legend += red.necklace.colour_name(c) + " " + red.legend[c] + "\n";
    write_text_file(prefix + ".legend", legend);

    std::string text = "wrote " + prefix + ".neck " + prefix + ".alpha " + prefix + ".legend\n";
    json machine{{"necklace_file", prefix + ".neck"},
                 {"alpha_file", prefix + ".alpha"},
                 {"legend_file", prefix + ".legend"},
                 {"n", red.necklace.colour_count()},
                 {"beads", red.necklace.bead_count()}};
    print(opt, text, machine);
}

void cmd_oracle_solve(const Options& opt, const std::string& neck_path,
                      const std::string& alpha_path, long long budget) {
    Necklace neck = read_necklace_file(neck_path);
    AlphaVector alpha = read_alpha_file(alpha_path, neck);
    auto cut = oracle_solve(neck, alpha, budget);
    if (!cut) {
        print(opt, "none\n", json{{"cut", nullptr}});
        return;
    }
    CutEvaluation ev = evaluate_cut(neck, *cut);
    print(opt,
          std::string("sign ") + sign_char(ev.pi_sign) + "\n" + kv_lines(neck, "cut", cut->point),
          json{{"cut", cut_obj(neck, *cut)}, {"sign", std::string(1, sign_char(ev.pi_sign))}});
}

void cmd_oracle_census(const Options& opt, const std::string& neck_path, long long budget) {
    Necklace neck = read_necklace_file(neck_path);
    AlphaCensus census = uniqueness_census(neck, budget);
    long long duplicates = 0;
    json dup_list = json::array();
    for (const auto& [alpha, cuts] : census.entries) {
        if (cuts.size() > 1) {
            ++duplicates;
            json entry{{"alpha", alpha}, {"cuts", cuts.size()}};
            if (dup_list.size() < 32) dup_list.push_back(entry);
        }
    }
    bool bijection = census_is_bijection(census);
    std::string text = "cuts " + std::to_string(census.total_cuts) + "\n" +
                       "distinct_alphas " + std::to_string(census.entries.size()) + "\n" +
                       "duplicated_alphas " + std::to_string(duplicates) + "\n" +
                       "bijection " + (bijection ? "true" : "false") + "\n";
    json machine{{"cuts", census.total_cuts},
                 {"distinct_alphas", census.entries.size()},
                 {"duplicated_alphas", duplicates},
                 {"duplicates", dup_list},
                 {"bijection", bijection}};
    print(opt, text, machine);
}

void cmd_decide(const Options& opt, const std::string& neck_path, const std::string& alpha_path,
                double budget) {
    Necklace neck = read_necklace_file(neck_path);
    AlphaVector alpha = read_alpha_file(alpha_path, neck);
    DecideResult res = decide_alpha_or_complement(neck, alpha, budget);
    std::string status = res.status == DecideStatus::yes      ? "yes"
                         : res.status == DecideStatus::no     ? "no"
                                                              : "timeout";
    std::string text = status + "\n";
    json machine{{"status", status}, {"cut", nullptr}};
    if (res.cut) {
        text += kv_lines(neck, "cut", res.cut->point);
        machine["cut"] = cut_obj(neck, *res.cut);
    }
    print(opt, text, machine);
}

void cmd_bench(const Options& opt, int n, long long beads, std::uint64_t seed) {
    Necklace neck = gen_irreducible(n, 2, seed, beads);
    AlphaVector alpha;
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    alpha = random_alpha(neck, rng);
    auto start = std::chrono::steady_clock::now();
    CutPair pair = solve_alpha_pair(neck, alpha);
    auto end = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(end - start).count();
    bool verified = evaluate_cut(neck, pair.cut).alpha == alpha;
    if (!verified) throw PromiseViolation("bench: verification failed");
    std::string text = "n " + std::to_string(n) + "\nbeads " + std::to_string(neck.bead_count()) +
                       "\nsolve_ms " + std::to_string(ms) + "\nverified true\n";
    print(opt, text,
          json{{"n", n}, {"beads", neck.bead_count()}, {"solve_ms", ms}, {"verified", true}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unfair splitting of separable necklaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable output");

    std::function<void()> run;

    {
        auto* c = app.add_subcommand("solve", "find the alpha-cut and its complement cut");
        auto neck = std::make_shared<std::string>();
        auto alpha = std::make_shared<std::string>();
        c->add_option("necklace", *neck, "necklace file")->required();
        c->add_option("--alpha", *alpha, "alpha file")->required();
        c->callback([&, neck, alpha] { run = [&, neck, alpha] { cmd_solve(opt, *neck, *alpha); }; });
    }
    {
        auto* c = app.add_subcommand("eval", "evaluate a cut");
        auto neck = std::make_shared<std::string>();
        auto cut = std::make_shared<std::string>();
        c->add_option("necklace", *neck, "necklace file")->required();
        c->add_option("--cut", *cut, "cut file")->required();
        c->callback([&, neck, cut] { run = [&, neck, cut] { cmd_eval(opt, *neck, *cut); }; });
    }
    {
        auto* c = app.add_subcommand("sep", "separability via walk-graph max-cut");
        auto neck = std::make_shared<std::string>();
        auto limit = std::make_shared<int>(24);
        c->add_option("necklace", *neck, "necklace file")->required();
        c->add_option("--limit", *limit, "max-cut vertex limit");
        c->callback([&, neck, limit] { run = [&, neck, limit] { cmd_sep(opt, *neck, *limit); }; });
    }
    {
        auto* c = app.add_subcommand("graph", "DOT export of the walk or label graph");
        auto neck = std::make_shared<std::string>();
        auto dot = std::make_shared<std::string>();
        auto label = std::make_shared<bool>(false);
        c->add_option("necklace", *neck, "necklace file")->required();
        c->add_option("--dot", *dot, "output DOT file")->required();
        c->add_flag("--label", *label, "export the label graph instead");
        c->callback([&, neck, dot, label] {
            run = [&, neck, dot, label] { cmd_graph(opt, *neck, *dot, *label); };
        });
    }
    {
        auto* gen = app.add_subcommand("gen", "construct necklaces");
        gen->require_subcommand(1);
        {
            auto* c = gen->add_subcommand("irreducible", "random irreducible necklace");
            auto n = std::make_shared<int>(9);
            auto maxc = std::make_shared<int>(2);
            auto seed = std::make_shared<std::uint64_t>(1);
            auto beads = std::make_shared<long long>(0);
            auto out = std::make_shared<std::string>();
            c->add_option("--n", *n, "colour count")->required();
            c->add_option("--max-comp", *maxc, "max component size");
            c->add_option("--seed", *seed, "rng seed");
            c->add_option("--beads", *beads, "exact total bead count");
            c->add_option("--out", *out, "output necklace file");
            c->callback([&, n, maxc, seed, beads, out] {
                run = [&, n, maxc, seed, beads, out] {
                    emit_necklace(opt, gen_irreducible(*n, *maxc, *seed, *beads), *out, *seed);
                };
            });
        }
        {
            auto* c = gen->add_subcommand("separable", "padded separable necklace");
            auto n = std::make_shared<int>(9);
            auto pairs = std::make_shared<int>(0);
            auto prepend = std::make_shared<int>(0);
            auto append = std::make_shared<int>(0);
            auto maxc = std::make_shared<int>(2);
            auto seed = std::make_shared<std::uint64_t>(1);
            auto out = std::make_shared<std::string>();
            c->add_option("--n", *n, "base colour count")->required();
            c->add_option("--pairs", *pairs, "neighbouring interval pairs");
            c->add_option("--prepend", *prepend, "intervals prepended");
            c->add_option("--append", *append, "intervals appended");
            c->add_option("--max-comp", *maxc, "max component size");
            c->add_option("--seed", *seed, "rng seed");
            c->add_option("--out", *out, "output necklace file");
            c->callback([&, n, pairs, prepend, append, maxc, seed, out] {
                run = [&, n, pairs, prepend, append, maxc, seed, out] {
                    PaddingSpec spec;
                    spec.neighbour_pairs = *pairs;
                    spec.prepend_intervals = *prepend;
                    spec.append_intervals = *append;
                    spec.max_component_size = *maxc;
                    emit_necklace(opt, gen_separable(*n, spec, *seed), *out, *seed);
                };
            });
        }
        {
            auto* c = gen->add_subcommand("catalogue", "exhaustive small catalogue");
            auto n = std::make_shared<int>(2);
            auto maxb = std::make_shared<int>(8);
            auto irr = std::make_shared<bool>(false);
            auto outdir = std::make_shared<std::string>(".");
            c->add_option("--n", *n, "colour count (at most 4)")->required();
            c->add_option("--max-beads", *maxb, "bead limit");
            c->add_flag("--irreducible", *irr, "only irreducible members");
            c->add_option("--out-dir", *outdir, "output directory");
            c->callback([&, n, maxb, irr, outdir] {
                run = [&, n, maxb, irr, outdir] {
                    auto members = catalogue_small(*n, *maxb, *irr);
                    json manifest = json::array();
                    for (std::size_t i = 0; i < members.size(); ++i) {
                        std::string path =
                            *outdir + "/cat_n" + std::to_string(*n) + "_" + std::to_string(i) +
                            ".neck";
                        write_text_file(path, necklace_text(members[i]));
                        manifest.push_back({{"file", path},
                                            {"n", members[i].colour_count()},
                                            {"beads", members[i].bead_count()},
                                            {"separability", separability(members[i])}});
                    }
                    std::string mpath = *outdir + "/catalogue_manifest.json";
                    write_text_file(mpath, manifest.dump(2) + "\n");
                    print(opt, "wrote " + std::to_string(members.size()) + " necklaces\n",
                          json{{"count", members.size()}, {"manifest", mpath}});
                };
            });
        }
    }
    {
        auto* c = app.add_subcommand("reduce", "hardness reductions");
        auto* sat = c->add_subcommand("sat", "E3-SAT formula to necklace-deciding instance");
        auto cnf = std::make_shared<std::string>();
        auto prefix = std::make_shared<std::string>();
        sat->add_option("cnf", *cnf, "DIMACS CNF file")->required();
        sat->add_option("--out-prefix", *prefix, "output file prefix");
        c->require_subcommand(1);
        sat->callback(
            [&, cnf, prefix] { run = [&, cnf, prefix] { cmd_reduce(opt, *cnf, *prefix); }; });
    }
    {
        auto* c = app.add_subcommand("oracle", "exhaustive ground truth");
        c->require_subcommand(1);
        {
            auto* s = c->add_subcommand("solve", "unique cut for an alpha vector");
            auto neck = std::make_shared<std::string>();
            auto alpha = std::make_shared<std::string>();
            auto budget = std::make_shared<long long>(kDefaultCutBudget);
            s->add_option("necklace", *neck, "necklace file")->required();
            s->add_option("--alpha", *alpha, "alpha file")->required();
            s->add_option("--budget", *budget, "cut enumeration budget");
            s->callback([&, neck, alpha, budget] {
                run = [&, neck, alpha, budget] { cmd_oracle_solve(opt, *neck, *alpha, *budget); };
            });
        }
        {
            auto* s = c->add_subcommand("census", "map every cut to its alpha vector");
            auto neck = std::make_shared<std::string>();
            auto budget = std::make_shared<long long>(kDefaultCutBudget);
            s->add_option("necklace", *neck, "necklace file")->required();
            s->add_option("--budget", *budget, "cut enumeration budget");
            s->callback([&, neck, budget] {
                run = [&, neck, budget] { cmd_oracle_census(opt, *neck, *budget); };
            });
        }
    }
    {
        auto* c = app.add_subcommand("decide", "alpha-or-complement decision, no promise");
        auto neck = std::make_shared<std::string>();
        auto alpha = std::make_shared<std::string>();
        auto budget = std::make_shared<double>(10.0);
        c->add_option("necklace", *neck, "necklace file")->required();
        c->add_option("--alpha", *alpha, "alpha file")->required();
        c->add_option("--budget", *budget, "time budget in seconds");
        c->callback([&, neck, alpha, budget] {
            run = [&, neck, alpha, budget] { cmd_decide(opt, *neck, *alpha, *budget); };
        });
    }
    {
        auto* c = app.add_subcommand("bench", "generate, solve and time one instance");
        auto n = std::make_shared<int>(101);
        auto beads = std::make_shared<long long>(10000);
        auto seed = std::make_shared<std::uint64_t>(1);
        c->add_option("--n", *n, "colour count")->required();
        c->add_option("--beads", *beads, "total bead count")->required();
        c->add_option("--seed", *seed, "rng seed");
        c->callback([&, n, beads, seed] {
            run = [&, n, beads, seed] { cmd_bench(opt, *n, *beads, *seed); };
        });
    }

    try {
        app.parse(argc, argv);
        if (run) run();
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const PromiseViolation& e) {
        if (opt.as_json)
            std::cout << json{{"error", {{"kind", "promise_violation"}, {"message", e.what()}}}}.dump(2)
                      << "\n";
        else
            std::cerr << "promise violation: " << e.what() << "\n";
        return 1;
    } catch (const LimitExceeded& e) {
        if (opt.as_json)
            std::cout << json{{"error", {{"kind", "limit"}, {"message", e.what()}}}}.dump(2) << "\n";
        else
            std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        if (opt.as_json)
            std::cout << json{{"error", {{"kind", "format"}, {"message", e.what()}}}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
