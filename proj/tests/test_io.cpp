#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "neckcut/io.hpp"
#include "test_helpers.hpp"

using namespace neckcut;
using neckcut::testing::alpha_of;
using neckcut::testing::neck;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = "neckcut_io_test_" + std::to_string(counter++) + ".tmp";
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("necklace text round trip") {
    Necklace n = neck("b a a b");
    std::istringstream in(necklace_text(n));
    CHECK(read_necklace(in).tokens() == n.tokens());
}

TEST_CASE("alpha files in both formats") {
    Necklace n = neck("a a b b");
    TempFile text("a 2\nb 1\n");
    AlphaVector from_text = read_alpha_file(text.path, n);
    CHECK(from_text == alpha_of(n, {{"a", 2}, {"b", 1}}));

    TempFile json_file("{\"alpha\": {\"a\": 2, \"b\": 1}}\n");
    CHECK(read_alpha_file(json_file.path, n) == from_text);

    TempFile round(alpha_json(n, from_text));
    CHECK(read_alpha_file(round.path, n) == from_text);

    TempFile bad("a 5\nb 1\n");
    CHECK_THROWS_AS(read_alpha_file(bad.path, n), FormatError);
    TempFile unknown("a 1\nq 1\n");
    CHECK_THROWS_AS(read_alpha_file(unknown.path, n), FormatError);
}

TEST_CASE("cut files in both formats") {
    Necklace n = neck("a a b b");
    TempFile text("a 2\nb 3\n");
    Cut cut = read_cut_file(text.path, n);
    CHECK(cut.point == std::vector<BeadPos>{2, 3});

    TempFile round(cut_json(n, cut, Parity::even));
    CHECK(read_cut_file(round.path, n) == cut);

    TempFile wrong_colour("a 3\nb 4\n");
    CHECK_THROWS_AS(read_cut_file(wrong_colour.path, n), FormatError);
}

TEST_CASE("dot export shapes") {
    Necklace n = neck("1 2 3 1 6 5 4 3 5");
    std::string walk = walk_graph_dot(build_walk_graph(n), n.colour_names());
    CHECK(walk.find("graph walk {") == 0);
    CHECK(walk.find("\"1\" -- \"2\";") != std::string::npos);

    LabelPack pack = build_label_graph(n);
    std::string label = label_graph_dot(pack.label_graph, n.colour_names());
    CHECK(label.find("[style=dashed]") != std::string::npos);  // closure edge

    // Parallel edges appear once per multiplicity.
    Necklace abab = neck("a b a b");
    std::string dot = walk_graph_dot(build_walk_graph(abab), abab.colour_names());
    std::size_t count = 0, at = 0;
    while ((at = dot.find("\"a\" -- \"b\";", at)) != std::string::npos) {
        ++count;
        ++at;
    }
    CHECK(count == 3);
}

TEST_CASE("ilp dump round trip") {
    BinaryIlp ilp;
    ilp.var_count = 3;
    ilp.constraints = {LinearConstraint{{{0, 2}, {2, -1}}, Cmp::le, 4},
                       LinearConstraint{{{1, 1}}, Cmp::ge, 1},
                       LinearConstraint{{{0, 1}, {1, 1}, {2, 1}}, Cmp::eq, 2}};
    std::istringstream in(ilp_dump(ilp));
    BinaryIlp back = read_ilp(in);
    CHECK(back.var_count == 3);
    REQUIRE(back.constraints.size() == 3);
    CHECK(back.constraints[0].terms == ilp.constraints[0].terms);
    CHECK(back.constraints[0].cmp == Cmp::le);
    CHECK(back.constraints[0].bound == 4);
    CHECK(back.constraints[2].cmp == Cmp::eq);
}

TEST_CASE("labelling dump lists every edge") {
    Necklace n = neck("1 2 3 1 6 5 4 3 5");
    LabelPack pack = build_label_graph(n);
    CutLabelling lab;
    lab.positive.assign(pack.label_graph.graph.edge_count(), 1);
    std::string dump = labelling_dump(pack.label_graph, n.colour_names(), lab);
    std::size_t lines = std::count(dump.begin(), dump.end(), '\n');
    CHECK(lines == static_cast<std::size_t>(pack.label_graph.graph.edge_count()));
    CHECK(dump.find("positive") != std::string::npos);
}
