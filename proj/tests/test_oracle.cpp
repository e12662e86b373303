#include <set>

#include "doctest.h"
#include "neckcut/generators.hpp"
#include "neckcut/oracle.hpp"
#include "neckcut/walk_graph.hpp"
#include "test_helpers.hpp"

using namespace neckcut;
using neckcut::testing::alpha_of;
using neckcut::testing::cut_of;
using neckcut::testing::neck;

TEST_CASE("enumerate_all_cuts covers every combination") {
    Necklace aaa = neck("a a a");
    std::set<std::vector<int>> alphas;
    int count = 0;
    enumerate_all_cuts(aaa, [&](const Cut&, const CutEvaluation& ev) {
        ++count;
        alphas.insert(ev.alpha.target);
    });
    CHECK(count == 3);
    CHECK(alphas == std::set<std::vector<int>>{{1}, {2}, {3}});

    int count2 = 0;
    std::set<std::vector<int>> alphas2;
    enumerate_all_cuts(neck("a a b b"), [&](const Cut&, const CutEvaluation& ev) {
        ++count2;
        alphas2.insert(ev.alpha.target);
    });
    CHECK(count2 == 4);
    CHECK(alphas2 == std::set<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});

    int count3 = 0;
    enumerate_all_cuts(neck("b a a b"), [&](const Cut&, const CutEvaluation&) { ++count3; });
    CHECK(count3 == 4);
}

TEST_CASE("enumeration budget") {
    Necklace big = gen_irreducible(12, 4, 5);
    CHECK_THROWS_AS(enumerate_all_cuts(big, [](const Cut&, const CutEvaluation&) {}, 100),
                    LimitExceeded);
}

TEST_CASE("oracle solve examples") {
    Necklace aabb = neck("a a b b");
    auto s = oracle_solve(aabb, alpha_of(aabb, {{"a", 1}, {"b", 1}}));
    REQUIRE(s.has_value());
    CHECK(*s == cut_of(aabb, {{"a", 1}, {"b", 4}}));

    Necklace aba = neck("a b a");
    auto s2 = oracle_solve(aba, alpha_of(aba, {{"a", 1}, {"b", 1}}));
    REQUIRE(s2.has_value());
    CHECK(*s2 == cut_of(aba, {{"a", 3}, {"b", 2}}));

    // Absence on a non-separable necklace: "a b a b" realises only the
    // diagonal vectors.
    Necklace abab = neck("a b a b");
    CHECK_FALSE(oracle_solve(abab, alpha_of(abab, {{"a", 1}, {"b", 2}})).has_value());
}

TEST_CASE("oracle reports multiplicity instead of guessing") {
    Necklace abab = neck("a b a b");
    CHECK_THROWS_AS(oracle_solve(abab, alpha_of(abab, {{"a", 1}, {"b", 1}})), MultiplicityError);
}

TEST_CASE("census bijection on separable fixtures") {
    AlphaCensus aaa = uniqueness_census(neck("a a a"));
    CHECK(census_is_bijection(aaa));
    CHECK(aaa.entries.size() == 3);

    Necklace euler = neck("1 2 3 1 6 5 4 3 5");
    AlphaCensus ec = uniqueness_census(euler);
    CHECK(census_is_bijection(ec));
    long long product = 1;
    for (ColourId c = 0; c < euler.colour_count(); ++c) product *= euler.colour_size(c);
    CHECK(ec.total_cuts == product);

    // 3-separable with only two colours: the promise fails and so does the
    // bijection.
    AlphaCensus abab = uniqueness_census(neck("a b a b"));
    CHECK_FALSE(census_is_bijection(abab));
    CHECK(abab.total_cuts == 4);
    CHECK(abab.entries.size() == 2);
}

TEST_CASE("census inverts evaluation on separable necklaces") {
    Necklace n = gen_irreducible(7, 2, 12);
    REQUIRE(separability(n) == 7);
    enumerate_all_cuts(n, [&](const Cut& cut, const CutEvaluation& ev) {
        auto back = oracle_solve(n, ev.alpha);
        REQUIRE(back.has_value());
        CHECK(*back == cut);
    });
}
