#include <doctest.h>

#include "fixtures.hpp"
#include "triclose/oracle.hpp"
#include "triclose/projection.hpp"

using namespace triclose;

TEST_CASE("brute two-path counts") {
    auto counts = oracle::brute_two_paths(project_one_mode(fixtures::five_paper()));
    CHECK(counts.total == 5);
    CHECK(counts.closed == 3);

    auto tri = oracle::brute_two_paths(project_one_mode(fixtures::single_triple_paper()));
    CHECK(tri.total == 3);
    CHECK(tri.closed == 3);

    auto empty = oracle::brute_two_paths(project_one_mode(fixtures::make_corpus({})));
    CHECK(empty.total == 0);
    CHECK(empty.closed == 0);
}

TEST_CASE("brute four-path enumeration") {
    auto paths = oracle::brute_four_paths(fixtures::five_paper());
    CHECK(paths.size() == 7);
    int closed = 0;
    for (const auto& [p, c] : paths) closed += c;
    CHECK(closed == 5);

    CHECK(oracle::brute_four_paths(fixtures::single_triple_paper()).empty());
}

TEST_CASE("brute tcc on the worked fixture") {
    Corpus c = fixtures::five_paper();
    auto off = oracle::brute_tcc(c, WindowSpec{2009, 5}, false, Eligibility::Strict);
    CHECK(off.eligible_pairs == 2);
    CHECK(off.closed_pairs == 1);
    auto on = oracle::brute_tcc(c, WindowSpec{2009, 5}, true, Eligibility::Strict);
    CHECK(on.eligible_pairs == 1);
    CHECK(on.closed_pairs == 1);

    auto empty_preceding = oracle::brute_tcc(
        fixtures::make_corpus({{"A", 2009, {"X", "Y"}}}), WindowSpec{2009, 5},
        false, Eligibility::Strict);
    CHECK_FALSE(empty_preceding.defined);
}

TEST_CASE("oracles refuse inputs above their caps") {
    std::vector<fixtures::Rec> recs;
    for (int i = 0; i < 40; ++i)
        recs.push_back({"p" + std::to_string(i), 2000,
                        {"a" + std::to_string(i), "b" + std::to_string(i)}});
    Corpus big = fixtures::make_corpus(recs);
    CHECK_THROWS_AS(oracle::brute_four_paths(big), DataError);
    CHECK_THROWS_AS(oracle::brute_tcc(big, WindowSpec{2001, 1}, false, Eligibility::Strict),
                    DataError);
    std::vector<fixtures::Rec> wide;
    for (int i = 0; i < 70; ++i)
        wide.push_back({"q" + std::to_string(i), 2000,
                        {"hub", "x" + std::to_string(i)}});
    CHECK_THROWS_AS(oracle::brute_two_paths(project_one_mode(fixtures::make_corpus(wide))),
                    DataError);
}

TEST_CASE("fast counters equal oracles on random corpora") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Corpus c = fixtures::random_corpus(seed);
        auto g = project_one_mode(c);
        auto two = oracle::brute_two_paths(g);
        CHECK(count_two_paths(g) == two.total);
        CHECK(count_closed_two_paths(g) == two.closed);

        auto four = oracle::brute_four_paths(c);
        std::uint64_t closed = 0;
        for (const auto& [p, cl] : four) closed += cl;
        CHECK(count_four_paths(c) == four.size());
        CHECK(count_closed_four_paths(c) == closed);
    }
}
