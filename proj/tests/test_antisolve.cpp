#include <antipath/antisolve.hpp>
#include <antipath/generators.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace antipath;

namespace
{
    auto graph(int n, std::vector<Arc> arcs) -> OrientedGraph
    {
        return OrientedGraph(n, arcs);
    }

    const auto triangle = graph(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto cherry = graph(3, {{0, 1}, {2, 1}});
    const auto bipartite = graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const auto square = graph(5, {{1, 2}, {3, 2}, {3, 4}, {1, 4}});
}

TEST_CASE("longest antipath examples")
{
    CHECK(longest_antipath(triangle).length() == 1);

    auto p = longest_antipath(cherry);
    CHECK(p == AlternatingPath{{0, 1, 2}, Lead::Out});

    auto q = longest_antipath(bipartite);
    CHECK(q == AlternatingPath{{0, 2, 1, 3}, Lead::Out});

    auto lone = longest_antipath(OrientedGraph(3));
    CHECK(lone == AlternatingPath{{0}, Lead::Out});

    CHECK_THROWS_AS(longest_antipath(OrientedGraph(0)), GraphError);
}

TEST_CASE("longest anticycle examples")
{
    CHECK_FALSE(longest_anticycle(triangle));
    auto c = longest_anticycle(square);
    REQUIRE(c);
    CHECK(c->vertices == std::vector<int>{1, 2, 3, 4});

    // Oracle value: no two vertices of the 5-vertex circulant share two
    // out-neighbours, so there is no anticycle at all.
    CHECK_FALSE(longest_anticycle(circulant_tournament(5)));
    CHECK(longest_anticycle(circulant_tournament(7))->length() == 4);
    CHECK(longest_anticycle(bipartite)->vertices == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("longest directed path examples")
{
    CHECK(longest_directed_path(triangle) == std::vector<int>{0, 1, 2});
    CHECK(longest_directed_path(OrientedGraph(4)).size() == 1);
    CHECK(longest_directed_path(OrientedGraph(0)).empty());
    for (int k = 2; k <= 12; ++k)
        CHECK(longest_directed_path(construction_d(k)).size() == 2);
}

TEST_CASE("exact-length antipath queries")
{
    CHECK(contains_antipath_of_length(bipartite, 2, Lead::Out));   // |X| >= 2
    CHECK(contains_antipath_of_length(bipartite, 2, Lead::In));    // |Y| >= 2
    auto star = graph(3, {{0, 1}, {0, 2}});
    CHECK_FALSE(contains_antipath_of_length(star, 2, Lead::Out));
    CHECK(contains_antipath_of_length(star, 2, Lead::In));

    CHECK(contains_antipath_of_length(OrientedGraph(1), 0, Lead::In));
    CHECK_FALSE(contains_antipath_of_length(OrientedGraph(0), 0, Lead::Out));
    CHECK_FALSE(contains_antipath_of_length(triangle, -1, Lead::Out));

    auto found = find_antipath_of_length(bipartite, 3, Lead::In);
    REQUIRE(found);
    CHECK(is_valid_antipath(bipartite, *found));
}

TEST_CASE("validators and canonical anticycles")
{
    CHECK(is_valid_antipath(cherry, {{2, 1, 0}, Lead::Out}));
    CHECK_FALSE(is_valid_antipath(cherry, {{0, 1, 2}, Lead::In}));
    CHECK_FALSE(is_valid_antipath(cherry, {{0, 1, 0}, Lead::Out}));
    CHECK_FALSE(is_valid_antipath(cherry, {{}, Lead::Out}));
    CHECK(is_valid_antipath(cherry, {{1}, Lead::In}));

    CHECK(is_valid_anticycle(square, {{1, 2, 3, 4}}));
    CHECK_FALSE(is_valid_anticycle(square, {{2, 3, 4, 1}}));
    CHECK(canonical_anticycle(square, {2, 3, 4, 1}).vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(canonical_anticycle(square, {4, 3, 2, 1}).vertices == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(canonical_anticycle(square, {1, 2, 3}), GraphError);
    CHECK_THROWS_AS(canonical_anticycle(triangle, {0, 1, 2, 0}), GraphError);

    auto r = reversed(AlternatingPath{{0, 1, 2}, Lead::Out});
    CHECK(r == AlternatingPath{{2, 1, 0}, Lead::Out});
    auto r2 = reversed(AlternatingPath{{0, 2, 1, 3}, Lead::Out});
    CHECK(r2.lead == Lead::In);
    CHECK(is_valid_antipath(bipartite, r2));
}

TEST_CASE("solvers agree with the brute-force oracle on every graph with n <= 4")
{
    for (int n = 1; n <= 4; ++n)
        enumerate_all(n, [&](std::uint64_t, const OrientedGraph & g) {
            auto p = longest_antipath(g);
            auto expected = oracle::longest_antipath(g);
            REQUIRE(is_valid_antipath(g, p));
            REQUIRE(p.vertices == expected.vertices);
            if (p.length() > 0)
                REQUIRE((p.lead == Lead::Out) == expected.lead_out);

            auto c = longest_anticycle(g);
            REQUIRE((c ? c->length() : 0) == oracle::longest_anticycle_length(g));
            if (c)
                REQUIRE(canonical_anticycle(g, c->vertices) == *c);

            auto d = longest_directed_path(g);
            REQUIRE(static_cast<int>(d.size()) - 1 == oracle::longest_directed_path_length(g));

            for (int len = 0; len <= n; ++len)
                for (auto lead : {Lead::Out, Lead::In})
                    REQUIRE(contains_antipath_of_length(g, len, lead) == oracle::has_antipath(g, len, lead == Lead::Out));
        });
}

TEST_CASE("solvers agree with the oracle on random graphs with 5 to 7 vertices")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + trial % 3;
        auto g = random_oriented(n, 0.3 + 0.1 * (trial % 7), rng());
        auto p = longest_antipath(g);
        auto expected = oracle::longest_antipath(g);
        REQUIRE(p.vertices == expected.vertices);
        auto c = longest_anticycle(g);
        REQUIRE((c ? c->length() : 0) == oracle::longest_anticycle_length(g));
        if (c)
            REQUIRE(is_valid_anticycle(g, *c));
        REQUIRE(static_cast<int>(longest_directed_path(g).size()) - 1 == oracle::longest_directed_path_length(g));
        for (std::uint64_t pattern = 0; pattern < 8; ++pattern)
            REQUIRE(find_oriented_path(g, 3, pattern).has_value() == oracle::has_oriented_path(g, 3, pattern));
    }
}

TEST_CASE("phase symmetry, monotonicity and self-consistency on all graphs with n <= 5")
{
    for (int n = 1; n <= 5; ++n)
        enumerate_all(n, [&](std::uint64_t, const OrientedGraph & g) {
            int longest = longest_antipath(g).length();
            int max_contained = -1;
            for (int len = 0; len <= n; ++len) {
                bool out = contains_antipath_of_length(g, len, Lead::Out);
                bool in = contains_antipath_of_length(g, len, Lead::In);
                if (len % 2 == 1)
                    REQUIRE(out == in);
                if (out || in)
                    max_contained = len;
                // dropping an end vertex keeps an antipath of every type one shorter
                if ((out || in) && len >= 1) {
                    REQUIRE(contains_antipath_of_length(g, len - 1, Lead::Out));
                    REQUIRE(contains_antipath_of_length(g, len - 1, Lead::In));
                }
            }
            REQUIRE(max_contained == longest);
            REQUIRE_FALSE(contains_antipath_of_length(g, longest + 1, Lead::Out));
            REQUIRE_FALSE(contains_antipath_of_length(g, longest + 1, Lead::In));

            if (auto c = longest_anticycle(g))
                REQUIRE(c->length() % 2 == 0);
        });
}

TEST_CASE("leading endpoint of a longest antipath has its relevant neighbourhood on the path")
{
    for (int n = 1; n <= 5; ++n)
        enumerate_all(n, [&](std::uint64_t, const OrientedGraph & g) {
            auto p = longest_antipath(g);
            if (p.length() == 0)
                return;
            VertexSet on_path = 0;
            for (int v : p.vertices)
                on_path |= bit(v);
            for (const auto & q : {p, reversed(p)}) {
                int x1 = q.vertices[0];
                auto nbrs = q.lead == Lead::Out ? g.out_neighbours(x1) : g.in_neighbours(x1);
                REQUIRE((nbrs & ~on_path) == 0);
            }
        });
}
