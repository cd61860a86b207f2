#include <antipath/digraph.hpp>
#include <antipath/generators.hpp>

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

using namespace antipath;

TEST_CASE("construction rejects loops, duplicates and antiparallel arcs")
{
    std::vector<Arc> loop{{1, 1}};
    std::vector<Arc> dup{{0, 1}, {0, 1}};
    std::vector<Arc> anti{{0, 1}, {1, 0}};
    std::vector<Arc> range{{0, 3}};
    CHECK_THROWS_AS(OrientedGraph(3, loop), GraphError);
    CHECK_THROWS_AS(OrientedGraph(3, dup), GraphError);
    CHECK_THROWS_AS(OrientedGraph(3, anti), GraphError);
    CHECK_THROWS_AS(OrientedGraph(3, range), GraphError);
    CHECK_THROWS_AS(OrientedGraph(65), GraphError);
    CHECK_THROWS_AS(OrientedGraph::from_out_neighbourhoods({bit(1), bit(0)}), GraphError);
}

TEST_CASE("degree profile")
{
    SUBCASE("single arc")
    {
        std::vector<Arc> arcs{{0, 1}};
        auto p = degree_profile(OrientedGraph(2, arcs));
        CHECK(p.out_deg == std::vector<int>{1, 0});
        CHECK(p.in_deg == std::vector<int>{0, 1});
        CHECK(p.delta0 == 0);
        CHECK(p.pseudo_delta0 == 1);
    }
    SUBCASE("arcless")
    {
        auto p = degree_profile(OrientedGraph(3));
        CHECK(p.delta0 == 0);
        CHECK(p.pseudo_delta0 == 0);
    }
    SUBCASE("circulant tournament on five vertices")
    {
        auto p = degree_profile(circulant_tournament(5));
        CHECK(p.out_deg == std::vector<int>(5, 2));
        CHECK(p.in_deg == std::vector<int>(5, 2));
        CHECK(p.delta0 == 2);
        CHECK(p.pseudo_delta0 == 2);
    }
}

TEST_CASE("induced subdigraph")
{
    auto c5 = circulant_tournament(5);

    std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(induced_subdigraph(c5, all) == c5);

    std::vector<int> three{0, 1, 2};
    std::vector<Arc> expected{{0, 1}, {0, 2}, {1, 2}};
    CHECK(induced_subdigraph(c5, three).arcs() == expected);

    CHECK(induced_subdigraph(c5, {}).size() == 0);

    std::vector<int> relabel{3, 0};
    auto sub = induced_subdigraph(c5, relabel);
    CHECK(sub.has_arc(0, 1));   // 3 -> 0 in c5

    std::vector<int> bad{0, 5};
    std::vector<int> repeated{1, 1};
    CHECK_THROWS_AS(induced_subdigraph(c5, bad), GraphError);
    CHECK_THROWS_AS(induced_subdigraph(c5, repeated), GraphError);
}

TEST_CASE("trit codes")
{
    CHECK(from_trit_code(2, std::uint64_t{1}).arcs() == std::vector<Arc>{{0, 1}});
    CHECK(from_trit_code(2, std::uint64_t{0}).arc_count() == 0);
    CHECK(from_trit_code(2, std::uint64_t{2}).arcs() == std::vector<Arc>{{1, 0}});

    std::vector<Arc> arcs{{0, 1}, {2, 1}, {0, 2}};
    CHECK(to_trit_code(OrientedGraph(3, arcs)) == 22);

    CHECK_THROWS_AS(from_trit_code(2, std::uint64_t{3}), GraphError);
    CHECK_THROWS_AS(from_trit_code(3, TritCode(27)), GraphError);
    CHECK_THROWS_AS(from_trit_code(3, TritCode(-1)), GraphError);
    CHECK(trit_code_bound(5) == 59049);

    SUBCASE("round trip for every code with n <= 5")
    {
        for (int n = 0; n <= 5; ++n)
            for (std::uint64_t c = 0; c < graph_count(n); ++c)
                REQUIRE(to_trit_code_u64(from_trit_code(n, c)) == c);
    }

    SUBCASE("big codes agree with the fast path and survive large n")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            auto g = random_oriented(20, 0.6, rng());
            CHECK(from_trit_code(20, to_trit_code(g)) == g);
        }
        auto small = random_oriented(6, 0.7, 3);
        CHECK(from_trit_code(6, to_trit_code(small)) == from_trit_code(6, to_trit_code_u64(small)));
    }
}

TEST_CASE("degree invariants on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        double p = static_cast<double>(rng() % 101) / 100.0;
        auto g = random_oriented(n, p, rng());
        auto prof = degree_profile(g);

        int out_sum = 0, in_sum = 0;
        bool some_vertex_has_both = false;
        bool all_have_both = true;
        for (int v = 0; v < n; ++v) {
            out_sum += prof.out_deg[v];
            in_sum += prof.in_deg[v];
            bool both = prof.out_deg[v] > 0 && prof.in_deg[v] > 0;
            some_vertex_has_both |= both;
            all_have_both &= both;
        }
        CHECK(out_sum == g.arc_count());
        CHECK(in_sum == g.arc_count());
        CHECK(prof.delta0 <= prof.pseudo_delta0);
        CHECK((prof.pseudo_delta0 == 0) == (g.arc_count() == 0));
        CHECK((prof.delta0 == 0) == ! all_have_both);
        if (! some_vertex_has_both)
            CHECK(prof.delta0 == 0);

        // induced subgraphs stay oriented and keep exactly the inner arcs
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (rng() % 2)
                subset.push_back(v);
        auto sub = induced_subdigraph(g, subset);
        int inner = 0;
        for (auto [u, v] : g.arcs())
            inner += std::count(subset.begin(), subset.end(), u) && std::count(subset.begin(), subset.end(), v);
        CHECK(sub.arc_count() == inner);
        for (int u = 0; u < sub.size(); ++u)
            CHECK((sub.out_neighbours(u) & sub.in_neighbours(u)) == 0);
    }
}

TEST_CASE("text format")
{
    std::vector<Arc> arcs{{2, 1}, {0, 1}};
    OrientedGraph g(3, arcs);
    auto text = format_graph(g);
    CHECK(text == "# code 19\nn 3\n0 1\n2 1\n");
    CHECK(parse_graph(text) == g);

    CHECK(parse_graph("# hello\n\nn 2\n# mid\n1 0\n").arcs() == std::vector<Arc>{{1, 0}});
    CHECK_THROWS_AS(parse_graph("0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_graph(""), GraphError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 1 2\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 x\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 1\n1 0\n"), GraphError);
}

TEST_CASE("inline code spec")
{
    CHECK(parse_code_spec("3:22") == parse_graph("n 3\n0 1\n2 1\n0 2\n"));
    CHECK_THROWS_AS(parse_code_spec("3"), GraphError);
    CHECK_THROWS_AS(parse_code_spec("3:"), GraphError);
    CHECK_THROWS_AS(parse_code_spec("3:-1"), GraphError);
    CHECK_THROWS_AS(parse_code_spec("2:3"), GraphError);
}
