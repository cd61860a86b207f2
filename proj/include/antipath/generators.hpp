#pragma once

#include <antipath/digraph.hpp>

#include <cstdint>
#include <string>

namespace antipath
{
    enum class Family
    {
        Circulant,
        RegularUnion,
        ConstructionD,
        Random,
        Enumerate
    };

    auto to_string(Family f) -> std::string;
    auto parse_family_name(const std::string & name) -> Family;

    /// Parameters for one graph family. Which fields matter depends on the
    /// family: circulant(n), regular-union(k, copies), construction-d(k),
    /// random(n, p, seed), enumerate(n).
    struct FamilySpec
    {
        Family family = Family::Circulant;
        int n = 0;
        int k = 0;
        int copies = 1;
        double p = 0.0;
        std::uint64_t seed = 0;

        friend auto operator==(const FamilySpec &, const FamilySpec &) -> bool = default;
    };

    /// "circulant:n=5", "random:n=8,p=0.5,seed=7", ... Only the fields the
    /// family uses are written.
    auto format_family(const FamilySpec & spec) -> std::string;
    auto parse_family(const std::string & text) -> FamilySpec;

    /// Throws GraphError when the family's constraints fail.
    void validate(const FamilySpec & spec);

    /// Builds the single graph a spec names (enumerate is not a single graph).
    auto build(const FamilySpec & spec) -> OrientedGraph;

    /// i -> i+d (mod n) for d in [1, (n-1)/2]. n odd, n >= 3.
    auto circulant_tournament(int n) -> OrientedGraph;

    /// copies of circulant_tournament(k) on blocks [c*k, (c+1)*k).
    auto disjoint_regular_tournaments(int k, int copies) -> OrientedGraph;

    /// Side size ceil((3k-2)/4).
    auto construction_d_side(int k) -> int;

    /// Complete bipartite orientation X -> Y, X = [0, m), Y = [m, 2m).
    auto construction_d(int k) -> OrientedGraph;

    /// Pairs {i,j} are visited in trit-code order using std::mt19937_64
    /// seeded with `seed`. For each pair one draw u decides presence:
    /// (u >> 11) * 2^-53 < p. If present, a second draw decides direction:
    /// even gives i -> j, odd gives j -> i.
    auto random_oriented(int n, double p, std::uint64_t seed) -> OrientedGraph;

    /// 3^C(n,2) for n <= 9.
    auto graph_count(int n) -> std::uint64_t;

    /// Calls f(code, graph) for every code in [lo, hi) in increasing order.
    template <typename F>
    void enumerate_all(int n, std::uint64_t lo, std::uint64_t hi, F && f)
    {
        auto total = graph_count(n);
        if (lo > hi || hi > total)
            throw GraphError("enumeration range [" + std::to_string(lo) + ", " + std::to_string(hi)
                    + ") outside [0, " + std::to_string(total) + ")");
        for (auto code = lo; code < hi; ++code)
            f(code, from_trit_code(n, code));
    }

    template <typename F>
    void enumerate_all(int n, F && f)
    {
        enumerate_all(n, 0, graph_count(n), std::forward<F>(f));
    }

    struct PeelResult
    {
        OrientedGraph graph;
        int deleted_arcs = 0;
    };

    /// Repeatedly takes the least vertex v (out-side before in-side) whose
    /// positive out-degree d satisfies den * d < num and deletes all its
    /// out-arcs (likewise for in-arcs), until no vertex qualifies. Afterwards
    /// every positive semi-degree d has den * d >= num.
    auto peel_to_threshold(const OrientedGraph & g, int num, int den) -> PeelResult;

    /// Peels to 2 * pseudo_semi_degree >= k + 1. Requires more than k*n arcs
    /// (throws GraphError otherwise); the result then keeps at least one arc.
    auto dense_subdigraph(const OrientedGraph & g, int k) -> PeelResult;
}
