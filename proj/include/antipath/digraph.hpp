#pragma once

// Oriented graphs on at most 64 vertices, stored as per-vertex out- and
// in-neighbour bit masks.

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace antipath
{
    using VertexSet = std::uint64_t;
    using TritCode = boost::multiprecision::cpp_int;

    inline constexpr int max_vertices = 64;

    constexpr auto bit(int v) -> VertexSet { return VertexSet{1} << v; }
    constexpr auto contains(VertexSet s, int v) -> bool { return (s >> v) & 1U; }
    constexpr auto count(VertexSet s) -> int { return std::popcount(s); }
    constexpr auto first_vertex(VertexSet s) -> int { return std::countr_zero(s); }
    constexpr auto all_vertices(int n) -> VertexSet { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

    /// Calls f(v) for every member of s in increasing order.
    template <typename F>
    void for_each_vertex(VertexSet s, F && f)
    {
        while (s) {
            f(first_vertex(s));
            s &= s - 1;
        }
    }

    class GraphError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    struct Arc
    {
        int from;
        int to;

        friend auto operator<=>(const Arc &, const Arc &) = default;
    };

    class OrientedGraph
    {
    public:
        OrientedGraph() = default;

        /// Arcless graph on n vertices.
        explicit OrientedGraph(int n);

        /// Throws GraphError on loops, out-of-range endpoints, duplicate or
        /// antiparallel arcs.
        OrientedGraph(int n, std::span<const Arc> arcs);

        /// out[v] is the out-neighbourhood of v. Same validation as above.
        static auto from_out_neighbourhoods(std::vector<VertexSet> out) -> OrientedGraph;

        auto size() const -> int { return static_cast<int>(out_.size()); }
        auto vertices() const -> VertexSet { return all_vertices(size()); }
        auto has_arc(int u, int v) const -> bool { return contains(out_[u], v); }
        auto adjacent(int u, int v) const -> bool { return contains(out_[u] | in_[u], v); }
        auto out_neighbours(int v) const -> VertexSet { return out_[v]; }
        auto in_neighbours(int v) const -> VertexSet { return in_[v]; }
        auto out_degree(int v) const -> int { return count(out_[v]); }
        auto in_degree(int v) const -> int { return count(in_[v]); }
        auto arc_count() const -> int;

        /// Arcs sorted by (from, to).
        auto arcs() const -> std::vector<Arc>;

        friend auto operator==(const OrientedGraph &, const OrientedGraph &) -> bool = default;

    private:
        std::vector<VertexSet> out_;
        std::vector<VertexSet> in_;
    };

    struct DegreeProfile
    {
        std::vector<int> out_deg;
        std::vector<int> in_deg;
        int delta0 = 0;
        int pseudo_delta0 = 0;
    };

    /// delta0 is min over all v of min(d+(v), d-(v)); pseudo_delta0 is the
    /// minimum over all strictly positive out- and in-degrees (0 when arcless).
    auto degree_profile(const OrientedGraph & g) -> DegreeProfile;

    /// Just the pseudo-semi-degree, without allocating.
    auto pseudo_semi_degree(const OrientedGraph & g) -> int;
    auto semi_degree(const OrientedGraph & g) -> int;

    /// Relabels s[i] to i.
    auto induced_subdigraph(const OrientedGraph & g, std::span<const int> s) -> OrientedGraph;

    // Trit codes. Unordered pairs {i,j}, i<j, are indexed lexicographically;
    // digit 0 = no arc, 1 = i->j, 2 = j->i; code = sum digit_p * 3^p.

    auto pair_count(int n) -> int;
    auto trit_code_bound(int n) -> TritCode;
    auto to_trit_code(const OrientedGraph & g) -> TritCode;
    auto from_trit_code(int n, const TritCode & code) -> OrientedGraph;

    /// Fast path for enumeration, n <= 9 so that the bound fits in 64 bits.
    auto from_trit_code(int n, std::uint64_t code) -> OrientedGraph;
    auto to_trit_code_u64(const OrientedGraph & g) -> std::uint64_t;

    // Text format: '#' comment lines, then "n <count>", then one "u v" line
    // per arc u->v.

    auto read_graph(std::istream & in) -> OrientedGraph;
    auto parse_graph(const std::string & text) -> OrientedGraph;
    void write_graph(std::ostream & out, const OrientedGraph & g);
    auto format_graph(const OrientedGraph & g) -> std::string;

    /// Parses the inline "N:TRIT" form.
    auto parse_code_spec(const std::string & spec) -> OrientedGraph;
}
