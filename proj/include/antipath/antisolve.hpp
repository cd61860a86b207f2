#pragma once

// Exact solvers for antipaths, anticycles and directed paths.
//
// All searches are depth-first over simple paths, with the visited set as a
// bit mask and an admissible bound (current length plus unvisited vertices)
// for pruning. Candidates are tried in increasing vertex order, so the first
// longest structure found is also the lexicographically least one.

#include <antipath/digraph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace antipath
{
    /// Out: v0 -> v1. In: v0 <- v1.
    enum class Lead
    {
        Out,
        In
    };

    auto to_string(Lead lead) -> std::string;
    auto parse_lead(const std::string & text) -> Lead;
    auto opposite(Lead lead) -> Lead;

    struct AlternatingPath
    {
        std::vector<int> vertices;
        Lead lead = Lead::Out;

        auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }

        /// Arc i joins vertices[i] and vertices[i+1]; true when it points forward.
        auto arc_forward(int i) const -> bool { return (i % 2 == 0) == (lead == Lead::Out); }

        friend auto operator==(const AlternatingPath &, const AlternatingPath &) -> bool = default;
    };

    /// Vertices at even positions dominate both cyclic neighbours.
    struct AntiCycle
    {
        std::vector<int> vertices;

        auto length() const -> int { return static_cast<int>(vertices.size()); }

        friend auto operator==(const AntiCycle &, const AntiCycle &) -> bool = default;
    };

    auto is_valid_antipath(const OrientedGraph & g, const AlternatingPath & p) -> bool;
    auto is_valid_anticycle(const OrientedGraph & g, const AntiCycle & c) -> bool;

    /// The same path read from the other end. A length-0 path keeps lead Out.
    auto reversed(const AlternatingPath & p) -> AlternatingPath;

    /// Rotates and reflects a cyclically alternating sequence so that it starts
    /// at its smallest dominating vertex and is lexicographically least.
    /// Throws GraphError if the sequence is not an anticycle of g.
    auto canonical_anticycle(const OrientedGraph & g, std::vector<int> cycle) -> AntiCycle;

    /// Longest antipath over both phases and all starts; a single vertex when
    /// arcless. Ties: least vertex sequence. Throws GraphError when g has no
    /// vertices.
    auto longest_antipath(const OrientedGraph & g) -> AlternatingPath;

    /// Longest anticycle in canonical form, or nullopt.
    auto longest_anticycle(const OrientedGraph & g) -> std::optional<AntiCycle>;

    /// Longest directed path (least sequence on ties); empty only when g is.
    auto longest_directed_path(const OrientedGraph & g) -> std::vector<int>;

    /// Direction pattern for an oriented path: bit i set means arc i is
    /// traversed forward (v_i -> v_{i+1}).
    using ArcPattern = std::uint64_t;

    auto antipath_pattern(int length, Lead lead) -> ArcPattern;

    /// Some path whose arcs follow pattern, or nullopt.
    auto find_oriented_path(const OrientedGraph & g, int length, ArcPattern pattern) -> std::optional<std::vector<int>>;

    auto find_antipath_of_length(const OrientedGraph & g, int length, Lead lead) -> std::optional<AlternatingPath>;
    auto contains_antipath_of_length(const OrientedGraph & g, int length, Lead lead) -> bool;
}
