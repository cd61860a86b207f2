#pragma once

// Rotation and closure primitives on longest antipaths, the threshold
// arithmetic that bounds how many rotation rounds are needed, and a
// constructive finder for long antipaths or anticycles.

#include <antipath/antisolve.hpp>
#include <antipath/digraph.hpp>

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace antipath
{
    using Rational = boost::rational<std::int64_t>;

    /// A lead-out antipath R = r0 r1 ... rt with its position classes.
    ///
    ///   x1 = odd positions {r1, r3, ...}
    ///   x2 = even positions {r0, r2, ...}
    ///   y1 = N+(r0) & x1
    ///   y2 = {ri : r(i+1) in y1}, so |y1| = |y2| and y2 is inside x2
    ///
    /// Every ri in y2 other than r0 is a legal rotation pivot. Two further
    /// sets used when arguing about even t and about longest anticycles,
    /// {z(i-1) : z0 -> zi} and {y(i-2) : y1 -> yi}, are the same shift of an
    /// out-neighbourhood and are not materialised.
    struct RotationState
    {
        AlternatingPath path;
        VertexSet x1 = 0;
        VertexSet x2 = 0;
        VertexSet y1 = 0;
        VertexSet y2 = 0;
        int round = 0;
    };

    /// Throws GraphError unless path is a valid lead-out antipath of g with
    /// at least one arc.
    auto make_rotation_state(const OrientedGraph & g, AlternatingPath path, int round = 0) -> RotationState;

    /// Pivot indices j (even, 2 <= j <= t-1, r0 -> r(j+1)) in increasing order.
    auto legal_pivots(const OrientedGraph & g, const RotationState & st) -> std::vector<int>;

    /// rj r(j-1) ... r0 r(j+1) ... rt. Same length and vertex set, lead-out.
    /// Throws GraphError for odd or out-of-range j, or a missing arc r0 -> r(j+1).
    auto rotate_at(const OrientedGraph & g, const RotationState & st, int j) -> AlternatingPath;

    /// One step longer at the front if possible, else at the back, using the
    /// least eligible vertex; p itself when p is maximal.
    auto extend_antipath(const OrientedGraph & g, const AlternatingPath & p) -> AlternatingPath;

    /// Extends until maximal.
    auto extend_to_maximal(const OrientedGraph & g, AlternatingPath p) -> AlternatingPath;

    /// Closes p = x0 ... xt (t odd) into an anticycle of length t+1, either
    /// through the end arc between x0 and xt, or through a chord pair
    /// x0 -> xi, x(i-1) -> xt giving x0 ... x(i-1) xt x(t-1) ... xi.
    auto close_to_anticycle(const OrientedGraph & g, const AlternatingPath & p) -> std::optional<AntiCycle>;

    struct ThresholdArithmetic
    {
        int k = 0;
        Rational f_of_k;   // (2k+1)/3
        int alpha = 0;     // ceil(log2 k)
        Rational g_of_k;   // k+1 - (k-1)/(6 * 2^alpha)
    };

    auto ceil_log2(std::int64_t k) -> int;

    /// Throws std::invalid_argument for k < 2, std::logic_error if g(k) <= k.
    auto threshold_arithmetic(int k) -> ThresholdArithmetic;

    /// Lower bound on |N+(r0) & x1| after `round` rotation rounds:
    /// ((2^(r+1) - 1) f(k) - ((2^(r+1) - 1) k - 1) / 2) / 2^r.
    auto forward_overlap_bound(int k, int round) -> Rational;

    /// g(k) as f(k) + forward_overlap_bound(k, alpha); must agree with the
    /// closed form in threshold_arithmetic.
    auto g_of_k_expanded(int k) -> Rational;

    class PreconditionFailure : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Thrown when a graph meets the degree hypothesis but no antipath or
    /// anticycle of length >= k+1 exists. Never expected.
    class TheoremCounterexample : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    enum class Strategy
    {
        Antipath,   // the longest antipath is already long enough
        Closure,    // closure of the longest antipath
        Rotation,   // closure after `round` rotation rounds
        Fallback    // exact anticycle search
    };

    struct RotationStep
    {
        int round;
        int pivot;
        AlternatingPath result;
    };

    struct StructureWitness
    {
        std::variant<AlternatingPath, AntiCycle> shape;
        Strategy strategy = Strategy::Antipath;
        int round = 0;
        std::vector<RotationStep> trace;

        auto length() const -> int;
        auto is_path() const -> bool { return std::holds_alternative<AlternatingPath>(shape); }
        auto strategy_tag() const -> std::string;
    };

    /// Antipath or anticycle of length >= k+1 in a graph with
    /// 3 * pseudo_semi_degree >= 2k+1. Throws PreconditionFailure when the
    /// hypothesis fails and TheoremCounterexample if nothing is found.
    auto find_long_structure(const OrientedGraph & g, int k) -> StructureWitness;
}
