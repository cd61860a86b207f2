#include <antipath/rotation.hpp>

#include <limits>

namespace antipath
{
    auto make_rotation_state(const OrientedGraph & g, AlternatingPath path, int round) -> RotationState
    {
        if (path.length() < 1 || path.lead != Lead::Out || ! is_valid_antipath(g, path))
            throw GraphError("rotation needs a valid lead-out antipath with at least one arc");

        RotationState st;
        int t = path.length();
        for (int i = 0; i <= t; ++i)
            (i % 2 == 0 ? st.x2 : st.x1) |= bit(path.vertices[i]);
        st.y1 = g.out_neighbours(path.vertices[0]) & st.x1;
        for (int i = 0; i < t; ++i)
            if (contains(st.y1, path.vertices[i + 1]))
                st.y2 |= bit(path.vertices[i]);
        st.path = std::move(path);
        st.round = round;
        return st;
    }

    auto legal_pivots(const OrientedGraph & g, const RotationState & st) -> std::vector<int>
    {
        const auto & r = st.path.vertices;
        std::vector<int> pivots;
        for (int j = 2; j + 1 <= st.path.length(); j += 2)
            if (g.has_arc(r[0], r[j + 1]))
                pivots.push_back(j);
        return pivots;
    }

    auto rotate_at(const OrientedGraph & g, const RotationState & st, int j) -> AlternatingPath
    {
        const auto & r = st.path.vertices;
        int t = st.path.length();
        if (j % 2 != 0 || j < 2 || j > t - 1)
            throw GraphError("rotation pivot " + std::to_string(j) + " is not an even index in [2, t-1]");
        if (! g.has_arc(r[0], r[j + 1]))
            throw GraphError("rotation pivot " + std::to_string(j) + " has no arc r0 -> r(j+1)");

        AlternatingPath result{{}, Lead::Out};
        result.vertices.reserve(r.size());
        for (int i = j; i >= 0; --i)
            result.vertices.push_back(r[i]);
        for (int i = j + 1; i <= t; ++i)
            result.vertices.push_back(r[i]);
        return result;
    }

    auto extend_antipath(const OrientedGraph & g, const AlternatingPath & p) -> AlternatingPath
    {
        if (! is_valid_antipath(g, p))
            throw GraphError("extend_antipath on an invalid antipath");

        VertexSet used = 0;
        for (int v : p.vertices)
            used |= bit(v);

        int head = p.vertices.front();
        if (p.length() == 0) {
            auto options = (g.out_neighbours(head) | g.in_neighbours(head)) & ~used;
            if (! options)
                return p;
            int w = first_vertex(options);
            return {{w, head}, g.has_arc(w, head) ? Lead::Out : Lead::In};
        }

        auto front = (p.lead == Lead::Out ? g.out_neighbours(head) : g.in_neighbours(head)) & ~used;
        if (front) {
            AlternatingPath longer{{first_vertex(front)}, opposite(p.lead)};
            longer.vertices.insert(longer.vertices.end(), p.vertices.begin(), p.vertices.end());
            return longer;
        }

        int tail = p.vertices.back();
        auto back = (p.arc_forward(p.length() - 1) ? g.in_neighbours(tail) : g.out_neighbours(tail)) & ~used;
        if (back) {
            AlternatingPath longer = p;
            longer.vertices.push_back(first_vertex(back));
            return longer;
        }
        return p;
    }

    auto extend_to_maximal(const OrientedGraph & g, AlternatingPath p) -> AlternatingPath
    {
        while (true) {
            auto next = extend_antipath(g, p);
            if (next.length() == p.length())
                return p;
            p = std::move(next);
        }
    }

    auto close_to_anticycle(const OrientedGraph & g, const AlternatingPath & p) -> std::optional<AntiCycle>
    {
        if (! is_valid_antipath(g, p))
            throw GraphError("close_to_anticycle on an invalid antipath");

        int t = p.length();
        if (t < 3 || t % 2 == 0)
            return std::nullopt;

        // For odd t both end arcs point the same way; read the path so that it
        // starts with x0 -> x1.
        const auto path = p.lead == Lead::Out ? p : reversed(p);
        const auto & x = path.vertices;

        if (g.has_arc(x[0], x[t]))
            return canonical_anticycle(g, x);

        for (int i = 3; i <= t - 2; i += 2)
            if (g.has_arc(x[0], x[i]) && g.has_arc(x[i - 1], x[t])) {
                std::vector<int> cycle(x.begin(), x.begin() + i);
                for (int m = t; m >= i; --m)
                    cycle.push_back(x[m]);
                return canonical_anticycle(g, std::move(cycle));
            }
        return std::nullopt;
    }

    auto ceil_log2(std::int64_t k) -> int
    {
        int a = 0;
        while ((std::int64_t{1} << a) < k)
            ++a;
        return a;
    }

    auto threshold_arithmetic(int k) -> ThresholdArithmetic
    {
        if (k < 2)
            throw std::invalid_argument("threshold arithmetic needs k >= 2");

        ThresholdArithmetic ta;
        ta.k = k;
        ta.f_of_k = Rational(2 * std::int64_t{k} + 1, 3);
        ta.alpha = ceil_log2(k);
        ta.g_of_k = Rational(k + 1) - Rational(k - 1, 6 * (std::int64_t{1} << ta.alpha));
        if (ta.g_of_k <= Rational(k))
            throw std::logic_error("g(" + std::to_string(k) + ") <= k");
        return ta;
    }

    auto forward_overlap_bound(int k, int round) -> Rational
    {
        std::int64_t scale = std::int64_t{1} << round;
        std::int64_t weight = 2 * scale - 1;
        Rational f(2 * std::int64_t{k} + 1, 3);
        return (Rational(weight) * f - Rational(weight * k - 1, 2)) / Rational(scale);
    }

    auto g_of_k_expanded(int k) -> Rational
    {
        return Rational(2 * std::int64_t{k} + 1, 3) + forward_overlap_bound(k, ceil_log2(k));
    }

    auto StructureWitness::length() const -> int
    {
        return std::visit([](const auto & s) { return s.length(); }, shape);
    }

    auto StructureWitness::strategy_tag() const -> std::string
    {
        switch (strategy) {
            case Strategy::Antipath: return "antipath";
            case Strategy::Closure: return "closure";
            case Strategy::Rotation: return "rotation:" + std::to_string(round);
            case Strategy::Fallback: return "fallback";
        }
        return "unknown";
    }

    auto find_long_structure(const OrientedGraph & g, int k) -> StructureWitness
    {
        if (k < 2)
            throw PreconditionFailure("find_long_structure needs k >= 2");
        int pseudo = pseudo_semi_degree(g);
        if (3 * pseudo < 2 * k + 1)
            throw PreconditionFailure("pseudo-semi-degree " + std::to_string(pseudo)
                    + " is below (2k+1)/3 for k = " + std::to_string(k));

        const int target = k + 1;
        StructureWitness w{longest_antipath(g), Strategy::Antipath, 0, {}};
        auto path = std::get<AlternatingPath>(w.shape);
        if (path.length() >= target)
            return w;

        if (path.length() % 2 == 1 && path.lead == Lead::In)
            path = reversed(path);

        if (auto c = close_to_anticycle(g, path); c && c->length() >= target) {
            w.shape = *c;
            w.strategy = Strategy::Closure;
            return w;
        }

        if (path.length() % 2 == 1 && path.length() >= 3) {
            int alpha = ceil_log2(k);
            auto st = make_rotation_state(g, path);
            for (int round = 1; round <= alpha; ++round) {
                auto pivots = legal_pivots(g, st);
                if (pivots.empty())
                    break;

                // pivot whose out-neighbourhood meets y2 least
                int best = -1, best_overlap = std::numeric_limits<int>::max();
                for (int j : pivots) {
                    int overlap = count(g.out_neighbours(st.path.vertices[j]) & st.y2);
                    if (overlap < best_overlap) {
                        best = j;
                        best_overlap = overlap;
                    }
                }

                auto rotated = rotate_at(g, st, best);
                w.trace.push_back({round, best, rotated});
                if (auto c = close_to_anticycle(g, rotated); c && c->length() >= target) {
                    w.shape = *c;
                    w.strategy = Strategy::Rotation;
                    w.round = round;
                    return w;
                }
                st = make_rotation_state(g, std::move(rotated), round);
            }
        }

        if (auto c = longest_anticycle(g); c && c->length() >= target) {
            w.shape = *c;
            w.strategy = Strategy::Fallback;
            return w;
        }
        throw TheoremCounterexample("no antipath or anticycle of length >= " + std::to_string(target)
                + " despite pseudo-semi-degree " + std::to_string(pseudo));
    }
}
