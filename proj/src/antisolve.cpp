#include <antipath/antisolve.hpp>

#include <algorithm>

namespace antipath
{
    auto to_string(Lead lead) -> std::string
    {
        return lead == Lead::Out ? "lead-out" : "lead-in";
    }

    auto parse_lead(const std::string & text) -> Lead
    {
        if (text == "lead-out")
            return Lead::Out;
        if (text == "lead-in")
            return Lead::In;
        throw GraphError("unknown lead phase '" + text + "'");
    }

    auto opposite(Lead lead) -> Lead
    {
        return lead == Lead::Out ? Lead::In : Lead::Out;
    }

    namespace
    {
        auto distinct_in_range(const OrientedGraph & g, const std::vector<int> & vs) -> bool
        {
            VertexSet seen = 0;
            for (int v : vs) {
                if (v < 0 || v >= g.size() || contains(seen, v))
                    return false;
                seen |= bit(v);
            }
            return true;
        }

        // Longest alternating path, in lexicographic DFS order.
        class AntipathSearch
        {
        public:
            explicit AntipathSearch(const OrientedGraph & g) :
                g_(g), universe_(g.vertices())
            {
            }

            auto run() -> AlternatingPath
            {
                for (int s = 0; s < g_.size() && ! done(); ++s) {
                    path_.assign(1, s);
                    if (best_.vertices.empty())
                        best_ = {path_, Lead::Out};

                    auto visited = bit(s);
                    auto first = (g_.out_neighbours(s) | g_.in_neighbours(s));
                    for_each_vertex(first, [&](int w) {
                        if (done())
                            return;
                        bool forward = g_.has_arc(s, w);
                        lead_ = forward ? Lead::Out : Lead::In;
                        path_.push_back(w);
                        extend(w, ! forward, visited | bit(w));
                        path_.pop_back();
                    });
                }
                return best_;
            }

        private:
            auto done() const -> bool { return best_.length() == g_.size() - 1; }

            void extend(int v, bool forward, VertexSet visited)
            {
                int length = static_cast<int>(path_.size()) - 1;
                if (length > best_.length())
                    best_ = {path_, lead_};
                if (done() || length + count(universe_ & ~visited) <= best_.length())
                    return;

                auto next = (forward ? g_.out_neighbours(v) : g_.in_neighbours(v)) & ~visited;
                while (next && ! done()) {
                    int w = first_vertex(next);
                    next &= next - 1;
                    path_.push_back(w);
                    extend(w, ! forward, visited | bit(w));
                    path_.pop_back();
                }
            }

            const OrientedGraph & g_;
            VertexSet universe_;
            std::vector<int> path_;
            Lead lead_ = Lead::Out;
            AlternatingPath best_;
        };

        // Anticycles are lead-out alternating paths s = c0 -> c1 <- c2 ... <- c_{l-1}
        // closed by s -> c_{l-1}. Dominating positions after the first only use
        // vertices above s, so every cycle is found once, from its least
        // dominating vertex.
        class AnticycleSearch
        {
        public:
            explicit AnticycleSearch(const OrientedGraph & g) :
                g_(g), universe_(g.vertices()), limit_(g.size() - g.size() % 2)
            {
            }

            auto run() -> std::optional<AntiCycle>
            {
                for (int s = 0; s < g_.size() && best_length() < limit_; ++s) {
                    if (g_.out_degree(s) < 2)
                        continue;
                    start_ = s;
                    path_.assign(1, s);
                    extend(s, bit(s));
                }
                if (best_.empty())
                    return std::nullopt;
                return AntiCycle{best_};
            }

        private:
            auto best_length() const -> int { return static_cast<int>(best_.size()); }

            void extend(int v, VertexSet visited)
            {
                int position = static_cast<int>(path_.size()) - 1;
                bool dominated = position % 2 == 1;
                if (dominated && position >= 3 && g_.has_arc(start_, v) && position + 1 > best_length())
                    best_ = path_;
                if (best_length() >= limit_ || position + 1 + count(universe_ & ~visited) <= best_length())
                    return;

                VertexSet next;
                if (dominated)
                    next = g_.in_neighbours(v) & ~visited & ~all_vertices(start_ + 1);
                else
                    next = g_.out_neighbours(v) & ~visited;

                while (next && best_length() < limit_) {
                    int w = first_vertex(next);
                    next &= next - 1;
                    path_.push_back(w);
                    extend(w, visited | bit(w));
                    path_.pop_back();
                }
            }

            const OrientedGraph & g_;
            VertexSet universe_;
            int limit_;
            int start_ = 0;
            std::vector<int> path_;
            std::vector<int> best_;
        };

        class DirectedPathSearch
        {
        public:
            explicit DirectedPathSearch(const OrientedGraph & g) :
                g_(g), universe_(g.vertices())
            {
            }

            auto run() -> std::vector<int>
            {
                for (int s = 0; s < g_.size() && ! done(); ++s) {
                    path_.assign(1, s);
                    extend(s, bit(s));
                }
                return best_;
            }

        private:
            auto best_length() const -> int { return static_cast<int>(best_.size()) - 1; }
            auto done() const -> bool { return best_length() == g_.size() - 1; }

            void extend(int v, VertexSet visited)
            {
                int length = static_cast<int>(path_.size()) - 1;
                if (length > best_length())
                    best_ = path_;
                if (done() || length + count(universe_ & ~visited) <= best_length())
                    return;

                auto next = g_.out_neighbours(v) & ~visited;
                while (next && ! done()) {
                    int w = first_vertex(next);
                    next &= next - 1;
                    path_.push_back(w);
                    extend(w, visited | bit(w));
                    path_.pop_back();
                }
            }

            const OrientedGraph & g_;
            VertexSet universe_;
            std::vector<int> path_;
            std::vector<int> best_;
        };

        class PatternSearch
        {
        public:
            PatternSearch(const OrientedGraph & g, int length, ArcPattern pattern) :
                g_(g), universe_(g.vertices()), length_(length), pattern_(pattern)
            {
            }

            auto run() -> std::optional<std::vector<int>>
            {
                for (int s = 0; s < g_.size(); ++s) {
                    path_.assign(1, s);
                    if (extend(s, bit(s)))
                        return path_;
                }
                return std::nullopt;
            }

        private:
            auto extend(int v, VertexSet visited) -> bool
            {
                int position = static_cast<int>(path_.size()) - 1;
                if (position == length_)
                    return true;
                if (position + count(universe_ & ~visited) < length_)
                    return false;

                bool forward = (pattern_ >> position) & 1U;
                auto next = (forward ? g_.out_neighbours(v) : g_.in_neighbours(v)) & ~visited;
                while (next) {
                    int w = first_vertex(next);
                    next &= next - 1;
                    path_.push_back(w);
                    if (extend(w, visited | bit(w)))
                        return true;
                    path_.pop_back();
                }
                return false;
            }

            const OrientedGraph & g_;
            VertexSet universe_;
            int length_;
            ArcPattern pattern_;
            std::vector<int> path_;
        };
    }

    auto is_valid_antipath(const OrientedGraph & g, const AlternatingPath & p) -> bool
    {
        if (p.vertices.empty() || ! distinct_in_range(g, p.vertices))
            return false;
        for (int i = 0; i < p.length(); ++i) {
            int a = p.vertices[i], b = p.vertices[i + 1];
            if (! (p.arc_forward(i) ? g.has_arc(a, b) : g.has_arc(b, a)))
                return false;
        }
        return true;
    }

    auto is_valid_anticycle(const OrientedGraph & g, const AntiCycle & c) -> bool
    {
        int len = c.length();
        if (len < 4 || len % 2 != 0 || ! distinct_in_range(g, c.vertices))
            return false;
        for (int i = 0; i < len; i += 2) {
            int v = c.vertices[i];
            if (! g.has_arc(v, c.vertices[(i + len - 1) % len]) || ! g.has_arc(v, c.vertices[i + 1]))
                return false;
        }
        return true;
    }

    auto reversed(const AlternatingPath & p) -> AlternatingPath
    {
        AlternatingPath r{{p.vertices.rbegin(), p.vertices.rend()}, Lead::Out};
        if (p.length() > 0)
            r.lead = p.arc_forward(p.length() - 1) ? Lead::In : Lead::Out;
        return r;
    }

    auto canonical_anticycle(const OrientedGraph & g, std::vector<int> cycle) -> AntiCycle
    {
        int len = static_cast<int>(cycle.size());
        if (len < 4 || len % 2 != 0)
            throw GraphError("anticycle length must be even and at least 4");

        int parity = (len > 0 && g.has_arc(cycle[0], cycle[1])) ? 0 : 1;
        int start = -1;
        for (int i = parity; i < len; i += 2)
            if (start < 0 || cycle[i] < cycle[start])
                start = i;

        std::vector<int> forward, backward;
        for (int step = 0; step < len; ++step) {
            forward.push_back(cycle[(start + step) % len]);
            backward.push_back(cycle[(start - step + len) % len]);
        }
        AntiCycle result{std::min(forward, backward)};
        if (! is_valid_anticycle(g, result))
            throw GraphError("sequence is not an anticycle of the graph");
        return result;
    }

    auto longest_antipath(const OrientedGraph & g) -> AlternatingPath
    {
        if (g.size() == 0)
            throw GraphError("longest antipath of a graph with no vertices");
        return AntipathSearch(g).run();
    }

    auto longest_anticycle(const OrientedGraph & g) -> std::optional<AntiCycle>
    {
        return AnticycleSearch(g).run();
    }

    auto longest_directed_path(const OrientedGraph & g) -> std::vector<int>
    {
        return DirectedPathSearch(g).run();
    }

    auto antipath_pattern(int length, Lead lead) -> ArcPattern
    {
        if (length < 0 || length > 63)
            throw GraphError("pattern length outside [0, 63]");
        constexpr ArcPattern even_bits = 0x5555555555555555ULL;
        auto pattern = lead == Lead::Out ? even_bits : ~even_bits;
        return pattern & ((ArcPattern{1} << length) - 1);
    }

    auto find_oriented_path(const OrientedGraph & g, int length, ArcPattern pattern) -> std::optional<std::vector<int>>
    {
        if (length < 0 || length >= g.size())
            return std::nullopt;
        return PatternSearch(g, length, pattern).run();
    }

    auto find_antipath_of_length(const OrientedGraph & g, int length, Lead lead) -> std::optional<AlternatingPath>
    {
        if (length < 0 || length >= g.size())
            return std::nullopt;
        auto found = find_oriented_path(g, length, antipath_pattern(length, lead));
        if (! found)
            return std::nullopt;
        return AlternatingPath{std::move(*found), length == 0 ? Lead::Out : lead};
    }

    auto contains_antipath_of_length(const OrientedGraph & g, int length, Lead lead) -> bool
    {
        return find_antipath_of_length(g, length, lead).has_value();
    }
}
