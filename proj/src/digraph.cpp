#include <antipath/digraph.hpp>

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace antipath
{
    namespace
    {
        void check_size(int n)
        {
            if (n < 0 || n > max_vertices)
                throw GraphError("vertex count " + std::to_string(n) + " outside [0, 64]");
        }

        auto arc_text(int u, int v) -> std::string
        {
            return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        }
    }

    OrientedGraph::OrientedGraph(int n)
    {
        check_size(n);
        out_.assign(n, 0);
        in_.assign(n, 0);
    }

    OrientedGraph::OrientedGraph(int n, std::span<const Arc> arcs) :
        OrientedGraph(n)
    {
        for (auto [u, v] : arcs) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("arc " + arc_text(u, v) + " has an endpoint outside [0, " + std::to_string(n) + ")");
            if (u == v)
                throw GraphError("loop at vertex " + std::to_string(u));
            if (has_arc(u, v))
                throw GraphError("duplicate arc " + arc_text(u, v));
            if (has_arc(v, u))
                throw GraphError("arcs " + arc_text(u, v) + " and " + arc_text(v, u) + " are antiparallel");
            out_[u] |= bit(v);
            in_[v] |= bit(u);
        }
    }

    auto OrientedGraph::from_out_neighbourhoods(std::vector<VertexSet> out) -> OrientedGraph
    {
        int n = static_cast<int>(out.size());
        OrientedGraph g(n);
        auto universe = all_vertices(n);
        for (int u = 0; u < n; ++u) {
            if (out[u] & ~universe)
                throw GraphError("out-neighbourhood of " + std::to_string(u) + " leaves the vertex set");
            if (contains(out[u], u))
                throw GraphError("loop at vertex " + std::to_string(u));
            for_each_vertex(out[u], [&](int v) { g.in_[v] |= bit(u); });
        }
        for (int u = 0; u < n; ++u)
            if (out[u] & g.in_[u])
                throw GraphError("antiparallel arcs at vertex " + std::to_string(u));
        g.out_ = std::move(out);
        return g;
    }

    auto OrientedGraph::arc_count() const -> int
    {
        int total = 0;
        for (auto s : out_)
            total += count(s);
        return total;
    }

    auto OrientedGraph::arcs() const -> std::vector<Arc>
    {
        std::vector<Arc> result;
        result.reserve(arc_count());
        for (int u = 0; u < size(); ++u)
            for_each_vertex(out_[u], [&](int v) { result.push_back({u, v}); });
        return result;
    }

    auto degree_profile(const OrientedGraph & g) -> DegreeProfile
    {
        DegreeProfile p;
        int n = g.size();
        p.out_deg.resize(n);
        p.in_deg.resize(n);
        for (int v = 0; v < n; ++v) {
            p.out_deg[v] = g.out_degree(v);
            p.in_deg[v] = g.in_degree(v);
        }
        p.delta0 = semi_degree(g);
        p.pseudo_delta0 = pseudo_semi_degree(g);
        return p;
    }

    auto semi_degree(const OrientedGraph & g) -> int
    {
        if (g.size() == 0)
            return 0;
        int best = std::numeric_limits<int>::max();
        for (int v = 0; v < g.size(); ++v)
            best = std::min({best, g.out_degree(v), g.in_degree(v)});
        return best;
    }

    auto pseudo_semi_degree(const OrientedGraph & g) -> int
    {
        int best = std::numeric_limits<int>::max();
        for (int v = 0; v < g.size(); ++v) {
            if (int d = g.out_degree(v); d > 0)
                best = std::min(best, d);
            if (int d = g.in_degree(v); d > 0)
                best = std::min(best, d);
        }
        return best == std::numeric_limits<int>::max() ? 0 : best;
    }

    auto induced_subdigraph(const OrientedGraph & g, std::span<const int> s) -> OrientedGraph
    {
        VertexSet seen = 0;
        for (int v : s) {
            if (v < 0 || v >= g.size())
                throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
            if (contains(seen, v))
                throw GraphError("vertex " + std::to_string(v) + " repeated in subset");
            seen |= bit(v);
        }

        int m = static_cast<int>(s.size());
        std::vector<VertexSet> out(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (g.has_arc(s[i], s[j]))
                    out[i] |= bit(j);
        return OrientedGraph::from_out_neighbourhoods(std::move(out));
    }

    auto pair_count(int n) -> int
    {
        return n * (n - 1) / 2;
    }

    auto trit_code_bound(int n) -> TritCode
    {
        check_size(n);
        TritCode bound = 1;
        for (int p = 0; p < pair_count(n); ++p)
            bound *= 3;
        return bound;
    }

    auto to_trit_code(const OrientedGraph & g) -> TritCode
    {
        int n = g.size();
        TritCode code = 0;
        TritCode place = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (g.has_arc(i, j))
                    code += place;
                else if (g.has_arc(j, i))
                    code += 2 * place;
                place *= 3;
            }
        return code;
    }

    auto from_trit_code(int n, const TritCode & code) -> OrientedGraph
    {
        if (code < 0 || code >= trit_code_bound(n))
            throw GraphError("trit code out of range for n = " + std::to_string(n));
        std::vector<VertexSet> out(n, 0);
        TritCode rest = code;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto digit = static_cast<int>(rest % 3);
                rest /= 3;
                if (digit == 1)
                    out[i] |= bit(j);
                else if (digit == 2)
                    out[j] |= bit(i);
            }
        return OrientedGraph::from_out_neighbourhoods(std::move(out));
    }

    auto from_trit_code(int n, std::uint64_t code) -> OrientedGraph
    {
        if (n < 0 || n > 9)
            throw GraphError("64-bit trit codes support n <= 9");
        std::uint64_t bound = 1;
        for (int p = 0; p < pair_count(n); ++p)
            bound *= 3;
        if (code >= bound)
            throw GraphError("trit code out of range for n = " + std::to_string(n));

        std::vector<VertexSet> out(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto digit = code % 3;
                code /= 3;
                if (digit == 1)
                    out[i] |= bit(j);
                else if (digit == 2)
                    out[j] |= bit(i);
            }
        return OrientedGraph::from_out_neighbourhoods(std::move(out));
    }

    auto to_trit_code_u64(const OrientedGraph & g) -> std::uint64_t
    {
        if (g.size() > 9)
            throw GraphError("64-bit trit codes support n <= 9");
        return to_trit_code(g).convert_to<std::uint64_t>();
    }

    auto read_graph(std::istream & in) -> OrientedGraph
    {
        std::string line;
        int line_no = 0;
        int n = -1;
        std::vector<Arc> arcs;

        auto fail = [&](const std::string & why) {
            throw GraphError("line " + std::to_string(line_no) + ": " + why);
        };

        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;

            std::istringstream fields(line);
            if (n < 0) {
                std::string tag;
                if (! (fields >> tag >> n) || tag != "n")
                    fail("expected 'n <count>'");
                if (n < 0 || n > max_vertices)
                    fail("vertex count outside [0, 64]");
            }
            else {
                Arc a{};
                if (! (fields >> a.from >> a.to))
                    fail("expected '<u> <v>'");
                arcs.push_back(a);
            }
            std::string trailing;
            if (fields >> trailing)
                fail("unexpected trailing text '" + trailing + "'");
        }

        if (n < 0)
            throw GraphError("missing 'n <count>' header");
        return OrientedGraph(n, arcs);
    }

    auto parse_graph(const std::string & text) -> OrientedGraph
    {
        std::istringstream in(text);
        return read_graph(in);
    }

    void write_graph(std::ostream & out, const OrientedGraph & g)
    {
        out << "# code " << to_trit_code(g) << '\n';
        out << "n " << g.size() << '\n';
        for (auto [u, v] : g.arcs())
            out << u << ' ' << v << '\n';
    }

    auto format_graph(const OrientedGraph & g) -> std::string
    {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
    }

    auto parse_code_spec(const std::string & spec) -> OrientedGraph
    {
        auto colon = spec.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
            throw GraphError("expected N:TRIT, got '" + spec + "'");

        auto n_text = spec.substr(0, colon);
        auto code_text = spec.substr(colon + 1);
        auto is_digits = [](const std::string & s) {
            return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        };
        if (! is_digits(n_text) || ! is_digits(code_text) || n_text.size() > 2)
            throw GraphError("expected N:TRIT with decimal fields, got '" + spec + "'");

        return from_trit_code(std::stoi(n_text), TritCode(code_text));
    }
}
