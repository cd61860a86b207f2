#include <antipath/generators.hpp>

#include <charconv>
#include <map>
#include <random>
#include <sstream>

namespace antipath
{
    namespace
    {
        auto format_double(double x) -> std::string
        {
            char buf[64];
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
            return std::string(buf, end);
        }

        template <typename T>
        auto parse_number(const std::string & key, const std::string & text) -> T
        {
            T value{};
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size())
                throw GraphError("bad value '" + text + "' for family parameter " + key);
            return value;
        }
    }

    auto to_string(Family f) -> std::string
    {
        switch (f) {
            case Family::Circulant: return "circulant";
            case Family::RegularUnion: return "regular-union";
            case Family::ConstructionD: return "construction-d";
            case Family::Random: return "random";
            case Family::Enumerate: return "enumerate";
        }
        return "unknown";
    }

    auto parse_family_name(const std::string & name) -> Family
    {
        for (auto f : {Family::Circulant, Family::RegularUnion, Family::ConstructionD, Family::Random, Family::Enumerate})
            if (to_string(f) == name)
                return f;
        throw GraphError("unknown family '" + name + "'");
    }

    auto format_family(const FamilySpec & spec) -> std::string
    {
        std::string out = to_string(spec.family) + ":";
        switch (spec.family) {
            case Family::Circulant:
            case Family::Enumerate:
                out += "n=" + std::to_string(spec.n);
                break;
            case Family::RegularUnion:
                out += "k=" + std::to_string(spec.k) + ",copies=" + std::to_string(spec.copies);
                break;
            case Family::ConstructionD:
                out += "k=" + std::to_string(spec.k);
                break;
            case Family::Random:
                out += "n=" + std::to_string(spec.n) + ",p=" + format_double(spec.p) + ",seed=" + std::to_string(spec.seed);
                break;
        }
        return out;
    }

    auto parse_family(const std::string & text) -> FamilySpec
    {
        auto colon = text.find(':');
        FamilySpec spec;
        spec.family = parse_family_name(text.substr(0, colon));
        if (colon == std::string::npos)
            return spec;

        std::istringstream fields(text.substr(colon + 1));
        std::string field;
        while (std::getline(fields, field, ',')) {
            auto eq = field.find('=');
            if (eq == std::string::npos)
                throw GraphError("expected key=value in family spec, got '" + field + "'");
            auto key = field.substr(0, eq), value = field.substr(eq + 1);
            if (key == "n")
                spec.n = parse_number<int>(key, value);
            else if (key == "k")
                spec.k = parse_number<int>(key, value);
            else if (key == "copies")
                spec.copies = parse_number<int>(key, value);
            else if (key == "p")
                spec.p = parse_number<double>(key, value);
            else if (key == "seed")
                spec.seed = parse_number<std::uint64_t>(key, value);
            else
                throw GraphError("unknown family parameter '" + key + "'");
        }
        return spec;
    }

    void validate(const FamilySpec & spec)
    {
        auto require = [](bool ok, const std::string & why) {
            if (! ok)
                throw GraphError(why);
        };
        switch (spec.family) {
            case Family::Circulant:
                require(spec.n >= 3 && spec.n % 2 == 1 && spec.n <= max_vertices, "circulant tournament needs odd n in [3, 63]");
                break;
            case Family::RegularUnion:
                require(spec.k >= 3 && spec.k % 2 == 1, "regular tournaments need odd k >= 3");
                require(spec.copies >= 1 && spec.k * spec.copies <= max_vertices, "copies must be >= 1 and fit in 64 vertices");
                break;
            case Family::ConstructionD:
                require(spec.k >= 2, "construction-d needs k >= 2");
                require(2 * construction_d_side(spec.k) <= max_vertices, "construction-d instance exceeds 64 vertices");
                break;
            case Family::Random:
                require(spec.p >= 0.0 && spec.p <= 1.0, "arc probability must lie in [0, 1]");
                require(spec.n >= 0 && spec.n <= max_vertices, "random graphs need n in [0, 64]");
                break;
            case Family::Enumerate:
                require(spec.n >= 0 && spec.n <= 9, "enumeration supports n in [0, 9]");
                break;
        }
    }

    auto build(const FamilySpec & spec) -> OrientedGraph
    {
        validate(spec);
        switch (spec.family) {
            case Family::Circulant: return circulant_tournament(spec.n);
            case Family::RegularUnion: return disjoint_regular_tournaments(spec.k, spec.copies);
            case Family::ConstructionD: return construction_d(spec.k);
            case Family::Random: return random_oriented(spec.n, spec.p, spec.seed);
            case Family::Enumerate: break;
        }
        throw GraphError("enumerate names a stream of graphs, not one graph");
    }

    auto circulant_tournament(int n) -> OrientedGraph
    {
        validate({Family::Circulant, n});
        return disjoint_regular_tournaments(n, 1);
    }

    auto disjoint_regular_tournaments(int k, int copies) -> OrientedGraph
    {
        validate({Family::RegularUnion, 0, k, copies});
        std::vector<VertexSet> out(k * copies, 0);
        for (int c = 0; c < copies; ++c)
            for (int i = 0; i < k; ++i)
                for (int d = 1; d <= (k - 1) / 2; ++d)
                    out[c * k + i] |= bit(c * k + (i + d) % k);
        return OrientedGraph::from_out_neighbourhoods(std::move(out));
    }

    auto construction_d_side(int k) -> int
    {
        return (3 * k - 2 + 3) / 4;
    }

    auto construction_d(int k) -> OrientedGraph
    {
        validate({Family::ConstructionD, 0, k});
        int m = construction_d_side(k);
        auto y = all_vertices(2 * m) & ~all_vertices(m);
        std::vector<VertexSet> out(2 * m, 0);
        for (int x = 0; x < m; ++x)
            out[x] = y;
        return OrientedGraph::from_out_neighbourhoods(std::move(out));
    }

    auto random_oriented(int n, double p, std::uint64_t seed) -> OrientedGraph
    {
        validate({Family::Random, n, 0, 1, p, seed});
        std::mt19937_64 rng(seed);
        std::vector<VertexSet> out(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double u = static_cast<double>(rng() >> 11) * 0x1p-53;
                if (u >= p)
                    continue;
                if (rng() % 2 == 0)
                    out[i] |= bit(j);
                else
                    out[j] |= bit(i);
            }
        return OrientedGraph::from_out_neighbourhoods(std::move(out));
    }

    auto graph_count(int n) -> std::uint64_t
    {
        if (n < 0 || n > 9)
            throw GraphError("enumeration supports n in [0, 9]");
        std::uint64_t total = 1;
        for (int p = 0; p < pair_count(n); ++p)
            total *= 3;
        return total;
    }

    auto peel_to_threshold(const OrientedGraph & g, int num, int den) -> PeelResult
    {
        int n = g.size();
        std::vector<VertexSet> out(n), in(n);
        for (int v = 0; v < n; ++v) {
            out[v] = g.out_neighbours(v);
            in[v] = g.in_neighbours(v);
        }

        auto weak = [&](VertexSet s) { return s && den * count(s) < num; };

        int deleted = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n && ! changed; ++v) {
                if (weak(out[v])) {
                    deleted += count(out[v]);
                    for_each_vertex(out[v], [&](int w) { in[w] &= ~bit(v); });
                    out[v] = 0;
                    changed = true;
                }
                else if (weak(in[v])) {
                    deleted += count(in[v]);
                    for_each_vertex(in[v], [&](int w) { out[w] &= ~bit(v); });
                    in[v] = 0;
                    changed = true;
                }
            }
        }
        return {OrientedGraph::from_out_neighbourhoods(std::move(out)), deleted};
    }

    auto dense_subdigraph(const OrientedGraph & g, int k) -> PeelResult
    {
        if (k < 1)
            throw GraphError("dense_subdigraph needs k >= 1");
        if (g.arc_count() <= k * g.size())
            throw GraphError("dense_subdigraph needs more than k*n = " + std::to_string(k * g.size()) + " arcs, got "
                    + std::to_string(g.arc_count()));
        return peel_to_threshold(g, k + 1, 2);
    }
}
