#include <antipath/harness.hpp>
#include <antipath/rotation.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

namespace antipath
{
    using Json = nlohmann::ordered_json;

    namespace
    {
        constexpr int max_exhaustive_n = 6;
        constexpr int max_stein_k = 8;

        const std::vector<std::pair<Property, std::string>> property_names = {
            {Property::TheoremMain, "theorem-main"},
            {Property::LemmaBasic, "lemma-basic"},
            {Property::TheoremKs, "theorem-ks"},
            {Property::CorollarySize, "corollary-size"},
            {Property::ConstructionD, "construction-d"},
            {Property::Stein, "stein"},
            {Property::Problem41, "problem41"},
        };

        auto pattern_text(ArcPattern pattern, int k) -> std::string
        {
            std::string s;
            for (int i = 0; i < k; ++i)
                s += ((pattern >> i) & 1U) ? '>' : '<';
            return s;
        }

        // The same path read backwards: arc i becomes arc k-1-i, flipped.
        auto reverse_pattern(ArcPattern pattern, int k) -> ArcPattern
        {
            ArcPattern r = 0;
            for (int i = 0; i < k; ++i)
                if (! ((pattern >> i) & 1U))
                    r |= ArcPattern{1} << (k - 1 - i);
            return r;
        }

        void set_witness(VerificationRecord & r, const AlternatingPath & p)
        {
            r.witness_kind = "antipath";
            r.witness_vertices = p.vertices;
            r.witness_lead = to_string(p.lead);
        }

        void set_witness(VerificationRecord & r, const StructureWitness & w)
        {
            if (w.is_path())
                set_witness(r, std::get<AlternatingPath>(w.shape));
            else {
                r.witness_kind = "anticycle";
                r.witness_vertices = std::get<AntiCycle>(w.shape).vertices;
            }
            r.strategy = w.strategy_tag();
        }

        void set_lengths(VerificationRecord & r, const OrientedGraph & g)
        {
            r.antipath_len = g.size() > 0 ? longest_antipath(g).length() : 0;
            auto c = longest_anticycle(g);
            r.anticycle_len = c ? c->length() : 0;
        }

        auto long_structure_exists(const VerificationRecord & r) -> bool
        {
            return *r.antipath_len >= r.k + 1 || *r.anticycle_len >= r.k + 1;
        }

        // Witness from find_long_structure, or false if it reports a counterexample.
        auto attach_long_structure(VerificationRecord & r, const OrientedGraph & g) -> bool
        {
            try {
                set_witness(r, find_long_structure(g, r.k));
                return true;
            }
            catch (const TheoremCounterexample &) {
                r.strategy = "counterexample";
                return false;
            }
        }

        void check_every_antipath_type(VerificationRecord & r, const OrientedGraph & g)
        {
            r.antipath_len = g.size() > 0 ? longest_antipath(g).length() : 0;
            auto out = find_antipath_of_length(g, r.k, Lead::Out);
            bool both = out && (r.k % 2 == 1 || contains_antipath_of_length(g, r.k, Lead::In));
            r.conclusion = both;
            if (r.hypothesis && both)
                set_witness(r, *out);
            else if (! both)
                r.strategy = out ? "missing:lead-in" : "missing:lead-out";
        }

        struct ShardResult
        {
            std::string lines;
            std::uint64_t inspected = 0;
            std::uint64_t hypothesis = 0;
            std::uint64_t counterexamples = 0;
            std::vector<VerificationRecord> findings;
        };

        auto run_shard(const Campaign & c, int shard, bool emit) -> ShardResult
        {
            ShardResult result;
            auto [first, last] = shard_bounds(population_size(c), c.shards, shard);

            auto visit = [&](const OrientedGraph & g, const std::optional<std::string> & family,
                    std::optional<std::uint64_t> seed) {
                for (int k = c.k_min; k <= c.k_max; ++k) {
                    auto r = check_graph(c.property, g, k);
                    r.family = family;
                    r.seed = seed;
                    ++result.inspected;
                    result.hypothesis += r.hypothesis;
                    if (r.counterexample()) {
                        ++result.counterexamples;
                        if (result.findings.size() < max_findings)
                            result.findings.push_back(r);
                    }
                    if (emit) {
                        result.lines += to_json_line(r);
                        result.lines += '\n';
                    }
                }
            };

            if (auto * ex = std::get_if<ExhaustivePopulation>(&c.population)) {
                enumerate_all(ex->n, first, last, [&](std::uint64_t, const OrientedGraph & g) {
                    visit(g, std::nullopt, std::nullopt);
                });
            }
            else {
                const auto & s = std::get<SampledPopulation>(c.population);
                auto span = static_cast<std::uint64_t>(s.n_max - s.n_min + 1);
                for (auto i = first; i < last; ++i) {
                    FamilySpec spec{Family::Random, s.n_min + static_cast<int>(i % span), 0, 1, s.p, s.seed + i};
                    visit(build(spec), format_family(spec), spec.seed);
                }
            }
            return result;
        }

        auto exhaustive(Property p, int n, int k) -> std::vector<VerificationRecord>
        {
            Campaign c;
            c.property = p;
            c.k_min = c.k_max = k;
            c.population = ExhaustivePopulation{n};
            return run_campaign(c).findings;
        }
    }

    auto to_string(Property p) -> std::string
    {
        for (const auto & [prop, name] : property_names)
            if (prop == p)
                return name;
        return "unknown";
    }

    auto parse_property(const std::string & text) -> Property
    {
        for (const auto & [prop, name] : property_names)
            if (name == text)
                return prop;
        throw std::invalid_argument("unknown property '" + text + "'");
    }

    auto to_json_line(const VerificationRecord & r) -> std::string
    {
        auto opt = [](const auto & v) -> Json { return v ? Json(*v) : Json(nullptr); };

        Json j;
        j["property"] = r.property;
        j["n"] = r.n;
        j["k"] = r.k;
        if (! r.code)
            j["code"] = nullptr;
        else if (*r.code <= std::numeric_limits<std::uint64_t>::max())
            j["code"] = r.code->convert_to<std::uint64_t>();
        else
            j["code"] = r.code->str();
        j["family"] = opt(r.family);
        j["seed"] = opt(r.seed);
        j["delta0"] = r.delta0;
        j["pseudo_delta0"] = r.pseudo_delta0;
        j["hypothesis"] = r.hypothesis;
        j["conclusion"] = r.conclusion;
        j["antipath_len"] = opt(r.antipath_len);
        j["anticycle_len"] = opt(r.anticycle_len);
        j["witness_kind"] = opt(r.witness_kind);
        j["witness_vertices"] = opt(r.witness_vertices);
        j["witness_lead"] = opt(r.witness_lead);
        j["strategy"] = opt(r.strategy);
        return j.dump();
    }

    auto record_from_json(const std::string & line) -> VerificationRecord
    {
        auto j = Json::parse(line);
        auto get = [&]<typename T>(const char * key, std::optional<T> & into) {
            if (! j.at(key).is_null())
                into = j.at(key).get<T>();
        };

        VerificationRecord r;
        r.property = j.at("property").get<std::string>();
        r.n = j.at("n").get<int>();
        r.k = j.at("k").get<int>();
        const auto & code = j.at("code");
        if (code.is_string())
            r.code = TritCode(code.get<std::string>());
        else if (code.is_number_unsigned())
            r.code = TritCode(code.get<std::uint64_t>());
        get("family", r.family);
        get("seed", r.seed);
        r.delta0 = j.at("delta0").get<int>();
        r.pseudo_delta0 = j.at("pseudo_delta0").get<int>();
        r.hypothesis = j.at("hypothesis").get<bool>();
        r.conclusion = j.at("conclusion").get<bool>();
        get("antipath_len", r.antipath_len);
        get("anticycle_len", r.anticycle_len);
        get("witness_kind", r.witness_kind);
        get("witness_vertices", r.witness_vertices);
        get("witness_lead", r.witness_lead);
        get("strategy", r.strategy);
        return r;
    }

    auto record_graph(const VerificationRecord & r) -> OrientedGraph
    {
        if (! r.code)
            throw GraphError("record has no code");
        return from_trit_code(r.n, *r.code);
    }

    auto witness_is_valid(const VerificationRecord & r, const OrientedGraph & g) -> bool
    {
        if (! r.witness_kind)
            return true;
        if (! r.witness_vertices)
            return false;
        const auto & vs = *r.witness_vertices;
        if (*r.witness_kind == "antipath")
            return r.witness_lead && is_valid_antipath(g, {vs, parse_lead(*r.witness_lead)});
        if (*r.witness_kind == "anticycle")
            return is_valid_anticycle(g, {vs});
        if (*r.witness_kind == "dipath") {
            if (vs.empty())
                return g.size() == 0;
            VertexSet seen = 0;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (vs[i] < 0 || vs[i] >= g.size() || contains(seen, vs[i]))
                    return false;
                seen |= bit(vs[i]);
                if (i > 0 && ! g.has_arc(vs[i - 1], vs[i]))
                    return false;
            }
            return true;
        }
        return false;
    }

    auto missing_path_patterns(const OrientedGraph & g, int k) -> std::vector<ArcPattern>
    {
        if (k < 0 || k > 63)
            throw std::invalid_argument("path length outside [0, 63]");
        std::vector<ArcPattern> missing;
        for (ArcPattern pattern = 0; pattern < (ArcPattern{1} << k); ++pattern)
            if (reverse_pattern(pattern, k) >= pattern && ! find_oriented_path(g, k, pattern))
                missing.push_back(pattern);
        return missing;
    }

    auto check_graph(Property property, const OrientedGraph & g, int k) -> VerificationRecord
    {
        VerificationRecord r;
        r.property = to_string(property);
        r.n = g.size();
        r.k = k;
        r.code = to_trit_code(g);
        r.delta0 = semi_degree(g);
        r.pseudo_delta0 = pseudo_semi_degree(g);
        const int pd = r.pseudo_delta0;

        switch (property) {
            case Property::TheoremMain:
            case Property::LemmaBasic:
                r.hypothesis = property == Property::TheoremMain ? 3 * pd >= 2 * k + 1 : pd >= k;
                set_lengths(r, g);
                r.conclusion = long_structure_exists(r);
                if (r.hypothesis)
                    attach_long_structure(r, g);
                break;

            case Property::CorollarySize: {
                r.hypothesis = 3 * g.arc_count() > (4 * k - 1) * g.size();
                set_lengths(r, g);
                r.conclusion = long_structure_exists(r);
                if (! r.hypothesis)
                    break;
                // Peel to 3 pd >= 2k+1, then take the witness inside the core.
                auto core = peel_to_threshold(g, 2 * k + 1, 3).graph;
                bool chained = false;
                if (core.arc_count() > 0) {
                    try {
                        auto w = find_long_structure(core, k);
                        set_witness(r, w);
                        r.strategy = "chained:" + *r.strategy;
                        chained = witness_is_valid(r, g);
                    }
                    catch (const TheoremCounterexample &) {
                        r.strategy = "chained:counterexample";
                    }
                }
                else
                    r.strategy = "chained:empty-core";
                r.conclusion = r.conclusion && chained;
                break;
            }

            case Property::TheoremKs:
                r.hypothesis = 4 * pd >= 3 * k - 2;
                check_every_antipath_type(r, g);
                break;

            case Property::Problem41:
                r.hypothesis = 2 * pd > k;
                check_every_antipath_type(r, g);
                break;

            case Property::Stein: {
                r.hypothesis = 2 * r.delta0 > k;
                auto missing = missing_path_patterns(g, k);
                r.conclusion = missing.empty();
                if (! missing.empty())
                    r.strategy = "missing:" + pattern_text(missing.front(), k);
                break;
            }

            case Property::ConstructionD: {
                // Certification record for an instance of the bipartite family.
                r.hypothesis = 4 * pd >= 3 * k - 2;
                auto dipath = longest_directed_path(g);
                r.antipath_len = g.size() > 0 ? longest_antipath(g).length() : 0;
                r.conclusion = static_cast<int>(dipath.size()) <= 2 && r.delta0 == 0;
                r.witness_kind = "dipath";
                r.witness_vertices = dipath;
                break;
            }
        }
        return r;
    }

    auto population_size(const Campaign & c) -> std::uint64_t
    {
        if (auto * ex = std::get_if<ExhaustivePopulation>(&c.population))
            return graph_count(ex->n);
        return std::get<SampledPopulation>(c.population).count;
    }

    auto shard_bounds(std::uint64_t total, int shards, int s) -> std::pair<std::uint64_t, std::uint64_t>
    {
        using Wide = unsigned __int128;
        auto at = [&](int i) { return static_cast<std::uint64_t>(Wide{total} * static_cast<unsigned>(i) / static_cast<unsigned>(shards)); };
        return {at(s), at(s + 1)};
    }

    void validate(const Campaign & c)
    {
        if (c.property == Property::ConstructionD)
            throw std::invalid_argument("construction-d is certified per k, not over a population");
        if (c.k_min > c.k_max)
            throw std::invalid_argument("empty k range");
        int k_floor = c.property == Property::TheoremKs ? 3 : c.property == Property::Stein || c.property == Property::Problem41 ? 1 : 2;
        if (c.k_min < k_floor)
            throw std::invalid_argument(to_string(c.property) + " needs k >= " + std::to_string(k_floor));
        if (c.property == Property::Stein && c.k_max > max_stein_k)
            throw ResourceGuardError("stein path-pattern checks support k <= " + std::to_string(max_stein_k));
        if (c.shards < 1)
            throw std::invalid_argument("shards must be >= 1");
        int end = c.shard_end < 0 ? c.shards : c.shard_end;
        if (c.shard_begin < 0 || c.shard_begin > end || end > c.shards)
            throw std::invalid_argument("shard range outside [0, shards]");
        if (c.jobs < 1)
            throw std::invalid_argument("jobs must be >= 1");

        if (auto * ex = std::get_if<ExhaustivePopulation>(&c.population)) {
            if (ex->n < 0)
                throw std::invalid_argument("n must be >= 0");
            if (ex->n > max_exhaustive_n)
                throw ResourceGuardError("exhaustive enumeration supports n <= " + std::to_string(max_exhaustive_n));
        }
        else {
            const auto & s = std::get<SampledPopulation>(c.population);
            if (s.n_min < 1 || s.n_min > s.n_max || s.n_max > max_vertices)
                throw std::invalid_argument("sampled n range must lie in [1, 64]");
            if (! (s.p >= 0.0 && s.p <= 1.0))
                throw std::invalid_argument("arc probability must lie in [0, 1]");
        }
    }

    auto run_campaign(const Campaign & c, std::ostream * sink) -> CampaignSummary
    {
        validate(c);
        auto start = std::chrono::steady_clock::now();
        int first = c.shard_begin;
        int last = c.shard_end < 0 ? c.shards : c.shard_end;
        bool emit = sink != nullptr;

        CampaignSummary summary;
        auto merge = [&](ShardResult & r) {
            if (emit)
                *sink << r.lines;
            summary.inspected += r.inspected;
            summary.hypothesis += r.hypothesis;
            summary.counterexamples += r.counterexamples;
            for (auto & f : r.findings)
                if (summary.findings.size() < max_findings)
                    summary.findings.push_back(std::move(f));
        };

        if (c.jobs == 1 || last - first <= 1) {
            for (int s = first; s < last; ++s) {
                auto r = run_shard(c, s, emit);
                merge(r);
            }
        }
        else {
            std::vector<std::optional<ShardResult>> done(last - first);
            std::mutex lock;
            std::condition_variable ready;
            std::atomic<int> next{first};

            auto worker = [&] {
                for (int s = next++; s < last; s = next++) {
                    auto r = run_shard(c, s, emit);
                    std::lock_guard guard(lock);
                    done[s - first] = std::move(r);
                    ready.notify_all();
                }
            };

            std::vector<std::jthread> pool;
            for (int j = 0; j < std::min(c.jobs, last - first); ++j)
                pool.emplace_back(worker);

            for (int s = first; s < last; ++s) {
                ShardResult r;
                {
                    std::unique_lock guard(lock);
                    ready.wait(guard, [&] { return done[s - first].has_value(); });
                    r = std::move(*done[s - first]);
                    done[s - first].reset();
                }
                merge(r);
            }
        }

        if (emit && ! *sink)
            throw std::ios_base::failure("failed writing campaign records");
        summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return summary;
    }

    auto verify_theorem_main(int n, int k) -> std::vector<VerificationRecord>
    {
        return exhaustive(Property::TheoremMain, n, k);
    }

    auto verify_lemma_basic(int n, int k) -> std::vector<VerificationRecord>
    {
        return exhaustive(Property::LemmaBasic, n, k);
    }

    auto verify_theorem_ks(int n, int k) -> std::vector<VerificationRecord>
    {
        return exhaustive(Property::TheoremKs, n, k);
    }

    auto verify_corollary_size(int n, int k) -> std::vector<VerificationRecord>
    {
        return exhaustive(Property::CorollarySize, n, k);
    }

    auto verify_construction_d(int k_max) -> std::vector<VerificationRecord>
    {
        if (k_max < 2)
            throw std::invalid_argument("construction-d certification needs k_max >= 2");
        std::vector<VerificationRecord> records;
        for (int k = 2; k <= k_max; ++k) {
            FamilySpec spec{Family::ConstructionD, 0, k};
            auto r = check_graph(Property::ConstructionD, build(spec), k);
            r.family = format_family(spec);
            records.push_back(std::move(r));
        }
        return records;
    }

    auto search_counterexample(const SearchOptions & options, std::ostream * sink) -> CampaignSummary
    {
        if (options.target != Property::Stein && options.target != Property::Problem41)
            throw std::invalid_argument("search targets are stein and problem41");
        Campaign c;
        c.property = options.target;
        c.k_min = c.k_max = options.k;
        c.jobs = options.jobs;
        c.shards = options.jobs;
        if (options.exhaustive)
            c.population = ExhaustivePopulation{options.n};
        else {
            if (options.samples == 0)
                throw std::invalid_argument("sampled search needs a positive sample budget");
            c.population = SampledPopulation{options.n, options.n, options.p, options.samples, options.seed};
        }
        return run_campaign(c, sink);
    }
}
