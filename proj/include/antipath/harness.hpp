#pragma once

// Verification campaigns: run one property over an exhaustive or sampled
// population of graphs, emit one JSON-lines record per (graph, k), and
// collect counterexamples.

#include <antipath/antisolve.hpp>
#include <antipath/digraph.hpp>
#include <antipath/generators.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace antipath
{
    enum class Property
    {
        TheoremMain,     // 3 pd >= 2k+1  =>  antipath or anticycle of length >= k+1
        LemmaBasic,      // pd >= k       =>  same conclusion
        TheoremKs,       // 4 pd >= 3k-2  =>  every antipath type of length k
        CorollarySize,   // 3|A| > (4k-1)n  =>  same as TheoremMain, also via peeling
        ConstructionD,   // certification of the bipartite X -> Y family
        Stein,           // 2 d0 > k      =>  every oriented path of length k
        Problem41        // 2 pd > k      =>  every antipath type of length k
    };

    auto to_string(Property p) -> std::string;
    auto parse_property(const std::string & text) -> Property;

    class ResourceGuardError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// One graph checked against one property at one k. Lengths are 0 when
    /// the structure does not exist and nullopt when not computed.
    struct VerificationRecord
    {
        std::string property;
        int n = 0;
        int k = 0;
        std::optional<TritCode> code;
        std::optional<std::string> family;
        std::optional<std::uint64_t> seed;
        int delta0 = 0;
        int pseudo_delta0 = 0;
        bool hypothesis = false;
        bool conclusion = false;
        std::optional<int> antipath_len;
        std::optional<int> anticycle_len;
        std::optional<std::string> witness_kind;      // antipath | anticycle | dipath
        std::optional<std::vector<int>> witness_vertices;
        std::optional<std::string> witness_lead;
        std::optional<std::string> strategy;

        auto counterexample() const -> bool { return hypothesis && ! conclusion; }

        friend auto operator==(const VerificationRecord &, const VerificationRecord &) -> bool = default;
    };

    /// Single-line JSON with keys in the fixed order; absent fields are null.
    /// Codes that fit in 64 bits are numbers, larger ones decimal strings.
    auto to_json_line(const VerificationRecord & r) -> std::string;
    auto record_from_json(const std::string & line) -> VerificationRecord;

    /// Rebuilds the graph from the record's code.
    auto record_graph(const VerificationRecord & r) -> OrientedGraph;

    /// True when the record carries no witness or its witness is valid in g.
    auto witness_is_valid(const VerificationRecord & r, const OrientedGraph & g) -> bool;

    /// Evaluates hypothesis, conclusion and witness. Provenance fields (code,
    /// family, seed) are left for the caller, except code which is filled in.
    auto check_graph(Property property, const OrientedGraph & g, int k) -> VerificationRecord;

    /// Patterns of length k that g lacks, up to reversal; empty means g
    /// contains every oriented path of length k.
    auto missing_path_patterns(const OrientedGraph & g, int k) -> std::vector<ArcPattern>;

    struct ExhaustivePopulation
    {
        int n = 0;
    };

    /// Graph i uses seed + i and n = n_min + i mod (n_max - n_min + 1).
    struct SampledPopulation
    {
        int n_min = 0;
        int n_max = 0;
        double p = 0.5;
        std::uint64_t count = 0;
        std::uint64_t seed = 0;
    };

    struct Campaign
    {
        Property property = Property::TheoremMain;
        int k_min = 2;
        int k_max = 2;
        std::variant<ExhaustivePopulation, SampledPopulation> population;
        int shards = 1;
        int shard_begin = 0;    // run shards [shard_begin, shard_end)
        int shard_end = -1;     // -1 means all
        int jobs = 1;
    };

    struct CampaignSummary
    {
        std::uint64_t inspected = 0;
        std::uint64_t hypothesis = 0;
        std::uint64_t counterexamples = 0;
        std::vector<VerificationRecord> findings;   // first max_findings
        double seconds = 0.0;
    };

    inline constexpr std::size_t max_findings = 1000;

    auto population_size(const Campaign & c) -> std::uint64_t;

    /// Graph index range [first, last) of shard s.
    auto shard_bounds(std::uint64_t total, int shards, int s) -> std::pair<std::uint64_t, std::uint64_t>;

    /// Throws std::invalid_argument for bad parameters and ResourceGuardError
    /// for exhaustive n > 6 or Stein k > 8.
    void validate(const Campaign & c);

    /// Records go to sink (if given) in shard order, graph-major then k.
    auto run_campaign(const Campaign & c, std::ostream * sink = nullptr) -> CampaignSummary;

    auto verify_theorem_main(int n, int k) -> std::vector<VerificationRecord>;
    auto verify_lemma_basic(int n, int k) -> std::vector<VerificationRecord>;
    auto verify_theorem_ks(int n, int k) -> std::vector<VerificationRecord>;
    auto verify_corollary_size(int n, int k) -> std::vector<VerificationRecord>;

    /// One record per k in [2, k_max]; every record should have both
    /// hypothesis and conclusion true.
    auto verify_construction_d(int k_max) -> std::vector<VerificationRecord>;

    struct SearchOptions
    {
        Property target = Property::Stein;   // Stein or Problem41
        int n = 5;
        int k = 2;
        bool exhaustive = true;
        std::uint64_t samples = 0;
        double p = 0.9;
        std::uint64_t seed = 0;
        int jobs = 1;
    };

    auto search_counterexample(const SearchOptions & options, std::ostream * sink = nullptr) -> CampaignSummary;
}
