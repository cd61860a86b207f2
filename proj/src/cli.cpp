#include <antipath/cli.hpp>

#include <antipath/antisolve.hpp>
#include <antipath/digraph.hpp>
#include <antipath/generators.hpp>
#include <antipath/harness.hpp>
#include <antipath/rotation.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

namespace antipath
{
    namespace
    {
        constexpr int max_solve_n = 24;

        class IoError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        class UsageError : public std::invalid_argument
        {
        public:
            using std::invalid_argument::invalid_argument;
        };

        struct Options
        {
            std::string input;
            std::string code;
            std::string what = "antipath";
            std::string family;
            std::string property;
            std::optional<int> k;
            std::optional<int> n;
            int copies = 1;
            double p = 0.5;
            std::uint64_t seed = 0;
            bool exhaustive = false;
            std::optional<std::uint64_t> samples;
            std::optional<int> kmax;
            std::string out_path;
            int shards = 1;
            int jobs = 1;
            bool canonical = false;
        };

        auto join(const std::vector<int> & vs) -> std::string
        {
            std::string s;
            for (std::size_t i = 0; i < vs.size(); ++i)
                s += (i ? " " : "") + std::to_string(vs[i]);
            return s;
        }

        auto set_text(VertexSet s) -> std::string
        {
            std::vector<int> vs;
            for_each_vertex(s, [&](int v) { vs.push_back(v); });
            return "{" + join(vs) + "}";
        }

        auto load_graph(const Options & o, std::istream & in) -> OrientedGraph
        {
            if (! o.code.empty())
                return parse_code_spec(o.code);
            if (! o.input.empty() && o.input != "-") {
                std::ifstream file(o.input);
                if (! file)
                    throw IoError("cannot open " + o.input);
                return read_graph(file);
            }
            return read_graph(in);
        }

        auto require(const std::optional<int> & v, const char * flag) -> int
        {
            if (! v)
                throw UsageError(std::string(flag) + " is required");
            return *v;
        }

        // Opens --out, or returns nullptr when absent.
        auto open_sink(const Options & o) -> std::unique_ptr<std::ofstream>
        {
            if (o.out_path.empty())
                return nullptr;
            auto file = std::make_unique<std::ofstream>(o.out_path, std::ios::binary);
            if (! *file)
                throw IoError("cannot open " + o.out_path + " for writing");
            return file;
        }

        void print_path(std::ostream & out, const char * what, const AlternatingPath & p)
        {
            out << what << " length " << p.length() << '\n'
                << "vertices " << join(p.vertices) << '\n'
                << "lead " << to_string(p.lead) << '\n';
        }

        auto cmd_solve(const Options & o, std::istream & in, std::ostream & out) -> int
        {
            auto g = load_graph(o, in);
            if (g.size() > max_solve_n)
                throw ResourceGuardError("solve supports n <= " + std::to_string(max_solve_n));

            if (o.what == "antipath")
                print_path(out, "antipath", longest_antipath(g));
            else if (o.what == "anticycle") {
                if (auto c = longest_anticycle(g))
                    out << "anticycle length " << c->length() << '\n' << "vertices " << join(c->vertices) << '\n';
                else
                    out << "anticycle none\n";
            }
            else {
                auto d = longest_directed_path(g);
                out << "dipath length " << (d.empty() ? 0 : d.size() - 1) << '\n' << "vertices " << join(d) << '\n';
            }
            return exit_code::ok;
        }

        auto cmd_gen(const Options & o, std::ostream & out) -> int
        {
            FamilySpec spec;
            spec.family = parse_family_name(o.family);
            spec.n = o.n.value_or(0);
            spec.k = o.k.value_or(0);
            spec.copies = o.copies;
            spec.p = o.p;
            spec.seed = o.seed;
            validate(spec);

            auto sink = open_sink(o);
            std::ostream & dest = sink ? *sink : out;
            if (spec.family == Family::Enumerate) {
                if (spec.n > 6)
                    throw ResourceGuardError("enumerate supports n <= 6");
                enumerate_all(spec.n, [&](std::uint64_t code, const OrientedGraph &) {
                    dest << spec.n << ':' << code << '\n';
                });
            }
            else {
                dest << "# " << format_family(spec) << '\n';
                write_graph(dest, build(spec));
            }
            if (! dest)
                throw IoError("failed writing graph output");
            return exit_code::ok;
        }

        auto cmd_rotate(const Options & o, std::istream & in, std::ostream & out) -> int
        {
            auto g = load_graph(o, in);
            if (g.size() > max_solve_n)
                throw ResourceGuardError("rotate supports n <= " + std::to_string(max_solve_n));
            if (g.size() == 0)
                throw UsageError("graph has no vertices");

            auto p = longest_antipath(g);
            print_path(out, "antipath", p);
            if (p.length() % 2 == 1 && p.lead == Lead::In)
                p = reversed(p);

            if (p.lead == Lead::Out && p.length() >= 1) {
                auto st = make_rotation_state(g, p);
                out << "X1 " << set_text(st.x1) << '\n'
                    << "X2 " << set_text(st.x2) << '\n'
                    << "Y1 " << set_text(st.y1) << '\n'
                    << "Y2 " << set_text(st.y2) << '\n'
                    << "pivots " << join(legal_pivots(g, st)) << '\n';
            }
            if (auto c = close_to_anticycle(g, p))
                out << "closure " << join(c->vertices) << '\n';
            else
                out << "closure none\n";

            if (! o.k)
                return exit_code::ok;

            auto w = find_long_structure(g, *o.k);
            for (const auto & step : w.trace)
                out << "round " << step.round << " pivot " << step.pivot << " -> " << join(step.result.vertices) << '\n';
            out << "witness " << (w.is_path() ? "antipath" : "anticycle") << " length " << w.length() << " strategy "
                << w.strategy_tag() << '\n';
            if (w.is_path())
                out << "vertices " << join(std::get<AlternatingPath>(w.shape).vertices) << '\n';
            else
                out << "vertices " << join(std::get<AntiCycle>(w.shape).vertices) << '\n';
            return exit_code::ok;
        }

        void print_summary(std::ostream & out, const Options & o, const CampaignSummary & s)
        {
            out << "inspected " << s.inspected << '\n'
                << "hypothesis " << s.hypothesis << '\n'
                << "counterexamples " << s.counterexamples << '\n';
            for (const auto & f : s.findings)
                out << "finding " << to_json_line(f) << '\n';
            if (! o.canonical)
                out << "seconds " << s.seconds << '\n';
        }

        auto population(const Options & o) -> std::variant<ExhaustivePopulation, SampledPopulation>
        {
            int n = require(o.n, "--n");
            if (o.exhaustive == o.samples.has_value())
                throw UsageError("exactly one of --exhaustive and --samples is required");
            if (o.exhaustive)
                return ExhaustivePopulation{n};
            return SampledPopulation{n, n, o.p, *o.samples, o.seed};
        }

        auto cmd_verify(const Options & o, std::ostream & out) -> int
        {
            auto property = parse_property(o.property);
            if (property == Property::Stein || property == Property::Problem41)
                throw UsageError("use the search subcommand for " + o.property);

            if (property == Property::ConstructionD) {
                auto records = verify_construction_d(require(o.kmax, "--kmax"));
                auto sink = open_sink(o);
                int passed = 0;
                for (const auto & r : records) {
                    bool pass = r.hypothesis && r.conclusion;
                    passed += pass;
                    out << "k " << r.k << " n " << r.n << " pseudo_delta0 " << r.pseudo_delta0 << " dipath "
                        << r.witness_vertices->size() - 1 << (pass ? " pass" : " FAIL") << '\n';
                    if (sink)
                        *sink << to_json_line(r) << '\n';
                }
                if (sink && ! *sink)
                    throw IoError("failed writing " + o.out_path);
                out << "passed " << passed << '/' << records.size() << '\n';
                return passed == static_cast<int>(records.size()) ? exit_code::ok : exit_code::finding;
            }

            Campaign c;
            c.property = property;
            c.k_min = c.k_max = require(o.k, "--k");
            c.population = population(o);
            c.shards = o.shards;
            c.jobs = o.jobs;
            validate(c);

            auto sink = open_sink(o);
            auto summary = run_campaign(c, sink.get());
            out << "property " << o.property << " n " << *o.n << " k " << *o.k << '\n';
            print_summary(out, o, summary);
            return summary.counterexamples ? exit_code::finding : exit_code::ok;
        }

        auto cmd_search(const Options & o, std::ostream & out) -> int
        {
            Campaign c;
            c.property = parse_property(o.property);
            if (c.property != Property::Stein && c.property != Property::Problem41)
                throw UsageError("search targets are stein and problem41");
            c.k_min = c.k_max = require(o.k, "--k");
            c.population = population(o);
            c.shards = o.shards;
            c.jobs = o.jobs;
            validate(c);

            auto sink = open_sink(o);
            auto summary = run_campaign(c, sink.get());
            out << "target " << o.property << " n " << *o.n << " k " << *o.k << '\n';
            print_summary(out, o, summary);
            return summary.counterexamples ? exit_code::finding : exit_code::ok;
        }

        auto cmd_gbound(const Options & o, std::ostream & out) -> int
        {
            int kmax = require(o.kmax, "--kmax");
            if (kmax < 2)
                throw UsageError("--kmax must be >= 2");

            int failures = 0;
            for (int k = 2; k <= kmax; ++k) {
                try {
                    auto ta = threshold_arithmetic(k);
                    if (ta.g_of_k != g_of_k_expanded(k))
                        ++failures;
                }
                catch (const std::logic_error &) {
                    ++failures;
                }
            }
            for (int k : {2, 4})
                if (k <= kmax) {
                    auto g = threshold_arithmetic(k).g_of_k;
                    out << "g(" << k << ") = " << g.numerator() << '/' << g.denominator() << '\n';
                }
            out << "checked " << kmax - 1 << " values of k, failures " << failures << '\n';
            return failures ? exit_code::finding : exit_code::ok;
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Antipaths and anticycles in oriented graphs", "antipath"};
        app.require_subcommand(1);
        Options o;

        auto graph_input = [&](CLI::App * cmd) {
            auto input = cmd->add_option("--input", o.input, "graph file (default: standard input)");
            cmd->add_option("--code", o.code, "inline graph as N:TRIT")->excludes(input);
        };
        auto population_flags = [&](CLI::App * cmd) {
            cmd->add_option("--n", o.n, "vertex count");
            cmd->add_option("--k", o.k, "length parameter");
            auto ex = cmd->add_flag("--exhaustive", o.exhaustive, "all labelled graphs on n vertices");
            cmd->add_option("--samples", o.samples, "number of random graphs")->excludes(ex);
            cmd->add_option("--p", o.p, "arc probability for sampling")->check(CLI::Range(0.0, 1.0));
            cmd->add_option("--seed", o.seed, "base seed for sampling");
            cmd->add_option("--out", o.out_path, "JSON-lines record file");
            cmd->add_option("--shards", o.shards, "population shards")->check(CLI::PositiveNumber);
            cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
            cmd->add_flag("--canonical", o.canonical, "omit timing from the summary");
        };

        auto * solve = app.add_subcommand("solve", "longest antipath, anticycle or directed path");
        graph_input(solve);
        solve->add_option("--what", o.what, "antipath | anticycle | dipath")
            ->check(CLI::IsMember({"antipath", "anticycle", "dipath"}));

        auto * gen = app.add_subcommand("gen", "build a graph family");
        gen->add_option("--family", o.family, "circulant | regular-union | construction-d | random | enumerate")->required();
        gen->add_option("--n", o.n, "vertex count");
        gen->add_option("--k", o.k, "family parameter");
        gen->add_option("--copies", o.copies, "tournament copies");
        gen->add_option("--p", o.p, "arc probability");
        gen->add_option("--seed", o.seed, "random seed");
        gen->add_option("--out", o.out_path, "output file");

        auto * rotate = app.add_subcommand("rotate", "rotation state, closures and the long-structure finder");
        graph_input(rotate);
        rotate->add_option("--k", o.k, "run the finder for this k");

        auto * verify = app.add_subcommand("verify", "check a property over a graph population");
        verify->add_option("--property", o.property, "theorem-main | lemma-basic | theorem-ks | corollary-size | construction-d")
            ->required();
        population_flags(verify);
        verify->add_option("--kmax", o.kmax, "largest k for construction-d");

        auto * search = app.add_subcommand("search", "counterexample search for stein or problem41");
        search->add_option("--property", o.property, "stein | problem41")->required();
        population_flags(search);

        auto * gbound = app.add_subcommand("gbound", "exact sweep of the rotation-round bound g(k) > k");
        gbound->add_option("--kmax", o.kmax, "largest k")->required();

        try {
            std::vector<std::string> reversed_args(args.rbegin(), args.rend());
            app.parse(reversed_args);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_code::ok;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            err << "antipath: " << e.what() << '\n';
            return exit_code::usage;
        }

        try {
            if (solve->parsed())
                return cmd_solve(o, in, out);
            if (gen->parsed())
                return cmd_gen(o, out);
            if (rotate->parsed())
                return cmd_rotate(o, in, out);
            if (verify->parsed())
                return cmd_verify(o, out);
            if (search->parsed())
                return cmd_search(o, out);
            return cmd_gbound(o, out);
        }
        catch (const TheoremCounterexample & e) {
            err << "antipath: research event: " << e.what() << '\n';
            return exit_code::finding;
        }
        catch (const ResourceGuardError & e) {
            err << "antipath: " << e.what() << '\n';
            return exit_code::resource;
        }
        catch (const IoError & e) {
            err << "antipath: " << e.what() << '\n';
            return exit_code::resource;
        }
        catch (const std::ios_base::failure & e) {
            err << "antipath: " << e.what() << '\n';
            return exit_code::resource;
        }
        catch (const std::invalid_argument & e) {
            // GraphError, PreconditionFailure and bad parameters
            err << "antipath: " << e.what() << '\n';
            return exit_code::usage;
        }
    }
}
