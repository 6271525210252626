#include <rpcover/cli.hpp>

#include <rpcover/construct.hpp>
#include <rpcover/counting.hpp>
#include <rpcover/errors.hpp>
#include <rpcover/exact.hpp>
#include <rpcover/io.hpp>
#include <rpcover/lll.hpp>
#include <rpcover/table.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <thread>

namespace rpcover {

namespace {

struct Options {
    int n = 0;
    int k = 0;
    int r = 0;
    int p = 0;
    int x = 1;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::string hypergraph_path;
    std::string cover_path;
    std::string output_path;
    bool json = false;
    bool forced = false;
    std::uint64_t budget = SearchConfig{}.node_budget;
    int x_max = SearchConfig{}.x_max;
    unsigned threads = 1;
    int n_max = 7;
    std::uint64_t max_resamples = 100'000'000;
    std::uint64_t max_iterations = 1'000'000;
};

void write_cover_to(const std::string & path, const Cover & cover, bool json, std::ostream & out)
{
    if (path.empty() || path == "-") {
        if (json)
            out << to_json(cover).dump() << '\n';
        else
            write_cover(out, cover);
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw ParseError("cannot write " + path);
    if (json)
        file << to_json(cover).dump(2) << '\n';
    else
        write_cover(file, cover);
}

nlohmann::json exact_json(const ExactResult & r)
{
    nlohmann::json j = {{"lower", r.lower}, {"exact", r.exact()}, {"nodes", r.nodes}, {"bounds", r.bounds_used}};
    j["upper"] = r.upper ? nlohmann::json(*r.upper) : nlohmann::json(nullptr);
    if (r.witness)
        j["witness"] = to_json(*r.witness);
    return j;
}

int cmd_exact(const Options & o, std::ostream & out)
{
    const Hypergraph g = o.hypergraph_path.empty() ? complete_hypergraph(o.n, o.k) : load_hypergraph(o.hypergraph_path);
    SearchConfig config;
    config.node_budget = o.budget;
    config.x_max = o.x_max;
    config.parallel_width = o.threads;
    const auto result = exact_cover_number(g, o.r, o.p, config);
    if (o.json) {
        out << exact_json(result).dump(2) << '\n';
    } else {
        out << "cover number: " << format_cell(result) << (result.exact() ? " (exact)" : " (interval)") << '\n';
        out << "nodes: " << result.nodes << '\n';
        for (const auto & b : result.bounds_used)
            out << "  " << b << '\n';
        if (result.witness) {
            out << "witness:\n";
            write_cover(out, *result.witness);
        }
    }
    return result.exact() ? kExitOk : kExitBudget;
}

int cmd_construct(const Options & o, std::ostream & out)
{
    const Cover cover = cover_complete(o.n, o.k, o.r, o.p);
    const auto bound = size_bound(o.n, o.k, o.r, o.p);
    if (!o.output_path.empty() && o.output_path != "-")
        write_cover_to(o.output_path, cover, o.json, out);
    if (o.json) {
        nlohmann::json j = {{"size", cover.size()},
                            {"size_bound", bound.value},
                            {"formula", bound.formula_id},
                            {"l", bound.l}};
        if (o.output_path.empty())
            j["cover"] = to_json(cover);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "# colorings: " << cover.size() << "  size bound: " << bound.value << " (" << bound.formula_id
        << ", l=" << bound.l << ")\n";
    if (o.output_path.empty())
        write_cover(out, cover);
    return kExitOk;
}

int cmd_mtc(const Options & o, std::ostream & out)
{
    const Hypergraph g = load_hypergraph(o.hypergraph_path);
    const auto result =
        mtc_cover(g, o.r, o.p, o.x, o.seed, o.max_resamples, o.forced ? MtcMode::forced : MtcMode::guaranteed);
    out << "# seed " << o.seed << "  resamples " << result.count << (o.forced ? "  (forced mode)" : "") << '\n';
    write_cover_to(o.output_path, result.cover, o.json, out);
    return kExitOk;
}

int cmd_union(const Options & o, std::ostream & out)
{
    const Hypergraph g = load_hypergraph(o.hypergraph_path);
    const auto result = union_bound_cover(g, o.r, o.p, o.x, o.seed, o.max_iterations);
    out << "# seed " << o.seed << "  draws " << result.count << '\n';
    write_cover_to(o.output_path, result.cover, o.json, out);
    return kExitOk;
}

nlohmann::json optional_json(const std::optional<int> & v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

int cmd_bounds(const Options & o, std::ostream & out)
{
    const Hypergraph g = load_hypergraph(o.hypergraph_path);
    const auto params = CoverParams::make(o.r, o.p, g.k());
    const auto report = lower_bound_report(g, params.r, params.p);
    const auto construction = cover_complete(g.n(), g.k(), params.r, params.p);
    const auto bound = size_bound(g.n(), g.k(), params.r, params.p);
    const auto d = dependency(g);
    const double base = lll_base(g.k(), params.r, params.p);
    const auto x_edges = min_x_edge_bound(g.num_edges(), g.k(), params.r, params.p);
    const auto x_dep = min_x_dependency_bound(d, g.k(), params.r, params.p);
    const auto bracket = M_bounds(g.n(), g.k(), params.r, params.p);

    if (o.json) {
        nlohmann::json lower = nlohmann::json::array();
        for (const auto & e : report.entries)
            lower.push_back({{"name", e.name}, {"value", e.value}, {"source", e.source}});
        nlohmann::json j = {
            {"n", g.n()}, {"k", g.k()}, {"m", g.num_edges()}, {"r", params.r}, {"p", params.p},
            {"lower_bound", report.best}, {"lower_bounds", lower},
            {"M_bracket", {{"lower", bracket.lower}, {"raw_lower", bracket.raw_lower}, {"upper", bracket.upper}}},
            {"constructive_upper", construction.size()}, {"size_bound", bound.value},
            {"dependency", d}, {"lll_base", base},
            {"lll_sufficient_condition", lll_sufficient_condition(g.k(), params.r, params.p)},
            {"min_x_edge_bound", optional_json(x_edges)}, {"min_x_dependency_bound", optional_json(x_dep)}};
        j["strong_chromatic"] = optional_json(report.strong_chromatic);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "hypergraph: n=" << g.n() << " k=" << g.k() << " m=" << g.num_edges() << "  (r,p)=(" << params.r << ","
        << params.p << ")\n";
    out << "lower bound: " << report.best << '\n';
    for (const auto & e : report.entries)
        out << "  " << e.name << ": " << e.value << "  [" << e.source << "]\n";
    out << "M bracket: [" << bracket.lower << ", " << bracket.upper << "] (raw lower " << bracket.raw_lower << ")\n";
    out << "constructive upper bound: " << construction.size() << "  (divide-and-conquer cover of K_" << g.n() << "^"
        << g.k() << ")\n";
    out << "closed-form size bound: " << bound.value << " (" << bound.formula_id << ")\n";
    out << "dependency: " << d << "  lll base: " << base
        << (lll_sufficient_condition(g.k(), params.r, params.p) ? "  (k >= 2p-1, r >= e(p-1))" : "") << '\n';
    out << "union-bound x: " << (x_edges ? std::to_string(*x_edges) : std::string("infeasible")) << '\n';
    out << "local-lemma x: " << (x_dep ? std::to_string(*x_dep) : std::string("infeasible")) << '\n';
    return kExitOk;
}

int cmd_verify(const Options & o, std::ostream & out)
{
    const Hypergraph g = load_hypergraph(o.hypergraph_path);
    const Cover cover = load_cover(o.cover_path);
    if (cover.n() != g.n())
        throw ParseError("cover has n=" + std::to_string(cover.n()) + " but hypergraph has n=" + std::to_string(g.n()));
    const auto params = CoverParams::make(cover.r(), o.p, g.k());
    const auto missing = uncovered_edges(g, cover, params.p);
    if (missing.empty()) {
        out << "valid: all " << g.num_edges() << " edges covered by " << cover.size() << " colorings\n";
        return kExitOk;
    }
    out << "invalid: " << missing.size() << " uncovered edges\n";
    for (auto i : missing) {
        auto e = g.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j)
            out << (j ? " " : "") << e[j];
        out << '\n';
    }
    return kExitInvalidCover;
}

int cmd_table(const Options & o, std::ostream & out)
{
    SearchConfig config;
    config.node_budget = o.budget;
    config.x_max = o.x_max;
    const auto cells = compute_table(o.n_max, config, o.threads);
    if (o.json)
        out << table_to_json(cells).dump(2) << '\n';
    else
        out << format_table(cells, o.n_max);
    const bool all_exact = std::all_of(cells.begin(), cells.end(), [](const TableCell & c) { return c.result.exact(); });
    return all_exact ? kExitOk : kExitBudget;
}

int cmd_gen(const Options & o, std::ostream & out)
{
    const Hypergraph g = random_hypergraph(o.n, o.k, o.m, o.seed);
    out << "# seed " << o.seed << '\n';
    if (o.output_path.empty() || o.output_path == "-") {
        if (o.json)
            out << to_json(g).dump() << '\n';
        else
            write_hypergraph(out, g);
        return kExitOk;
    }
    std::ofstream file(o.output_path);
    if (!file)
        throw ParseError("cannot write " + o.output_path);
    if (o.json)
        file << to_json(g).dump(2) << '\n';
    else
        write_hypergraph(file, g);
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Strong (r,p) covers of k-uniform hypergraphs"};
    app.require_subcommand(1);
    Options o;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

    auto * exact = app.add_subcommand("exact", "exact cover number (K_n^k, or --hypergraph)");
    exact->add_option("--n", o.n, "vertices of K_n^k");
    exact->add_option("--k", o.k, "edge size of K_n^k");
    exact->add_option("--r", o.r, "colors per coloring")->required();
    exact->add_option("--p", o.p, "distinct colors required per edge")->required();
    exact->add_option("--hypergraph", o.hypergraph_path, "hypergraph file instead of K_n^k");
    exact->add_option("--budget", o.budget, "search nodes per root branch and depth");
    exact->add_option("--x-max", o.x_max, "largest cover size searched");
    exact->add_option("--threads", o.threads, "worker threads");
    exact->add_flag("--json", o.json, "JSON output");

    auto * construct = app.add_subcommand("construct", "divide-and-conquer cover of K_n^k");
    construct->add_option("--n", o.n)->required();
    construct->add_option("--k", o.k)->required();
    construct->add_option("--r", o.r)->required();
    construct->add_option("--p", o.p)->required();
    construct->add_option("-o,--output", o.output_path, "write the cover here");
    construct->add_flag("--json", o.json);

    auto * mtc = app.add_subcommand("mtc", "Moser-Tardos resampling cover");
    mtc->add_option("--hypergraph", o.hypergraph_path)->required();
    mtc->add_option("--r", o.r)->required();
    mtc->add_option("--p", o.p)->required();
    mtc->add_option("--x", o.x)->required();
    mtc->add_option("--seed", o.seed);
    mtc->add_flag("--forced", o.forced, "run even when the dependency threshold fails");
    mtc->add_option("--max-resamples", o.max_resamples);
    mtc->add_option("-o,--output", o.output_path);
    mtc->add_flag("--json", o.json);

    auto * uni = app.add_subcommand("union", "independent random colorings until they cover");
    uni->add_option("--hypergraph", o.hypergraph_path)->required();
    uni->add_option("--r", o.r)->required();
    uni->add_option("--p", o.p)->required();
    uni->add_option("--x", o.x)->required();
    uni->add_option("--seed", o.seed);
    uni->add_option("--max-iterations", o.max_iterations);
    uni->add_option("-o,--output", o.output_path);
    uni->add_flag("--json", o.json);

    auto * bounds = app.add_subcommand("bounds", "lower and upper bounds for a hypergraph");
    bounds->add_option("--hypergraph", o.hypergraph_path)->required();
    bounds->add_option("--r", o.r)->required();
    bounds->add_option("--p", o.p)->required();
    bounds->add_flag("--json", o.json);

    auto * verify = app.add_subcommand("verify", "check that a cover properly colors every edge");
    verify->add_option("--hypergraph", o.hypergraph_path)->required();
    verify->add_option("--cover", o.cover_path)->required();
    verify->add_option("--p", o.p)->required();

    auto * table = app.add_subcommand("table", "cover numbers of K_n^k for small n");
    table->add_option("--n-max", o.n_max, "largest n");
    table->add_option("--budget", o.budget, "search nodes per root branch and depth");
    table->add_option("--x-max", o.x_max);
    table->add_option("--threads", o.threads)->default_val(hw);
    table->add_flag("--json", o.json);

    auto * gen = app.add_subcommand("gen", "random k-uniform hypergraph");
    gen->add_option("--n", o.n)->required();
    gen->add_option("--k", o.k)->required();
    gen->add_option("--m", o.m)->required();
    gen->add_option("--seed", o.seed);
    gen->add_option("-o,--output", o.output_path);
    gen->add_flag("--json", o.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*exact) {
            if (o.hypergraph_path.empty() && (o.n == 0 || o.k == 0))
                throw InvalidArgument("exact needs --n and --k, or --hypergraph");
            return cmd_exact(o, out);
        }
        if (*construct)
            return cmd_construct(o, out);
        if (*mtc)
            return cmd_mtc(o, out);
        if (*uni)
            return cmd_union(o, out);
        if (*bounds)
            return cmd_bounds(o, out);
        if (*verify)
            return cmd_verify(o, out);
        if (*table)
            return cmd_table(o, out);
        if (*gen)
            return cmd_gen(o, out);
    } catch (const BudgetExceeded & e) {
        err << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ParseError & e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument & e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace rpcover
