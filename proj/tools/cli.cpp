#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tcl/campaigns.hpp"
#include "tcl/cycle.hpp"
#include "tcl/errors.hpp"
#include "tcl/fractional.hpp"
#include "tcl/generators.hpp"
#include "tcl/io.hpp"
#include "tcl/matching.hpp"
#include "tcl/pipeline.hpp"
#include "tcl/serialize.hpp"
#include "tcl/slice.hpp"
#include "tcl/tight.hpp"

namespace tcl {
namespace {

// Exit status for a false verdict or a failed pipeline stage.
class VerdictFalse : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::string file2;
    std::string format;
    std::string seed_text;
    std::string d = "1/10";
    std::string eps = "1/5";
    std::string good_fraction;
    std::string campaign;
    std::vector<int> sizes;
    int n = 0;
    int a = 0;
    int t = 6;
    int k = 0;
    int samples = 64;
    int trials = 100;
    int jobs = 1;
    int max_attempts = 1000;
    int vertex = 0;
    int component = -1;
    int delta = -1;
    std::int64_t edge_target = -1;
    double p = -1.0;  // unset: 0.5, or 0.62 as the --min-degree start
    bool observe = false;
    bool lemma = false;
    bool graph = false;
    bool no_timings = false;
};

struct Io {
    std::istream& in;
    std::ostream& out;
};

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw InvalidArgument("cannot open '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

// Arity declared by the header line, or 0 when there is none.
int declared_arity(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        int arity = 0;
        return tokens >> arity ? arity : 0;
    }
    return 0;
}

Hypergraph3 load3(const std::string& path, std::istream& in) {
    std::istringstream text(slurp(path, in));
    return read_hypergraph(text);
}

Graph load2(const std::string& path, std::istream& in) {
    std::istringstream text(slurp(path, in));
    return read_graph(text);
}

// Accepts "p/q", integers and plain decimals such as 0.15.
Rational parse_number(const std::string& text, const std::string& flag) {
    const auto dot = text.find('.');
    try {
        if (dot == std::string::npos) return parse_rational(text);
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidArgument("bad decimal");
        }
        Rational r = parse_rational((whole.empty() || whole == "-" ? whole + "0" : whole) + frac);
        r /= Rational(mpz_class("1" + std::string(frac.size(), '0')));
        return r;
    } catch (const InvalidArgument&) {
        throw InvalidArgument(flag + ": expected a rational like 1/10 or 0.1, got '" + text + "'");
    }
}

std::uint64_t resolve_seed(const std::string& flag_value) {
    std::string text = flag_value;
    if (text.empty()) {
        const char* env = std::getenv("TCL_SEED");
        if (env == nullptr || *env == '\0') return 0;
        text = env;
    }
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 20) {
        throw InvalidArgument("seed must be a non-negative integer, got '" + text + "'");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw InvalidArgument("seed out of range: '" + text + "'");
    }
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
        return;
    }
    if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
        std::string joined;
        for (const auto& x : j) {
            if (!joined.empty()) joined += ' ';
            joined += x.is_string() ? x.get<std::string>() : x.dump();
        }
        rows.emplace_back(prefix, joined);
        return;
    }
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
    if (format.empty() || format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (format == "text") {
        for (const auto& [key, value] : rows) out << key << ": " << value << '\n';
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << csv_field(rows[i].first);
        out << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << csv_field(rows[i].second);
        out << '\n';
    }
}

Json edge_list(std::span<const Triple> edges) {
    Json list = Json::array();
    for (const auto& e : edges) list.push_back(e);
    return list;
}

Json edge_list(std::span<const Pair> edges) {
    Json list = Json::array();
    for (const auto& e : edges) list.push_back(e);
    return list;
}

std::string connectivity_name(Connectivity c) {
    switch (c) {
        case Connectivity::Connected: return "connected";
        case Connectivity::Disconnected: return "disconnected";
        default: return "empty";
    }
}

void cmd_info(const Options& o, Io io) {
    const std::string text = slurp(o.file, io.in);
    std::istringstream stream(text);
    Json j;
    if (declared_arity(text) == 2) {
        const Graph g = read_graph(stream);
        int lo = g.n() ? g.degree(1) : 0, hi = lo;
        for (Vertex v = 1; v <= g.n(); ++v) {
            lo = std::min(lo, g.degree(v));
            hi = std::max(hi, g.degree(v));
        }
        const auto components = connected_components(g);
        j = {{"uniformity", 2},
             {"n", g.n()},
             {"edges", g.edge_count()},
             {"min_degree", lo},
             {"max_degree", hi},
             {"density", to_string(g.n() < 2 ? Rational(0) : make_rational(static_cast<std::int64_t>(g.edge_count()), binom(g.n(), 2)))},
             {"above_five_ninths", above_five_ninths(g)},
             {"components", components.size()},
             {"matching_number", max_matching(g).size()}};
        if (g.edge_count() > 0) j["largest_component_vertices"] = largest_component(g).vertices.size();
    } else {
        const Hypergraph3 h = read_hypergraph(stream);
        const auto labels = tight_components(h);
        int hi = 0;
        for (Vertex v = 1; v <= h.n(); ++v) hi = std::max(hi, h.vertex_degree(v));
        j = {{"uniformity", 3},
             {"n", h.n()},
             {"edges", h.edge_count()},
             {"min_degree", h.n() ? min_degree(h, 1) : 0},
             {"max_degree", hi},
             {"min_codegree", h.n() >= 2 ? min_degree(h, 2) : 0},
             {"density", to_string(h.n() < 3 ? Rational(0) : make_rational(static_cast<std::int64_t>(h.edge_count()), binom(h.n(), 3)))},
             {"above_five_ninths", above_five_ninths(h)},
             {"tight_components", labels.component_count},
             {"tight_connectivity", connectivity_name(tight_connectivity(h))},
             {"tightly_connected", is_tightly_connected(h)}};
    }
    emit(io.out, j, o.format);
}

void cmd_link(const Options& o, Io io) {
    const auto h = load3(o.file, io.in);
    if (o.vertex < 1 || o.vertex > h.n()) {
        throw InvalidArgument("vertex " + std::to_string(o.vertex) + " outside [1, " + std::to_string(h.n()) + "]");
    }
    const Graph g = link_graph(h, o.vertex);
    if (o.format.empty()) {
        write_graph(io.out, g, {"link of vertex " + std::to_string(o.vertex)});
    } else {
        emit(io.out, {{"vertex", o.vertex}, {"n", g.n()}, {"edges", edge_list(g.edges())}}, o.format);
    }
}

void cmd_components(const Options& o, Io io) {
    const auto h = load3(o.file, io.in);
    Json j = to_json(tight_components(h), h);
    j["connectivity"] = connectivity_name(tight_connectivity(h));
    emit(io.out, j, o.format);
}

void cmd_match(const Options& o, Io io) {
    const Graph g = load2(o.file, io.in);
    Json j = to_json(max_matching(g));
    j["n"] = g.n();
    emit(io.out, j, o.format);
}

void cmd_egcheck(const Options& o, Io io) {
    const Graph g = load2(o.file, io.in);
    if (g.n() < 1) throw InvalidArgument("egcheck needs at least one vertex");
    const auto nu = static_cast<std::int64_t>(max_matching(g).size());
    const auto e = static_cast<std::int64_t>(g.edge_count());
    std::vector<std::int64_t> ks;
    if (o.k > 0) {
        ks.push_back(o.k);
    } else {
        for (std::int64_t k = 1; 2 * k - 1 <= g.n(); ++k) ks.push_back(k);
    }
    Json rows = Json::array();
    bool holds = true;
    for (const auto k : ks) {
        const auto threshold = erdos_gallai_threshold(g.n(), k);
        const bool row_holds = e <= threshold || nu >= k;
        holds = holds && row_holds;
        rows.push_back({{"k", k}, {"threshold", threshold}, {"above", e > threshold}, {"holds", row_holds}});
    }
    emit(io.out, {{"n", g.n()}, {"edges", e}, {"matching_number", nu}, {"rows", rows}, {"holds", holds}}, o.format);
    if (!holds) throw VerdictFalse("Erdős–Gallai bound violated");
}

void cmd_graphmeet(const Options& o, Io io) {
    if (o.file == "-" && o.file2 == "-") throw InvalidArgument("only one input may be '-'");
    const Graph g1 = load2(o.file, io.in);
    const Graph g2 = load2(o.file2, io.in);
    const auto report = graphmeet_verify(g1, g2, o.observe);
    const bool consistent = graphmeet_consistent(report, g1, g2);
    Json j = to_json(report);
    j["evidence_consistent"] = consistent;
    emit(io.out, j, o.format);
    if (!report.all_verdicts()) throw VerdictFalse("a verdict is false");
    if (!consistent) throw VerdictFalse("evidence does not reproduce the verdicts");
}

void cmd_fracmatch(const Options& o, Io io) {
    const auto h = load3(o.file, io.in);
    if (o.lemma) {
        const auto outcome = lemma_fracmatch(h);
        emit(io.out,
             {{"component", outcome.component},
              {"subgraph_edges", outcome.subgraph.size()},
              {"subgraph_min_degree", outcome.subgraph_min_degree},
              {"four_ninths_bound", to_string(make_rational(4 * binom(h.n(), 2), 9))},
              {"matching", to_json(outcome.matching)}},
             o.format);
        return;
    }
    const auto labels = tight_components(h);
    if (labels.component_count == 0) throw InvalidArgument("hypergraph has no edges");
    int component = o.component;
    if (component < 0) {
        component = 0;
        for (int c = 1; c < labels.component_count; ++c) {
            if (labels.component_sizes[c] > labels.component_sizes[component]) component = c;
        }
    } else if (component >= labels.component_count) {
        throw InvalidArgument("component " + std::to_string(component) + " does not exist");
    }
    const auto best = max_fractional_matching(h, labels, component);
    const auto decision = perfect_or_certificate(h, labels, component);
    Json j = {{"component", component}, {"component_edges", labels.component_sizes[component]}, {"max", to_json(best)}};
    if (const auto* cert = std::get_if<FarkasCertificate>(&decision)) {
        std::vector<Triple> edges;
        for (auto i : labels.edges_with_label(component)) edges.push_back(h.edge(i));
        j["perfect"] = false;
        j["certificate"] = to_json(*cert);
        j["certificate_valid"] = is_valid_certificate(*cert, edges);
    } else {
        j["perfect"] = true;
        j["certificate"] = nullptr;
    }
    emit(io.out, j, o.format);
}

void cmd_cycle(const Options& o, Io io) {
    const auto h = load3(o.file, io.in);
    const auto cycle = longest_tight_cycle(h);
    if (!cycle) {
        emit(io.out, {{"length", 0}, {"order", nullptr}, {"valid", false}}, o.format);
        return;
    }
    emit(io.out, to_json(*cycle, validate_cycle(h, cycle->order).valid()), o.format);
}

void cmd_extremal(const Options& o, Io io) {
    const auto inst = extremal(o.n, o.a);
    if (o.format.empty()) {
        write_hypergraph(io.out, inst.h,
                         {"extremal n=" + std::to_string(o.n) + " a=" + std::to_string(o.a),
                          "predicted min degree " + std::to_string(inst.predicted_min_degree)});
    } else {
        emit(io.out,
             {{"n", o.n},
              {"a", inst.a},
              {"b", inst.b},
              {"edges", inst.h.edge_count()},
              {"predicted_min_degree", inst.predicted_min_degree},
              {"cycle_upper_bound", inst.cycle_upper_bound}},
             o.format);
    }
}

void cmd_random(const Options& o, Io io, std::uint64_t seed) {
    if (o.n < 0) throw InvalidArgument("--n must be non-negative");
    if (o.p > 1.0 || (o.p < 0.0 && o.p != -1.0)) throw InvalidArgument("--p must lie in [0, 1]");
    const double p = o.p >= 0.0 ? o.p : (o.delta >= 0 ? 0.62 : 0.5);
    if (o.graph) {
        const Graph g = o.edge_target >= 0 ? random_graph_with_edges(o.n, o.edge_target, seed) : random_graph(o.n, p, seed);
        if (o.format.empty()) {
            write_graph(io.out, g, {"random n=" + std::to_string(o.n) + " seed=" + std::to_string(seed)});
        } else {
            emit(io.out, {{"n", g.n()}, {"edges", edge_list(g.edges())}}, o.format);
        }
        return;
    }
    Hypergraph3 h;
    std::vector<std::string> comments = {"random n=" + std::to_string(o.n) + " seed=" + std::to_string(seed)};
    if (o.delta >= 0) {
        auto sample = random_min_degree_3graph(o.n, o.delta, seed, o.max_attempts, p);
        if (!sample.graph) {
            throw VerdictFalse("no sample reached min degree " + std::to_string(o.delta) + " in " +
                               std::to_string(sample.attempts) + " attempts (best " +
                               std::to_string(sample.best_min_degree) + ")");
        }
        h = std::move(*sample.graph);
        comments.push_back("attempts " + std::to_string(sample.attempts));
    } else {
        h = random_3graph(o.n, p, seed);
    }
    if (o.format.empty()) {
        write_hypergraph(io.out, h, comments);
    } else {
        emit(io.out, {{"n", h.n()}, {"edges", edge_list(h.edges())}}, o.format);
    }
}

void cmd_slice(const Options& o, Io io, std::uint64_t seed) {
    const auto h = load3(o.file, io.in);
    emit(io.out, to_json(build_weak_slice(h, o.t, seed)), o.format);
}

void cmd_reduce(const Options& o, Io io, std::uint64_t seed) {
    const auto h = load3(o.file, io.in);
    const auto slice = build_weak_slice(h, o.t, seed);
    ReductionParams params;
    params.d_threshold = parse_number(o.d, "--d");
    params.eps = parse_number(o.eps, "--eps");
    params.samples = o.samples;
    params.seed = seed;
    const auto reduced = build_reduced_graph(h, slice, params);
    const Rational fraction = o.good_fraction.empty() ? default_good_fraction(params.eps)
                                                      : parse_number(o.good_fraction, "--good-fraction");
    Json rows = Json::array();
    for (const auto& row : lemma8_check(reduced)) {
        rows.push_back({{"cluster", row.cluster},
                        {"thresholded_degree", to_string(row.thresholded_degree)},
                        {"bound", to_string(row.bound)},
                        {"holds", row.holds}});
    }
    emit(io.out,
         {{"reduced", to_json(reduced)},
          {"degree_check", rows},
          {"good_fraction", to_string(fraction)},
          {"good_clusters", good_clusters(reduced, fraction)}},
         o.format);
}

void cmd_pipeline(const Options& o, Io io, std::uint64_t seed) {
    const auto h = load3(o.file, io.in);
    PipelineParams params;
    params.t = o.t;
    params.d = parse_number(o.d, "--d");
    params.eps = parse_number(o.eps, "--eps");
    params.samples = o.samples;
    params.seed = seed;
    params.cycle.seed = seed;
    if (!o.good_fraction.empty()) params.good_fraction = parse_number(o.good_fraction, "--good-fraction");
    const auto report = run_pipeline(h, params);
    emit(io.out, to_json(report, !o.no_timings), o.format);
    if (const auto failed = report.failed_stage()) throw VerdictFalse("stage '" + *failed + "' failed");
}

void cmd_verify(const Options& o, Io io, std::uint64_t seed) {
    CampaignParams params;
    params.sizes = o.sizes;
    params.trials = o.trials;
    params.seed = seed;
    params.jobs = o.jobs;
    if (o.trials < 1) throw InvalidArgument("--trials must be positive");
    const auto result = run_campaign(o.campaign, params);
    emit(io.out,
         {{"campaign", result.name},
          {"trials", result.trials},
          {"passed", result.passed},
          {"summary", std::to_string(result.passed) + "/" + std::to_string(result.trials) + " pass"},
          {"failures", result.failures},
          {"seconds", result.seconds}},
         o.format);
    if (!result.ok()) throw VerdictFalse(result.name + ": " + std::to_string(result.trials - result.passed) + " failures");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tight cycles in dense 3-graphs: verifiers, solvers and experiment campaigns", "tcl"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed_text, "Random seed (falls back to TCL_SEED, then 0)");
    };
    auto add_input = [&](CLI::App* sub, const char* what) {
        sub->add_option("file", o.file, what)->required();
    };
    auto add_reduction = [&](CLI::App* sub) {
        sub->add_option("--t", o.t, "Number of clusters")->check(CLI::Range(3, 1000));
        sub->add_option("--d", o.d, "Density threshold of R_d");
        sub->add_option("--eps", o.eps, "Irregularity tolerance");
        sub->add_option("--samples", o.samples, "Witness samples per cluster triple")->check(CLI::Range(0, 1 << 20));
        sub->add_option("--good-fraction", o.good_fraction, "Irregular-triple fraction bounding good clusters");
    };

    auto* info = app.add_subcommand("info", "Summary statistics of a .3g or .2g file");
    add_input(info, "Input file ('-' for stdin)");
    add_format(info);

    auto* link = app.add_subcommand("link", "Link graph of a vertex as .2g");
    add_input(link, "Input .3g file");
    link->add_option("vertex", o.vertex, "Vertex")->required();
    add_format(link);

    auto* components = app.add_subcommand("components", "Tight components");
    add_input(components, "Input .3g file");
    add_format(components);

    auto* match = app.add_subcommand("match", "Maximum matching of a graph");
    add_input(match, "Input .2g file");
    add_format(match);

    auto* egcheck = app.add_subcommand("egcheck", "Check the Erdős–Gallai matching bound on a graph");
    add_input(egcheck, "Input .2g file");
    egcheck->add_option("--k", o.k, "Single matching size to check (default: all)");
    add_format(egcheck);

    auto* graphmeet = app.add_subcommand("graphmeet", "Verify the largest-component claims for two dense graphs");
    add_input(graphmeet, "First .2g file");
    graphmeet->add_option("file2", o.file2, "Second .2g file")->required();
    graphmeet->add_flag("--observe", o.observe, "Run even when the density precondition fails");
    add_format(graphmeet);

    auto* fracmatch = app.add_subcommand("fracmatch", "Perfect fractional matching or Farkas certificate");
    add_input(fracmatch, "Input .3g file");
    fracmatch->add_option("--component", o.component, "Tight component id (default: largest)");
    fracmatch->add_flag("--lemma", o.lemma, "Build H' from link components and match inside it");
    add_format(fracmatch);

    auto* cycle = app.add_subcommand("cycle", "Longest tight cycle (exact, n <= 22)");
    add_input(cycle, "Input .3g file");
    add_format(cycle);

    auto* extremal_cmd = app.add_subcommand("extremal", "All triples meeting A = {1..a}");
    extremal_cmd->add_option("--n", o.n, "Vertices")->required();
    extremal_cmd->add_option("--a", o.a, "Size of A")->required();
    add_format(extremal_cmd);

    auto* random = app.add_subcommand("random", "Random 3-graph (or graph with --graph)");
    random->add_option("--n", o.n, "Vertices")->required();
    random->add_option("--p", o.p, "Edge probability (start value with --min-degree)");
    random->add_option("--min-degree", o.delta, "Resample until the minimum degree reaches this value");
    random->add_option("--max-attempts", o.max_attempts, "Attempts for --min-degree")->check(CLI::PositiveNumber);
    random->add_flag("--graph", o.graph, "Emit a graph instead of a 3-graph");
    random->add_option("--edges", o.edge_target, "Exact edge count (with --graph)");
    add_seed(random);
    add_format(random);

    auto* slice = app.add_subcommand("slice", "Weak slice: random equipartition into t clusters");
    add_input(slice, "Input .3g file");
    slice->add_option("--t", o.t, "Number of clusters")->check(CLI::Range(3, 1000));
    add_seed(slice);
    add_format(slice);

    auto* reduce = app.add_subcommand("reduce", "Reduced graph, degree inequality and good clusters");
    add_input(reduce, "Input .3g file");
    add_reduction(reduce);
    add_seed(reduce);
    add_format(reduce);

    auto* pipeline = app.add_subcommand("pipeline", "Full slice-to-cycle pipeline");
    add_input(pipeline, "Input .3g file");
    add_reduction(pipeline);
    pipeline->add_flag("--no-timings", o.no_timings, "Omit timings (canonical report)");
    add_seed(pipeline);
    add_format(pipeline);

    auto* verify = app.add_subcommand("verify", "Run a randomized verification campaign");
    verify->add_option("campaign", o.campaign, "Campaign name")->required()->check(CLI::IsMember(campaign_names()));
    verify->add_option("--n", o.sizes, "Instance sizes (comma separated)")->delimiter(',');
    verify->add_option("--trials", o.trials, "Trials per size");
    verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
    add_seed(verify);
    add_format(verify);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Io io{in, out};
    try {
        if (info->parsed()) cmd_info(o, io);
        else if (link->parsed()) cmd_link(o, io);
        else if (components->parsed()) cmd_components(o, io);
        else if (match->parsed()) cmd_match(o, io);
        else if (egcheck->parsed()) cmd_egcheck(o, io);
        else if (graphmeet->parsed()) cmd_graphmeet(o, io);
        else if (fracmatch->parsed()) cmd_fracmatch(o, io);
        else if (cycle->parsed()) cmd_cycle(o, io);
        else if (extremal_cmd->parsed()) cmd_extremal(o, io);
        else if (random->parsed()) cmd_random(o, io, resolve_seed(o.seed_text));
        else if (slice->parsed()) cmd_slice(o, io, resolve_seed(o.seed_text));
        else if (reduce->parsed()) cmd_reduce(o, io, resolve_seed(o.seed_text));
        else if (pipeline->parsed()) cmd_pipeline(o, io, resolve_seed(o.seed_text));
        else if (verify->parsed()) cmd_verify(o, io, resolve_seed(o.seed_text));
    } catch (const VerdictFalse& e) {
        err << "tcl: " << e.what() << '\n';
        return 1;
    } catch (const InvariantViolation& e) {
        err << "tcl: invariant violated: " << e.what() << '\n';
        if (!e.witness().empty()) err << "witness: " << e.witness() << '\n';
        return 1;
    } catch (const ParseError& e) {
        err << "tcl: parse error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "tcl: precondition not met: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "tcl: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace tcl
