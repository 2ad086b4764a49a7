// Command-line frontend: extraction, layout, rendering, metrics, synthetic
// data, and the cross-validation experiment, wired together through the path
// collection JSON format.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <tempoviz/tempoviz.hpp>

namespace {

using namespace tempoviz;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open input file: " + path);
    return in;
}

// "-" or an empty path selects stdout.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw DataError("failed to write to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path);
    out << content;
    out.flush();
    if (!out) throw DataError("failed to write output file: " + path);
}

template <typename WriteFn>
std::string capture(WriteFn&& write_fn) {
    std::ostringstream buffer;
    write_fn(buffer);
    return buffer.str();
}

char resolve_delimiter(const std::string& token) {
    if (token.empty()) return '\0';  // auto-detect
    if (token == "tab") return '\t';
    if (token == "comma") return ',';
    if (token == "space") return ' ';
    if (token.size() == 1) return token.front();
    throw CLI::ValidationError("--delimiter expects a single character or tab/comma/space");
}

std::map<int, double> parse_alpha_entries(const std::vector<std::string>& entries) {
    std::map<int, double> alphas;
    for (const auto& entry : entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--alpha expects k=value, got '" + entry + "'");
        int order = 0;
        double value = 0.0;
        try {
            order = std::stoi(entry.substr(0, eq));
            value = std::stod(entry.substr(eq + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--alpha expects k=value, got '" + entry + "'");
        }
        if (order < 2)
            throw CLI::ValidationError("--alpha orders start at 2; order 1 is fixed at 1");
        if (value < 0.0) throw CLI::ValidationError("--alpha values must be >= 0");
        alphas[order] = value;
    }
    return alphas;
}

Layout read_layout_file(const std::string& path) {
    auto in = open_input(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        return io::read_layout_csv(in);
    return io::read_layout_json(in);
}

std::vector<std::pair<std::string, std::string>> first_order_edges(const PathCollection& pc) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [nodes, count] : pc.paths_of_length(1))
        edges.emplace_back(pc.vertices().name_of(nodes.front()),
                           pc.vertices().name_of(nodes.back()));
    return edges;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static, time-aware layouts of dynamic graphs built from causal paths"};
    app.require_subcommand(1);

    // ----- paths ---------------------------------------------------------
    struct {
        std::string input;
        std::string kind = "edges";
        std::int64_t delta = 0;
        int max_order = 1;
        bool undirected = false;
        std::string delimiter;
        std::uint64_t path_cap = 100'000'000;
        std::string output = "-";
    } paths_opts;
    auto* paths_cmd = app.add_subcommand(
        "paths", "Extract causal paths from a temporal edge list, or window trajectories");
    paths_cmd->add_option("--input", paths_opts.input, "Input file")->required();
    paths_cmd->add_option("--input-kind", paths_opts.kind, "Input format")
        ->check(CLI::IsMember({"edges", "trajectories"}))
        ->capture_default_str();
    auto* delta_opt = paths_cmd->add_option(
        "--delta", paths_opts.delta,
        "Maximum time difference between consecutive edges of a causal path");
    paths_cmd->add_option("--max-order", paths_opts.max_order, "Longest path length to keep")
        ->required()
        ->check(CLI::PositiveNumber);
    paths_cmd->add_flag("--undirected", paths_opts.undirected,
                        "Treat each edge row as two directed edges");
    paths_cmd->add_option("--delimiter", paths_opts.delimiter,
                          "Field delimiter (single char or tab/comma/space; default auto)");
    paths_cmd->add_option("--path-cap", paths_opts.path_cap,
                          "Abort extraction when this many partial paths are active")
        ->capture_default_str();
    paths_cmd->add_option("--output", paths_opts.output, "Path collection JSON output")
        ->capture_default_str();
    paths_cmd->callback([&] {
        PathCollection pc;
        if (paths_opts.kind == "edges") {
            if (delta_opt->count() == 0)
                throw CLI::ValidationError("--delta is required for edge input");
            auto in = open_input(paths_opts.input);
            const TemporalGraph graph = io::parse_temporal_edges(
                in, {!paths_opts.undirected, resolve_delimiter(paths_opts.delimiter)});
            pc = extract_causal_paths(graph, paths_opts.delta, paths_opts.max_order,
                                      {paths_opts.path_cap});
        } else {
            if (delta_opt->count() > 0)
                throw CLI::ValidationError("--delta does not apply to trajectory input");
            auto in = open_input(paths_opts.input);
            pc = window_trajectories(io::parse_trajectories(in), paths_opts.max_order);
        }
        write_output(paths_opts.output,
                     capture([&](std::ostream& o) { io::write_path_collection(o, pc); }));
    });

    // ----- layout --------------------------------------------------------
    struct {
        std::string paths;
        int max_order = 1;
        int iterations = 1000;
        std::vector<std::string> alphas;
        bool raw_weights = false;
        std::uint64_t seed = 0;
        double ideal_length = 0.0;
        double temperature = 0.1;
        std::string output = "-";
        std::string output_csv;
    } layout_opts;
    auto* layout_cmd =
        app.add_subcommand("layout", "Compute a time-aware layout from a path collection");
    layout_cmd->add_option("--paths", layout_opts.paths, "Path collection JSON input")
        ->required();
    layout_cmd->add_option("--max-order", layout_opts.max_order, "Highest model order to superimpose")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    layout_cmd->add_option("--iterations", layout_opts.iterations, "Simulation iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    layout_cmd->add_option("--alpha", layout_opts.alphas,
                           "Force coefficient per order, as k=value (repeatable); "
                           "unspecified orders keep their default 1/m_k");
    layout_cmd->add_flag("--raw-weights", layout_opts.raw_weights,
                         "Weight forces by path frequency instead of counting each "
                         "distinct path once");
    layout_cmd->add_option("--seed", layout_opts.seed, "Random seed")->capture_default_str();
    layout_cmd->add_option("--ideal-length", layout_opts.ideal_length,
                           "Ideal edge length (0 = sqrt(1/vertex count))")
        ->capture_default_str();
    layout_cmd->add_option("--temperature", layout_opts.temperature,
                           "Initial temperature of the cooling schedule")
        ->capture_default_str();
    layout_cmd->add_option("--output", layout_opts.output, "Layout JSON output")
        ->capture_default_str();
    layout_cmd->add_option("--output-csv", layout_opts.output_csv,
                           "Also write the layout as vertex,x,y CSV");
    layout_cmd->callback([&] {
        auto in = open_input(layout_opts.paths);
        const PathCollection pc = io::read_path_collection(in);

        LayoutConfig cfg;
        cfg.max_order = layout_opts.max_order;
        cfg.iterations = layout_opts.iterations;
        cfg.uniform_path_weights = !layout_opts.raw_weights;
        cfg.seed = layout_opts.seed;
        cfg.ideal_length = layout_opts.ideal_length;
        cfg.initial_temperature = layout_opts.temperature;
        cfg.alphas = default_alphas(pc, cfg.max_order);
        for (const auto& [k, v] : parse_alpha_entries(layout_opts.alphas)) {
            if (k > cfg.max_order)
                throw CLI::ValidationError("--alpha order " + std::to_string(k) +
                                           " exceeds --max-order");
            cfg.alphas[k] = v;
        }

        const Layout layout = compute_layout(pc, pc.vertices().sorted_names(), cfg);
        write_output(layout_opts.output,
                     capture([&](std::ostream& o) { io::write_layout_json(o, layout); }));
        if (!layout_opts.output_csv.empty())
            write_output(layout_opts.output_csv,
                         capture([&](std::ostream& o) { io::write_layout_csv(o, layout); }));
    });

    // ----- render --------------------------------------------------------
    struct {
        std::string layout;
        std::string edges;
        std::string colors;
        std::string highlight;
        double circle_gamma = 10.0;
        double node_radius = 4.0;
        double edge_width = 1.0;
        std::string canvas = "800x800";
        std::string delimiter;
        std::string output = "-";
    } render_opts;
    auto* render_cmd = app.add_subcommand("render", "Draw a layout as an SVG document");
    render_cmd->add_option("--layout", render_opts.layout, "Layout file (JSON, or CSV by extension)")
        ->required();
    render_cmd->add_option("--edges", render_opts.edges,
                           "Temporal edge list whose aggregate edges are drawn");
    render_cmd->add_option("--colors", render_opts.colors, "CSV file vertex,color");
    render_cmd->add_option("--highlight", render_opts.highlight,
                           "File with one vertex name per line, drawn highlighted");
    auto* circle_opt = render_cmd->add_option(
        "--circle-gamma", render_opts.circle_gamma,
        "Draw a circle containing this percentage of vertices closest to the barycentre");
    render_cmd->add_option("--node-radius", render_opts.node_radius, "Node radius in px")
        ->capture_default_str();
    render_cmd->add_option("--edge-width", render_opts.edge_width, "Edge stroke width in px")
        ->capture_default_str();
    render_cmd->add_option("--canvas", render_opts.canvas, "Canvas size as WIDTHxHEIGHT")
        ->capture_default_str();
    render_cmd->add_option("--delimiter", render_opts.delimiter,
                           "Edge list delimiter (single char or tab/comma/space; default auto)");
    render_cmd->add_option("--output", render_opts.output, "SVG output")->capture_default_str();
    render_cmd->callback([&] {
        const Layout layout = read_layout_file(render_opts.layout);

        std::vector<std::pair<std::string, std::string>> edges;
        if (!render_opts.edges.empty()) {
            auto in = open_input(render_opts.edges);
            const TemporalGraph graph = io::parse_temporal_edges(
                in, {true, resolve_delimiter(render_opts.delimiter)});
            for (const auto& e : graph.edges())
                edges.emplace_back(graph.vertices().name_of(e.source),
                                   graph.vertices().name_of(e.target));
        }

        RenderStyle style;
        style.node_radius = render_opts.node_radius;
        style.edge_width = render_opts.edge_width;
        const auto x = render_opts.canvas.find('x');
        try {
            if (x == std::string::npos) throw std::invalid_argument("no separator");
            style.canvas_width = std::stod(render_opts.canvas.substr(0, x));
            style.canvas_height = std::stod(render_opts.canvas.substr(x + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--canvas expects WIDTHxHEIGHT, got '" +
                                       render_opts.canvas + "'");
        }
        if (!render_opts.colors.empty()) {
            auto in = open_input(render_opts.colors);
            style.color_map = io::read_color_map(in);
        }
        if (!render_opts.highlight.empty()) {
            auto in = open_input(render_opts.highlight);
            style.highlight_set = io::read_vertex_set(in);
        }
        if (circle_opt->count() > 0) style.circle_gamma = render_opts.circle_gamma;

        write_output(render_opts.output, render_svg(layout, edges, style));
    });

    // ----- metrics -------------------------------------------------------
    struct {
        std::string layout;
        std::string paths;
        std::vector<double> gammas;
        std::string output = "-";
    } metrics_opts;
    auto* metrics_cmd =
        app.add_subcommand("metrics", "Evaluate a layout against a path collection");
    metrics_cmd->add_option("--layout", metrics_opts.layout, "Layout file (JSON, or CSV by extension)")
        ->required();
    metrics_cmd->add_option("--paths", metrics_opts.paths, "Path collection JSON input")
        ->required();
    metrics_cmd->add_option("--gamma", metrics_opts.gammas,
                            "Percentile(s) for the eccentricity measure (default 10)");
    metrics_cmd->add_option("--output", metrics_opts.output, "Metric report JSON output")
        ->capture_default_str();
    metrics_cmd->callback([&] {
        const Layout layout = read_layout_file(metrics_opts.layout);
        auto in = open_input(metrics_opts.paths);
        const PathCollection pc = io::read_path_collection(in);
        if (metrics_opts.gammas.empty()) metrics_opts.gammas.push_back(10.0);

        MetricReport report;
        report.edge_crossings = edge_crossing(layout, first_order_edges(pc));
        report.dispersion = causal_path_dispersion(layout, pc);
        report.closeness = temporal_closeness(pc, {});
        for (double gamma : metrics_opts.gammas)
            report.eccentricity[gamma] = closeness_eccentricity(layout, report.closeness, gamma);

        write_output(metrics_opts.output,
                     capture([&](std::ostream& o) { io::write_metric_report(o, report); }));
    });

    // ----- synth ---------------------------------------------------------
    struct {
        std::uint32_t n = 30;
        std::uint32_t degree = 4;
        std::uint64_t sequences = 2000;
        std::uint64_t seed = 0;
        std::uint64_t swap_attempts = 0;
        std::string output_edges;
        std::string output_clusters;
    } synth_opts;
    auto* synth_cmd = app.add_subcommand(
        "synth", "Generate a dynamic graph with planted temporal clusters");
    synth_cmd->add_option("--n", synth_opts.n, "Vertex count (multiple of 3)")
        ->capture_default_str();
    synth_cmd->add_option("--degree", synth_opts.degree, "Regular degree of the topology")
        ->capture_default_str();
    synth_cmd->add_option("--sequences", synth_opts.sequences, "Number of two-edge sequences")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth_opts.seed, "Random seed")->capture_default_str();
    synth_cmd->add_option("--swap-attempts", synth_opts.swap_attempts,
                          "Timestamp swap attempts (0 = one per sequence)")
        ->capture_default_str();
    synth_cmd->add_option("--output-edges", synth_opts.output_edges, "Temporal edge list output")
        ->required();
    synth_cmd->add_option("--output-clusters", synth_opts.output_clusters,
                          "Cluster map CSV output")
        ->required();
    synth_cmd->callback([&] {
        const ClusterModelResult result = generate_cluster_graph(
            {synth_opts.n, synth_opts.degree, synth_opts.sequences, synth_opts.seed,
             synth_opts.swap_attempts});
        write_output(synth_opts.output_edges, capture([&](std::ostream& o) {
                         io::write_temporal_edges(o, result.graph);
                     }));
        write_output(synth_opts.output_clusters, capture([&](std::ostream& o) {
                         io::write_cluster_map(o, result.clusters);
                     }));
        std::cerr << "swaps: " << result.swaps.performed << " performed, "
                  << result.swaps.skipped << " skipped of " << result.swaps.attempted
                  << " attempts\n";
    });

    // ----- eval ----------------------------------------------------------
    struct {
        std::string paths;
        std::vector<int> orders;
        int repetitions = 100;
        double train_fraction = 0.7;
        double gamma = 10.0;
        std::uint64_t base_seed = 0;
        int iterations = 1000;
        std::vector<std::string> alphas;
        bool raw_weights = false;
        double ideal_length = 0.0;
        double temperature = 0.1;
        std::string output = "-";
        std::string output_csv;
    } eval_opts;
    auto* eval_cmd = app.add_subcommand(
        "eval", "Run the repeated train/test evaluation across model orders");
    eval_cmd->add_option("--paths", eval_opts.paths, "Path collection JSON input")->required();
    eval_cmd->add_option("--orders", eval_opts.orders, "Model orders to evaluate, e.g. 1,2,3")
        ->required()
        ->delimiter(',');
    eval_cmd->add_option("--repetitions", eval_opts.repetitions, "Cross-validation repetitions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval_cmd->add_option("--train-fraction", eval_opts.train_fraction,
                         "Share of path occurrences assigned to the training set")
        ->capture_default_str();
    eval_cmd->add_option("--gamma", eval_opts.gamma,
                         "Percentile for eccentricity and the prediction task")
        ->capture_default_str();
    eval_cmd->add_option("--base-seed", eval_opts.base_seed,
                         "Base seed; repetition r uses base_seed XOR r")
        ->capture_default_str();
    eval_cmd->add_option("--iterations", eval_opts.iterations, "Simulation iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval_cmd->add_option("--alpha", eval_opts.alphas,
                         "Explicit force coefficients as k=value (repeatable); when "
                         "omitted, defaults are derived from each training split");
    eval_cmd->add_flag("--raw-weights", eval_opts.raw_weights,
                       "Weight forces by path frequency instead of counting each "
                       "distinct path once");
    eval_cmd->add_option("--ideal-length", eval_opts.ideal_length,
                         "Ideal edge length (0 = sqrt(1/vertex count))")
        ->capture_default_str();
    eval_cmd->add_option("--temperature", eval_opts.temperature,
                         "Initial temperature of the cooling schedule")
        ->capture_default_str();
    eval_cmd->add_option("--output", eval_opts.output, "Experiment report JSON output")
        ->capture_default_str();
    eval_cmd->add_option("--output-csv", eval_opts.output_csv,
                         "Also write one CSV row per order and repetition");
    eval_cmd->callback([&] {
        auto in = open_input(eval_opts.paths);
        const PathCollection pc = io::read_path_collection(in);

        ExperimentPlan plan;
        plan.orders = eval_opts.orders;
        plan.repetitions = eval_opts.repetitions;
        plan.train_fraction = eval_opts.train_fraction;
        plan.gamma = eval_opts.gamma;
        plan.base_seed = eval_opts.base_seed;

        LayoutConfig cfg;
        cfg.iterations = eval_opts.iterations;
        cfg.uniform_path_weights = !eval_opts.raw_weights;
        cfg.ideal_length = eval_opts.ideal_length;
        cfg.initial_temperature = eval_opts.temperature;
        cfg.alphas = parse_alpha_entries(eval_opts.alphas);

        const ExperimentReport report = run_experiment(pc, plan, cfg);
        write_output(eval_opts.output,
                     capture([&](std::ostream& o) { io::write_experiment_report(o, report); }));
        if (!eval_opts.output_csv.empty())
            write_output(eval_opts.output_csv,
                         capture([&](std::ostream& o) { io::write_experiment_csv(o, report); }));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
