#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lsa/corpus.hpp"
#include "lsa/imaging.hpp"
#include "lsa/linalg.hpp"
#include "lsa/model.hpp"
#include "lsa/viz.hpp"

namespace lsa::cli {

namespace {

namespace fs = std::filesystem;

/// Failure reported to the user as "error: <message>" with exit status 1.
struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path, const std::string& what) {
    if (!fs::is_regular_file(path)) throw CommandError(what + " not found: " + path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError("cannot read " + what + ": " + path);
    return in;
}

std::vector<std::uint8_t> read_bytes(const std::string& path, const std::string& what) {
    auto in = open_input(path, what);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void require_output_dir(const std::string& path) {
    const auto parent = fs::path(path).parent_path();
    if (!parent.empty() && !fs::is_directory(parent))
        throw CommandError("output directory does not exist: " + parent.string());
}

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CommandError("cannot write " + path);
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw CommandError("write failed: " + path);
}

TermDocMatrix load_matrix(const std::string& path) {
    auto in = open_input(path, "matrix");
    return read_matrix(in);
}

TokenizerConfig load_config(const std::string& path) {
    auto in = open_input(path, "config");
    return read_tokenizer_config(in);
}

/// "1,2,6" or "1-9" or a mix such as "1-3,6".
std::vector<std::size_t> parse_ranks(const std::vector<std::string>& items) {
    std::vector<std::size_t> ks;
    auto number = [](const std::string& s) {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size() || v == 0)
            throw CommandError("invalid rank '" + s + "'");
        return v;
    };
    for (const auto& item : items) {
        if (item.empty()) continue;
        if (auto dash = item.find('-'); dash != std::string::npos) {
            const auto lo = number(item.substr(0, dash));
            const auto hi = number(item.substr(dash + 1));
            if (lo > hi) throw CommandError("invalid rank range '" + item + "'");
            for (auto k = lo; k <= hi; ++k) ks.push_back(k);
        } else {
            ks.push_back(number(item));
        }
    }
    return ks;
}

void check_rank(std::size_t k, const LsaModel& model) {
    if (k < 1 || k > model.factor_count())
        throw CommandError("rank out of range: " + std::to_string(k) + " (matrix supports 1.." +
                           std::to_string(model.factor_count()) + ")");
}

struct BuildArgs {
    std::string corpus;
    std::string config;
    std::string output;
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
    auto config = load_config(a.config);
    auto corpus_in = open_input(a.corpus, "corpus");
    require_output_dir(a.output);

    const auto corpus = read_corpus(corpus_in);
    if (corpus.empty()) throw CommandError("empty corpus: " + a.corpus);
    const auto vocab = select_vocabulary(corpus, config);
    const auto matrix = build_matrix(corpus, vocab, config);

    std::ostringstream text;
    write_matrix(text, matrix);
    const auto s = text.str();
    write_file(a.output, s.data(), s.size());
    out << matrix.rows() << " terms\t" << matrix.cols() << " documents\n";
    return 0;
}

struct QueryArgs {
    std::string matrix;
    std::string keyword;
    std::optional<std::size_t> rank;
    bool full = false;
    double threshold = 0.0;
    std::optional<std::size_t> limit;
    std::string config;
};

int cmd_query(const QueryArgs& a, std::ostream& out) {
    std::optional<TokenizerConfig> config;
    if (!a.config.empty()) config = load_config(a.config);
    const auto model = fit(load_matrix(a.matrix));
    const std::string keyword =
        config ? normalize_token(a.keyword, *config) : normalize_token(a.keyword, TokenizerConfig{});

    Rank rank = Rank::full();
    if (a.rank) {
        check_rank(*a.rank, model);
        rank = Rank::of(*a.rank);
    }
    write_ranked(out, keyword_search(model, keyword, rank, {a.threshold, a.limit}));
    return 0;
}

struct HeatmapArgs {
    std::string matrix;
    std::optional<std::size_t> rank;
    bool raw = false;
    std::string palette;
    double floor = 0.0;
    double ceiling = 2.0;
    std::size_t cell_px = 24;
    bool no_labels = false;
    std::string format;
    std::string output;
};

int cmd_heatmap(const HeatmapArgs& a, std::ostream& out) {
    require_output_dir(a.output);
    const auto model = fit(load_matrix(a.matrix));

    HeatmapSpec spec;
    spec.value_floor = a.floor;
    spec.value_ceiling = a.ceiling;
    spec.cell_px = a.cell_px;
    spec.show_labels = !a.no_labels;
    const std::string palette = a.palette.empty() ? (a.raw ? "discrete3" : "continuous") : a.palette;
    spec.palette = palette == "discrete3" ? Palette::Discrete3 : Palette::Continuous;
    spec.validate();

    LabeledMatrix m = [&] {
        if (a.raw) return to_labeled(model.matrix());
        check_rank(*a.rank, model);
        return reconstruct_at_rank(model, *a.rank);
    }();

    std::string format = a.format;
    if (format.empty()) format = fs::path(a.output).extension() == ".svg" ? "svg" : "ppm";
    if (format == "svg") {
        const auto svg = render_heatmap_svg(m, spec);
        write_file(a.output, svg.data(), svg.size());
    } else {
        const auto ppm = render_heatmap_ppm(m, spec);
        write_file(a.output, ppm.data(), ppm.size());
    }
    out << a.output << '\n';
    return 0;
}

struct CompressArgs {
    std::string input;
    std::size_t rank = 0;
    std::string output;
    std::string report;
};

int cmd_compress(const CompressArgs& a, std::ostream& out) {
    require_output_dir(a.output);
    if (!a.report.empty()) require_output_dir(a.report);
    const auto img = read_pgm(read_bytes(a.input, "image"));
    const std::size_t max_k = std::min(img.width, img.height);
    if (a.rank < 1 || a.rank > max_k)
        throw CommandError("rank out of range: " + std::to_string(a.rank) + " (image supports 1.." +
                           std::to_string(max_k) + ")");

    const auto result = compress_image(img, a.rank);
    const auto bytes = write_pgm(result.image);
    write_file(a.output, bytes.data(), bytes.size());

    std::ostringstream line;
    write_report_line(line, result.report);
    out << line.str();
    if (!a.report.empty()) {
        const auto s = line.str();
        write_file(a.report, s.data(), s.size());
    }
    return 0;
}

struct SweepArgs {
    std::string matrix;
    std::string judgments;
    std::vector<std::string> ks;
    std::optional<double> threshold;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const auto ks = parse_ranks(a.ks);
    if (ks.empty()) throw CommandError("empty rank list");
    auto judgments_in = open_input(a.judgments, "judgments");
    const auto judgments = read_judgments(judgments_in);
    if (judgments.empty()) throw CommandError("no judgments in " + a.judgments);
    const auto model = fit(load_matrix(a.matrix));
    for (auto k : ks) check_rank(k, model);

    const double threshold = a.threshold.value_or(-std::numeric_limits<double>::infinity());
    write_sweep(out, sweep_ranks(model, judgments, ks, threshold));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Latent semantic analysis on term-document matrices, with heatmaps and "
                 "rank-k image compression"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build", "Build a term-document count matrix from a corpus");
    build_cmd->add_option("corpus", build.corpus, "Corpus file (id<TAB>title per line)")->required();
    build_cmd->add_option("-c,--config", build.config, "Tokenizer config file")->required();
    build_cmd->add_option("-o,--output", build.output, "Output matrix file")->required();

    QueryArgs query;
    auto* query_cmd = app.add_subcommand("query", "Rank documents for a single keyword");
    query_cmd->add_option("matrix", query.matrix, "Matrix file")->required();
    query_cmd->add_option("keyword", query.keyword, "Keyword")->required();
    auto* q_rank = query_cmd->add_option("-k,--rank", query.rank, "Reconstruction rank");
    auto* q_full = query_cmd->add_flag("--full", query.full, "Use the raw counts");
    q_rank->excludes(q_full);
    query_cmd->add_option("--threshold", query.threshold, "Return scores strictly above this")
        ->capture_default_str();
    query_cmd->add_option("--limit", query.limit, "Maximum number of results")
        ->check(CLI::PositiveNumber);
    query_cmd->add_option("-c,--config", query.config, "Tokenizer config for keyword aliases");

    HeatmapArgs heat;
    auto* heat_cmd = app.add_subcommand("heatmap", "Render a matrix or its rank-k approximation");
    heat_cmd->add_option("matrix", heat.matrix, "Matrix file")->required();
    auto* h_rank = heat_cmd->add_option("-k,--rank", heat.rank, "Reconstruction rank");
    auto* h_raw = heat_cmd->add_flag("--raw", heat.raw, "Render the raw counts");
    h_rank->excludes(h_raw);
    heat_cmd->add_option("--palette", heat.palette, "discrete3 or continuous")
        ->check(CLI::IsMember({"discrete3", "continuous"}));
    heat_cmd->add_option("--floor", heat.floor, "Value mapped to black")->capture_default_str();
    heat_cmd->add_option("--ceiling", heat.ceiling, "Value mapped to white")->capture_default_str();
    heat_cmd->add_option("--cell-px", heat.cell_px, "Pixels per cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    heat_cmd->add_flag("--no-labels", heat.no_labels, "Omit labels (SVG)");
    heat_cmd->add_option("--format", heat.format, "ppm or svg (default: from extension)")
        ->check(CLI::IsMember({"ppm", "svg"}));
    heat_cmd->add_option("-o,--output", heat.output, "Output image")->required();

    CompressArgs comp;
    auto* comp_cmd = app.add_subcommand("compress", "Rank-k compression of a grayscale PGM");
    comp_cmd->add_option("input", comp.input, "Input PGM (P2 or P5)")->required();
    comp_cmd->add_option("-k,--rank", comp.rank, "Number of singular vectors kept")->required();
    comp_cmd->add_option("-o,--output", comp.output, "Output PGM (P5)")->required();
    comp_cmd->add_option("--report", comp.report, "Also write the report line here");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Retrieval quality across ranks");
    sweep_cmd->add_option("matrix", sweep.matrix, "Matrix file")->required();
    sweep_cmd->add_option("judgments", sweep.judgments, "Relevance judgments file")->required();
    sweep_cmd->add_option("--ks", sweep.ks, "Ranks, e.g. 1,2,6 or 1-9")->required()->delimiter(',');
    sweep_cmd->add_option("--threshold", sweep.threshold,
                          "Only rank documents scoring above this (default: rank all)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*build_cmd) return cmd_build(build, out);
        if (*query_cmd) {
            if (!query.rank && !query.full) throw CommandError("query: one of -k or --full is required");
            return cmd_query(query, out);
        }
        if (*heat_cmd) {
            if (!heat.rank && !heat.raw) throw CommandError("heatmap: one of -k or --raw is required");
            return cmd_heatmap(heat, out);
        }
        if (*comp_cmd) return cmd_compress(comp, out);
        if (*sweep_cmd) return cmd_sweep(sweep, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace lsa::cli
