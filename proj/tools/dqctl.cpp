// dqctl: load N-Quads into a store directory, run analytics with DQ
// persistence, query with ordering, and replay the tracking scenario.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include "dq/analytics.hpp"
#include "dq/dq_writer.hpp"
#include "dq/error.hpp"
#include "dq/nquads.hpp"
#include "dq/persist.hpp"
#include "dq/query.hpp"
#include "dq/replay.hpp"
#include "dq/scenario.hpp"
#include "dq/vocab.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dq::Error("cannot read " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dq::Error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string default_store_dir() {
    const char* env = std::getenv("DQ_STORE_DIR");
    return env != nullptr ? env : "dq-store";
}

dq::vocab::AnalyticDescriptor descriptor_for(const std::string& name) {
    if (name == "pagerank") return dq::vocab::pagerank_descriptor();
    if (name == "hits") return dq::vocab::hits_descriptor();
    if (name == "betweenness") return dq::vocab::betweenness_descriptor();
    throw dq::Error("unknown algorithm: " + name);
}

int cmd_load(const std::string& store_dir, const std::string& path, bool lenient) {
    dq::PersistedStore persisted = dq::load_store(store_dir);

    dq::ParseOptions options;
    options.lenient = lenient;
    // call-unique blank prefix so labels never collide across imported files
    options.blank_prefix = "i" + std::to_string(persisted.store.revision()) + "_";
    const dq::ParseResult parsed = dq::parse_nquads(read_file(path), options);

    for (const dq::ParseIssue& issue : parsed.issues)
        std::cerr << "skipped line " << issue.line << ": " << issue.reason << "\n";
    for (dq::Quad q : parsed.quads) persisted.store.insert(std::move(q));
    dq::save_store(store_dir, persisted.store, persisted.documents);
    std::cout << parsed.quads.size() << " quads\n";
    return kExitOk;
}

int cmd_analyze(const std::string& store_dir, const std::string& algorithm, double damping,
                double epsilon, int max_iter) {
    dq::PersistedStore persisted = dq::load_store(store_dir);
    const dq::vocab::AnalyticDescriptor desc = descriptor_for(algorithm);

    const dq::QuadStore snapshot = persisted.store.snapshot();
    const dq::AnalyticsGraph graph = dq::project(snapshot);
    if (graph.vertex_count() == 0) throw dq::Error("empty analytics graph");

    dq::ScoreMap normalized;
    if (algorithm == "pagerank") {
        normalized = dq::pagerank(graph, damping, epsilon, max_iter);
    } else if (algorithm == "hits") {
        normalized = dq::hits(graph, epsilon, max_iter).authorities;
    } else {
        normalized = dq::betweenness(graph);
    }

    dq::AnalyticExecution exec;
    exec.run_id = dq::mint_run_id(persisted.store, desc.algorithm);
    exec.descriptor = desc;
    exec.inputs = graph.vertices();
    exec.executed_at = dq::Timestamp{0};
    exec.store_revision = snapshot.revision();

    std::vector<dq::ScoreRecord> records;
    const auto n = static_cast<double>(graph.vertex_count());
    for (const auto& [vertex, score] : normalized.scores) {
        dq::ScoreRecord rec;
        rec.target = vertex;
        rec.execution = exec.run_id;
        rec.normalized_score = score;
        rec.raw_score = algorithm == "pagerank" ? score * n : score;
        records.push_back(std::move(rec));
    }
    dq::emit_dq(persisted.store, exec, records);
    dq::save_store(store_dir, persisted.store, persisted.documents);

    std::cout << "run " << exec.run_id << "\n";
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.normalized_score != b.normalized_score)
            return a.normalized_score > b.normalized_score;
        return a.target < b.target;
    });
    std::cout << "target\tnormalized\traw\n";
    for (std::size_t i = 0; i < records.size() && i < 10; ++i) {
        std::cout << records[i].target << "\t" << dq::format_double(records[i].normalized_score)
                  << "\t" << dq::format_double(records[i].raw_score) << "\n";
    }
    return kExitOk;
}

int cmd_query(const std::string& store_dir, const std::vector<std::string>& where,
              const std::vector<std::string>& filters, const std::string& order_by,
              std::int64_t limit) {
    dq::QueryPattern pattern;
    try {
        for (const std::string& clause : where) pattern.clauses.push_back(dq::parse_clause(clause));
        for (const std::string& filter : filters)
            pattern.filters.push_back(dq::parse_filter(filter));
        if (!order_by.empty()) pattern.order_by = dq::parse_order_by(order_by);
        if (limit >= 0) pattern.limit = static_cast<std::size_t>(limit);
        dq::validate_pattern(pattern);
    } catch (const dq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    dq::PersistedStore persisted = dq::load_store(store_dir);
    const dq::QueryResult result = dq::execute(persisted.store, pattern);

    for (std::size_t i = 0; i < result.variables.size(); ++i)
        std::cout << (i == 0 ? "" : "\t") << result.variables[i];
    std::cout << "\n";
    for (const dq::BindingRow& row : result.rows) {
        for (std::size_t i = 0; i < result.variables.size(); ++i)
            std::cout << (i == 0 ? "" : "\t") << dq::serialize_term(row.at(result.variables[i]));
        std::cout << "\n";
    }
    if (result.rows_dropped_non_numeric > 0)
        std::cerr << result.rows_dropped_non_numeric << " rows dropped (non-numeric filter binding)\n";
    return kExitOk;
}

int cmd_replay(const std::string& config_path, const std::string& out_dir,
               const std::vector<std::string>& algorithm_names) {
    dq::ScenarioConfig config;
    if (!config_path.empty()) config = dq::ScenarioConfig::from_json(read_file(config_path));
    try {
        config.validate();
    } catch (const dq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<dq::vocab::AnalyticDescriptor> algorithms;
    for (const std::string& name : algorithm_names) algorithms.push_back(descriptor_for(name));

    const dq::ReplayResult result = dq::replay(config, algorithms);

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "messages.jsonl", dq::scenario_to_jsonl(result.messages));
    write_file(fs::path(out_dir) / "summary.csv", result.report.summary_csv());
    write_file(fs::path(out_dir) / "series.csv", result.report.series_csv());
    for (const std::string& algorithm : result.report.algorithms) {
        const std::string table = result.report.top5_table(algorithm);
        write_file(fs::path(out_dir) / ("top5_" + dq::vocab::local_name(algorithm) + ".tsv"),
                   table);
        std::cout << table << "\n";
    }
    write_file(fs::path(out_dir) / "export.nq", dq::serialize_nquads(result.store));
    result.documents.save(fs::path(out_dir) / "raw");

    std::cout << result.messages.size() << " messages, " << result.report.resample_count
              << " resamples, " << result.store.size() << " quads\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"named-graph quad store with analytics-backed relevancy provenance"};
    app.require_subcommand(1);

    std::string store_dir = default_store_dir();
    app.add_option("--store", store_dir, "store directory (default: $DQ_STORE_DIR or ./dq-store)");

    auto* load = app.add_subcommand("load", "parse an N-Quads file into the store");
    std::string load_path;
    bool lenient = false;
    load->add_option("path", load_path, "N-Quads file")->required();
    load->add_flag("--lenient", lenient, "skip malformed lines instead of aborting");

    auto* analyze = app.add_subcommand("analyze", "project, run an analytic, persist DQ quads");
    std::string algorithm;
    double damping = 0.85, epsilon = 1e-10;
    int max_iter = 200;
    analyze->add_option("--algorithm", algorithm, "pagerank|hits|betweenness")
        ->required()
        ->check(CLI::IsMember({"pagerank", "hits", "betweenness"}));
    analyze->add_option("--damping", damping, "PageRank damping factor (default 0.85)");
    analyze->add_option("--epsilon", epsilon, "convergence threshold (default 1e-10)");
    analyze->add_option("--max-iter", max_iter, "iteration cap (default 200)");

    auto* query = app.add_subcommand("query", "conjunctive quad-pattern query, TSV output");
    std::vector<std::string> where, filters;
    std::string order_by;
    std::int64_t limit = -1;
    query->add_option("--where", where, "clause: four of ?var or N-Quads term")->required();
    query->add_option("--filter", filters, "numeric filter, e.g. \"?s >= 0.5\"");
    query->add_option("--order-by", order_by, "\"?var asc|desc\"");
    query->add_option("--limit", limit, "maximum rows");

    auto* replay_cmd = app.add_subcommand("replay", "run the tracking scenario end to end");
    std::string config_path, out_dir = "replay-out";
    std::vector<std::string> replay_algorithms = {"pagerank", "hits", "betweenness"};
    replay_cmd->add_option("--config", config_path, "scenario config JSON");
    replay_cmd->add_option("--out", out_dir, "output directory (default: replay-out)");
    replay_cmd->add_option("--algorithms", replay_algorithms,
                           "subset of pagerank,hits,betweenness")
        ->delimiter(',')
        ->check(CLI::IsMember({"pagerank", "hits", "betweenness"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (load->parsed()) return cmd_load(store_dir, load_path, lenient);
        if (analyze->parsed()) return cmd_analyze(store_dir, algorithm, damping, epsilon, max_iter);
        if (query->parsed()) return cmd_query(store_dir, where, filters, order_by, limit);
        if (replay_cmd->parsed()) return cmd_replay(config_path, out_dir, replay_algorithms);
    } catch (const dq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
