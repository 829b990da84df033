#include "dq/replay.hpp"

#include "dq/analytics.hpp"
#include "dq/error.hpp"
#include "dq/state.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>

namespace dq {

namespace {

// Trajectories report PageRank as the |V|-scaled score, which is robust to
// dilution as vertices join (the probability-normalized score stays in the
// DQ quads); HITS and Betweenness report their normalized scores.
double reported_value(const vocab::AnalyticDescriptor& desc, const ScoreRecord& rec) {
    if (desc.algorithm == vocab::alg_pagerank) return rec.raw_score;
    return rec.normalized_score;
}

std::vector<ScoreRecord> score_records(const vocab::AnalyticDescriptor& desc,
                                       const std::string& run_id, const AnalyticsGraph& graph) {
    std::vector<ScoreRecord> records;
    const auto n = static_cast<double>(graph.vertex_count());

    ScoreMap normalized;
    if (desc.algorithm == vocab::alg_pagerank) {
        normalized = pagerank(graph);
    } else if (desc.algorithm == vocab::alg_hits) {
        if (graph.edge_count() == 0) return records; // undefined; execution still recorded
        normalized = hits(graph).authorities;
    } else if (desc.algorithm == vocab::alg_betweenness) {
        normalized = betweenness(graph);
    } else {
        throw Error("replay: unsupported algorithm " + desc.algorithm);
    }

    records.reserve(normalized.scores.size());
    for (const auto& [vertex, score] : normalized.scores) {
        ScoreRecord rec;
        rec.target = vertex;
        rec.execution = run_id;
        rec.normalized_score = score;
        rec.raw_score = desc.algorithm == vocab::alg_pagerank ? score * n : score;
        records.push_back(std::move(rec));
    }
    return records;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string format_percent(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f%%", v);
    return buf;
}

} // namespace

std::string TrajectoryReport::summary_csv() const {
    std::string out = "document,algorithm,initial,final,increase_pct,total_increase\n";
    for (const TrajectoryRow& row : rows) {
        out += csv_escape(row.document) + "," + csv_escape(row.algorithm) + "," +
               format_double(row.initial_score) + "," + format_double(row.final_score) + "," +
               format_double(row.increase_percent) + "," + format_double(row.total_increase) +
               "\n";
    }
    return out;
}

std::string TrajectoryReport::series_csv() const {
    std::string out = "document,algorithm";
    for (int t = 0; t < resample_count; ++t) out += ",t" + std::to_string(t);
    out += "\n";
    for (const TrajectoryRow& row : rows) {
        out += csv_escape(row.document) + "," + csv_escape(row.algorithm);
        for (const auto& cell : row.series) {
            out += ",";
            if (cell) out += format_double(*cell);
        }
        out += "\n";
    }
    return out;
}

std::string TrajectoryReport::top5_table(std::string_view algorithm_iri) const {
    std::vector<const TrajectoryRow*> selected;
    for (const TrajectoryRow& row : rows)
        if (row.algorithm == algorithm_iri) selected.push_back(&row);
    std::sort(selected.begin(), selected.end(), [](const TrajectoryRow* a, const TrajectoryRow* b) {
        if (a->total_increase != b->total_increase) return a->total_increase > b->total_increase;
        return a->document < b->document;
    });
    if (selected.size() > 5) selected.resize(5);

    const std::string name = vocab::algorithm_display_name(algorithm_iri);
    std::string out = "Impact Information\t" + name + " Initial Score\t" + name +
                      " Final Score\tIncrease %\tTotal Increase\n";
    for (const TrajectoryRow* row : selected) {
        out += row->document + "\t" + format_double(row->initial_score) + "\t" +
               format_double(row->final_score) + "\t" + format_percent(row->increase_percent) +
               "\t" + format_double(row->total_increase) + "\n";
    }
    return out;
}

const TrajectoryRow* TrajectoryReport::find(std::string_view document,
                                            std::string_view algorithm_iri) const {
    for (const TrajectoryRow& row : rows)
        if (row.document == document && row.algorithm == algorithm_iri) return &row;
    return nullptr;
}

ReplayResult replay_messages(const std::vector<ScenarioMessage>& messages,
                             const ScenarioConfig& config,
                             const std::vector<vocab::AnalyticDescriptor>& algorithms,
                             const ResampleObserver& observer) {
    config.validate();
    for (const auto& desc : algorithms) desc.validate();

    ReplayResult result;
    result.messages = messages;
    Broker broker(result.store, result.documents);

    const Term default_graph = Term::iri(vocab::default_graph);
    const Term type = Term::iri(rdf::type);
    const Term phone_class = Term::iri(vocab::scen_cell_phone);

    // (document, algorithm) -> per-resample reported scores
    std::map<std::pair<std::string, std::string>, std::vector<std::optional<double>>> series;
    int resamples = 0;

    auto resample = [&](Timestamp at) {
        const QuadStore snapshot = result.store.snapshot();
        const AnalyticsGraph graph = project(snapshot);
        if (graph.vertex_count() == 0) return; // nothing published yet

        ResampleRecord record;
        record.index = resamples;
        record.snapshot_revision = snapshot.revision();

        for (const auto& desc : algorithms) {
            AnalyticExecution exec;
            exec.run_id = mint_run_id(result.store, desc.algorithm);
            exec.descriptor = desc;
            exec.inputs = graph.vertices();
            exec.executed_at = at;
            exec.store_revision = snapshot.revision();

            std::vector<ScoreRecord> records = score_records(desc, exec.run_id, graph);
            emit_dq(result.store, exec, records);

            for (const ScoreRecord& rec : records) {
                auto& cells = series[{rec.target, desc.algorithm}];
                cells.resize(static_cast<std::size_t>(resamples) + 1);
                cells.back() = reported_value(desc, rec);
            }
            record.emissions.push_back({std::move(exec), std::move(records)});
        }
        ++resamples;
        // keep every tracked series aligned with the resample count
        for (auto& [key, cells] : series) cells.resize(static_cast<std::size_t>(resamples));
        if (observer) observer(record, result.store);
    };

    int published = 0;
    for (const ScenarioMessage& message : messages) {
        const MessageEnvelope& env = message.envelope;
        for (const std::string& resource : env.resource_involvement) {
            const Quad identity(Term::iri(resource), type, phone_class, default_graph);
            result.store.insert(identity);
        }

        try {
            broker.publish(env, message.payload);
        } catch (const Error& e) {
            throw Error("replay aborted at message " + std::to_string(published) + " (" +
                        env.named_graph_uri + "): " + e.what());
        }
        ++published;

        if (!env.resource_involvement.empty()) {
            StateEvent event;
            event.identity = env.resource_involvement.front();
            event.observed_at = env.time_published;
            if (env.latitude)
                event.assertions.emplace_back(vocab::scen_latitude,
                                              Term::from_double(*env.latitude));
            if (env.longitude)
                event.assertions.emplace_back(vocab::scen_longitude,
                                              Term::from_double(*env.longitude));
            const auto payload_json = nlohmann::json::parse(message.payload, nullptr, false);
            if (payload_json.is_object() && payload_json.contains("status"))
                event.assertions.emplace_back(
                    vocab::scen_status,
                    Term::literal(payload_json.at("status").get<std::string>()));
            if (!event.assertions.empty()) {
                event.event_iri = mint_state_event_iri(result.store, event.identity);
                record_state(result.store, event);
            }
        }

        if (published % config.resample_every == 0) resample(env.time_published);
    }
    if (!messages.empty() && published % config.resample_every != 0)
        resample(messages.back().envelope.time_published);

    // fold the series into the report
    result.report.resample_count = resamples;
    for (const auto& desc : algorithms) result.report.algorithms.push_back(desc.algorithm);
    for (auto& [key, cells] : series) {
        TrajectoryRow row;
        row.document = key.first;
        row.algorithm = key.second;
        row.series = std::move(cells);
        const auto first = std::find_if(row.series.begin(), row.series.end(),
                                        [](const auto& c) { return c.has_value(); });
        if (first == row.series.end()) continue;
        row.initial_score = **first;
        for (auto it = row.series.rbegin(); it != row.series.rend(); ++it) {
            if (*it) {
                row.final_score = **it;
                break;
            }
        }
        row.total_increase = row.final_score - row.initial_score;
        row.increase_percent =
            row.initial_score > 0 ? 100.0 * row.total_increase / row.initial_score : 0.0;
        result.report.rows.push_back(std::move(row));
    }
    std::sort(result.report.rows.begin(), result.report.rows.end(),
              [](const TrajectoryRow& a, const TrajectoryRow& b) {
                  if (a.document != b.document) return a.document < b.document;
                  return a.algorithm < b.algorithm;
              });
    return result;
}

ReplayResult replay(const ScenarioConfig& config,
                    const std::vector<vocab::AnalyticDescriptor>& algorithms,
                    const ResampleObserver& observer) {
    return replay_messages(generate_scenario(config), config, algorithms, observer);
}

} // namespace dq
