#pragma once
// Replay harness: publishes a scenario through the broker, records phone
// state per message, resamples every N publications (plus a final partial
// resample), persists each analytic run as DQ quads, and builds the score
// trajectory report.
//
// Everything is driven by logical sequence time, so a fixed (seed, config,
// algorithms) tuple reproduces byte-identical reports and exports.

#include "dq/broker.hpp"
#include "dq/dq_writer.hpp"
#include "dq/quad_store.hpp"
#include "dq/scenario.hpp"
#include "dq/vocab.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dq {

struct TrajectoryRow {
    std::string document;  // named-graph IRI
    std::string algorithm; // IRI
    double initial_score = 0; // score at the first resample after publication
    double final_score = 0;
    double increase_percent = 0; // 100 * total / initial (0 when initial is 0)
    double total_increase = 0;   // final - initial
    std::vector<std::optional<double>> series; // one slot per resample
};

struct TrajectoryReport {
    int resample_count = 0;
    std::vector<std::string> algorithms; // IRIs in run order
    std::vector<TrajectoryRow> rows;     // sorted by (document, algorithm)

    // document,algorithm,initial,final,increase_pct,total_increase
    std::string summary_csv() const;
    // document,algorithm,t0,t1,... (blank before first appearance)
    std::string series_csv() const;
    // Top five rows by total increase, tab-separated:
    // Impact Information | <Name> Initial Score | <Name> Final Score |
    // Increase % | Total Increase
    std::string top5_table(std::string_view algorithm_iri) const;

    const TrajectoryRow* find(std::string_view document, std::string_view algorithm_iri) const;
};

struct ResampleEmission {
    AnalyticExecution execution;
    std::vector<ScoreRecord> records;
};

struct ResampleRecord {
    int index = 0; // 0-based resample number
    std::uint64_t snapshot_revision = 0;
    std::vector<ResampleEmission> emissions; // one per algorithm
};

// Called after each resample's DQ quads are persisted.
using ResampleObserver = std::function<void(const ResampleRecord&, const QuadStore&)>;

struct ReplayResult {
    QuadStore store;
    RawDocumentStore documents;
    TrajectoryReport report;
    std::vector<ScenarioMessage> messages;
};

// Generates the scenario and replays it.
ReplayResult replay(const ScenarioConfig& config,
                    const std::vector<vocab::AnalyticDescriptor>& algorithms,
                    const ResampleObserver& observer = {});

// Replays an existing message stream with the config's resampling cadence.
ReplayResult replay_messages(const std::vector<ScenarioMessage>& messages,
                             const ScenarioConfig& config,
                             const std::vector<vocab::AnalyticDescriptor>& algorithms,
                             const ResampleObserver& observer = {});

} // namespace dq
