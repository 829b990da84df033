#pragma once
// Direct Qualification writer: persists analytic executions and their scores
// as provenance quads in the dedicated analytics graph, and reconstructs
// them for latest/history queries.
//
// Quad pattern, all in graph urn:dq:analytics.
//
// Per execution:
//   <run>   rdf:type              rel:AnalyticExecution
//   <run>   rdf:type              rel:{Idempotent,Stochastic,Boolean}Analytic
//   <run>   rel:algorithm         <algorithm>
//   <run>   prov:used             <input graph>          (one per input)
//   <run>   prov:generatedAtTime  "..."^^xsd:dateTime
//
// Per score record (score entity minted under the run IRI):
//   <score> rdf:type               rel:ScoreEntity
//   <score> prov:wasGeneratedBy    <run>
//   <score> rel:rawScore           "..."^^xsd:double
//   <score> rel:normalizedScore    "..."^^xsd:double
//   <target> rel:hasRelevanceScore <score>
//   <score> prov:used              <source>              (multi-source records)
//   <score> rel:aboveThreshold     "..."^^xsd:boolean    (Boolean analytics)
//
// The per-record quad count is a fixed constant of the record shape, never a
// function of store size; document graphs are never touched.

#include "dq/quad_store.hpp"
#include "dq/term.hpp"
#include "dq/vocab.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dq {

struct AnalyticExecution {
    std::string run_id; // IRI, unique per run within a store
    vocab::AnalyticDescriptor descriptor;
    std::vector<std::string> inputs; // named graphs consumed, non-empty
    Timestamp executed_at;           // UTC
    std::uint64_t store_revision = 0;

    // Inputs to the modeling-strategy decision for the qualified relationship.
    vocab::RelationshipKind relationship_kind = vocab::RelationshipKind::Relationship;
    vocab::StateKind state_kind = vocab::StateKind::Occurrent;
};

struct ScoreRecord {
    std::string target;    // the qualified named graph
    std::string execution; // run IRI
    double raw_score = 0;
    double normalized_score = 0;
    std::optional<bool> above_threshold; // Boolean analytics only
    std::vector<std::string> sources;    // empty iff the analytic is monotonic
};

// Next run IRI for an algorithm: urn:dq:run/<local-name>/<zero-padded seq>,
// derived from the runs already present so that replays are reproducible.
std::string mint_run_id(const QuadStore& store, std::string_view algorithm_iri);

// Persists the execution and its score records. Returns the number of quads
// inserted. Rejects executions whose decision-matrix strategy is not a DQ
// strategy, duplicate run ids, and records that violate their invariants.
std::size_t emit_dq(QuadStore& store, const AnalyticExecution& exec,
                    const std::vector<ScoreRecord>& records);

// Record with the greatest executedAt for (target, algorithm); ties broken by
// the lexicographically greatest run id.
std::optional<ScoreRecord> latest_score(const QuadStore& store, std::string_view target,
                                        std::string_view algorithm);

// Full chain for (target, algorithm), ascending executedAt.
std::vector<ScoreRecord> score_history(const QuadStore& store, std::string_view target,
                                       std::string_view algorithm);

// Per-record quad counts for one emitted run, by score entity IRI (ascending).
// Used to check the reification-avoidance bound after the fact.
std::vector<std::pair<std::string, std::size_t>> record_quad_counts(const QuadStore& store,
                                                                    std::string_view run_id);

} // namespace dq
