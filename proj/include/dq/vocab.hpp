#pragma once
// Fixed vocabulary: the Prov-O subset, the relevancy extension, envelope and
// scenario terms, and the relationship/state decision matrix.
//
// The set is closed; nothing is added at runtime.

#include "dq/error.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace dq::vocab {

// --- Prov-O subset -----------------------------------------------------
inline constexpr std::string_view prov_ns = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view was_attributed_to = "http://www.w3.org/ns/prov#wasAttributedTo";
inline constexpr std::string_view was_associated_with =
    "http://www.w3.org/ns/prov#wasAssociatedWith";
inline constexpr std::string_view used = "http://www.w3.org/ns/prov#used";
inline constexpr std::string_view was_generated_by = "http://www.w3.org/ns/prov#wasGeneratedBy";
inline constexpr std::string_view was_informed_by = "http://www.w3.org/ns/prov#wasInformedBy";
inline constexpr std::string_view acted_on_behalf_of =
    "http://www.w3.org/ns/prov#actedOnBehalfOf";
inline constexpr std::string_view was_derived_from = "http://www.w3.org/ns/prov#wasDerivedFrom";
inline constexpr std::string_view specialization_of = "http://www.w3.org/ns/prov#specializationOf";
inline constexpr std::string_view entity = "http://www.w3.org/ns/prov#Entity";
inline constexpr std::string_view activity = "http://www.w3.org/ns/prov#Activity";
inline constexpr std::string_view agent = "http://www.w3.org/ns/prov#Agent";
inline constexpr std::string_view generated_at_time = "http://www.w3.org/ns/prov#generatedAtTime";

// --- Relevancy extension ------------------------------------------------
inline constexpr std::string_view rel_ns = "urn:dq:relevancy#";
inline constexpr std::string_view idempotent_analytic = "urn:dq:relevancy#IdempotentAnalytic";
inline constexpr std::string_view stochastic_analytic = "urn:dq:relevancy#StochasticAnalytic";
inline constexpr std::string_view boolean_analytic = "urn:dq:relevancy#BooleanAnalytic";
inline constexpr std::string_view analytic_execution = "urn:dq:relevancy#AnalyticExecution";
inline constexpr std::string_view score_entity = "urn:dq:relevancy#ScoreEntity";
inline constexpr std::string_view raw_score = "urn:dq:relevancy#rawScore";
inline constexpr std::string_view normalized_score = "urn:dq:relevancy#normalizedScore";
inline constexpr std::string_view algorithm = "urn:dq:relevancy#algorithm";
inline constexpr std::string_view run_id = "urn:dq:relevancy#runId";
inline constexpr std::string_view scores = "urn:dq:relevancy#scores";
inline constexpr std::string_view has_relevance_score = "urn:dq:relevancy#hasRelevanceScore";
inline constexpr std::string_view above_threshold = "urn:dq:relevancy#aboveThreshold";

// --- Well-known graphs --------------------------------------------------
inline constexpr std::string_view default_graph = "urn:dq:default-graph";
inline constexpr std::string_view analytics_graph = "urn:dq:analytics";
inline constexpr std::string_view state_graph = "urn:dq:state";

// --- Message envelope terms ----------------------------------------------
inline constexpr std::string_view env_ns = "urn:dq:envelope#";
inline constexpr std::string_view env_message = "urn:dq:envelope#Message";
inline constexpr std::string_view env_information_uri = "urn:dq:envelope#informationUri";
inline constexpr std::string_view env_publisher_identity = "urn:dq:envelope#publisherIdentity";
inline constexpr std::string_view env_publisher_role = "urn:dq:envelope#publisherRole";
inline constexpr std::string_view env_message_topic = "urn:dq:envelope#messageTopic";
inline constexpr std::string_view env_message_type = "urn:dq:envelope#messageType";
inline constexpr std::string_view env_message_format = "urn:dq:envelope#messageFormat";
inline constexpr std::string_view env_time_published = "urn:dq:envelope#timePublished";
inline constexpr std::string_view env_poc_involvement = "urn:dq:envelope#pocInvolvement";
inline constexpr std::string_view env_resource_involvement =
    "urn:dq:envelope#resourceInvolvement";
inline constexpr std::string_view env_latitude = "urn:dq:envelope#latitude";
inline constexpr std::string_view env_longitude = "urn:dq:envelope#longitude";
inline constexpr std::string_view env_keyword = "urn:dq:envelope#keyword";
inline constexpr std::string_view env_publisher_latitude = "urn:dq:envelope#publisherLatitude";
inline constexpr std::string_view env_publisher_longitude = "urn:dq:envelope#publisherLongitude";
inline constexpr std::string_view env_references = "urn:dq:envelope#references";

// --- Scenario terms -------------------------------------------------------
inline constexpr std::string_view scen_cell_phone = "urn:dq:scenario#CellPhone";
inline constexpr std::string_view scen_latitude = "urn:dq:scenario#latitude";
inline constexpr std::string_view scen_longitude = "urn:dq:scenario#longitude";
inline constexpr std::string_view scen_status = "urn:dq:scenario#status";

// --- Algorithm identifiers -----------------------------------------------
inline constexpr std::string_view alg_pagerank = "urn:dq:algorithm/pagerank";
inline constexpr std::string_view alg_hits = "urn:dq:algorithm/hits";
inline constexpr std::string_view alg_betweenness = "urn:dq:algorithm/betweenness";
inline constexpr std::string_view alg_vsm = "urn:dq:algorithm/vsm";
inline constexpr std::string_view run_prefix = "urn:dq:run/";
inline constexpr std::string_view state_event_prefix = "urn:dq:stateevent/";

// Human-readable label ("PageRank", "HITS", ...) for a known algorithm IRI;
// falls back to the IRI's local name.
std::string algorithm_display_name(std::string_view algorithm_iri);

// Local name of an IRI: the part after the last '#' or '/'.
std::string local_name(std::string_view iri);

enum class RelationshipKind { Relationship, Attribute };
enum class StateKind { Continuant, Occurrent };

enum class ModelingStrategy {
    SpecializationAndDQ,
    DirectQualification,
    Specialization,
    BasicInference,
};

// The 2x2 decision matrix: which modeling strategy applies to a relationship
// or attribute whose state-change behaviour is continuant or occurrent.
ModelingStrategy decide_strategy(RelationshipKind rk, StateKind sk);

enum class AnalyticClass { Idempotent, Stochastic, Boolean };
enum class Normalization { Probability, L2, None };

std::string_view analytic_class_iri(AnalyticClass c);

struct AnalyticDescriptor {
    std::string algorithm;
    AnalyticClass analytic_class = AnalyticClass::Idempotent;
    bool monotonic = true; // single-target qualification; false for multi-source
    Normalization normalization = Normalization::None;
    std::optional<double> threshold; // Boolean analytics only

    // Boolean class requires a threshold; other classes forbid one.
    void validate() const;
};

AnalyticDescriptor pagerank_descriptor();
AnalyticDescriptor hits_descriptor(); // authority scores
AnalyticDescriptor betweenness_descriptor();
AnalyticDescriptor vsm_descriptor();

} // namespace dq::vocab
