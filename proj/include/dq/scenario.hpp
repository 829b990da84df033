#pragma once
// Message envelopes and the geo-tracking scenario generator.
//
// A published document's metadata becomes one named graph (one quad per
// field, subject = the graph IRI). The generator produces a deterministic
// stream of phone status updates whose citations follow preferential
// attachment, so later documents accrete in-links.

#include "dq/term.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dq {

struct Quad;

struct MessageEnvelope {
    // required
    std::string named_graph_uri;
    std::string information_uri;
    std::string publisher_identity_uri;
    std::string publisher_role;
    std::string message_topic;
    std::string message_type;
    std::string message_format;
    Timestamp time_published;
    // optional
    std::vector<std::string> poc_involvement;
    std::vector<std::string> resource_involvement;
    std::optional<double> latitude;
    std::optional<double> longitude;
    std::vector<std::string> keywords;
    std::optional<std::pair<double, double>> publisher_geolocation; // (lat, lng)
    std::vector<std::string> references; // documents this message cites

    // Throws Error naming the offending field.
    void validate() const;

    // JSON-lines representation, camelCase field names.
    std::string to_json() const;
    static MessageEnvelope from_json(std::string_view json_text);
};

// The envelope as quads in its named graph: the eight required fields map to
// an env:Message type quad plus one quad per remaining field; optional list
// fields map to one quad per element.
std::vector<Quad> envelope_quads(const MessageEnvelope& env);

struct ScenarioConfig {
    int message_count = 230;
    int resample_every = 10;
    int phone_count = 5;
    std::uint64_t random_seed = 1u;
    std::vector<std::string> topic_set = {"geo.tracking"};

    void validate() const;

    std::string to_json() const;
    static ScenarioConfig from_json(std::string_view json_text);
};

struct ScenarioMessage {
    MessageEnvelope envelope;
    std::string payload;
};

// Deterministic for a fixed seed. Message i (0-based):
//   - timestamp: base + i * 600000ms / (messageCount - 1), base fixed
//   - phone: i mod phoneCount, with a drifting (lat, lng) random walk
//   - references: k = next() % 4 draws (capped at i), each picking a distinct
//     earlier message with weight indegree+1 (indegree updated after each
//     draw); every fourth draw on average cites the target's information URI
//     instead of its graph URI
//   - payload: compact JSON with phone, lat, lng, status, seq
std::vector<ScenarioMessage> generate_scenario(const ScenarioConfig& config);

// One envelope (+payload) per line.
std::string scenario_to_jsonl(const std::vector<ScenarioMessage>& messages);
std::vector<ScenarioMessage> scenario_from_jsonl(std::string_view text);

} // namespace dq
