#include "dq/scenario.hpp"

#include "dq/error.hpp"
#include "dq/term.hpp"
#include "dq/vocab.hpp"
#include "dq/quad_store.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <random>

namespace dq {

using nlohmann::json;

namespace {

void require_field(bool ok, const char* field) {
    if (!ok) throw Error(std::string("envelope: missing or empty required field: ") + field);
}

std::string padded(int value, int width) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%0*d", width, value);
    return buf;
}

json envelope_to_json_value(const MessageEnvelope& e) {
    json j;
    j["namedGraphUri"] = e.named_graph_uri;
    j["informationUri"] = e.information_uri;
    j["publisherIdentityUri"] = e.publisher_identity_uri;
    j["publisherRole"] = e.publisher_role;
    j["messageTopic"] = e.message_topic;
    j["messageType"] = e.message_type;
    j["messageFormat"] = e.message_format;
    j["timePublished"] = format_datetime(e.time_published);
    if (!e.poc_involvement.empty()) j["pocInvolvement"] = e.poc_involvement;
    if (!e.resource_involvement.empty()) j["resourceInvolvement"] = e.resource_involvement;
    if (e.latitude) j["latitude"] = *e.latitude;
    if (e.longitude) j["longitude"] = *e.longitude;
    if (!e.keywords.empty()) j["keywords"] = e.keywords;
    if (e.publisher_geolocation)
        j["publisherGeolocation"] = {e.publisher_geolocation->first,
                                     e.publisher_geolocation->second};
    if (!e.references.empty()) j["references"] = e.references;
    return j;
}

MessageEnvelope envelope_from_json_value(const json& j) {
    MessageEnvelope e;
    try {
        e.named_graph_uri = j.at("namedGraphUri").get<std::string>();
        e.information_uri = j.at("informationUri").get<std::string>();
        e.publisher_identity_uri = j.at("publisherIdentityUri").get<std::string>();
        e.publisher_role = j.at("publisherRole").get<std::string>();
        e.message_topic = j.at("messageTopic").get<std::string>();
        e.message_type = j.at("messageType").get<std::string>();
        e.message_format = j.at("messageFormat").get<std::string>();
        e.time_published = parse_datetime(j.at("timePublished").get<std::string>());
        if (j.contains("pocInvolvement"))
            e.poc_involvement = j.at("pocInvolvement").get<std::vector<std::string>>();
        if (j.contains("resourceInvolvement"))
            e.resource_involvement = j.at("resourceInvolvement").get<std::vector<std::string>>();
        if (j.contains("latitude")) e.latitude = j.at("latitude").get<double>();
        if (j.contains("longitude")) e.longitude = j.at("longitude").get<double>();
        if (j.contains("keywords")) e.keywords = j.at("keywords").get<std::vector<std::string>>();
        if (j.contains("publisherGeolocation")) {
            auto geo = j.at("publisherGeolocation").get<std::vector<double>>();
            if (geo.size() != 2) throw Error("envelope: publisherGeolocation must be [lat, lng]");
            e.publisher_geolocation = {geo[0], geo[1]};
        }
        if (j.contains("references"))
            e.references = j.at("references").get<std::vector<std::string>>();
    } catch (const json::exception& ex) {
        throw Error(std::string("envelope: malformed JSON: ") + ex.what());
    }
    return e;
}

// 53-bit uniform in [0, 1).
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

void MessageEnvelope::validate() const {
    require_field(!named_graph_uri.empty(), "namedGraphUri");
    require_field(!information_uri.empty(), "informationUri");
    require_field(!publisher_identity_uri.empty(), "publisherIdentityUri");
    require_field(!publisher_role.empty(), "publisherRole");
    require_field(!message_topic.empty(), "messageTopic");
    require_field(!message_type.empty(), "messageType");
    require_field(!message_format.empty(), "messageFormat");

    if (latitude && (*latitude < -90.0 || *latitude > 90.0))
        throw Error("envelope: latitude out of [-90, 90]");
    if (longitude && (*longitude < -180.0 || *longitude > 180.0))
        throw Error("envelope: longitude out of [-180, 180]");
    if (publisher_geolocation) {
        const auto [lat, lng] = *publisher_geolocation;
        if (lat < -90.0 || lat > 90.0 || lng < -180.0 || lng > 180.0)
            throw Error("envelope: publisherGeolocation out of range");
    }
}

std::string MessageEnvelope::to_json() const { return envelope_to_json_value(*this).dump(); }

MessageEnvelope MessageEnvelope::from_json(std::string_view json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw Error("envelope: invalid JSON");
    return envelope_from_json_value(j);
}

std::vector<Quad> envelope_quads(const MessageEnvelope& env) {
    env.validate();
    const Term graph = Term::iri(env.named_graph_uri);
    std::vector<Quad> out;
    auto put = [&](std::string_view predicate, Term object) {
        out.emplace_back(graph, Term::iri(predicate), std::move(object), graph);
    };

    put(rdf::type, Term::iri(vocab::env_message));
    put(vocab::env_information_uri, Term::iri(env.information_uri));
    put(vocab::env_publisher_identity, Term::iri(env.publisher_identity_uri));
    put(vocab::env_publisher_role, Term::literal(env.publisher_role));
    put(vocab::env_message_topic, Term::literal(env.message_topic));
    put(vocab::env_message_type, Term::literal(env.message_type));
    put(vocab::env_message_format, Term::literal(env.message_format));
    put(vocab::env_time_published, Term::from_datetime(env.time_published));

    for (const std::string& poc : env.poc_involvement)
        put(vocab::env_poc_involvement, Term::iri(poc));
    for (const std::string& resource : env.resource_involvement)
        put(vocab::env_resource_involvement, Term::iri(resource));
    if (env.latitude) put(vocab::env_latitude, Term::from_double(*env.latitude));
    if (env.longitude) put(vocab::env_longitude, Term::from_double(*env.longitude));
    for (const std::string& keyword : env.keywords) put(vocab::env_keyword, Term::literal(keyword));
    if (env.publisher_geolocation) {
        put(vocab::env_publisher_latitude, Term::from_double(env.publisher_geolocation->first));
        put(vocab::env_publisher_longitude, Term::from_double(env.publisher_geolocation->second));
    }
    for (const std::string& reference : env.references)
        put(vocab::env_references, Term::iri(reference));
    return out;
}

void ScenarioConfig::validate() const {
    if (message_count < 1) throw Error("scenario: messageCount must be at least 1");
    if (resample_every < 1) throw Error("scenario: resampleEvery must be at least 1");
    if (phone_count < 1) throw Error("scenario: phoneCount must be at least 1");
    if (topic_set.empty()) throw Error("scenario: topicSet must not be empty");
}

std::string ScenarioConfig::to_json() const {
    json j;
    j["messageCount"] = message_count;
    j["resampleEvery"] = resample_every;
    j["phoneCount"] = phone_count;
    j["randomSeed"] = random_seed;
    j["topicSet"] = topic_set;
    return j.dump();
}

ScenarioConfig ScenarioConfig::from_json(std::string_view json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw Error("scenario: invalid config JSON");
    ScenarioConfig c;
    try {
        if (j.contains("messageCount")) c.message_count = j.at("messageCount").get<int>();
        if (j.contains("resampleEvery")) c.resample_every = j.at("resampleEvery").get<int>();
        if (j.contains("phoneCount")) c.phone_count = j.at("phoneCount").get<int>();
        if (j.contains("randomSeed")) c.random_seed = j.at("randomSeed").get<std::uint64_t>();
        if (j.contains("topicSet")) c.topic_set = j.at("topicSet").get<std::vector<std::string>>();
    } catch (const json::exception& ex) {
        throw Error(std::string("scenario: malformed config: ") + ex.what());
    }
    return c;
}

std::vector<ScenarioMessage> generate_scenario(const ScenarioConfig& config) {
    config.validate();
    std::mt19937_64 rng(config.random_seed);

    const Timestamp base = parse_datetime("2015-03-23T10:00:00Z");
    const int n = config.message_count;
    constexpr std::int64_t span_ms = 600000; // ten simulated minutes

    static constexpr const char* statuses[] = {"stationary", "moving", "charging", "offline"};
    static constexpr const char* keyword_pool[] = {"tracking", "geolocation", "status",
                                                   "cellphone", "asset",       "mobility",
                                                   "signal",    "position"};

    std::vector<double> phone_lat(static_cast<std::size_t>(config.phone_count));
    std::vector<double> phone_lng(static_cast<std::size_t>(config.phone_count));
    std::vector<bool> phone_seen(static_cast<std::size_t>(config.phone_count), false);
    std::vector<std::size_t> indegree;
    std::vector<std::string> graph_uris, info_uris;

    std::vector<ScenarioMessage> out;
    out.reserve(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i) {
        const std::size_t phone = static_cast<std::size_t>(i % config.phone_count);
        if (!phone_seen[phone]) {
            phone_lat[phone] = 34.0 + 2.0 * uniform01(rng);
            phone_lng[phone] = -118.0 + 2.0 * uniform01(rng);
            phone_seen[phone] = true;
        } else {
            phone_lat[phone] =
                std::clamp(phone_lat[phone] + 0.02 * (uniform01(rng) - 0.5), -90.0, 90.0);
            phone_lng[phone] =
                std::clamp(phone_lng[phone] + 0.02 * (uniform01(rng) - 0.5), -180.0, 180.0);
        }
        const char* status = statuses[rng() % 4];

        MessageEnvelope env;
        env.named_graph_uri = "urn:dq:msg/" + padded(i, 4);
        env.information_uri = "urn:dq:info/" + padded(i, 4);
        env.publisher_identity_uri = "urn:dq:publisher/tracker-" + std::to_string(phone);
        env.publisher_role = "tracking-sensor";
        env.message_topic = config.topic_set[static_cast<std::size_t>(i) % config.topic_set.size()];
        env.message_type = "geo-status";
        env.message_format = "application/json";
        env.time_published =
            Timestamp{base.ms + (n == 1 ? 0 : static_cast<std::int64_t>(i) * span_ms / (n - 1))};
        env.poc_involvement = {"urn:dq:poc/" + std::to_string(rng() % 6)};
        env.resource_involvement = {"urn:dq:phone/" + std::to_string(phone)};
        env.latitude = phone_lat[phone];
        env.longitude = phone_lng[phone];

        const std::size_t keyword_count = 1 + rng() % 3;
        for (std::size_t k = 0; k < keyword_count; ++k) {
            const char* kw = keyword_pool[rng() % 8];
            if (std::find(env.keywords.begin(), env.keywords.end(), kw) == env.keywords.end())
                env.keywords.emplace_back(kw);
        }

        // preferential-attachment citations of earlier messages
        std::size_t ref_count = rng() % 4;
        ref_count = std::min(ref_count, static_cast<std::size_t>(i));
        std::vector<std::size_t> chosen;
        for (std::size_t r = 0; r < ref_count; ++r) {
            std::size_t total = 0;
            for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j) {
                if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
                total += indegree[j] + 1;
            }
            if (total == 0) break;
            std::size_t pick = rng() % total;
            std::size_t target = 0;
            for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j) {
                if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
                const std::size_t weight = indegree[j] + 1;
                if (pick < weight) {
                    target = j;
                    break;
                }
                pick -= weight;
            }
            chosen.push_back(target);
            indegree[target] += 1;
            const bool cite_info = rng() % 4 == 0;
            env.references.push_back(cite_info ? info_uris[target] : graph_uris[target]);
        }

        json payload;
        payload["phone"] = env.resource_involvement.front();
        payload["lat"] = phone_lat[phone];
        payload["lng"] = phone_lng[phone];
        payload["status"] = status;
        payload["seq"] = i;

        indegree.push_back(0);
        graph_uris.push_back(env.named_graph_uri);
        info_uris.push_back(env.information_uri);
        out.push_back({std::move(env), payload.dump()});
    }
    return out;
}

std::string scenario_to_jsonl(const std::vector<ScenarioMessage>& messages) {
    std::string out;
    for (const ScenarioMessage& m : messages) {
        json j = envelope_to_json_value(m.envelope);
        j["payload"] = m.payload;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<ScenarioMessage> scenario_from_jsonl(std::string_view text) {
    std::vector<ScenarioMessage> out;
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw Error("scenario: invalid JSON on line " + std::to_string(line_no));
        ScenarioMessage m;
        m.envelope = envelope_from_json_value(j);
        if (j.contains("payload")) m.payload = j.at("payload").get<std::string>();
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace dq
