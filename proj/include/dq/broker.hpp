#pragma once
// In-process publish/subscribe broker.
//
// publish() stores the raw payload keyed by the named-graph IRI, indexes the
// envelope into the quad store as one named graph, then notifies matching
// subscribers in registration order. Synchronous and single-threaded, so
// delivery order is deterministic.

#include "dq/quad_store.hpp"
#include "dq/scenario.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dq {

// Raw documents keyed by named-graph IRI.
class RawDocumentStore {
public:
    void put(std::string graph_iri, std::string payload);
    bool contains(std::string_view graph_iri) const;
    std::optional<std::string> get(std::string_view graph_iri) const;
    std::size_t size() const { return docs_.size(); }
    const std::map<std::string, std::string>& all() const { return docs_; }

    // One file per document, percent-encoded IRI as the filename.
    void save(const std::filesystem::path& dir) const;
    void load(const std::filesystem::path& dir);

private:
    std::map<std::string, std::string> docs_;
};

std::string percent_encode(std::string_view raw);
std::string percent_decode(std::string_view encoded);

using SubscriptionId = std::size_t;
using SubscriberCallback = std::function<void(const MessageEnvelope&, const std::string& payload)>;

class Broker {
public:
    Broker(QuadStore& store, RawDocumentStore& documents)
        : store_(store), documents_(documents) {}

    // Returns the named-graph IRI. Rejects invalid envelopes and duplicate
    // graph IRIs without touching the store.
    std::string publish(const MessageEnvelope& env, std::string payload);

    // Callback fires once per subsequent publication with an exactly matching
    // topic, in publish order.
    SubscriptionId subscribe(std::string topic, SubscriberCallback callback);

    std::size_t published_count() const { return published_; }

private:
    struct Subscription {
        std::string topic;
        SubscriberCallback callback;
    };

    QuadStore& store_;
    RawDocumentStore& documents_;
    std::vector<Subscription> subscriptions_;
    std::size_t published_ = 0;
};

} // namespace dq
