#include "dq/broker.hpp"

#include "dq/error.hpp"

#include <fstream>

namespace dq {

namespace fs = std::filesystem;

namespace {

bool unreserved(unsigned char c) {
    return std::isalnum(c) || c == '.' || c == '_' || c == '-';
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

std::string percent_encode(std::string_view raw) {
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(raw.size());
    for (unsigned char c : raw) {
        if (unreserved(c)) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xF]);
        }
    }
    return out;
}

std::string percent_decode(std::string_view encoded) {
    std::string out;
    out.reserve(encoded.size());
    for (std::size_t i = 0; i < encoded.size(); ++i) {
        if (encoded[i] != '%') {
            out.push_back(encoded[i]);
            continue;
        }
        if (i + 2 >= encoded.size()) throw Error("truncated percent escape");
        const int hi = hex_value(encoded[i + 1]);
        const int lo = hex_value(encoded[i + 2]);
        if (hi < 0 || lo < 0) throw Error("invalid percent escape");
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
    }
    return out;
}

void RawDocumentStore::put(std::string graph_iri, std::string payload) {
    docs_[std::move(graph_iri)] = std::move(payload);
}

bool RawDocumentStore::contains(std::string_view graph_iri) const {
    return docs_.find(std::string(graph_iri)) != docs_.end();
}

std::optional<std::string> RawDocumentStore::get(std::string_view graph_iri) const {
    auto it = docs_.find(std::string(graph_iri));
    if (it == docs_.end()) return std::nullopt;
    return it->second;
}

void RawDocumentStore::save(const fs::path& dir) const {
    fs::create_directories(dir);
    for (const auto& [iri, payload] : docs_) {
        std::ofstream out(dir / percent_encode(iri), std::ios::binary);
        if (!out) throw Error("cannot write raw document for " + iri);
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    }
}

void RawDocumentStore::load(const fs::path& dir) {
    if (!fs::exists(dir)) return;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw Error("cannot read raw document " + file.string());
        std::string payload((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        docs_[percent_decode(file.filename().string())] = std::move(payload);
    }
}

std::string Broker::publish(const MessageEnvelope& env, std::string payload) {
    env.validate();
    const Term graph = Term::iri(env.named_graph_uri);
    QuadPattern existing;
    existing.graph = graph;
    if (!store_.match(existing).empty() || documents_.contains(env.named_graph_uri))
        throw Error("publish: duplicate namedGraphUri " + env.named_graph_uri);

    documents_.put(env.named_graph_uri, std::move(payload));
    for (Quad& q : envelope_quads(env)) store_.insert(std::move(q));
    ++published_;

    for (const Subscription& sub : subscriptions_) {
        if (sub.topic == env.message_topic)
            sub.callback(env, *documents_.get(env.named_graph_uri));
    }
    return env.named_graph_uri;
}

SubscriptionId Broker::subscribe(std::string topic, SubscriberCallback callback) {
    subscriptions_.push_back({std::move(topic), std::move(callback)});
    return subscriptions_.size() - 1;
}

} // namespace dq
