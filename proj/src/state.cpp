#include "dq/state.hpp"

#include "dq/error.hpp"
#include "dq/nquads.hpp"
#include "dq/vocab.hpp"

#include <algorithm>
#include <cstdio>

namespace dq {

namespace {

const Term& state_graph_term() {
    static const Term t = Term::iri(vocab::state_graph);
    return t;
}

struct StoredEvent {
    StateEvent event;
};

} // namespace

std::string mint_state_event_iri(const QuadStore& store, std::string_view identity) {
    const std::string prefix =
        std::string(vocab::state_event_prefix) + vocab::local_name(identity) + "/";
    QuadPattern events;
    events.predicate = Term::iri(vocab::specialization_of);
    events.object = Term::iri(identity);
    events.graph = state_graph_term();
    std::size_t max_seq = 0;
    for (const Quad& q : store.match(events)) {
        const std::string& id = q.subject.value();
        if (id.rfind(prefix, 0) != 0) continue;
        max_seq = std::max(max_seq, static_cast<std::size_t>(
                                        std::strtoull(id.c_str() + prefix.size(), nullptr, 10)));
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "%06zu", max_seq + 1);
    return prefix + buf;
}

std::string record_state(QuadStore& store, const StateEvent& event) {
    if (event.event_iri.empty() || event.identity.empty())
        throw Error("record_state: event and identity IRIs are required");
    if (event.event_iri == event.identity)
        throw Error("record_state: event IRI must differ from the identity");
    if (event.assertions.empty()) throw Error("record_state: event with no assertions");

    const Term identity = Term::iri(event.identity);
    QuadPattern known;
    known.subject = identity;
    if (store.match(known).empty())
        throw Error("record_state: unknown identity " + event.identity);

    const Term event_term = Term::iri(event.event_iri);
    QuadPattern existing;
    existing.subject = event_term;
    existing.graph = state_graph_term();
    if (!store.match(existing).empty())
        throw Error("record_state: duplicate event IRI " + event.event_iri);

    // The two pattern predicates are reserved; an assertion reusing them
    // would corrupt chain reconstruction.
    std::vector<std::pair<std::string, std::string>> seen;
    for (const auto& [predicate, object] : event.assertions) {
        if (predicate == vocab::specialization_of || predicate == vocab::generated_at_time)
            throw Error("record_state: assertion uses a reserved predicate: " + predicate);
        auto key = std::make_pair(predicate, serialize_term(object));
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw Error("record_state: duplicate assertion " + predicate);
        seen.push_back(std::move(key));
    }

    store.insert(Quad(event_term, Term::iri(vocab::specialization_of), identity,
                      state_graph_term()));
    store.insert(Quad(event_term, Term::iri(vocab::generated_at_time),
                      Term::from_datetime(event.observed_at), state_graph_term()));
    for (const auto& [predicate, object] : event.assertions)
        store.insert(Quad(event_term, Term::iri(predicate), object, state_graph_term()));
    return event.event_iri;
}

std::vector<StateEvent> state_history(const QuadStore& store, std::string_view identity) {
    QuadPattern chain;
    chain.predicate = Term::iri(vocab::specialization_of);
    chain.object = Term::iri(identity);
    chain.graph = state_graph_term();

    std::vector<StateEvent> out;
    for (const Quad& link : store.match(chain)) {
        StateEvent ev;
        ev.event_iri = link.subject.value();
        ev.identity = std::string(identity);

        QuadPattern own;
        own.subject = link.subject;
        own.graph = state_graph_term();
        bool has_time = false;
        for (const Quad& q : store.match(own)) {
            const std::string& p = q.predicate.value();
            if (p == vocab::specialization_of) continue;
            if (p == vocab::generated_at_time) {
                ev.observed_at = q.object.datetime();
                has_time = true;
                continue;
            }
            ev.assertions.emplace_back(p, q.object);
        }
        if (!has_time)
            throw Error("state event " + ev.event_iri + " is missing its observation time");
        std::sort(ev.assertions.begin(), ev.assertions.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return serialize_term(a.second) < serialize_term(b.second);
                  });
        out.push_back(std::move(ev));
    }

    std::sort(out.begin(), out.end(), [](const StateEvent& a, const StateEvent& b) {
        if (a.observed_at != b.observed_at) return a.observed_at < b.observed_at;
        return a.event_iri < b.event_iri;
    });
    return out;
}

std::optional<StateEvent> latest_state(const QuadStore& store, std::string_view identity) {
    auto history = state_history(store, identity);
    if (history.empty()) return std::nullopt;
    return std::move(history.back());
}

} // namespace dq
