#pragma once
// Continuant state tracking via specialization chains.
//
// Each observation mints an event entity that specializes the stable
// identity; the identity's own quads are never rewritten. Events live in
// graph urn:dq:state:
//
//   <event> prov:specializationOf  <identity>
//   <event> prov:generatedAtTime   "..."^^xsd:dateTime
//   <event> <predicate>            <object>              (one per assertion)
//
// so storage grows by exactly 2 + |assertions| quads per event.

#include "dq/quad_store.hpp"
#include "dq/term.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dq {

struct StateEvent {
    std::string event_iri; // minted, distinct from identity
    std::string identity;  // the stable resource the state belongs to
    Timestamp observed_at;
    std::vector<std::pair<std::string, Term>> assertions; // predicate IRI -> object, non-empty
};

// Next event IRI for an identity: urn:dq:stateevent/<local-name>/<seq>.
std::string mint_state_event_iri(const QuadStore& store, std::string_view identity);

// Inserts the event pattern. The identity must already exist as a subject
// somewhere in the store; its quads are left untouched. Returns the event IRI.
std::string record_state(QuadStore& store, const StateEvent& event);

// Event with the greatest observedAt for the identity; ties broken by the
// lexicographically greatest event IRI.
std::optional<StateEvent> latest_state(const QuadStore& store, std::string_view identity);

// All events for the identity, ascending observedAt.
std::vector<StateEvent> state_history(const QuadStore& store, std::string_view identity);

} // namespace dq
